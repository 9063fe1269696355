#include "telegraph/expr.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "telegraph/errors.hpp"

namespace telegraph {

std::string EvalError::format(const std::string& op, const std::vector<double>& operands) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "evaluation error in '" << op << "' with operand";
    if (operands.size() != 1) msg << 's';
    for (std::size_t i = 0; i < operands.size(); ++i) msg << (i == 0 ? " " : ", ") << operands[i];
    return msg.str();
}

namespace expr {

namespace {

struct FunctionName {
    std::string_view name;
    Function fn;
};

constexpr FunctionName kFunctions[] = {
    {"sin", Function::sin}, {"cos", Function::cos},   {"tan", Function::tan},
    {"exp", Function::exp}, {"sqrt", Function::sqrt}, {"abs", Function::abs},
};

std::string_view function_name(Function fn) {
    for (const auto& f : kFunctions) {
        if (f.fn == fn) return f.name;
    }
    return "?";
}

char op_symbol(BinaryOp op) {
    switch (op) {
        case BinaryOp::add: return '+';
        case BinaryOp::sub: return '-';
        case BinaryOp::mul: return '*';
        case BinaryOp::div: return '/';
        case BinaryOp::pow: return '^';
    }
    return '?';
}

NodePtr make(auto&& kind) { return std::make_shared<const Node>(Node{std::forward<decltype(kind)>(kind)}); }

const std::vector<std::string> kOperandStart = {"number", "'x'", "'t'", "'pi'", "function call",
                                                "'('", "'-'"};

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    NodePtr parse_all() {
        NodePtr e = parse_expr();
        skip_space();
        if (pos_ != src_.size()) {
            fail({"'+'", "'-'", "'*'", "'/'", "'^'", "end of input"});
        }
        return e;
    }

private:
    void skip_space() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    // ASCII '-' or U+2212 (three bytes in UTF-8).
    std::size_t minus_width() const {
        if (pos_ < src_.size() && src_[pos_] == '-') return 1;
        if (src_.substr(pos_, 3) == "\xE2\x88\x92") return 3;
        return 0;
    }

    bool accept(char c) {
        skip_space();
        if (c == '-') {
            const std::size_t w = minus_width();
            pos_ += w;
            return w > 0;
        }
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string describe_current() const {
        if (pos_ >= src_.size()) return "end of input";
        std::size_t end = pos_;
        if (std::isalpha(static_cast<unsigned char>(src_[end]))) {
            while (end < src_.size() && std::isalnum(static_cast<unsigned char>(src_[end]))) ++end;
        } else {
            ++end;
        }
        return "'" + std::string(src_.substr(pos_, end - pos_)) + "'";
    }

    [[noreturn]] void fail(std::vector<std::string> expected) const {
        throw ParseError(pos_, std::move(expected), describe_current());
    }

    NodePtr parse_expr() {
        NodePtr lhs = parse_term();
        for (;;) {
            if (accept('+')) {
                lhs = make(Binary{BinaryOp::add, lhs, parse_term()});
            } else if (accept('-')) {
                lhs = make(Binary{BinaryOp::sub, lhs, parse_term()});
            } else {
                return lhs;
            }
        }
    }

    NodePtr parse_term() {
        NodePtr lhs = parse_unary();
        for (;;) {
            if (accept('*')) {
                lhs = make(Binary{BinaryOp::mul, lhs, parse_unary()});
            } else if (accept('/')) {
                lhs = make(Binary{BinaryOp::div, lhs, parse_unary()});
            } else {
                return lhs;
            }
        }
    }

    NodePtr parse_unary() {
        if (accept('-')) return make(Negate{parse_unary()});
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_atom();
        if (accept('^')) return make(Binary{BinaryOp::pow, base, parse_unary()});
        return base;
    }

    NodePtr parse_atom() {
        skip_space();
        if (pos_ >= src_.size()) fail(kOperandStart);
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
        if (c == '(') {
            ++pos_;
            NodePtr inner = parse_expr();
            if (!accept(')')) fail({"')'"});
            return inner;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_identifier();
        fail(kOperandStart);
    }

    NodePtr parse_number() {
        const std::size_t start = pos_;
        auto digits = [&] {
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        };
        digits();
        if (pos_ < src_.size() && src_[pos_] == '.') {
            ++pos_;
            digits();
        }
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            std::size_t p = pos_ + 1;
            if (p < src_.size() && (src_[p] == '+' || src_[p] == '-')) ++p;
            if (p < src_.size() && std::isdigit(static_cast<unsigned char>(src_[p]))) {
                pos_ = p;
                digits();
            } else {
                pos_ = p;
                fail({"exponent digits"});
            }
        }
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, value);
        if (ec != std::errc() || ptr != src_.data() + pos_ || !std::isfinite(value)) {
            pos_ = start;
            fail({"finite number"});
        }
        return make(Constant{value});
    }

    NodePtr parse_identifier() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        const std::string_view name = src_.substr(start, pos_ - start);

        skip_space();
        const bool is_call = pos_ < src_.size() && src_[pos_] == '(';
        if (!is_call) {
            if (name == "x") return make(Variable{'x'});
            if (name == "t") return make(Variable{'t'});
            if (name == "pi") return make(Constant{std::numbers::pi});
            for (const auto& f : kFunctions) {
                if (f.name == name) fail({"'('"});
            }
            pos_ = start;
            fail(kOperandStart);
        }
        for (const auto& f : kFunctions) {
            if (f.name == name) {
                ++pos_;
                NodePtr arg = parse_expr();
                if (!accept(')')) fail({"')'"});
                return make(Call{f.fn, arg});
            }
        }
        throw UnknownFunctionError(std::string(name));
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

double checked(double result, const char* op, std::vector<double> operands) {
    if (!std::isfinite(result)) throw EvalError(op, std::move(operands));
    return result;
}

double eval(const Node& node, double x, double t) {
    struct Visitor {
        double x;
        double t;

        double operator()(const Constant& c) const { return c.value; }
        double operator()(const Variable& v) const { return v.name == 'x' ? x : t; }
        double operator()(const Negate& n) const { return -eval(*n.operand, x, t); }

        double operator()(const Binary& b) const {
            const double l = eval(*b.lhs, x, t);
            const double r = eval(*b.rhs, x, t);
            switch (b.op) {
                case BinaryOp::add: return checked(l + r, "+", {l, r});
                case BinaryOp::sub: return checked(l - r, "-", {l, r});
                case BinaryOp::mul: return checked(l * r, "*", {l, r});
                case BinaryOp::div:
                    if (r == 0.0) throw EvalError("/", {l, r});
                    return checked(l / r, "/", {l, r});
                case BinaryOp::pow: return checked(std::pow(l, r), "^", {l, r});
            }
            return 0.0;
        }

        double operator()(const Call& c) const {
            const double v = eval(*c.arg, x, t);
            switch (c.fn) {
                case Function::sin: return checked(std::sin(v), "sin", {v});
                case Function::cos: return checked(std::cos(v), "cos", {v});
                case Function::tan: return checked(std::tan(v), "tan", {v});
                case Function::exp: return checked(std::exp(v), "exp", {v});
                case Function::sqrt:
                    if (v < 0.0) throw EvalError("sqrt", {v});
                    return std::sqrt(v);
                case Function::abs: return std::abs(v);
            }
            return 0.0;
        }
    };
    return std::visit(Visitor{x, t}, node.kind);
}

void render(const Node& node, std::ostringstream& out) {
    struct Visitor {
        std::ostringstream& out;

        void operator()(const Constant& c) const { out << c.value; }
        void operator()(const Variable& v) const { out << v.name; }
        void operator()(const Negate& n) const {
            out << "(-";
            render(*n.operand, out);
            out << ')';
        }
        void operator()(const Binary& b) const {
            out << '(';
            render(*b.lhs, out);
            out << ' ' << op_symbol(b.op) << ' ';
            render(*b.rhs, out);
            out << ')';
        }
        void operator()(const Call& c) const {
            out << function_name(c.fn) << '(';
            render(*c.arg, out);
            out << ')';
        }
    };
    std::visit(Visitor{out}, node.kind);
}

bool equal(const Node& l, const Node& r) {
    if (l.kind.index() != r.kind.index()) return false;
    return std::visit(
        [&](const auto& lk) -> bool {
            using T = std::decay_t<decltype(lk)>;
            const auto& rk = std::get<T>(r.kind);
            if constexpr (std::is_same_v<T, Constant>) {
                return lk.value == rk.value;
            } else if constexpr (std::is_same_v<T, Variable>) {
                return lk.name == rk.name;
            } else if constexpr (std::is_same_v<T, Negate>) {
                return equal(*lk.operand, *rk.operand);
            } else if constexpr (std::is_same_v<T, Binary>) {
                return lk.op == rk.op && equal(*lk.lhs, *rk.lhs) && equal(*lk.rhs, *rk.rhs);
            } else {
                return lk.fn == rk.fn && equal(*lk.arg, *rk.arg);
            }
        },
        l.kind);
}

}  // namespace

double Expression::operator()(double x, double t) const { return eval(*root_, x, t); }

Expression parse(std::string_view source) { return Expression(Parser(source).parse_all()); }

double evaluate(const Expression& e, double x, double t) { return e(x, t); }

std::string to_string(const Expression& e) {
    std::ostringstream out;
    out.precision(17);
    render(e.root(), out);
    return out.str();
}

bool structurally_equal(const Expression& lhs, const Expression& rhs) {
    return equal(lhs.root(), rhs.root());
}

}  // namespace expr
}  // namespace telegraph
