#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>

namespace telegraph::expr {

enum class Function { sin, cos, tan, exp, sqrt, abs };
enum class BinaryOp { add, sub, mul, div, pow };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Constant {
    double value;
};
struct Variable {
    char name;  // 'x' or 't'
};
struct Negate {
    NodePtr operand;
};
struct Binary {
    BinaryOp op;
    NodePtr lhs;
    NodePtr rhs;
};
struct Call {
    Function fn;
    NodePtr arg;
};

struct Node {
    std::variant<Constant, Variable, Negate, Binary, Call> kind;
};

/// Immutable parsed expression in the variables x and t.
///
/// Grammar, lowest precedence first:
///   expr  := term (('+' | '-') term)*
///   term  := unary (('*' | '/') unary)*
///   unary := '-' unary | power
///   power := atom ('^' unary)?          right-associative, so -x^2 = -(x^2)
///   atom  := number | 'x' | 't' | 'pi' | name '(' expr ')' | '(' expr ')'
/// with name one of sin, cos, tan, exp, sqrt, abs.
class Expression {
public:
    explicit Expression(NodePtr root) : root_(std::move(root)) {}

    const Node& root() const noexcept { return *root_; }

    /// Throws EvalError on division by zero, domain violations or non-finite results.
    double operator()(double x, double t) const;

private:
    NodePtr root_;
};

/// Throws ParseError (with byte offset and the expected tokens) or UnknownFunctionError.
Expression parse(std::string_view source);

double evaluate(const Expression& e, double x, double t);

/// Fully parenthesized rendering that parses back to an identical tree.
std::string to_string(const Expression& e);

bool structurally_equal(const Expression& lhs, const Expression& rhs);

}  // namespace telegraph::expr
