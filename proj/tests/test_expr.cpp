#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "telegraph/errors.hpp"
#include "telegraph/expr.hpp"
#include "telegraph/problem.hpp"

using namespace telegraph;

namespace {

double value(const std::string& s, double x = 0.0, double t = 0.0) { return expr::parse(s)(x, t); }

}  // namespace

TEST(Expr, PrecedenceAndAssociativity) {
    EXPECT_EQ(value("2^3^2"), 512.0);
    EXPECT_EQ(value("-2^2"), -4.0);
    EXPECT_EQ(value("2^-1"), 0.5);
    EXPECT_EQ(value("1 - 2 - 3"), -4.0);
    EXPECT_EQ(value("8 / 4 / 2"), 1.0);
    EXPECT_EQ(value("1 + 2 * 3"), 7.0);
    EXPECT_EQ(value("(1 + 2) * 3"), 9.0);
    EXPECT_EQ(value("--3"), 3.0);
    EXPECT_EQ(value("1.5e2 + 2E-1"), 150.2);
}

TEST(Expr, VariablesFunctionsAndConstants) {
    EXPECT_EQ(value("tan(1)"), std::tan(1.0));
    EXPECT_EQ(value("pi"), std::numbers::pi);
    EXPECT_EQ(value("x*t", 3.0, 4.0), 12.0);
    EXPECT_EQ(value("exp(-t)*sin(x)", 0.7, 0.3), std::exp(-0.3) * std::sin(0.7));
    EXPECT_EQ(value("sqrt(abs(-16))"), 4.0);
    EXPECT_EQ(value("cos ( 0 )"), 1.0);
    EXPECT_EQ(value("\xE2\x88\x92" "3 + 1"), -2.0);  // U+2212 minus sign
}

TEST(Expr, SyntaxErrors) {
    try {
        expr::parse("2x");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.offset(), 1u);
        EXPECT_FALSE(e.expected().empty());
    }
    EXPECT_THROW(expr::parse(""), ParseError);
    EXPECT_THROW(expr::parse("(1 + 2"), ParseError);
    EXPECT_THROW(expr::parse("1 +"), ParseError);
    EXPECT_THROW(expr::parse("sin 1"), ParseError);
    EXPECT_THROW(expr::parse("y + 1"), ParseError);
    EXPECT_THROW(expr::parse("1e"), ParseError);
    EXPECT_THROW(expr::parse("1e999"), ParseError);
    try {
        expr::parse("log(x)");
        FAIL() << "expected UnknownFunctionError";
    } catch (const UnknownFunctionError& e) {
        EXPECT_EQ(e.name(), "log");
    }
}

TEST(Expr, EvaluationErrors) {
    EXPECT_THROW(value("1/0"), EvalError);
    EXPECT_THROW(value("1/(x - 1)", 1.0), EvalError);
    EXPECT_THROW(value("sqrt(-1)"), EvalError);
    EXPECT_THROW(value("exp(1000)"), EvalError);
    try {
        value("sqrt(x)", -2.0);
    } catch (const EvalError& e) {
        EXPECT_EQ(e.op(), "sqrt");
        ASSERT_EQ(e.operands().size(), 1u);
        EXPECT_EQ(e.operands()[0], -2.0);
    }
}

TEST(Expr, RenderingRoundTrips) {
    for (const char* s : {"2^3^2", "-x^2 + 3*t", "exp(-t)*sin(x) / (1 + x)", "0.1 + pi",
                          "10*(1 + tan((x + t)/2)^2) + 25*tan((x + t)/2)"}) {
        const expr::Expression e = expr::parse(s);
        const expr::Expression back = expr::parse(expr::to_string(e));
        EXPECT_TRUE(expr::structurally_equal(e, back)) << s;
        EXPECT_EQ(e(0.3, 0.7), back(0.3, 0.7)) << s;
    }
    EXPECT_FALSE(expr::structurally_equal(expr::parse("x + t"), expr::parse("t + x")));
}

TEST(Expr, BuiltinStringsMatchHardCodedData) {
    struct Case {
        int id;
        const char* q;
        const char* exact;
        double t_max;
    };
    const Case cases[] = {
        {1, "0", "exp(-t)*sin(x)", 2.0},
        {2, "10*(1 + tan((x + t)/2)^2) + 25*tan((x + t)/2)", "tan((x + t)/2)", 1.0},
        {3, "(2 - 2*t + t^2)*(x - x^2)*exp(-t) + 2*t^2*exp(-t)", "(x - x^2)*t^2*exp(-t)", 2.0},
        {4, "-2*6*sin(t)*sin(x) + 4*cos(t)*sin(x)", "cos(t)*sin(x)", 2.0},
        {5, "-2*exp(-t)*sin(x)", "exp(-t)*sin(x)", 2.0},
    };
    std::mt19937 rng(99);
    for (const Case& c : cases) {
        const TelegraphProblem p = builtin_problem(c.id);
        const expr::Expression q = expr::parse(c.q);
        const expr::Expression u = expr::parse(c.exact);
        std::uniform_real_distribution<double> xs(p.a, p.b), ts(0.0, c.t_max);
        for (int i = 0; i < 1000; ++i) {
            const double x = xs(rng), t = ts(rng);
            const double qv = p.forcing(x, t), uv = (*p.exact)(x, t);
            EXPECT_NEAR(q(x, t), qv, 1e-12 * std::max(1.0, std::abs(qv))) << c.id;
            EXPECT_NEAR(u(x, t), uv, 1e-12 * std::max(1.0, std::abs(uv))) << c.id;
        }
    }
}
