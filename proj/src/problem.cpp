#include "telegraph/problem.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "telegraph/errors.hpp"

namespace telegraph {

namespace {

constexpr double kCornerTol = 1e-10;
constexpr double kSlopeTol = 1e-8;

std::string at(const char* what, double x) {
    std::ostringstream s;
    s << what << " (x = " << x << ")";
    return s.str();
}

TelegraphProblem problem1() {
    TelegraphProblem p;
    p.name = "problem 1";
    p.alpha = 2.0;
    p.beta = std::numbers::sqrt2;
    p.a = 0.0;
    p.b = std::numbers::pi;
    // e^{-t} sin x solves u_tt + 4u_t + 2u = u_xx without forcing.
    p.forcing = [](double, double) { return 0.0; };
    p.initial_value = [](double x) { return std::sin(x); };
    p.initial_velocity = [](double x) { return -std::sin(x); };
    p.initial_slope = [](double x) { return std::cos(x); };
    p.boundary = {BoundaryKind::dirichlet, [](double) { return 0.0; }, [](double) { return 0.0; }};
    p.exact = [](double x, double t) { return std::exp(-t) * std::sin(x); };
    return p;
}

TelegraphProblem problem2() {
    TelegraphProblem p;
    p.name = "problem 2";
    p.alpha = 10.0;
    p.beta = 5.0;
    p.a = 0.0;
    p.b = 2.0;
    p.forcing = [](double x, double t) {
        const double tn = std::tan((x + t) / 2.0);
        return 10.0 * (1.0 + tn * tn) + 25.0 * tn;
    };
    p.initial_value = [](double x) { return std::tan(x / 2.0); };
    p.initial_velocity = [](double x) {
        const double tn = std::tan(x / 2.0);
        return 0.5 * (1.0 + tn * tn);
    };
    p.initial_slope = [](double x) {
        const double tn = std::tan(x / 2.0);
        return 0.5 * (1.0 + tn * tn);
    };
    p.boundary = {BoundaryKind::dirichlet, [](double t) { return std::tan(t / 2.0); },
                  [](double t) { return std::tan((2.0 + t) / 2.0); }};
    p.exact = [](double x, double t) { return std::tan((x + t) / 2.0); };
    return p;
}

TelegraphProblem problem3() {
    TelegraphProblem p;
    p.name = "problem 3";
    p.alpha = 0.5;
    p.beta = 1.0;
    p.a = 0.0;
    p.b = 1.0;
    p.forcing = [](double x, double t) {
        return (2.0 - 2.0 * t + t * t) * (x - x * x) * std::exp(-t) + 2.0 * t * t * std::exp(-t);
    };
    p.initial_value = [](double) { return 0.0; };
    p.initial_velocity = [](double) { return 0.0; };
    p.initial_slope = [](double) { return 0.0; };
    p.boundary = {BoundaryKind::dirichlet, [](double) { return 0.0; }, [](double) { return 0.0; }};
    p.exact = [](double x, double t) { return (x - x * x) * t * t * std::exp(-t); };
    return p;
}

TelegraphProblem problem4() {
    TelegraphProblem p;
    p.name = "problem 4";
    p.alpha = 6.0;
    p.beta = 2.0;
    p.a = 0.0;
    p.b = 1.0;
    p.forcing = [](double x, double t) {
        return -2.0 * 6.0 * std::sin(t) * std::sin(x) + 4.0 * std::cos(t) * std::sin(x);
    };
    p.initial_value = [](double x) { return std::sin(x); };
    p.initial_velocity = [](double) { return 0.0; };
    p.initial_slope = [](double x) { return std::cos(x); };
    p.boundary = {BoundaryKind::dirichlet, [](double) { return 0.0; },
                  [](double t) { return std::cos(t) * std::sin(1.0); }};
    p.exact = [](double x, double t) { return std::cos(t) * std::sin(x); };
    return p;
}

TelegraphProblem problem5() {
    TelegraphProblem p;
    p.name = "problem 5";
    p.alpha = 4.0;
    p.beta = 2.0;
    p.a = 0.0;
    p.b = 2.0 * std::numbers::pi;
    p.forcing = [](double x, double t) { return -2.0 * std::exp(-t) * std::sin(x); };
    p.initial_value = [](double x) { return std::sin(x); };
    p.initial_velocity = [](double x) { return -std::sin(x); };
    p.initial_slope = [](double x) { return std::cos(x); };
    p.boundary = {BoundaryKind::neumann, [](double t) { return std::exp(-t); },
                  [](double t) { return std::exp(-t); }};
    p.exact = [](double x, double t) { return std::exp(-t) * std::sin(x); };
    return p;
}

double central_difference(const SpaceFn& f, double x, double step) {
    return (f(x + step) - f(x - step)) / (2.0 * step);
}

}  // namespace

void check_problem(const TelegraphProblem& problem) {
    if (!std::isfinite(problem.a) || !std::isfinite(problem.b) || !(problem.b > problem.a)) {
        throw ConfigError("problem domain requires b > a");
    }
    if (!(problem.alpha >= 0.0) || !std::isfinite(problem.alpha)) {
        throw ConfigError("alpha must be finite and non-negative");
    }
    if (!(problem.beta >= 0.0) || !std::isfinite(problem.beta)) {
        throw ConfigError("beta must be finite and non-negative");
    }
    if (!problem.forcing || !problem.initial_value || !problem.initial_velocity ||
        !problem.boundary.left || !problem.boundary.right) {
        throw ConfigError("problem is missing forcing, initial or boundary data");
    }
}

TelegraphProblem builtin_problem(int id) {
    switch (id) {
        case 1: return problem1();
        case 2: return problem2();
        case 3: return problem3();
        case 4: return problem4();
        case 5: return problem5();
        default: throw UnknownProblemError("unknown builtin problem " + std::to_string(id));
    }
}

double builtin_max_horizon(int id) {
    return id == 2 ? 1.0 : std::numeric_limits<double>::infinity();
}

double initial_slope(const TelegraphProblem& problem, double x, double step) {
    if (problem.initial_slope) return (*problem.initial_slope)(x);
    return central_difference(problem.initial_value, x, step);
}

std::vector<Diagnostic> validate(const TelegraphProblem& problem, const UniformMesh& mesh) {
    std::vector<Diagnostic> out;
    auto guarded = [&](const std::string& location, auto&& mismatch, double tol,
                       const std::string& message) {
        double magnitude = 0.0;
        try {
            magnitude = mismatch();
        } catch (const Error& e) {
            out.push_back({location, std::numeric_limits<double>::infinity(), e.what()});
            return;
        }
        if (!(magnitude <= tol)) out.push_back({location, magnitude, message});
    };

    const double a = mesh.a();
    const double b = mesh.b();
    const auto& bc = problem.boundary;
    if (bc.kind == BoundaryKind::dirichlet) {
        guarded(at("left corner", a),
                [&] { return std::abs(bc.left(0.0) - problem.initial_value(a)); }, kCornerTol,
                "Dirichlet left(0) differs from g1(a)");
        guarded(at("right corner", b),
                [&] { return std::abs(bc.right(0.0) - problem.initial_value(b)); }, kCornerTol,
                "Dirichlet right(0) differs from g1(b)");
    } else {
        const double step = 1e-6 * (b - a);
        guarded(at("left corner", a),
                [&] {
                    return std::abs(bc.left(0.0) - central_difference(problem.initial_value, a, step));
                },
                kSlopeTol, "Neumann left(0) differs from g1'(a)");
        guarded(at("right corner", b),
                [&] {
                    return std::abs(bc.right(0.0) - central_difference(problem.initial_value, b, step));
                },
                kSlopeTol, "Neumann right(0) differs from g1'(b)");
    }

    if (problem.exact) {
        double worst = 0.0;
        double worst_x = a;
        bool failed = false;
        try {
            for (int i = 0; i <= mesh.n_cells(); ++i) {
                const double x = mesh.knot(i);
                const double d = std::abs((*problem.exact)(x, 0.0) - problem.initial_value(x));
                if (!(d <= worst)) {
                    worst = d;
                    worst_x = x;
                }
            }
        } catch (const Error& e) {
            out.push_back({"exact(x, 0)", std::numeric_limits<double>::infinity(), e.what()});
            failed = true;
        }
        if (!failed && !(worst <= kCornerTol)) {
            out.push_back({at("exact(x, 0)", worst_x), worst, "exact solution at t = 0 differs from g1"});
        }
    }
    return out;
}

}  // namespace telegraph
