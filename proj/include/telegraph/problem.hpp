#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "telegraph/basis.hpp"

namespace telegraph {

using SpaceTimeFn = std::function<double(double x, double t)>;
using SpaceFn = std::function<double(double x)>;
using TimeFn = std::function<double(double t)>;

enum class BoundaryKind { dirichlet, neumann };

/// Boundary data at x = a (left) and x = b (right). Dirichlet prescribes u,
/// Neumann prescribes u_x.
struct BoundarySpec {
    BoundaryKind kind = BoundaryKind::dirichlet;
    TimeFn left;
    TimeFn right;
};

/// u_tt + 2 alpha u_t + beta^2 u = u_xx + q(x, t) on [a, b], t >= 0,
/// with u(x, 0) = g1(x) and u_t(x, 0) = g2(x).
struct TelegraphProblem {
    std::string name;
    double alpha = 0.0;
    double beta = 0.0;
    double a = 0.0;
    double b = 1.0;
    SpaceTimeFn forcing;
    SpaceFn initial_value;
    SpaceFn initial_velocity;
    BoundarySpec boundary;
    std::optional<SpaceTimeFn> exact;
    /// g1'(x) when known in closed form; otherwise it is finite-differenced.
    std::optional<SpaceFn> initial_slope;

    bool has_exact() const noexcept { return exact.has_value(); }
};

/// Throws ConfigError for b <= a, negative alpha/beta or missing callables.
void check_problem(const TelegraphProblem& problem);

/// One of the five reference problems (1..5). Throws UnknownProblemError otherwise.
TelegraphProblem builtin_problem(int id);

/// Largest horizon at which a built-in problem is run; problem 2 blows up at t = pi - 2.
double builtin_max_horizon(int id);

/// g1'(x): the closed form when present, else a central difference with the given step.
double initial_slope(const TelegraphProblem& problem, double x, double step);

struct Diagnostic {
    std::string location;
    double magnitude;
    std::string message;
};

/// Every violated compatibility condition between initial, boundary and exact data.
/// An empty result means the problem is consistent on this mesh.
std::vector<Diagnostic> validate(const TelegraphProblem& problem, const UniformMesh& mesh);

}  // namespace telegraph
