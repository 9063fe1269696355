#pragma once

#include <span>

#include "telegraph/basis.hpp"
#include "telegraph/problem.hpp"
#include "telegraph/solver.hpp"

namespace telegraph {

/// Knot-based error norms against the exact solution:
///   l_inf = max |e_j|,  l2 = sqrt(h sum e_j^2),  rms = sqrt(sum e_j^2 / (N+1)).
struct ErrorReport {
    double l_inf = 0.0;
    double l2 = 0.0;
    double rms = 0.0;
    double time = 0.0;
    int n_cells = 0;
};

/// Norms of a sample of knot errors e_0 ... e_N with spacing h.
ErrorReport error_norms(std::span<const double> knot_errors, double h);

/// Compares the frame at its own time with problem.exact at knots x_0 ... x_N.
/// Throws MissingExactSolutionError when the problem has no exact solution.
ErrorReport error_norms(const CoefficientFrame& frame, const TelegraphProblem& problem,
                        const UniformMesh& mesh);

}  // namespace telegraph
