#include "telegraph/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "telegraph/errors.hpp"

namespace telegraph {

ErrorReport error_norms(std::span<const double> knot_errors, double h) {
    ErrorReport r;
    double sum_sq = 0.0;
    for (const double e : knot_errors) {
        r.l_inf = std::max(r.l_inf, std::abs(e));
        sum_sq += e * e;
    }
    r.l2 = std::sqrt(h * sum_sq);
    r.rms = knot_errors.empty() ? 0.0 : std::sqrt(sum_sq / static_cast<double>(knot_errors.size()));
    r.n_cells = static_cast<int>(knot_errors.size()) - 1;
    return r;
}

ErrorReport error_norms(const CoefficientFrame& frame, const TelegraphProblem& problem,
                        const UniformMesh& mesh) {
    if (!problem.exact) {
        throw MissingExactSolutionError("error norms need an exact solution for " +
                                        (problem.name.empty() ? std::string("this problem") : problem.name));
    }
    if (static_cast<int>(frame.values.size()) != mesh.n_coeffs()) {
        throw DimensionError("frame does not match mesh");
    }
    const BasisWeights w = basis_weights(mesh);
    std::vector<double> errors(static_cast<std::size_t>(mesh.n_cells() + 1));
    for (int i = 0; i <= mesh.n_cells(); ++i) {
        const double numeric = knot_values(frame.values, i, w).value;
        errors[static_cast<std::size_t>(i)] = (*problem.exact)(mesh.knot(i), frame.time) - numeric;
    }
    ErrorReport r = error_norms(errors, mesh.h());
    r.time = frame.time;
    r.n_cells = mesh.n_cells();
    return r;
}

}  // namespace telegraph
