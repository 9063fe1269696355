#include "telegraph/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <sstream>

#include "telegraph/errors.hpp"

namespace telegraph {

namespace {

// Below this many knots the OpenMP fork costs more than the row work.
constexpr int kParallelAssemblyMinKnots = 2048;

struct StepCoefficients {
    double side;    // applied to C_{i-3} and C_{i-1}
    double center;  // applied to C_{i-2}
};

StepCoefficients lhs_coefficients(const TelegraphProblem& problem, const SchemeParams& params,
                                  const BasisWeights& w, bool first_step) {
    const double k = params.dt();
    const double k2 = k * k;
    const double theta = params.theta();
    double scale = 1.0 + 2.0 * problem.alpha * k + k2 * theta * problem.beta * problem.beta;
    // U^{-1} = U^1 - 2k g2 moves one more U^{j+1} to the left-hand side.
    if (first_step) scale += 1.0;
    return {scale * w.a1 - k2 * theta * w.a5, scale * w.a2 - k2 * theta * w.a6};
}

double forcing_at(const TelegraphProblem& problem, const SchemeParams& params, double x,
                  double t_j) {
    if (params.forcing_level() == ForcingLevel::current) return problem.forcing(x, t_j);
    const double theta = params.theta();
    return theta * problem.forcing(x, t_j + params.dt()) + (1.0 - theta) * problem.forcing(x, t_j);
}

// Row i+1 of the system: the collocation equation at knot x_i.
void fill_interior_row(CornerTridiagonalSystem& sys, int i, const TelegraphProblem& problem,
                       const UniformMesh& mesh, const SchemeParams& params, const BasisWeights& w,
                       const StepCoefficients& lhs, std::span<const double> current,
                       std::span<const double> prev, double t_j, bool first_step) {
    const double k = params.dt();
    const double k2 = k * k;
    const double theta = params.theta();
    const double beta2 = problem.beta * problem.beta;
    const double x = mesh.knot(i);
    const int row = i + 1;

    sys.sub[row - 1] = lhs.side;
    sys.diag[row] = lhs.center;
    sys.sup[row] = lhs.side;

    const BasisValue u = knot_values(current, i, w);
    double rhs = 2.0 * (1.0 + problem.alpha * k) * u.value +
                 k2 * (1.0 - theta) * (u.d2 - beta2 * u.value) + k2 * forcing_at(problem, params, x, t_j);
    if (first_step) {
        rhs += 2.0 * k * problem.initial_velocity(x);
    } else {
        rhs -= knot_values(prev, i, w).value;
    }
    sys.rhs[row] = rhs;
}

void fill_boundary_rows(CornerTridiagonalSystem& sys, const TelegraphProblem& problem,
                        const BasisWeights& w, double t_next) {
    const std::size_t n = sys.size();
    if (problem.boundary.kind == BoundaryKind::dirichlet) {
        sys.diag[0] = w.a1;
        sys.sup[0] = w.a2;
        sys.corner_top = w.a1;
        sys.corner_bottom = w.a1;
        sys.sub[n - 2] = w.a2;
        sys.diag[n - 1] = w.a1;
    } else {
        sys.diag[0] = w.a3;
        sys.sup[0] = 0.0;
        sys.corner_top = w.a4;
        sys.corner_bottom = w.a3;
        sys.sub[n - 2] = 0.0;
        sys.diag[n - 1] = w.a4;
    }
    sys.rhs[0] = problem.boundary.left(t_next);
    sys.rhs[n - 1] = problem.boundary.right(t_next);
}

void check_frames(const UniformMesh& mesh, std::span<const double> current,
                  std::span<const double> prev, bool first_step) {
    const auto n = static_cast<std::size_t>(mesh.n_coeffs());
    if (current.size() != n || (!first_step && prev.size() != n)) {
        throw DimensionError("coefficient frames must hold N + 3 = " + std::to_string(n) + " values");
    }
}

template <bool Parallel>
CornerTridiagonalSystem assemble(const TelegraphProblem& problem, const UniformMesh& mesh,
                                 const SchemeParams& params, std::span<const double> current,
                                 std::span<const double> prev, double t_j, bool first_step) {
    check_frames(mesh, current, prev, first_step);
    const BasisWeights w = basis_weights(mesh);
    const StepCoefficients lhs = lhs_coefficients(problem, params, w, first_step);
    const int n_knots = mesh.n_cells() + 1;

    CornerTridiagonalSystem sys(static_cast<std::size_t>(mesh.n_coeffs()));
    if constexpr (Parallel) {
        std::exception_ptr failure;
#pragma omp parallel for schedule(static) if (n_knots >= kParallelAssemblyMinKnots)
        for (int i = 0; i < n_knots; ++i) {
            try {
                fill_interior_row(sys, i, problem, mesh, params, w, lhs, current, prev, t_j, first_step);
            } catch (...) {
#pragma omp critical(telegraph_assembly_failure)
                if (!failure) failure = std::current_exception();
            }
        }
        if (failure) std::rethrow_exception(failure);
    } else {
        for (int i = 0; i < n_knots; ++i) {
            fill_interior_row(sys, i, problem, mesh, params, w, lhs, current, prev, t_j, first_step);
        }
    }
    fill_boundary_rows(sys, problem, w, t_j + params.dt());
    return sys;
}

}  // namespace

SchemeParams::SchemeParams(double theta, double dt, double t_final, ForcingLevel forcing)
    : theta_(theta), dt_(dt), t_final_(t_final), forcing_(forcing) {
    if (!(theta >= 0.0 && theta <= 1.0)) throw ConfigError("theta must lie in [0, 1]");
    if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigError("dt must be positive");
    if (!(t_final >= dt) || !std::isfinite(t_final)) throw ConfigError("t_final must be at least dt");
}

CoefficientFrame initial_coefficients(const TelegraphProblem& problem, const UniformMesh& mesh) {
    const BasisWeights w = basis_weights(mesh);
    const auto n = static_cast<std::size_t>(mesh.n_coeffs());
    const double step = 1e-6 * mesh.h();

    CornerTridiagonalSystem sys(n);
    sys.diag[0] = w.a3;
    sys.sup[0] = 0.0;
    sys.corner_top = w.a4;
    sys.rhs[0] = initial_slope(problem, mesh.a(), step);
    for (int i = 0; i <= mesh.n_cells(); ++i) {
        const int row = i + 1;
        sys.sub[row - 1] = w.a1;
        sys.diag[row] = w.a2;
        sys.sup[row] = w.a1;
        sys.rhs[row] = problem.initial_value(mesh.knot(i));
    }
    sys.corner_bottom = w.a3;
    sys.sub[n - 2] = 0.0;
    sys.diag[n - 1] = w.a4;
    sys.rhs[n - 1] = initial_slope(problem, mesh.b(), step);
    return {solve(sys), 0.0};
}

CornerTridiagonalSystem assemble_step(const TelegraphProblem& problem, const UniformMesh& mesh,
                                      const SchemeParams& params, std::span<const double> current,
                                      std::span<const double> prev, double t_j, bool first_step) {
    return assemble<true>(problem, mesh, params, current, prev, t_j, first_step);
}

CornerTridiagonalSystem assemble_step_serial(const TelegraphProblem& problem,
                                             const UniformMesh& mesh, const SchemeParams& params,
                                             std::span<const double> current,
                                             std::span<const double> prev, double t_j,
                                             bool first_step) {
    return assemble<false>(problem, mesh, params, current, prev, t_j, first_step);
}

CoefficientFrame step(const TelegraphProblem& problem, const UniformMesh& mesh,
                      const SchemeParams& params, const CoefficientFrame& current,
                      const CoefficientFrame& prev, bool first_step) {
    const auto sys =
        assemble_step(problem, mesh, params, current.values, prev.values, current.time, first_step);
    return {solve(sys), current.time + params.dt()};
}

long long steps_to(double t, double dt) {
    const double ratio = t / dt;
    const long long m = std::llround(ratio);
    if (m < 0 || std::abs(t - static_cast<double>(m) * dt) > 1e-9 * std::max(1.0, std::abs(t))) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "output time " << t << " is not a multiple of dt = " << dt;
        throw AlignmentError(msg.str());
    }
    return m;
}

SolutionHistory run(const TelegraphProblem& problem, const UniformMesh& mesh,
                    const SchemeParams& params, std::span<const double> output_times,
                    const StepObserver& observer) {
    check_problem(problem);
    std::vector<long long> capture;
    capture.reserve(output_times.size());
    for (const double t : output_times) {
        if (!(t >= 0.0) || t > params.t_final() * (1.0 + 1e-12)) {
            std::ostringstream msg;
            msg << "output time " << t << " outside [0, " << params.t_final() << "]";
            throw ConfigError(msg.str());
        }
        const long long m = steps_to(t, params.dt());
        if (!capture.empty() && m <= capture.back()) {
            throw ConfigError("output times must be strictly increasing");
        }
        capture.push_back(m);
    }

    SolutionHistory history{mesh, problem, {}, {}};
    if (capture.empty()) return history;

    const double dt = params.dt();
    auto next = capture.begin();
    CoefficientFrame current = initial_coefficients(problem, mesh);
    CoefficientFrame prev;
    if (observer) observer(current);

    using clock = std::chrono::steady_clock;
    double elapsed = 0.0;
    auto record = [&](long long j) {
        if (next != capture.end() && *next == j) {
            history.frames.push_back(current);
            // Report the requested time rather than the accumulated j * dt.
            history.frames.back().time = output_times[static_cast<std::size_t>(next - capture.begin())];
            history.stepping_seconds.push_back(elapsed);
            ++next;
        }
    };
    record(0);

    for (long long j = 0; next != capture.end(); ++j) {
        const auto start = clock::now();
        const auto sys = assemble_step(problem, mesh, params, current.values, prev.values,
                                       static_cast<double>(j) * dt, j == 0);
        CoefficientFrame advanced{solve(sys), static_cast<double>(j + 1) * dt};
        prev = std::move(current);
        current = std::move(advanced);
        elapsed += std::chrono::duration<double>(clock::now() - start).count();
        if (observer) observer(current);
        record(j + 1);
    }
    return history;
}

}  // namespace telegraph
