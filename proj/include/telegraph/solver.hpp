#pragma once

#include <functional>
#include <span>
#include <vector>

#include "telegraph/basis.hpp"
#include "telegraph/linalg.hpp"
#include "telegraph/problem.hpp"

namespace telegraph {

/// Time level at which the forcing enters the recurrence: t_j only, or blended
/// theta*q(t_{j+1}) + (1-theta)*q(t_j).
enum class ForcingLevel { current, theta_blend };

/// Theta weighting, time step k and horizon T of the scheme.
class SchemeParams {
public:
    /// Throws ConfigError unless 0 <= theta <= 1, dt > 0 and t_final >= dt.
    SchemeParams(double theta, double dt, double t_final,
                 ForcingLevel forcing = ForcingLevel::current);

    double theta() const noexcept { return theta_; }
    double dt() const noexcept { return dt_; }
    double t_final() const noexcept { return t_final_; }
    ForcingLevel forcing_level() const noexcept { return forcing_; }

    /// Unconditional stability is only established for theta >= 1/2.
    bool stability_warning() const noexcept { return theta_ < 0.5; }

private:
    double theta_;
    double dt_;
    double t_final_;
    ForcingLevel forcing_;
};

/// Spline coefficients C_{-3} ... C_{N-1} at one time level.
struct CoefficientFrame {
    std::vector<double> values;
    double time = 0.0;
};

struct SolutionHistory {
    UniformMesh mesh;
    TelegraphProblem problem;
    std::vector<CoefficientFrame> frames;
    /// Wall time spent in the stepping loop when each frame was captured.
    std::vector<double> stepping_seconds;
};

/// Interpolates g1 at the knots with g1' end conditions. The slope comes from
/// the problem's closed form or a central difference with step 1e-6*h.
CoefficientFrame initial_coefficients(const TelegraphProblem& problem, const UniformMesh& mesh);

/// Builds the system for C^{j+1}. With first_step set, C^{j-1} is eliminated
/// through the initial velocity and `prev` is ignored.
///
/// Interior rows are filled in parallel on large meshes.
CornerTridiagonalSystem assemble_step(const TelegraphProblem& problem, const UniformMesh& mesh,
                                      const SchemeParams& params, std::span<const double> current,
                                      std::span<const double> prev, double t_j, bool first_step);

/// Single-threaded reference for assemble_step; must agree with it bit for bit.
CornerTridiagonalSystem assemble_step_serial(const TelegraphProblem& problem,
                                             const UniformMesh& mesh, const SchemeParams& params,
                                             std::span<const double> current,
                                             std::span<const double> prev, double t_j,
                                             bool first_step);

CoefficientFrame step(const TelegraphProblem& problem, const UniformMesh& mesh,
                      const SchemeParams& params, const CoefficientFrame& current,
                      const CoefficientFrame& prev, bool first_step);

using StepObserver = std::function<void(const CoefficientFrame&)>;

/// Marches from t = 0 and captures frames at output_times, which must be
/// strictly increasing multiples of dt inside [0, t_final]. The observer, when
/// set, sees every frame including C^0.
SolutionHistory run(const TelegraphProblem& problem, const UniformMesh& mesh,
                    const SchemeParams& params, std::span<const double> output_times,
                    const StepObserver& observer = {});

/// Number of steps that lands on t, or throws AlignmentError.
long long steps_to(double t, double dt);

}  // namespace telegraph
