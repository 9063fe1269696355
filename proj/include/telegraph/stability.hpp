#pragma once

#include <array>
#include <complex>
#include <vector>

#include "telegraph/basis.hpp"

namespace telegraph {

/// Coefficients of the Fourier-mode recurrence
///   w1 C_{m-3}^{j+1} + w2 C_{m-2}^{j+1} + w1 C_{m-1}^{j+1}
///     = w3 C_{m-3}^j + w4 C_{m-2}^j + w3 C_{m-1}^j - (a1, a2, a1) . C^{j-1}.
struct FourierCoefficients {
    double w1;
    double w2;
    double w3;
    double w4;
    double a1;
    double a2;
    double a5;
    double a6;
};

FourierCoefficients fourier_coefficients(double alpha, double beta, double theta, double dt,
                                         const BasisWeights& weights);

/// Coefficients of A delta^2 - B delta + C = 0 at wave number phi.
struct AmplificationQuadratic {
    double A;
    double B;
    double C;
};

AmplificationQuadratic amplification_quadratic(const FourierCoefficients& fc, double phi);

/// The two amplification factors. When |A| < 1e-14 the quadratic degenerates:
/// `first` holds the root of -B delta + C = 0 and `second` is infinite.
struct AmplificationRoots {
    std::complex<double> first;
    std::complex<double> second;
    bool degenerate = false;

    double max_magnitude() const;
};

AmplificationRoots amplification_roots(const FourierCoefficients& fc, double phi);

/// (A+B+C, A-C, A-B+C); all three non-negative is the Routh-Hurwitz condition
/// for both roots to lie in the closed unit disk.
std::array<double, 3> routh_hurwitz_conditions(const FourierCoefficients& fc, double phi);

struct StabilityReport {
    double max_amplification = 0.0;
    double worst_phi = 0.0;
    std::array<double, 3> rh_conditions{};  // at phi = pi
    bool stable = false;
};

constexpr int kDefaultPhiSamples = 721;
constexpr double kStabilityTolerance = 1e-12;

/// Scans phi uniformly over [0, pi] (endpoints included). Ties in the maximum
/// resolve to the smallest phi, so the report does not depend on thread count.
/// Throws ConfigError when phi_samples < 2.
StabilityReport stability_scan(double alpha, double beta, double theta, double dt, double h,
                               int phi_samples = kDefaultPhiSamples);
StabilityReport stability_scan_serial(double alpha, double beta, double theta, double dt, double h,
                                      int phi_samples = kDefaultPhiSamples);

struct StabilityCase {
    double alpha;
    double beta;
    double theta;
    double dt;
    double h;
};

/// One scan per case, cases distributed across threads.
std::vector<StabilityReport> stability_sweep(const std::vector<StabilityCase>& cases,
                                             int phi_samples = kDefaultPhiSamples);
std::vector<StabilityReport> stability_sweep_serial(const std::vector<StabilityCase>& cases,
                                                    int phi_samples = kDefaultPhiSamples);

}  // namespace telegraph
