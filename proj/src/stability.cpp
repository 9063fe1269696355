#include "telegraph/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "telegraph/errors.hpp"

namespace telegraph {

namespace {

constexpr double kDegenerateLeading = 1e-14;

double phi_at(int index, int samples) {
    if (index == samples - 1) return std::numbers::pi;
    return std::numbers::pi * static_cast<double>(index) / static_cast<double>(samples - 1);
}

struct Extreme {
    double magnitude = -1.0;
    int index = -1;

    void offer(double m, int i) {
        if (std::isnan(m)) m = std::numeric_limits<double>::infinity();
        if (m > magnitude || (m == magnitude && i < index)) {
            magnitude = m;
            index = i;
        }
    }
};

StabilityReport finish(const FourierCoefficients& fc, const Extreme& worst, int samples) {
    StabilityReport r;
    r.max_amplification = worst.magnitude;
    r.worst_phi = phi_at(worst.index, samples);
    r.rh_conditions = routh_hurwitz_conditions(fc, std::numbers::pi);
    r.stable = r.max_amplification <= 1.0 + kStabilityTolerance;
    return r;
}

void require_samples(int phi_samples) {
    if (phi_samples < 2) {
        throw ConfigError("phi_samples must be at least 2, got " + std::to_string(phi_samples));
    }
}

}  // namespace

FourierCoefficients fourier_coefficients(double alpha, double beta, double theta, double dt,
                                         const BasisWeights& w) {
    const double k = dt;
    const double k2 = k * k;
    const double beta2 = beta * beta;
    const double implicit_scale = 1.0 + 2.0 * alpha * k + k2 * theta * beta2;
    const double explicit_scale = 2.0 + 2.0 * alpha * k - (1.0 - theta) * k2 * beta2;

    FourierCoefficients fc{};
    fc.w1 = implicit_scale * w.a1 - k2 * theta * w.a5;
    fc.w2 = implicit_scale * w.a2 - k2 * theta * w.a6;
    fc.w3 = explicit_scale * w.a1 + (1.0 - theta) * k2 * w.a5;
    fc.w4 = explicit_scale * w.a2 + (1.0 - theta) * k2 * w.a6;
    fc.a1 = w.a1;
    fc.a2 = w.a2;
    fc.a5 = w.a5;
    fc.a6 = w.a6;
    return fc;
}

AmplificationQuadratic amplification_quadratic(const FourierCoefficients& fc, double phi) {
    const double c = std::cos(phi);
    return {fc.w2 + 2.0 * fc.w1 * c, fc.w4 + 2.0 * fc.w3 * c, fc.a2 + 2.0 * fc.a1 * c};
}

double AmplificationRoots::max_magnitude() const {
    return std::max(std::abs(first), std::abs(second));
}

AmplificationRoots amplification_roots(const FourierCoefficients& fc, double phi) {
    const auto [A, B, C] = amplification_quadratic(fc, phi);
    constexpr double inf = std::numeric_limits<double>::infinity();

    if (std::abs(A) < kDegenerateLeading) {
        const double root = B != 0.0 ? C / B : inf;
        return {{root, 0.0}, {inf, 0.0}, true};
    }

    const double disc = B * B - 4.0 * A * C;
    if (disc >= 0.0) {
        // Cancellation-free form: q carries the sign of B.
        const double q = 0.5 * (B + std::copysign(std::sqrt(disc), B));
        if (q == 0.0) return {{0.0, 0.0}, {0.0, 0.0}, false};
        return {{q / A, 0.0}, {C / q, 0.0}, false};
    }
    const double re = B / (2.0 * A);
    const double im = std::sqrt(-disc) / (2.0 * A);
    return {{re, im}, {re, -im}, false};
}

std::array<double, 3> routh_hurwitz_conditions(const FourierCoefficients& fc, double phi) {
    const auto [A, B, C] = amplification_quadratic(fc, phi);
    return {A + B + C, A - C, A - B + C};
}

StabilityReport stability_scan_serial(double alpha, double beta, double theta, double dt, double h,
                                      int phi_samples) {
    require_samples(phi_samples);
    const FourierCoefficients fc = fourier_coefficients(alpha, beta, theta, dt, basis_weights(h));
    Extreme worst;
    for (int i = 0; i < phi_samples; ++i) {
        worst.offer(amplification_roots(fc, phi_at(i, phi_samples)).max_magnitude(), i);
    }
    return finish(fc, worst, phi_samples);
}

StabilityReport stability_scan(double alpha, double beta, double theta, double dt, double h,
                               int phi_samples) {
    require_samples(phi_samples);
    const FourierCoefficients fc = fourier_coefficients(alpha, beta, theta, dt, basis_weights(h));
    Extreme worst;
#pragma omp parallel if (phi_samples >= 4096)
    {
        Extreme local;
#pragma omp for schedule(static) nowait
        for (int i = 0; i < phi_samples; ++i) {
            local.offer(amplification_roots(fc, phi_at(i, phi_samples)).max_magnitude(), i);
        }
#pragma omp critical(telegraph_scan_merge)
        worst.offer(local.magnitude, local.index);
    }
    return finish(fc, worst, phi_samples);
}

std::vector<StabilityReport> stability_sweep_serial(const std::vector<StabilityCase>& cases,
                                                    int phi_samples) {
    require_samples(phi_samples);
    std::vector<StabilityReport> out;
    out.reserve(cases.size());
    for (const auto& c : cases) {
        out.push_back(stability_scan_serial(c.alpha, c.beta, c.theta, c.dt, c.h, phi_samples));
    }
    return out;
}

std::vector<StabilityReport> stability_sweep(const std::vector<StabilityCase>& cases,
                                             int phi_samples) {
    require_samples(phi_samples);
    // Validate every spacing up front; the parallel loop below must not throw.
    for (const auto& c : cases) basis_weights(c.h);

    std::vector<StabilityReport> out(cases.size());
    const auto n = static_cast<long long>(cases.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (long long i = 0; i < n; ++i) {
        const auto& c = cases[static_cast<std::size_t>(i)];
        out[static_cast<std::size_t>(i)] =
            stability_scan_serial(c.alpha, c.beta, c.theta, c.dt, c.h, phi_samples);
    }
    return out;
}

}  // namespace telegraph
