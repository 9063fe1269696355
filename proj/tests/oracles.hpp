#pragma once

// Test-only reference implementations. Nothing here calls into the library's
// basis or solver internals; formulas are re-typed from their closed forms.

#include <cmath>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

struct Weights {
    double a1, a2, a3, a4, a5, a6;
};

inline Weights weights(double h) {
    const double s = std::sin(h / 2), c = std::cos(h);
    Weights w{};
    w.a1 = s * s / (std::sin(h) * std::sin(3 * h / 2));
    w.a2 = 2 / (1 + 2 * c);
    w.a3 = -3 / (4 * std::sin(3 * h / 2));
    w.a4 = 3 / (4 * std::sin(3 * h / 2));
    w.a5 = 3 * (1 + 3 * c) / (16 * s * s * (2 * std::cos(h / 2) + std::cos(3 * h / 2)));
    w.a6 = -3 * std::cos(h / 2) * std::cos(h / 2) / (2 * s * s * (1 + 2 * c));
    return w;
}

/// Plain four-branch evaluation of TB_i on knots x_j = x0 + j*h (value only).
inline double tb(double x, double xi0, double h) {
    const double omega = std::sin(h / 2) * std::sin(h) * std::sin(3 * h / 2);
    auto xi = [&](int j) { return std::sin((x - (xi0 + j * h)) / 2); };
    auto ze = [&](int j) { return std::sin(((xi0 + j * h) - x) / 2); };
    if (x < xi0 || x > xi0 + 4 * h) return 0.0;
    if (x <= xi0 + h) return std::pow(xi(0), 3) / omega;
    if (x <= xi0 + 2 * h) return (xi(0) * (xi(0) * ze(2) + ze(3) * xi(1)) + ze(4) * xi(1) * xi(1)) / omega;
    if (x <= xi0 + 3 * h) return (ze(4) * (xi(1) * ze(3) + ze(4) * xi(2)) + xi(0) * ze(3) * ze(3)) / omega;
    return std::pow(ze(4), 3) / omega;
}

/// Dense Gaussian elimination with partial pivoting on a copy.
inline std::vector<double> gauss(std::vector<std::vector<double>> m, std::vector<double> r) {
    const std::size_t n = r.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        for (std::size_t i = c + 1; i < n; ++i)
            if (std::abs(m[i][c]) > std::abs(m[p][c])) p = i;
        std::swap(m[p], m[c]);
        std::swap(r[p], r[c]);
        for (std::size_t i = c + 1; i < n; ++i) {
            const double f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
            r[i] -= f * r[c];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = r[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= m[i][j] * x[j];
        x[i] = s / m[i][i];
    }
    return x;
}

/// PDE residual u_tt + 2 alpha u_t + beta^2 u - u_xx - q by central differences.
inline double pde_residual(const std::function<double(double, double)>& u,
                           const std::function<double(double, double)>& q, double alpha, double beta,
                           double x, double t, double step = 1e-4) {
    const double u0 = u(x, t);
    const double ut = (u(x, t + step) - u(x, t - step)) / (2 * step);
    const double utt = (u(x, t + step) - 2 * u0 + u(x, t - step)) / (step * step);
    const double uxx = (u(x + step, t) - 2 * u0 + u(x - step, t)) / (step * step);
    return utt + 2 * alpha * ut + beta * beta * u0 - uxx - q(x, t);
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

inline double max_abs(const std::vector<double>& a) {
    double m = 0.0;
    for (double v : a) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace oracle
