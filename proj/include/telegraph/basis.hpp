#pragma once

#include <span>

namespace telegraph {

/// Uniform partition of [a, b] into n_cells cells of width h.
///
/// Knots x_i = a + i*h are defined for every integer i, so the extended knots
/// x_{-3} ... x_{N+3} needed by the boundary splines continue with the same spacing.
class UniformMesh {
public:
    /// Throws ConfigError unless b > a, n_cells >= 3 and 0 < h < pi.
    UniformMesh(double a, double b, int n_cells);

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    int n_cells() const noexcept { return n_; }
    double h() const noexcept { return h_; }

    double knot(int i) const noexcept { return i == n_ ? b_ : a_ + i * h_; }

    /// Number of spline coefficients, N + 3.
    int n_coeffs() const noexcept { return n_ + 3; }

private:
    double a_;
    double b_;
    int n_;
    double h_;
};

/// Knot values of the cubic trigonometric B-spline and its derivatives.
///
/// At the five knots x_i ... x_{i+4} of its support, TB_i takes the values
/// (0, a1, a2, a1, 0) and TB_i'' takes (0, a5, a6, a5, 0). The first derivative is
/// (0, a4, 0, a3, 0): rising on the left, falling on the right, with a3 = -a4 < 0.
/// At a knot x_i of a spline expansion this gives U_x = a3 C_{i-3} + a4 C_{i-1}.
struct BasisWeights {
    double a1;
    double a2;
    double a3;
    double a4;
    double a5;
    double a6;
};

/// Value and first two derivatives of a function at one point.
struct BasisValue {
    double value = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;

    double order(int derivative_order) const;
};

/// Closed-form knot weights for spacing h. Throws DegenerateMeshError when any
/// normalizer is within 1e-14 of zero.
BasisWeights basis_weights(double h);
BasisWeights basis_weights(const UniformMesh& mesh);

/// TB_i and its derivatives at x; zero outside [x_i, x_{i+4}].
/// A point exactly on an interior knot is evaluated with the left piece.
BasisValue eval_basis(int i, double x, const UniformMesh& mesh);
double eval_basis(int i, double x, const UniformMesh& mesh, int derivative_order);

/// One piece (0..3) of TB_i, evaluated at x without regard to its cell. Used to
/// take one-sided limits at knots.
BasisValue eval_basis_piece(int i, int piece, double x, const UniformMesh& mesh);

/// U(x) = sum_i C_i TB_i(x), with coeffs[p] holding C_{p-3}.
/// Throws DimensionError unless coeffs.size() == N + 3 and OutOfDomainError for x outside [a, b].
BasisValue evaluate_solution(std::span<const double> coeffs, double x, const UniformMesh& mesh);
double evaluate_solution(std::span<const double> coeffs, double x, const UniformMesh& mesh,
                         int derivative_order);

/// U, U_x and U_xx at knot x_i (0 <= i <= N) from the knot weights alone.
inline BasisValue knot_values(std::span<const double> coeffs, int i, const BasisWeights& w) {
    const double cm3 = coeffs[i];
    const double cm2 = coeffs[i + 1];
    const double cm1 = coeffs[i + 2];
    return {w.a1 * cm3 + w.a2 * cm2 + w.a1 * cm1, w.a3 * cm3 + w.a4 * cm1,
            w.a5 * cm3 + w.a6 * cm2 + w.a5 * cm1};
}

}  // namespace telegraph
