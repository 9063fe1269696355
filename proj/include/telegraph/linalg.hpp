#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace telegraph {

/// Tridiagonal matrix with two extra entries, at (0, 2) and (n-1, n-3), plus a
/// right-hand side. This is the shape produced by collocation with boundary rows.
struct CornerTridiagonalSystem {
    std::vector<double> sub;   // n-1 entries, sub[i] at (i+1, i)
    std::vector<double> diag;  // n entries
    std::vector<double> sup;   // n-1 entries, sup[i] at (i, i+1)
    double corner_top = 0.0;
    double corner_bottom = 0.0;
    std::vector<double> rhs;

    CornerTridiagonalSystem() = default;
    explicit CornerTridiagonalSystem(std::size_t n)
        : sub(n - 1, 0.0), diag(n, 0.0), sup(n - 1, 0.0), rhs(n, 0.0) {}

    std::size_t size() const noexcept { return diag.size(); }

    /// Throws DimensionError on inconsistent lengths or n < 4.
    void check() const;

    /// Matrix-vector product A x.
    std::vector<double> apply(std::span<const double> x) const;
};

/// Row-major dense square matrix, used by the reference solver.
struct DenseMatrix {
    std::size_t n = 0;
    std::vector<double> data;

    explicit DenseMatrix(std::size_t size = 0) : n(size), data(size * size, 0.0) {}

    double& operator()(std::size_t r, std::size_t c) { return data[r * n + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data[r * n + c]; }

    static DenseMatrix identity(std::size_t size);
};

DenseMatrix to_dense(const CornerTridiagonalSystem& system);

/// Uses the first and last rows to eliminate column 0 from row 1 and column n-1
/// from row n-2, which takes both corner entries out of the coupled block, then
/// runs the Thomas recurrence without pivoting on rows 1..n-2.
///
/// Throws ZeroPivotError naming the row where a pivot fell below 1e-13 in
/// magnitude, and DimensionError for malformed systems.
std::vector<double> solve(const CornerTridiagonalSystem& system);

/// Dense Gaussian elimination with partial pivoting. Throws SingularMatrixError
/// when the best available pivot is below 1e-13.
std::vector<double> dense_solve_oracle(DenseMatrix matrix, std::vector<double> rhs);

}  // namespace telegraph
