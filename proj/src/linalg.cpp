#include "telegraph/linalg.hpp"

#include <cmath>
#include <utility>

#include "telegraph/errors.hpp"

namespace telegraph {

namespace {

constexpr double kPivotTol = 1e-13;

void require_pivot(double pivot, std::size_t row) {
    if (!(std::abs(pivot) > kPivotTol)) throw ZeroPivotError(row, pivot);
}

}  // namespace

void CornerTridiagonalSystem::check() const {
    const std::size_t n = diag.size();
    if (n < 4) throw DimensionError("corner-tridiagonal system needs n >= 4, got " + std::to_string(n));
    if (sub.size() != n - 1 || sup.size() != n - 1 || rhs.size() != n) {
        throw DimensionError("corner-tridiagonal system has inconsistent band lengths");
    }
}

std::vector<double> CornerTridiagonalSystem::apply(std::span<const double> x) const {
    const std::size_t n = size();
    if (x.size() != n) throw DimensionError("vector length does not match system size");
    std::vector<double> y(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double s = diag[i] * x[i];
        if (i > 0) s += sub[i - 1] * x[i - 1];
        if (i + 1 < n) s += sup[i] * x[i + 1];
        y[i] = s;
    }
    y[0] += corner_top * x[2];
    y[n - 1] += corner_bottom * x[n - 3];
    return y;
}

DenseMatrix DenseMatrix::identity(std::size_t size) {
    DenseMatrix m(size);
    for (std::size_t i = 0; i < size; ++i) m(i, i) = 1.0;
    return m;
}

DenseMatrix to_dense(const CornerTridiagonalSystem& system) {
    system.check();
    const std::size_t n = system.size();
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = system.diag[i];
        if (i > 0) m(i, i - 1) = system.sub[i - 1];
        if (i + 1 < n) m(i, i + 1) = system.sup[i];
    }
    m(0, 2) += system.corner_top;
    m(n - 1, n - 3) += system.corner_bottom;
    return m;
}

std::vector<double> solve(const CornerTridiagonalSystem& system) {
    system.check();
    const std::size_t n = system.size();
    std::vector<double> sub = system.sub;
    std::vector<double> diag = system.diag;
    std::vector<double> sup = system.sup;
    std::vector<double> rhs = system.rhs;

    // Row 0 spans columns 0..2 and row 1 is the only other row touching column 0,
    // so eliminating column 0 from row 1 leaves rows 1..n-2 tridiagonal in
    // columns 1..n-2. The last row is handled symmetrically.
    require_pivot(diag[0], 0);
    {
        const double m = sub[0] / diag[0];
        diag[1] -= m * sup[0];
        sup[1] -= m * system.corner_top;
        rhs[1] -= m * rhs[0];
    }
    require_pivot(diag[n - 1], n - 1);
    {
        const double m = sup[n - 2] / diag[n - 1];
        diag[n - 2] -= m * sub[n - 2];
        sub[n - 3] -= m * system.corner_bottom;
        rhs[n - 2] -= m * rhs[n - 1];
    }

    // Thomas on the inner block: forward sweep normalizes each row, back
    // substitution unwinds it.
    std::vector<double> x(n);
    std::vector<double> c(n, 0.0);
    std::vector<double> d(n, 0.0);
    require_pivot(diag[1], 1);
    c[1] = sup[1] / diag[1];
    d[1] = rhs[1] / diag[1];
    for (std::size_t i = 2; i + 1 < n; ++i) {
        const double denom = diag[i] - sub[i - 1] * c[i - 1];
        require_pivot(denom, i);
        c[i] = sup[i] / denom;
        d[i] = (rhs[i] - sub[i - 1] * d[i - 1]) / denom;
    }
    x[n - 2] = d[n - 2];
    for (std::size_t i = n - 2; i-- > 1;) x[i] = d[i] - c[i] * x[i + 1];

    x[0] = (rhs[0] - sup[0] * x[1] - system.corner_top * x[2]) / diag[0];
    x[n - 1] = (rhs[n - 1] - sub[n - 2] * x[n - 2] - system.corner_bottom * x[n - 3]) / diag[n - 1];
    return x;
}

std::vector<double> dense_solve_oracle(DenseMatrix matrix, std::vector<double> rhs) {
    const std::size_t n = matrix.n;
    if (rhs.size() != n) throw DimensionError("rhs length does not match matrix size");

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot_row = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(matrix(r, col)) > std::abs(matrix(pivot_row, col))) pivot_row = r;
        }
        if (!(std::abs(matrix(pivot_row, col)) > kPivotTol)) throw SingularMatrixError(col);
        if (pivot_row != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(matrix(col, c), matrix(pivot_row, c));
            std::swap(rhs[col], rhs[pivot_row]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const double m = matrix(r, col) / matrix(col, col);
            if (m == 0.0) continue;
            for (std::size_t c = col; c < n; ++c) matrix(r, c) -= m * matrix(col, c);
            rhs[r] -= m * rhs[col];
        }
    }

    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = rhs[i];
        for (std::size_t c = i + 1; c < n; ++c) s -= matrix(i, c) * x[c];
        x[i] = s / matrix(i, i);
    }
    return x;
}

}  // namespace telegraph
