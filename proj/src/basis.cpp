#include "telegraph/basis.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "telegraph/errors.hpp"

namespace telegraph {

namespace {

constexpr double kDegenerateTol = 1e-14;

// Value with first and second derivative in x, closed under + and *.
struct Jet {
    double v;
    double d1;
    double d2;
};

Jet operator+(const Jet& f, const Jet& g) { return {f.v + g.v, f.d1 + g.d1, f.d2 + g.d2}; }

Jet operator*(const Jet& f, const Jet& g) {
    return {f.v * g.v, f.d1 * g.v + f.v * g.d1, f.d2 * g.v + 2.0 * f.d1 * g.d1 + f.v * g.d2};
}

// xi(x_j) = sin((x - x_j) / 2)
Jet xi(double x, double xj) {
    const double u = 0.5 * (x - xj);
    const double s = std::sin(u);
    return {s, 0.5 * std::cos(u), -0.25 * s};
}

// zeta(x_j) = sin((x_j - x) / 2)
Jet zeta(double x, double xj) {
    const double u = 0.5 * (xj - x);
    const double s = std::sin(u);
    return {s, -0.5 * std::cos(u), -0.25 * s};
}

void require_nonzero(double value, const char* what, double h) {
    if (std::abs(value) < kDegenerateTol) {
        std::ostringstream msg;
        msg << "degenerate mesh: " << what << " vanishes for h = " << h;
        throw DegenerateMeshError(msg.str());
    }
}

}  // namespace

UniformMesh::UniformMesh(double a, double b, int n_cells) : a_(a), b_(b), n_(n_cells), h_(0.0) {
    if (!std::isfinite(a) || !std::isfinite(b) || !(b > a)) {
        throw ConfigError("mesh requires finite endpoints with b > a");
    }
    if (n_cells < 3) {
        throw ConfigError("mesh requires at least 3 cells, got " + std::to_string(n_cells));
    }
    h_ = (b - a) / n_cells;
    if (!(h_ < std::numbers::pi)) {
        throw DegenerateMeshError("mesh spacing h = " + std::to_string(h_) + " must be below pi");
    }
}

double BasisValue::order(int derivative_order) const {
    switch (derivative_order) {
        case 0: return value;
        case 1: return d1;
        case 2: return d2;
        default: throw ConfigError("derivative order must be 0, 1 or 2");
    }
}

BasisWeights basis_weights(double h) {
    const double s_half = std::sin(0.5 * h);
    const double s_one = std::sin(h);
    const double s_three_half = std::sin(1.5 * h);
    const double one_two_cos = 1.0 + 2.0 * std::cos(h);
    const double cos_mix = 2.0 * std::cos(0.5 * h) + std::cos(1.5 * h);

    require_nonzero(s_half, "sin(h/2)", h);
    require_nonzero(s_one, "sin(h)", h);
    require_nonzero(s_three_half, "sin(3h/2)", h);
    require_nonzero(one_two_cos, "1 + 2cos(h)", h);
    require_nonzero(cos_mix, "2cos(h/2) + cos(3h/2)", h);

    const double s2 = s_half * s_half;
    const double c_half = std::cos(0.5 * h);

    BasisWeights w{};
    w.a1 = s2 / (s_one * s_three_half);
    w.a2 = 2.0 / one_two_cos;
    w.a4 = 3.0 / (4.0 * s_three_half);
    w.a3 = -w.a4;
    w.a5 = 3.0 * (1.0 + 3.0 * std::cos(h)) / (16.0 * s2 * cos_mix);
    w.a6 = -3.0 * c_half * c_half / (2.0 * s2 * one_two_cos);
    return w;
}

BasisWeights basis_weights(const UniformMesh& mesh) { return basis_weights(mesh.h()); }

BasisValue eval_basis_piece(int i, int piece, double x, const UniformMesh& mesh) {
    const double h = mesh.h();
    const double omega = std::sin(0.5 * h) * std::sin(h) * std::sin(1.5 * h);
    const double x0 = mesh.knot(i);
    auto knot = [&](int offset) { return x0 + offset * h; };

    Jet r{};
    switch (piece) {
        case 0: {
            const Jet p = xi(x, knot(0));
            r = p * p * p;
            break;
        }
        case 1: {
            const Jet p0 = xi(x, knot(0));
            const Jet p1 = xi(x, knot(1));
            const Jet z4 = zeta(x, knot(4));
            r = p0 * (p0 * zeta(x, knot(2)) + zeta(x, knot(3)) * p1) + z4 * p1 * p1;
            break;
        }
        case 2: {
            const Jet z3 = zeta(x, knot(3));
            const Jet z4 = zeta(x, knot(4));
            r = z4 * (xi(x, knot(1)) * z3 + z4 * xi(x, knot(2))) + xi(x, knot(0)) * z3 * z3;
            break;
        }
        case 3: {
            const Jet z = zeta(x, knot(4));
            r = z * z * z;
            break;
        }
        default: throw ConfigError("basis piece must be in 0..3");
    }
    return {r.v / omega, r.d1 / omega, r.d2 / omega};
}

BasisValue eval_basis(int i, double x, const UniformMesh& mesh) {
    const double left = mesh.knot(i);
    const double right = mesh.knot(i) + 4.0 * mesh.h();
    if (x < left || x > right) return {};

    // Pieces are (x_{i+p}, x_{i+p+1}], except the first which also owns x_i.
    const double t = (x - left) / mesh.h();
    int piece = static_cast<int>(std::ceil(t)) - 1;
    if (piece < 0) piece = 0;
    if (piece > 3) piece = 3;
    return eval_basis_piece(i, piece, x, mesh);
}

double eval_basis(int i, double x, const UniformMesh& mesh, int derivative_order) {
    return eval_basis(i, x, mesh).order(derivative_order);
}

BasisValue evaluate_solution(std::span<const double> coeffs, double x, const UniformMesh& mesh) {
    if (static_cast<int>(coeffs.size()) != mesh.n_coeffs()) {
        throw DimensionError("expected " + std::to_string(mesh.n_coeffs()) +
                             " coefficients, got " + std::to_string(coeffs.size()));
    }
    if (!(x >= mesh.a() && x <= mesh.b())) {
        std::ostringstream msg;
        msg << "x = " << x << " outside [" << mesh.a() << ", " << mesh.b() << "]";
        throw OutOfDomainError(msg.str());
    }

    // Cell [x_c, x_{c+1}] carries TB_{c-3} ... TB_c; coefficient of TB_i sits at i + 3.
    int cell = static_cast<int>(std::floor((x - mesh.a()) / mesh.h()));
    if (cell < 0) cell = 0;
    if (cell > mesh.n_cells() - 1) cell = mesh.n_cells() - 1;

    BasisValue sum;
    for (int i = cell - 3; i <= cell; ++i) {
        const double c = coeffs[i + 3];
        if (c == 0.0) continue;
        const BasisValue tb = eval_basis(i, x, mesh);
        sum.value += c * tb.value;
        sum.d1 += c * tb.d1;
        sum.d2 += c * tb.d2;
    }
    return sum;
}

double evaluate_solution(std::span<const double> coeffs, double x, const UniformMesh& mesh,
                         int derivative_order) {
    if (derivative_order < 0 || derivative_order > 2) {
        throw ConfigError("derivative order must be 0, 1 or 2");
    }
    return evaluate_solution(coeffs, x, mesh).order(derivative_order);
}

}  // namespace telegraph
