#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "telegraph/errors.hpp"
#include "telegraph/metrics.hpp"
#include "telegraph/solver.hpp"

using namespace telegraph;

TEST(ErrorNorms, ConstantError) {
    const std::vector<double> e(11, -0.5);
    const ErrorReport r = error_norms(e, 0.1);
    EXPECT_DOUBLE_EQ(r.l_inf, 0.5);
    EXPECT_DOUBLE_EQ(r.rms, 0.5);
    EXPECT_NEAR(r.l2, std::sqrt(0.1 * 11 * 0.25), 1e-15);
    EXPECT_EQ(r.n_cells, 10);
}

TEST(ErrorNorms, IdentitiesAndPermutationInvariance) {
    std::mt19937 rng(8);
    std::normal_distribution<double> d(0.0, 1e-3);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> e(static_cast<std::size_t>(5 + trial * 7));
        for (auto& v : e) v = d(rng);
        const double h = 1.0 / static_cast<double>(e.size() - 1);
        const ErrorReport r = error_norms(e, h);
        EXPECT_NEAR(r.l2, r.rms * std::sqrt(h * static_cast<double>(e.size())), 1e-12 * r.l2);
        EXPECT_GE(r.l_inf, r.rms);

        std::shuffle(e.begin(), e.end(), rng);
        const ErrorReport s = error_norms(e, h);
        EXPECT_EQ(s.l_inf, r.l_inf);
        EXPECT_NEAR(s.l2, r.l2, 1e-15);
    }
}

TEST(ErrorNorms, FrameAgainstExactSolution) {
    const TelegraphProblem p = builtin_problem(1);
    const UniformMesh mesh(p.a, p.b, 40);
    const CoefficientFrame c0 = initial_coefficients(p, mesh);
    const ErrorReport r = error_norms(c0, p, mesh);
    EXPECT_LE(r.l_inf, 1e-13);
    EXPECT_EQ(r.n_cells, 40);
    EXPECT_EQ(r.time, 0.0);
}

TEST(ErrorNorms, MissingExactOrWrongSize) {
    TelegraphProblem p = builtin_problem(1);
    const UniformMesh mesh(p.a, p.b, 10);
    const CoefficientFrame c0 = initial_coefficients(p, mesh);
    EXPECT_THROW(error_norms(CoefficientFrame{{1.0, 2.0}, 0.0}, p, mesh), DimensionError);
    p.exact.reset();
    EXPECT_THROW(error_norms(c0, p, mesh), MissingExactSolutionError);
}
