#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "telegraph/cli.hpp"

using telegraph::cli::kExitConfig;
using telegraph::cli::kExitNumerical;
using telegraph::cli::kExitOk;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "telegraph");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = telegraph::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text, char delim = ',') {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, delim)) cells.push_back(cell);
        if (!line.empty() && line.back() == delim) cells.emplace_back();
        rows.push_back(cells);
    }
    return rows;
}

std::string config(int id) { return std::string(TELEGRAPH_CONFIG_DIR) + "/problem" + std::to_string(id) + ".cfg"; }

}  // namespace

TEST(Cli, SolveWritesOneRowPerKnotAndTime) {
    const Result r = invoke({"solve", "--problem", "1", "--n", "157", "--dt", "0.01", "--times", "1,2,3"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto rows = parse_csv(r.out);
    ASSERT_EQ(rows.size(), 1u + 3u * 158u);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"x", "t", "u", "exact", "error"}));
    for (std::size_t i = 1; i < rows.size(); ++i) {
        ASSERT_EQ(rows[i].size(), 5u);
        const double u = std::stod(rows[i][2]), exact = std::stod(rows[i][3]), e = std::stod(rows[i][4]);
        EXPECT_EQ(e, exact - u);
        EXPECT_LT(std::abs(e), 1e-2);
    }
}

TEST(Cli, TabSeparatedOutput) {
    const Result r = invoke({"solve", "--problem", "3", "--n", "10", "--format", "tsv"});
    ASSERT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "x\tt\tu\texact\terror");
}

TEST(Cli, SolveIsDeterministic) {
    const std::vector<std::string> args = {"solve", "--problem", "5", "--n", "40", "--times", "0.5,1"};
    EXPECT_EQ(invoke(args).out, invoke(args).out);
}

TEST(Cli, ConfigErrorsExitTwo) {
    EXPECT_EQ(invoke({"solve", "--problem", "2", "--t-final", "2"}).code, kExitConfig);
    EXPECT_EQ(invoke({"solve", "--problem", "9"}).code, kExitConfig);
    EXPECT_EQ(invoke({"solve"}).code, kExitConfig);
    EXPECT_EQ(invoke({"solve", "--problem", "1", "--config", config(1)}).code, kExitConfig);
    EXPECT_EQ(invoke({"solve", "--problem", "1", "--times", "0.105"}).code, kExitConfig);
    EXPECT_EQ(invoke({"solve", "--problem", "1", "--n", "1"}).code, kExitConfig);
    EXPECT_EQ(invoke({"solve", "--problem", "1", "--format", "xml"}).code, kExitConfig);
    EXPECT_EQ(invoke({"stability", "--domain", "0,1", "--phi-samples", "1"}).code, kExitConfig);
    EXPECT_EQ(invoke({"stability", "--alpha", "1"}).code, kExitConfig);
    EXPECT_EQ(invoke({"bogus"}).code, kExitConfig);
}

TEST(Cli, NumericalFailureExitsThree) {
    EXPECT_EQ(invoke({"solve", "--problem", "1", "--theta", "0", "--n", "10"}).code, kExitNumerical);
}

TEST(Cli, ExplicitWeightWarns) {
    const Result r = invoke({"solve", "--problem", "5", "--theta", "0.25", "--n", "20", "--dt", "0.001", "--times", "0.01"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST(Cli, ConfigMatchesBuiltin) {
    for (int id = 1; id <= 4; ++id) {
        const Result a = invoke({"solve", "--problem", std::to_string(id), "--n", "30", "--times", "0.5,1"});
        const Result b = invoke({"solve", "--config", config(id), "--n", "30", "--times", "0.5,1"});
        ASSERT_EQ(a.code, kExitOk);
        ASSERT_EQ(b.code, kExitOk) << b.err;
        const auto ra = parse_csv(a.out), rb = parse_csv(b.out);
        ASSERT_EQ(ra.size(), rb.size());
        for (std::size_t i = 1; i < ra.size(); ++i) EXPECT_NEAR(std::stod(ra[i][2]), std::stod(rb[i][2]), 1e-12);
    }
}

TEST(Cli, ConfigWithoutExactLeavesColumnsEmpty) {
    const std::string path = ::testing::TempDir() + "no_exact.cfg";
    {
        std::ofstream f(path);
        f << "alpha = 1\nbeta = 1\ndomain = 0, 1\ng1 = 0\nbc = dirichlet\nleft = 0\nright = 0\nq = sin(pi*x)\n";
    }
    const Result r = invoke({"solve", "--config", path, "--n", "10"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto rows = parse_csv(r.out);
    ASSERT_EQ(rows[1].size(), 5u);
    EXPECT_TRUE(rows[1][3].empty());
    EXPECT_EQ(invoke({"bench", "--config", path, "--n", "10"}).code, kExitConfig);
}

TEST(Cli, BenchReportsNormIdentities) {
    const Result r = invoke({"bench", "--problem", "4", "--n", "50", "--dt", "0.001", "--times", "0.5,1"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto rows = parse_csv(r.out);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"t", "L2", "Linf", "RMS", "cpu_seconds"}));
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double l2 = std::stod(rows[i][1]), linf = std::stod(rows[i][2]), rms = std::stod(rows[i][3]);
        EXPECT_NEAR(l2, rms * std::sqrt(0.02 * 51), 1e-12 * l2);
        EXPECT_GE(linf, rms);
        EXPECT_GE(std::stod(rows[i][4]), 0.0);
    }
}

TEST(Cli, StabilityThetaSweep) {
    const Result r = invoke({"stability", "--domain", "0,pi", "--n", "40", "--dt", "1", "--sweep", "theta=0:1:0.05"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto rows = parse_csv(r.out);
    ASSERT_EQ(rows.size(), 22u);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double theta = std::stod(rows[i][0]);
        EXPECT_EQ(rows[i][10], theta >= 0.5 - 1e-12 ? "stable" : "unstable") << theta;
    }
}

TEST(Cli, StabilityFromProblem) {
    const Result r = invoke({"stability", "--problem", "1", "--theta", "0.5", "--dt", "0.1"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto rows = parse_csv(r.out);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(std::stod(rows[1][1]), 2.0);
    EXPECT_EQ(rows[1][10], "stable");
}

TEST(Cli, PlotDataHasEveryStep) {
    const std::string path = ::testing::TempDir() + "plot.csv";
    const Result r = invoke({"solve", "--problem", "3", "--n", "10", "--dt", "0.1", "--times", "1", "--emit-plot-data", path});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    EXPECT_EQ(parse_csv(text.str()).size(), 1u + 11u * 11u);
}

TEST(Cli, BenchFinerMeshNotWorse) {
    auto linf = [](const std::string& n) {
        const Result r = invoke({"bench", "--problem", "4", "--n", n, "--dt", "1e-4", "--times", "1"});
        EXPECT_EQ(r.code, kExitOk) << r.err;
        return std::stod(parse_csv(r.out).at(1).at(2));
    };
    EXPECT_LE(linf("100"), linf("50"));
}
