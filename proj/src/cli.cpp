#include "telegraph/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "telegraph/config.hpp"
#include "telegraph/errors.hpp"
#include "telegraph/expr.hpp"
#include "telegraph/metrics.hpp"
#include "telegraph/solver.hpp"
#include "telegraph/stability.hpp"

namespace telegraph::cli {

namespace {

std::string full_precision(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// Delimited table writer; every numeric cell is written with 17 significant digits.
class TableWriter {
public:
    TableWriter(std::ostream& out, char delim) : out_(out), delim_(delim) {}

    void header(std::initializer_list<const char*> cols) {
        bool first = true;
        for (const char* c : cols) {
            if (!first) out_ << delim_;
            out_ << c;
            first = false;
        }
        out_ << '\n';
    }

    TableWriter& cell(double v) { return text(full_precision(v)); }

    TableWriter& text(const std::string& s) {
        if (!row_started_) {
            row_started_ = true;
        } else {
            out_ << delim_;
        }
        out_ << s;
        return *this;
    }

    void end_row() {
        out_ << '\n';
        row_started_ = false;
    }

private:
    std::ostream& out_;
    char delim_;
    bool row_started_ = false;
};

double constant(const std::string& text, const char* what) {
    try {
        return expr::parse(text)(0.0, 0.0);
    } catch (const Error& e) {
        throw ConfigError(std::string(what) + ": " + e.what());
    }
}

std::vector<double> parse_list(const std::string& text, const char* what) {
    std::vector<double> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        out.push_back(constant(item, what));
    }
    return out;
}

/// Destination stream: a file when a path is given, else the caller's stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (!path.empty() && path != "-") {
            file_.open(path);
            if (!file_) throw ConfigError("cannot open output file '" + path + "'");
            stream_ = &file_;
        }
    }

    std::ostream& get() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

struct RunConfig {
    int problem_id = 0;
    std::string config_path;
    int n_cells = 100;
    double dt = 0.01;
    double theta = 0.5;
    std::optional<double> t_final;
    std::string times;
    std::string format = "csv";
    std::string output;
    std::string forcing_level = "j";
    std::string plot_path;
};

struct PreparedRun {
    TelegraphProblem problem;
    UniformMesh mesh;
    SchemeParams params;
    std::vector<double> times;
};

char delimiter(const std::string& format) { return format == "tsv" ? '\t' : ','; }

PreparedRun prepare(const RunConfig& cfg, std::ostream& err) {
    TelegraphProblem problem =
        cfg.config_path.empty() ? builtin_problem(cfg.problem_id) : load_problem_config(cfg.config_path);

    std::vector<double> times = parse_list(cfg.times, "--times");
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());

    double t_final = 0.0;
    if (cfg.t_final) {
        t_final = *cfg.t_final;
    } else if (!times.empty()) {
        t_final = std::max(times.back(), cfg.dt);
    } else {
        t_final = 1.0;
    }
    if (times.empty()) times.push_back(t_final);

    if (cfg.config_path.empty() && t_final > builtin_max_horizon(cfg.problem_id)) {
        throw ConfigError("problem " + std::to_string(cfg.problem_id) + " is limited to t <= " +
                          full_precision(builtin_max_horizon(cfg.problem_id)));
    }

    const ForcingLevel level =
        cfg.forcing_level == "theta" ? ForcingLevel::theta_blend : ForcingLevel::current;
    SchemeParams params(cfg.theta, cfg.dt, t_final, level);
    if (params.stability_warning()) {
        err << "warning: theta = " << cfg.theta
            << " is below 1/2; unconditional stability is not guaranteed\n";
    }
    UniformMesh mesh(problem.a, problem.b, cfg.n_cells);
    for (const auto& d : validate(problem, mesh)) {
        err << "warning: " << d.location << ": " << d.message << " (" << full_precision(d.magnitude)
            << ")\n";
    }
    return {std::move(problem), mesh, params, std::move(times)};
}

void add_run_options(CLI::App& cmd, RunConfig& cfg) {
    auto* problem = cmd.add_option("--problem", cfg.problem_id, "Built-in problem 1..5");
    auto* config = cmd.add_option("--config", cfg.config_path, "Problem config file (key = value)");
    problem->excludes(config);
    config->excludes(problem);
    cmd.add_option("--n", cfg.n_cells, "Number of cells N")->capture_default_str();
    cmd.add_option("--dt", cfg.dt, "Time step k")->capture_default_str();
    cmd.add_option("--theta", cfg.theta, "Theta weighting in [0, 1]")->capture_default_str();
    cmd.add_option("--t-final", cfg.t_final, "Horizon T (default: last output time)");
    cmd.add_option("--times", cfg.times, "Comma-separated output times (multiples of dt)");
    cmd.add_option("--format", cfg.format, "csv or tsv")
        ->check(CLI::IsMember({"csv", "tsv"}))
        ->capture_default_str();
    cmd.add_option("--output,-o", cfg.output, "Output file (default: stdout)");
    cmd.add_option("--forcing-level", cfg.forcing_level, "Forcing time level: j or theta")
        ->check(CLI::IsMember({"j", "theta"}))
        ->capture_default_str();
}

void require_problem(const RunConfig& cfg) {
    if (cfg.config_path.empty() && cfg.problem_id == 0) {
        throw ConfigError("one of --problem or --config is required");
    }
}

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    require_problem(cfg);
    const PreparedRun r = prepare(cfg, err);
    const char delim = delimiter(cfg.format);

    std::optional<Sink> plot_sink;
    std::optional<TableWriter> plot;
    if (!cfg.plot_path.empty()) {
        plot_sink.emplace(cfg.plot_path, out);
        plot.emplace(plot_sink->get(), delim);
        plot->header({"x", "t", "u"});
    }
    const BasisWeights w = basis_weights(r.mesh);
    StepObserver observer;
    if (plot) {
        observer = [&](const CoefficientFrame& f) {
            for (int i = 0; i <= r.mesh.n_cells(); ++i) {
                plot->cell(r.mesh.knot(i)).cell(f.time).cell(knot_values(f.values, i, w).value).end_row();
            }
        };
    }

    const SolutionHistory history = run(r.problem, r.mesh, r.params, r.times, observer);

    Sink sink(cfg.output, out);
    TableWriter table(sink.get(), delim);
    table.header({"x", "t", "u", "exact", "error"});
    for (const auto& frame : history.frames) {
        for (int i = 0; i <= r.mesh.n_cells(); ++i) {
            const double x = r.mesh.knot(i);
            const double u = knot_values(frame.values, i, w).value;
            table.cell(x).cell(frame.time).cell(u);
            if (r.problem.exact) {
                const double exact = (*r.problem.exact)(x, frame.time);
                table.cell(exact).cell(exact - u);
            } else {
                table.text("").text("");
            }
            table.end_row();
        }
    }
    return kExitOk;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    require_problem(cfg);
    const PreparedRun r = prepare(cfg, err);
    if (!r.problem.exact) {
        throw MissingExactSolutionError("bench needs an exact solution ('exact =' in the config)");
    }
    const SolutionHistory history = run(r.problem, r.mesh, r.params, r.times);

    Sink sink(cfg.output, out);
    TableWriter table(sink.get(), delimiter(cfg.format));
    table.header({"t", "L2", "Linf", "RMS", "cpu_seconds"});
    for (std::size_t i = 0; i < history.frames.size(); ++i) {
        const ErrorReport e = error_norms(history.frames[i], r.problem, r.mesh);
        table.cell(e.time).cell(e.l2).cell(e.l_inf).cell(e.rms).cell(history.stepping_seconds[i]).end_row();
    }
    return kExitOk;
}

struct StabilityConfig {
    int problem_id = 0;
    std::string alpha = "0";
    std::string beta = "0";
    std::string domain;
    int n_cells = 40;
    double dt = 0.01;
    double theta = 0.5;
    int phi_samples = kDefaultPhiSamples;
    std::string sweep;
    std::string format = "csv";
    std::string output;
};

struct Sweep {
    std::string parameter;
    std::vector<double> values;
};

// "name=start:stop:step", inclusive of stop up to rounding.
Sweep parse_sweep(const std::string& spec) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos) throw ConfigError("--sweep expects name=start:stop:step");
    Sweep s;
    s.parameter = spec.substr(0, eq);
    if (s.parameter != "theta" && s.parameter != "alpha" && s.parameter != "beta" &&
        s.parameter != "dt") {
        throw ConfigError("--sweep parameter must be theta, alpha, beta or dt");
    }
    std::vector<double> parts;
    std::stringstream in(spec.substr(eq + 1));
    std::string item;
    while (std::getline(in, item, ':')) parts.push_back(constant(item, "--sweep"));
    if (parts.size() != 3 || !(parts[2] > 0.0) || parts[1] < parts[0]) {
        throw ConfigError("--sweep expects start:stop:step with step > 0 and stop >= start");
    }
    const auto count = static_cast<long long>(std::floor((parts[1] - parts[0]) / parts[2] + 1e-9)) + 1;
    for (long long i = 0; i < count; ++i) s.values.push_back(parts[0] + static_cast<double>(i) * parts[2]);
    return s;
}

int cmd_stability(const StabilityConfig& cfg, bool alpha_set, bool beta_set, std::ostream& out) {
    double alpha = 0.0;
    double beta = 0.0;
    double a = 0.0;
    double b = 0.0;
    bool have_domain = false;
    if (cfg.problem_id != 0) {
        const TelegraphProblem p = builtin_problem(cfg.problem_id);
        alpha = p.alpha;
        beta = p.beta;
        a = p.a;
        b = p.b;
        have_domain = true;
    }
    if (alpha_set || cfg.problem_id == 0) alpha = constant(cfg.alpha, "--alpha");
    if (beta_set || cfg.problem_id == 0) beta = constant(cfg.beta, "--beta");
    if (!cfg.domain.empty()) {
        const auto ends = parse_list(cfg.domain, "--domain");
        if (ends.size() != 2) throw ConfigError("--domain expects 'a,b'");
        a = ends[0];
        b = ends[1];
        have_domain = true;
    }
    if (!have_domain) throw ConfigError("stability needs --domain or --problem");
    if (!(alpha >= 0.0) || !(beta >= 0.0)) throw ConfigError("alpha and beta must be non-negative");
    if (cfg.phi_samples < 2) throw ConfigError("--phi-samples must be at least 2");

    const UniformMesh mesh(a, b, cfg.n_cells);
    // Validates theta and dt.
    SchemeParams(cfg.theta, cfg.dt, cfg.dt);

    StabilityCase base{alpha, beta, cfg.theta, cfg.dt, mesh.h()};
    std::vector<StabilityCase> cases;
    if (cfg.sweep.empty()) {
        cases.push_back(base);
    } else {
        const Sweep sweep = parse_sweep(cfg.sweep);
        for (const double v : sweep.values) {
            StabilityCase c = base;
            if (sweep.parameter == "theta") c.theta = v;
            if (sweep.parameter == "alpha") c.alpha = v;
            if (sweep.parameter == "beta") c.beta = v;
            if (sweep.parameter == "dt") c.dt = v;
            SchemeParams(c.theta, c.dt, c.dt);
            if (c.alpha < 0.0 || c.beta < 0.0) throw ConfigError("swept alpha and beta must be non-negative");
            cases.push_back(c);
        }
    }
    const auto reports = stability_sweep(cases, cfg.phi_samples);

    Sink sink(cfg.output, out);
    TableWriter table(sink.get(), delimiter(cfg.format));
    table.header({"theta", "alpha", "beta", "dt", "h", "max_amplification", "worst_phi",
                  "a_plus_b_plus_c", "a_minus_c", "a_minus_b_plus_c", "verdict"});
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto& c = cases[i];
        const auto& r = reports[i];
        table.cell(c.theta).cell(c.alpha).cell(c.beta).cell(c.dt).cell(c.h);
        table.cell(r.max_amplification).cell(r.worst_phi);
        for (const double q : r.rh_conditions) table.cell(q);
        table.text(r.stable ? "stable" : "unstable").end_row();
    }
    return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Trigonometric B-spline collocation solver for the 1D telegraph equation"};
    app.require_subcommand(1);

    RunConfig solve_cfg;
    auto* solve = app.add_subcommand("solve", "Solve and write u at every knot for each output time");
    add_run_options(*solve, solve_cfg);
    solve->add_option("--emit-plot-data", solve_cfg.plot_path,
                      "Also write (x, t, u) on the full space-time grid to this file");

    RunConfig bench_cfg;
    auto* bench = app.add_subcommand("bench", "Write L2, Linf and RMS errors per output time");
    add_run_options(*bench, bench_cfg);

    StabilityConfig stab_cfg;
    auto* stab = app.add_subcommand("stability", "Von Neumann amplification scan");
    stab->add_option("--problem", stab_cfg.problem_id, "Take alpha, beta and domain from a built-in problem");
    auto* alpha_opt = stab->add_option("--alpha", stab_cfg.alpha, "Damping coefficient (expression)");
    auto* beta_opt = stab->add_option("--beta", stab_cfg.beta, "Reaction coefficient (expression)");
    stab->add_option("--domain", stab_cfg.domain, "Interval 'a,b' (expressions allowed, e.g. 0,pi)");
    stab->add_option("--n", stab_cfg.n_cells, "Number of cells N")->capture_default_str();
    stab->add_option("--dt", stab_cfg.dt, "Time step k")->capture_default_str();
    stab->add_option("--theta", stab_cfg.theta, "Theta weighting")->capture_default_str();
    stab->add_option("--phi-samples", stab_cfg.phi_samples, "Samples of phi on [0, pi]")->capture_default_str();
    stab->add_option("--sweep", stab_cfg.sweep, "Sweep one parameter, e.g. theta=0:1:0.05");
    stab->add_option("--format", stab_cfg.format, "csv or tsv")->check(CLI::IsMember({"csv", "tsv"}));
    stab->add_option("--output,-o", stab_cfg.output, "Output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    }

    try {
        if (*solve) return cmd_solve(solve_cfg, out, err);
        if (*bench) return cmd_bench(bench_cfg, out, err);
        return cmd_stability(stab_cfg, alpha_opt->count() > 0, beta_opt->count() > 0, out);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
}

}  // namespace telegraph::cli
