#include "telegraph/config.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "telegraph/errors.hpp"
#include "telegraph/expr.hpp"

namespace telegraph {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

struct Entry {
    std::string value;
    int line;
};

class Entries {
public:
    explicit Entries(std::string_view text) {
        std::istringstream in{std::string(text)};
        std::string raw;
        int line_no = 0;
        while (std::getline(in, raw)) {
            ++line_no;
            std::string_view line = raw;
            if (const auto hash = line.find('#'); hash != std::string_view::npos) {
                line = line.substr(0, hash);
            }
            if (trim(line).empty()) continue;
            const auto eq = line.find('=');
            if (eq == std::string_view::npos) fail(line_no, "expected 'key = value'");
            const std::string key = trim(line.substr(0, eq));
            if (!is_known(key)) fail(line_no, "unknown key '" + key + "'");
            if (entries_.contains(key)) fail(line_no, "duplicate key '" + key + "'");
            entries_[key] = {trim(line.substr(eq + 1)), line_no};
        }
    }

    bool has(const std::string& key) const { return entries_.contains(key); }

    const Entry& get(const std::string& key) const {
        const auto it = entries_.find(key);
        if (it == entries_.end()) throw ConfigError("config: missing required key '" + key + "'");
        return it->second;
    }

    expr::Expression expression(const std::string& key) const {
        const Entry& e = get(key);
        try {
            return expr::parse(e.value);
        } catch (const ConfigError& err) {
            fail(e.line, "'" + key + "': " + err.what());
        }
    }

    double constant(const std::string& key) const {
        const Entry& e = get(key);
        return constant_value(e.value, key, e.line);
    }

    [[noreturn]] static void fail(int line, const std::string& message) {
        throw ConfigError("config line " + std::to_string(line) + ": " + message);
    }

    static double constant_value(const std::string& text, const std::string& key, int line) {
        try {
            return expr::parse(text)(0.0, 0.0);
        } catch (const Error& err) {
            fail(line, "'" + key + "': " + err.what());
        }
    }

private:
    static bool is_known(const std::string& key) {
        static const char* const known[] = {"alpha", "beta", "domain", "q",    "g1",
                                            "g2",    "bc",   "left",   "right", "exact", "g1x"};
        for (const char* k : known) {
            if (key == k) return true;
        }
        return false;
    }

    std::map<std::string, Entry> entries_;
};

}  // namespace

TelegraphProblem problem_from_config(std::string_view text, std::string_view name) {
    const Entries cfg(text);

    TelegraphProblem p;
    p.name = std::string(name);
    p.alpha = cfg.constant("alpha");
    p.beta = cfg.constant("beta");

    const Entry& domain = cfg.get("domain");
    const auto comma = domain.value.find(',');
    if (comma == std::string::npos) Entries::fail(domain.line, "'domain' needs two values 'a, b'");
    p.a = Entries::constant_value(trim(std::string_view(domain.value).substr(0, comma)), "domain", domain.line);
    p.b = Entries::constant_value(trim(std::string_view(domain.value).substr(comma + 1)), "domain", domain.line);

    if (cfg.has("q")) {
        p.forcing = [e = cfg.expression("q")](double x, double t) { return e(x, t); };
    } else {
        p.forcing = [](double, double) { return 0.0; };
    }
    p.initial_value = [e = cfg.expression("g1")](double x) { return e(x, 0.0); };
    if (cfg.has("g1x")) {
        p.initial_slope = [e = cfg.expression("g1x")](double x) { return e(x, 0.0); };
    }
    if (cfg.has("g2")) {
        p.initial_velocity = [e = cfg.expression("g2")](double x) { return e(x, 0.0); };
    } else {
        p.initial_velocity = [](double) { return 0.0; };
    }

    const Entry& bc = cfg.get("bc");
    if (bc.value == "dirichlet") {
        p.boundary.kind = BoundaryKind::dirichlet;
    } else if (bc.value == "neumann") {
        p.boundary.kind = BoundaryKind::neumann;
    } else {
        Entries::fail(bc.line, "'bc' must be dirichlet or neumann");
    }
    p.boundary.left = [e = cfg.expression("left"), a = p.a](double t) { return e(a, t); };
    p.boundary.right = [e = cfg.expression("right"), b = p.b](double t) { return e(b, t); };

    if (cfg.has("exact")) {
        p.exact = [e = cfg.expression("exact")](double x, double t) { return e(x, t); };
    }
    check_problem(p);
    return p;
}

TelegraphProblem load_problem_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return problem_from_config(text.str(), path.filename().string());
}

}  // namespace telegraph
