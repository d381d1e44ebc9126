#pragma once
//
// Experiment settings as a flat, human-editable `key = value` file. The same
// key names (with '-' for '_') are the command-line flags, and both routes go
// through ExperimentConfig::set so they cannot drift apart.
//

#include "parawave/csv.hpp"
#include "parawave/dispersion.hpp"
#include "parawave/gauss_peak.hpp"
#include "parawave/parareal.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace parawave {

/// Invalid experiment settings (bad key, bad value, inconsistent choices).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ExperimentConfig {
    std::string command = "dispersion"; // dispersion | method | svd | speedup | defect | gauss

    // Parareal
    int p = 16;
    std::vector<int> k_iters{0, 5, 10, 15};
    double slice_length = 1.0;
    std::string coarse = "be";
    std::string fine = "exact";
    int nc = 1;
    int nf = 1;
    std::string modifier = "none";      // coarse: none | exact-phase | exact-amplitude
    std::string fine_modifier = "none"; // fine: none | exact-phase | exact-amplitude | phase-of-coarse

    // physics and spatial symbol
    double u = 1.0;
    double nu = 0.0;
    std::string symbol = "exact"; // exact | upwind | centred
    std::string coarse_symbol;    // empty: same as symbol
    std::string fine_symbol;      // empty: same as symbol
    double dx = 1.0;

    // wave-number grid
    int num_kappa = 40;
    std::optional<double> kappa_min; // empty: kappa_max / num_kappa
    double kappa_max = pi;

    // singular-value and speedup sweeps
    std::string sweep = "kappa"; // dt | kappa | p
    std::vector<int> nc_list{20, 10, 5, 4, 2, 1};
    std::vector<int> p_list{2, 4, 8, 16, 32, 64};
    std::vector<double> kappas{0.5, 2.0};
    double tol = 0.01;

    // Gauss peak
    int num_modes = 64;
    double domain_length = 4.0;
    double center = 2.0;
    double width = 0.25;

    std::string out = "-";
    std::string out_spectrum; // empty: derived from out

    bool operator==(const ExperimentConfig&) const = default;

    static const std::vector<std::string>& keys()
    {
        static const std::vector<std::string> k{
            "command", "p", "k_iters", "slice_length", "coarse", "fine", "nc", "nf", "modifier",
            "fine_modifier", "u", "nu", "symbol", "coarse_symbol", "fine_symbol", "dx", "num_kappa",
            "kappa_min", "kappa_max", "sweep", "nc_list", "p_list", "kappas", "tol", "num_modes",
            "domain_length", "center", "width", "out", "out_spectrum"};
        return k;
    }

    void set(std::string_view key, std::string_view value);
    [[nodiscard]] std::string get(std::string_view key) const;

    [[nodiscard]] double effective_kappa_min() const { return kappa_min ? *kappa_min : kappa_max / num_kappa; }
};

namespace config_detail {

inline std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

inline int parse_int(std::string_view key, std::string_view v)
{
    const std::string t = trim(v);
    int out = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
    if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty())
        throw ConfigError("invalid integer for " + std::string(key) + ": '" + t + "'");
    return out;
}

inline double parse_double(std::string_view key, std::string_view v)
{
    const std::string t = trim(v);
    if (t == "pi")
        return pi;
    std::istringstream is(t);
    is.imbue(std::locale::classic());
    double out = 0.0;
    is >> out;
    if (t.empty() || is.fail() || !is.eof() || !std::isfinite(out))
        throw ConfigError("invalid number for " + std::string(key) + ": '" + t + "'");
    return out;
}

template <class T, class Parse>
std::vector<T> parse_list(std::string_view key, std::string_view v, Parse parse)
{
    std::vector<T> out;
    const std::string t = trim(v);
    if (t.empty())
        return out;
    std::size_t start = 0;
    while (true) {
        const auto comma = t.find(',', start);
        out.push_back(parse(key, std::string_view(t).substr(start, comma - start)));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return out;
}

inline void check_choice(std::string_view key, const std::string& v, std::initializer_list<std::string_view> allowed,
                         bool allow_empty = false)
{
    if (allow_empty && v.empty())
        return;
    if (std::find(allowed.begin(), allowed.end(), v) == allowed.end())
        throw ConfigError("invalid value for " + std::string(key) + ": '" + v + "'");
}

template <class T, class Fmt>
std::string join(const std::vector<T>& xs, Fmt fmt)
{
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            s += ',';
        s += fmt(xs[i]);
    }
    return s;
}

inline std::string fmt_int(int v) { return std::to_string(v); }
inline std::string fmt_double(double v) { return csv::number(v); }

} // namespace config_detail

inline void ExperimentConfig::set(std::string_view key, std::string_view value)
{
    using namespace config_detail;
    const std::string v = trim(value);
    if (key == "command") {
        check_choice(key, v, {"dispersion", "method", "svd", "speedup", "defect", "gauss"});
        command = v;
    }
    else if (key == "p") p = parse_int(key, v);
    else if (key == "k_iters") k_iters = parse_list<int>(key, v, parse_int);
    else if (key == "slice_length") slice_length = parse_double(key, v);
    else if (key == "coarse") { check_choice(key, v, {"be", "trap", "exact"}); coarse = v; }
    else if (key == "fine") { check_choice(key, v, {"be", "trap", "exact"}); fine = v; }
    else if (key == "nc") nc = parse_int(key, v);
    else if (key == "nf") nf = parse_int(key, v);
    else if (key == "modifier") {
        check_choice(key, v, {"none", "exact-phase", "exact-amplitude"});
        modifier = v;
    }
    else if (key == "fine_modifier") {
        check_choice(key, v, {"none", "exact-phase", "exact-amplitude", "phase-of-coarse"});
        fine_modifier = v;
    }
    else if (key == "u") u = parse_double(key, v);
    else if (key == "nu") nu = parse_double(key, v);
    else if (key == "symbol") { check_choice(key, v, {"exact", "upwind", "centred"}); symbol = v; }
    else if (key == "coarse_symbol") { check_choice(key, v, {"exact", "upwind", "centred"}, true); coarse_symbol = v; }
    else if (key == "fine_symbol") { check_choice(key, v, {"exact", "upwind", "centred"}, true); fine_symbol = v; }
    else if (key == "dx") dx = parse_double(key, v);
    else if (key == "num_kappa") num_kappa = parse_int(key, v);
    else if (key == "kappa_min") {
        if (v == "auto") kappa_min.reset();
        else kappa_min = parse_double(key, v);
    }
    else if (key == "kappa_max") kappa_max = parse_double(key, v);
    else if (key == "sweep") { check_choice(key, v, {"dt", "kappa", "p"}); sweep = v; }
    else if (key == "nc_list") nc_list = parse_list<int>(key, v, parse_int);
    else if (key == "p_list") p_list = parse_list<int>(key, v, parse_int);
    else if (key == "kappas") kappas = parse_list<double>(key, v, parse_double);
    else if (key == "tol") tol = parse_double(key, v);
    else if (key == "num_modes") num_modes = parse_int(key, v);
    else if (key == "domain_length") domain_length = parse_double(key, v);
    else if (key == "center") center = parse_double(key, v);
    else if (key == "width") width = parse_double(key, v);
    else if (key == "out") out = v;
    else if (key == "out_spectrum") out_spectrum = v;
    else throw ConfigError("unknown key '" + std::string(key) + "'");
}

inline std::string ExperimentConfig::get(std::string_view key) const
{
    using namespace config_detail;
    if (key == "command") return command;
    if (key == "p") return fmt_int(p);
    if (key == "k_iters") return join(k_iters, fmt_int);
    if (key == "slice_length") return fmt_double(slice_length);
    if (key == "coarse") return coarse;
    if (key == "fine") return fine;
    if (key == "nc") return fmt_int(nc);
    if (key == "nf") return fmt_int(nf);
    if (key == "modifier") return modifier;
    if (key == "fine_modifier") return fine_modifier;
    if (key == "u") return fmt_double(u);
    if (key == "nu") return fmt_double(nu);
    if (key == "symbol") return symbol;
    if (key == "coarse_symbol") return coarse_symbol;
    if (key == "fine_symbol") return fine_symbol;
    if (key == "dx") return fmt_double(dx);
    if (key == "num_kappa") return fmt_int(num_kappa);
    if (key == "kappa_min") return kappa_min ? fmt_double(*kappa_min) : "auto";
    if (key == "kappa_max") return fmt_double(kappa_max);
    if (key == "sweep") return sweep;
    if (key == "nc_list") return join(nc_list, fmt_int);
    if (key == "p_list") return join(p_list, fmt_int);
    if (key == "kappas") return join(kappas, fmt_double);
    if (key == "tol") return fmt_double(tol);
    if (key == "num_modes") return fmt_int(num_modes);
    if (key == "domain_length") return fmt_double(domain_length);
    if (key == "center") return fmt_double(center);
    if (key == "width") return fmt_double(width);
    if (key == "out") return out;
    if (key == "out_spectrum") return out_spectrum;
    throw ConfigError("unknown key '" + std::string(key) + "'");
}

/// Canonical text form: every key, fixed order, one `key = value` per line.
[[nodiscard]] inline std::string serialize(const ExperimentConfig& cfg)
{
    std::string s;
    for (const auto& key : ExperimentConfig::keys())
        s += key + " = " + cfg.get(key) + "\n";
    return s;
}

/// Applies `key = value` lines onto `base`. Blank lines and '#' comments are skipped;
/// unknown or repeated keys are errors.
[[nodiscard]] inline ExperimentConfig parse_config(std::istream& in, ExperimentConfig base = {})
{
    std::set<std::string> seen;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = config_detail::trim(line);
        if (t.empty() || t.front() == '#')
            continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
        const std::string key = config_detail::trim(std::string_view(t).substr(0, eq));
        if (!seen.insert(key).second)
            throw ConfigError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
        try {
            base.set(key, std::string_view(t).substr(eq + 1));
        }
        catch (const ConfigError& e) {
            throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return base;
}

[[nodiscard]] inline ExperimentConfig parse_config(std::string_view text, ExperimentConfig base = {})
{
    std::istringstream is{std::string(text)};
    return parse_config(is, std::move(base));
}

[[nodiscard]] inline ExperimentConfig load_config(const std::string& path, ExperimentConfig base = {})
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    return parse_config(in, std::move(base));
}

// ---------------------------------------------------------------------------
// translation into the analysis types

namespace config_detail {

inline MethodKind method_from(const std::string& name)
{
    if (name == "be") return MethodKind::BackwardEuler;
    if (name == "trap") return MethodKind::TrapezoidalRule;
    if (name == "exact") return MethodKind::ExactIntegrator;
    throw ConfigError("unknown method '" + name + "'");
}

inline SpatialSymbol symbol_from(const std::string& name, const PhysicsParams& phys, double dx)
{
    if (name == "exact") return SpatialSymbol::exact(phys);
    if (name == "upwind") return SpatialSymbol::upwind(phys, dx);
    if (name == "centred") return SpatialSymbol::centred(phys, dx);
    throw ConfigError("unknown symbol '" + name + "'");
}

inline Modifier simple_modifier_from(const std::string& name)
{
    if (name == "none") return modifier::None{};
    if (name == "exact-phase") return modifier::ExactPhase{};
    if (name == "exact-amplitude") return modifier::ExactAmplitude{};
    throw ConfigError("unknown modifier '" + name + "'");
}

} // namespace config_detail

[[nodiscard]] inline PhysicsParams physics(const ExperimentConfig& c) { return {c.u, c.nu}; }

/// Coarse propagator with `steps` steps per slice (nc unless overridden).
[[nodiscard]] inline PropagatorSpec coarse_spec(const ExperimentConfig& c, std::optional<int> steps = {})
{
    using namespace config_detail;
    PropagatorSpec s;
    s.method = method_from(c.coarse);
    s.steps_per_slice = steps.value_or(c.nc);
    s.slice_length = c.slice_length;
    s.symbol = symbol_from(c.coarse_symbol.empty() ? c.symbol : c.coarse_symbol, physics(c), c.dx);
    s.modifier = simple_modifier_from(c.modifier);
    return s;
}

[[nodiscard]] inline PropagatorSpec fine_spec(const ExperimentConfig& c, std::optional<int> coarse_steps = {})
{
    using namespace config_detail;
    PropagatorSpec s;
    s.method = method_from(c.fine);
    s.steps_per_slice = c.nf;
    s.slice_length = c.slice_length;
    s.symbol = symbol_from(c.fine_symbol.empty() ? c.symbol : c.fine_symbol, physics(c), c.dx);
    if (c.fine_modifier == "phase-of-coarse") {
        PropagatorSpec g = coarse_spec(c, coarse_steps);
        if (!std::holds_alternative<modifier::None>(g.modifier))
            throw ConfigError("phase-of-coarse needs an unmodified coarse propagator");
        s.modifier = modifier::PhaseOfCoarse{std::make_shared<const PropagatorSpec>(std::move(g))};
    }
    else {
        s.modifier = simple_modifier_from(c.fine_modifier);
    }
    return s;
}

[[nodiscard]] inline PararealConfig parareal_config(const ExperimentConfig& c, std::optional<int> P = {},
                                                    std::optional<int> coarse_steps = {})
{
    PararealConfig cfg;
    cfg.P = P.value_or(c.p);
    cfg.K = 0;
    cfg.slice_length = c.slice_length;
    cfg.coarse = coarse_spec(c, coarse_steps);
    cfg.fine = fine_spec(c, coarse_steps);
    try {
        cfg.validate();
    }
    catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return cfg;
}

[[nodiscard]] inline SweepSpec sweep_spec(const ExperimentConfig& c)
{
    SweepSpec s;
    s.kappa_min = c.effective_kappa_min();
    s.kappa_max = c.kappa_max;
    s.num_kappa = c.num_kappa;
    s.iterations = c.k_iters;
    try {
        s.validate();
    }
    catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return s;
}

} // namespace parawave
