// parawave: command-line front end for the Parareal dispersion analysis.
//
//   parawave dispersion --p 16 --k-iters 0,5,10,15 --coarse be --fine exact --nu 0
//   parawave svd --sweep kappa --nu 0.1
//   parawave run --config experiments/dispersion_be_exact_nu0.cfg
//
// Exit codes: 0 success, 1 numerical failure, 2 invalid flags or settings.

#include "parawave/commands.hpp"
#include "parawave/experiment.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

namespace {

using parawave::ExperimentConfig;

std::string dashed(std::string key)
{
    for (char& ch : key)
        if (ch == '_')
            ch = '-';
    return key;
}

const std::map<std::string, std::string>& flag_help()
{
    static const std::map<std::string, std::string> help{
        {"p", "number of time slices / processors"},
        {"k_iters", "comma-separated Parareal iteration counts"},
        {"slice_length", "length of one time slice"},
        {"coarse", "coarse method: be | trap | exact"},
        {"fine", "fine method: be | trap | exact"},
        {"nc", "coarse steps per slice"},
        {"nf", "fine steps per slice"},
        {"modifier", "coarse modifier: none | exact-phase | exact-amplitude"},
        {"fine_modifier", "fine modifier: none | exact-phase | exact-amplitude | phase-of-coarse"},
        {"u", "advection velocity"},
        {"nu", "diffusion coefficient"},
        {"symbol", "spatial symbol for both levels: exact | upwind | centred"},
        {"coarse_symbol", "spatial symbol of the coarse level (default: --symbol)"},
        {"fine_symbol", "spatial symbol of the fine level (default: --symbol)"},
        {"dx", "mesh width of the finite-difference symbols"},
        {"num_kappa", "number of wave numbers in the grid"},
        {"kappa_min", "smallest wave number (auto = kappa_max / num_kappa)"},
        {"kappa_max", "largest wave number (<= pi)"},
        {"sweep", "svd sweep variable: dt | kappa | p"},
        {"nc_list", "coarse step counts for dt sweeps"},
        {"p_list", "processor counts for p sweeps"},
        {"kappas", "wave numbers for dt / p sweeps, speedup and defect"},
        {"tol", "tolerance for sigma^k <= tol"},
        {"num_modes", "Fourier modes of the Gauss-peak field"},
        {"domain_length", "periodic domain length"},
        {"center", "Gauss-peak center"},
        {"width", "Gauss-peak width"},
        {"out", "output CSV path, '-' for stdout"},
        {"out_spectrum", "spectrum CSV path for gauss (default: <out>_spectrum.csv)"},
    };
    return help;
}

struct SubcommandFlags {
    std::string config_path;
    bool print_config = false;
    std::map<std::string, std::string> values;
    std::map<std::string, CLI::Option*> options;
};

void add_flags(CLI::App& sub, SubcommandFlags& flags)
{
    sub.add_option("--config", flags.config_path, "flat key = value experiment file");
    sub.add_flag("--print-config", flags.print_config, "print the canonical settings and exit");
    for (const auto& key : ExperimentConfig::keys()) {
        if (key == "command")
            continue;
        flags.options[key] = sub.add_option("--" + dashed(key), flags.values[key], flag_help().at(key));
    }
}

ExperimentConfig resolve(const std::string& command, const SubcommandFlags& flags)
{
    ExperimentConfig cfg;
    if (!flags.config_path.empty()) {
        cfg = parawave::load_config(flags.config_path);
        if (command != "run" && cfg.command != command)
            throw parawave::ConfigError("config file is for '" + cfg.command + "', not '" + command + "'");
    }
    else if (command == "run") {
        throw parawave::ConfigError("run needs --config");
    }
    else {
        cfg.command = command;
    }
    for (const auto& [key, opt] : flags.options)
        if (opt->count() > 0)
            cfg.set(key, flags.values.at(key));
    return cfg;
}

std::string spectrum_path(const ExperimentConfig& cfg)
{
    if (!cfg.out_spectrum.empty())
        return cfg.out_spectrum;
    if (cfg.out == "-")
        return {};
    std::string stem = cfg.out;
    if (stem.size() > 4 && stem.compare(stem.size() - 4, 4, ".csv") == 0)
        stem.resize(stem.size() - 4);
    return stem + "_spectrum.csv";
}

void emit(const std::string& path, const std::string& content)
{
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw parawave::ConfigError("cannot write '" + path + "'");
    out << content;
}

int execute(const ExperimentConfig& cfg)
{
    parawave::Diagnostics diag;
    std::ostringstream main_out;
    std::ostringstream spectrum_out;
    const std::string spath = cfg.command == "gauss" ? spectrum_path(cfg) : std::string{};

    if (cfg.command == "dispersion")
        parawave::write_dispersion_csv(cfg, main_out, diag);
    else if (cfg.command == "method")
        parawave::write_method_csv(cfg, main_out, diag);
    else if (cfg.command == "svd")
        parawave::write_svd_csv(cfg, main_out);
    else if (cfg.command == "speedup")
        parawave::write_speedup_csv(cfg, main_out);
    else if (cfg.command == "defect")
        parawave::write_defect_csv(cfg, main_out);
    else
        parawave::write_gauss_csv(cfg, main_out, spath.empty() ? nullptr : &spectrum_out);

    emit(cfg.out, main_out.str());
    if (!spath.empty())
        emit(spath, spectrum_out.str());
    for (const auto& d : diag)
        std::cerr << "warning: " << d << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Wave propagation analysis of linear Parareal for 1-D advection-diffusion"};
    app.require_subcommand(1);

    const std::vector<std::pair<std::string, std::string>> commands{
        {"dispersion", "phase speed and amplification factor of Parareal per iteration"},
        {"method", "phase speed and amplification factor of the coarse propagator alone"},
        {"svd", "maximum singular value of the error propagation matrix"},
        {"speedup", "projected pipelined speedup with sigma^k <= tol"},
        {"defect", "|M_parareal(k) - F^P| for k = 0..P"},
        {"gauss", "pseudo-spectral Gauss-peak evolution"},
        {"run", "run the command stored in a --config file"},
    };
    std::map<std::string, SubcommandFlags> flags;
    std::map<std::string, CLI::App*> subs;
    for (const auto& [name, desc] : commands) {
        subs[name] = app.add_subcommand(name, desc);
        add_flags(*subs[name], flags[name]);
    }

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    for (const auto& [name, sub] : subs) {
        if (!sub->parsed())
            continue;
        try {
            const ExperimentConfig cfg = resolve(name, flags[name]);
            if (flags[name].print_config) {
                std::cout << parawave::serialize(cfg);
                return 0;
            }
            return execute(cfg);
        }
        catch (const parawave::NumericalError& e) {
            std::cerr << "numerical failure: " << e.what() << '\n';
            return 1;
        }
        catch (const std::invalid_argument& e) {
            std::cerr << "error: " << e.what() << '\n';
            return 2;
        }
    }
    return 2;
}
