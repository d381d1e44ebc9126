#pragma once
//
// CSV producers behind the command-line subcommands. Each writes a header and
// then rows in a fixed order, so identical settings give identical bytes.
//

#include "parawave/csv.hpp"
#include "parawave/dispersion.hpp"
#include "parawave/experiment.hpp"
#include "parawave/gauss_peak.hpp"
#include "parawave/parareal.hpp"

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

namespace parawave {

/// Non-fatal findings a command wants to report (e.g. branch jumps).
using Diagnostics = std::vector<std::string>;

namespace command_detail {

inline void report_jumps(const DispersionResult& r, Diagnostics& diag)
{
    for (const auto& j : r.branch_jumps)
        diag.push_back("branch jump of " + csv::number(j.angle_change) + " rad between kappa="
                       + csv::number(j.kappa_from) + " and kappa=" + csv::number(j.kappa_to)
                       + " (k=" + std::to_string(j.k_iter) + ")");
}

/// Coarse step counts ordered by increasing coarse step size.
inline std::vector<int> coarse_steps_by_dt(std::vector<int> list)
{
    for (int n : list)
        if (n < 1)
            throw ConfigError("nc_list entries must be >= 1");
    std::sort(list.begin(), list.end(), std::greater<>());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    return list;
}

inline void check_kappas(const std::vector<double>& ks)
{
    if (ks.empty())
        throw ConfigError("kappas must not be empty");
    for (double k : ks)
        if (!(k >= 0.0))
            throw ConfigError("kappas must be >= 0");
}

} // namespace command_detail

/// kappa,k_iter,phase_speed,amp_factor
inline void write_dispersion_csv(const ExperimentConfig& c, std::ostream& os, Diagnostics& diag)
{
    const PararealConfig cfg = parareal_config(c);
    SweepSpec sweep = sweep_spec(c);
    for (int k : sweep.iterations)
        if (k < 0 || k > cfg.P)
            throw ConfigError("k_iters entries must lie in [0, p]");
    const DispersionResult r = dispersion_sweep(cfg, sweep);
    command_detail::report_jumps(r, diag);

    csv::row(os, "kappa", "k_iter", "phase_speed", "amp_factor");
    for (const auto& pt : r.points)
        csv::row(os, csv::number(pt.kappa), pt.k_iter, csv::number(pt.phase_speed), csv::number(pt.amp_factor));
}

/// kappa,phase_speed,amp_factor of the coarse propagator on its own.
inline void write_method_csv(const ExperimentConfig& c, std::ostream& os, Diagnostics& diag)
{
    PropagatorSpec spec = coarse_spec(c);
    try {
        spec.validate();
    }
    catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    const DispersionResult r = single_method_dispersion(spec, sweep_spec(c));
    command_detail::report_jumps(r, diag);

    csv::row(os, "kappa", "phase_speed", "amp_factor");
    for (const auto& pt : r.points)
        csv::row(os, csv::number(pt.kappa), csv::number(pt.phase_speed), csv::number(pt.amp_factor));
}

/// sweep_value,kappa,sigma
inline void write_svd_csv(const ExperimentConfig& c, std::ostream& os)
{
    csv::row(os, "sweep_value", "kappa", "sigma");
    if (c.sweep == "kappa") {
        const PararealConfig cfg = parareal_config(c);
        for (double kappa : sweep_spec(c).grid()) {
            const double sigma = max_singular_value(error_matrix(cfg, kappa));
            csv::row(os, csv::number(kappa), csv::number(kappa), csv::number(sigma));
        }
        return;
    }
    command_detail::check_kappas(c.kappas);
    if (c.sweep == "dt") {
        const auto steps = command_detail::coarse_steps_by_dt(c.nc_list);
        for (double kappa : c.kappas)
            for (int n : steps) {
                const PararealConfig cfg = parareal_config(c, {}, n);
                const double sigma = max_singular_value(error_matrix(cfg, kappa));
                csv::row(os, csv::number(cfg.coarse.step_size()), csv::number(kappa), csv::number(sigma));
            }
        return;
    }
    // sweep == "p"
    std::vector<int> ps = c.p_list;
    std::sort(ps.begin(), ps.end());
    for (double kappa : c.kappas)
        for (int P : ps) {
            if (P < 1)
                throw ConfigError("p_list entries must be >= 1");
            const PararealConfig cfg = parareal_config(c, P);
            csv::row(os, P, csv::number(kappa), csv::number(max_singular_value(error_matrix(cfg, kappa))));
        }
}

/// dt_coarse,kappa,k,speedup (k and speedup empty when sigma >= 1)
inline void write_speedup_csv(const ExperimentConfig& c, std::ostream& os)
{
    if (!(c.tol > 0.0 && c.tol < 1.0))
        throw ConfigError("tol must lie in (0, 1)");
    if (c.coarse != c.fine)
        throw ConfigError("speedup needs the same method for coarse and fine");
    command_detail::check_kappas(c.kappas);
    const auto steps = command_detail::coarse_steps_by_dt(c.nc_list);

    csv::row(os, "dt_coarse", "kappa", "k", "speedup");
    for (double kappa : c.kappas)
        for (int n : steps) {
            const PararealConfig cfg = parareal_config(c, {}, n);
            const SpeedupEstimate est = projected_speedup(cfg, kappa, c.tol);
            csv::row(os, csv::number(cfg.coarse.step_size()), csv::number(kappa), csv::integer(est.iterations),
                     csv::number(est.speedup));
        }
}

/// kappa,k_iter,defect
inline void write_defect_csv(const ExperimentConfig& c, std::ostream& os)
{
    command_detail::check_kappas(c.kappas);
    const PararealConfig cfg = parareal_config(c);
    csv::row(os, "kappa", "k_iter", "defect");
    for (double kappa : c.kappas) {
        const auto d = defect_curve(cfg, kappa);
        for (std::size_t k = 0; k < d.size(); ++k)
            csv::row(os, csv::number(kappa), k, csv::number(d[k]));
    }
}

/// Physical samples `x,k_iter,u` (k_iter "exact" for the reference solution)
/// and spectrum `mode,kappa,k_iter,abs_coeff` for modes 0..N/2.
inline void write_gauss_csv(const ExperimentConfig& c, std::ostream& physical, std::ostream* spectrum)
{
    if (c.num_modes < 2 || (c.num_modes & (c.num_modes - 1)) != 0)
        throw ConfigError("num_modes must be a power of two >= 2");
    if (!(c.domain_length > 0.0))
        throw ConfigError("domain_length must be > 0");
    if (!(c.width > 0.0) || !(c.center >= 0.0 && c.center < c.domain_length))
        throw ConfigError("need width > 0 and center in [0, domain_length)");
    const PararealConfig cfg = parareal_config(c);
    for (int k : c.k_iters)
        if (k < 0 || k > cfg.P)
            throw ConfigError("k_iters entries must lie in [0, p]");

    const SpectralField initial =
        gauss_initial(static_cast<std::size_t>(c.num_modes), c.domain_length, c.center, c.width);

    struct Snapshot {
        std::string label;
        SpectralField field;
    };
    std::vector<Snapshot> snaps;
    for (int k : c.k_iters)
        snaps.push_back({std::to_string(k), evolve_parareal(initial, cfg, k)});
    snaps.push_back({"exact", evolve_exact(initial, physics(c), cfg.final_time())});

    csv::row(physical, "x", "k_iter", "u");
    for (const auto& s : snaps) {
        const auto u = physical_values(s.field);
        for (std::size_t j = 0; j < u.size(); ++j)
            csv::row(physical, csv::number(s.field.grid_point(j)), s.label, csv::number(u[j]));
    }
    if (spectrum) {
        csv::row(*spectrum, "mode", "kappa", "k_iter", "abs_coeff");
        for (const auto& s : snaps)
            for (std::size_t m = 0; m <= s.field.num_modes / 2; ++m)
                csv::row(*spectrum, m, csv::number(s.field.wave_number(m)), s.label,
                         csv::number(std::abs(s.field.coefficients[m])));
    }
}

} // namespace parawave
