#pragma once
//
// Discrete dispersion relation of a propagator R over [0, T]:
//   exp(-i omega T) = R   =>   omega = i log(R) / T,
// phase speed Re(omega)/kappa, amplification factor exp(Im omega).
//
// The complex logarithm is only defined up to 2 pi i, and for Parareal R covers
// P slices, so the phase can wrap many times. R is therefore normalised to one
// slice by picking the P-th root whose angle is closest to a target angle, and
// the target is carried along the kappa grid from one point to the next.
//

#include "parawave/errors.hpp"
#include "parawave/parareal.hpp"
#include "parawave/propagators.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace parawave {

inline constexpr double zero_amplitude_threshold = 1e-300;

/// Angle difference mapped to [-pi, pi).
[[nodiscard]] inline double wrap_angle(double a)
{
    double r = std::remainder(a, 2.0 * pi);
    if (r >= pi)
        r -= 2.0 * pi;
    return r;
}

/// omega = i log(R) on the principal branch, for a propagator over unit time.
[[nodiscard]] inline complex_t omega_from_unit_R(complex_t R_unit)
{
    const double r = std::abs(R_unit);
    if (!(r >= zero_amplitude_threshold))
        throw ZeroAmplitude("propagator annihilates the mode, log undefined");
    return {-std::arg(R_unit), std::log(r)};
}

/// omega = i log(R) on the branch whose angle lies within pi of `reference_angle`.
[[nodiscard]] inline complex_t omega_from_unit_R(complex_t R_unit, double reference_angle)
{
    const complex_t principal = omega_from_unit_R(R_unit);
    const double theta = reference_angle + wrap_angle(-principal.real() - reference_angle);
    return {-theta, principal.imag()};
}

/// The P complex roots of z^P = R, z_m = |R|^{1/P} exp(i (arg R + 2 pi m) / P).
[[nodiscard]] inline std::vector<complex_t> pth_roots(complex_t R, int P)
{
    if (P < 1)
        throw std::invalid_argument("P must be >= 1");
    const double radius = std::pow(std::abs(R), 1.0 / P);
    const double theta = std::arg(R);
    std::vector<complex_t> roots;
    roots.reserve(static_cast<std::size_t>(P));
    for (int m = 0; m < P; ++m)
        roots.push_back(std::polar(radius, (theta + 2.0 * pi * m) / P));
    return roots;
}

/// Index of the root with the smallest circular distance to theta_target; first wins ties.
[[nodiscard]] inline std::size_t select_root_index(const std::vector<complex_t>& roots, double theta_target)
{
    if (roots.empty())
        throw std::invalid_argument("select_root: no roots");
    std::size_t best = 0;
    double best_dist = std::abs(wrap_angle(std::arg(roots[0]) - theta_target));
    for (std::size_t m = 1; m < roots.size(); ++m) {
        const double d = std::abs(wrap_angle(std::arg(roots[m]) - theta_target));
        if (d < best_dist) {
            best = m;
            best_dist = d;
        }
    }
    return best;
}

[[nodiscard]] inline complex_t select_root(const std::vector<complex_t>& roots, double theta_target)
{
    return roots[select_root_index(roots, theta_target)];
}

struct DispersionPoint {
    double kappa = 0.0;
    int k_iter = 0;
    std::optional<double> phase_speed; ///< empty when the mode was annihilated
    std::optional<double> amp_factor;
    std::optional<complex_t> unit_root; ///< selected one-slice propagator
    double unwrapped_angle = 0.0;       ///< continuous angle of unit_root along the sweep

    [[nodiscard]] bool missing() const { return !phase_speed.has_value(); }
};

/// Consecutive output points whose selected angles differ by pi/2 or more.
struct BranchJump {
    int k_iter = 0;
    double kappa_from = 0.0;
    double kappa_to = 0.0;
    double angle_change = 0.0;
};

struct DispersionResult {
    std::vector<DispersionPoint> points;
    std::vector<BranchJump> branch_jumps;
};

struct SweepSpec {
    double kappa_min = pi / 40.0;
    double kappa_max = pi;
    int num_kappa = 40;
    std::vector<int> iterations{0};

    void validate() const
    {
        if (!(kappa_min > 0.0))
            throw std::invalid_argument("kappa_min must be > 0");
        if (!(kappa_max <= pi * (1.0 + 1e-15)))
            throw std::invalid_argument("kappa_max must be <= pi");
        if (num_kappa < 2)
            throw std::invalid_argument("num_kappa must be >= 2");
        if (!(kappa_min < kappa_max))
            throw std::invalid_argument("kappa_min must be < kappa_max");
    }

    [[nodiscard]] std::vector<double> grid() const
    {
        std::vector<double> g(static_cast<std::size_t>(num_kappa));
        const double step = (kappa_max - kappa_min) / (num_kappa - 1);
        for (int i = 0; i < num_kappa; ++i)
            g[static_cast<std::size_t>(i)] = kappa_min + i * step;
        g.back() = kappa_max;
        return g;
    }
};

namespace detail {

/// Walks a kappa grid, normalising R(kappa) over `slices` slices of length dT.
///
/// Between two grid points the walk takes enough intermediate kappa values
/// that the selected angle drifts by at most an eighth of the root spacing
/// per substep (estimated with max(|U|, 1) as phase speed).
inline void trace_branch(const std::function<complex_t(double)>& propagator, int slices, double dT,
                         double U, const std::vector<double>& grid, int k_iter, DispersionResult& out)
{
    if (grid.empty())
        return;
    double target = -U * grid.front() * dT; // angle of the exact one-slice propagator
    const double speed = std::max(std::abs(U), 1.0);

    std::optional<double> last_angle;
    double last_kappa = grid.front();
    double prev_kappa = grid.front();

    auto advance = [&](double kappa) -> std::optional<complex_t> {
        complex_t R;
        try {
            R = propagator(kappa);
        }
        catch (const PoleError& e) {
            throw PoleError("at kappa=" + std::to_string(kappa) + ", k=" + std::to_string(k_iter) + ": "
                            + e.what());
        }
        if (!(std::abs(R) >= zero_amplitude_threshold))
            return std::nullopt;
        const auto roots = pth_roots(R, slices);
        const complex_t z = roots[select_root_index(roots, target)];
        target += wrap_angle(std::arg(z) - target);
        return z;
    };

    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double kappa = grid[i];
        if (i > 0) {
            const double dk = kappa - prev_kappa;
            const int substeps = std::max(
                1, static_cast<int>(std::ceil(4.0 * slices * std::abs(dk) * dT * speed / pi)));
            for (int s = 1; s < substeps; ++s)
                (void)advance(prev_kappa + dk * s / substeps);
        }
        prev_kappa = kappa;

        DispersionPoint pt;
        pt.kappa = kappa;
        pt.k_iter = k_iter;
        if (const auto z = advance(kappa)) {
            const complex_t omega = omega_from_unit_R(*z, target) / dT;
            pt.unit_root = *z;
            pt.unwrapped_angle = target;
            pt.phase_speed = omega.real() / kappa;
            pt.amp_factor = std::exp(omega.imag());
            if (last_angle && std::abs(target - *last_angle) >= pi / 2)
                out.branch_jumps.push_back({k_iter, last_kappa, kappa, target - *last_angle});
            last_angle = target;
            last_kappa = kappa;
        }
        out.points.push_back(pt);
    }
}

} // namespace detail

/// Phase speed and amplification factor of Parareal, one curve per iteration count.
[[nodiscard]] inline DispersionResult dispersion_sweep(const PararealConfig& cfg, const SweepSpec& sweep)
{
    cfg.validate();
    sweep.validate();
    for (int k : sweep.iterations)
        if (k < 0 || k > cfg.P)
            throw std::invalid_argument("iteration counts must lie in [0, P]");

    const auto grid = sweep.grid();
    const double U = cfg.fine.symbol.params.U;
    DispersionResult out;
    for (int k : sweep.iterations) {
        const PararealConfig c = cfg.with_iterations(k);
        detail::trace_branch([&](double kappa) { return parareal_stability(c, kappa); }, cfg.P,
                             cfg.slice_length, U, grid, k, out);
    }
    return out;
}

/// Dispersion of a single propagator over one slice (no root selection, P = 1).
[[nodiscard]] inline DispersionResult single_method_dispersion(const PropagatorSpec& spec, const SweepSpec& sweep)
{
    spec.validate();
    sweep.validate();
    DispersionResult out;
    detail::trace_branch([&](double kappa) { return slice_propagator(spec, kappa); }, 1,
                         spec.slice_length, spec.symbol.params.U, sweep.grid(), 0, out);
    return out;
}

/// Phase speed and amplification factor of the continuous problem.
struct ExactDispersion {
    double phase_speed;
    double amp_factor;
};

[[nodiscard]] inline ExactDispersion exact_dispersion(const PhysicsParams& p, double kappa)
{
    return {p.U, std::exp(-p.nu * kappa * kappa)};
}

} // namespace parawave
