#pragma once
//
// Pseudo-spectral evolution of a periodic field under Parareal. The problem is
// linear and diagonal in Fourier space, so each coefficient is multiplied by
// the scalar Parareal stability value of its wave number.
//

#include "parawave/parareal.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace parawave {

/// Fourier coefficients c_m of a real periodic field on [0, L).
///
/// u_j = sum_m c_m exp(2 pi i j m / N); mode m < N/2 has kappa = 2 pi m / L,
/// modes above N/2 are the negative wave numbers m - N.
struct SpectralField {
    std::size_t num_modes = 64;
    double domain_length = 4.0;
    ComplexVector coefficients;

    [[nodiscard]] double grid_point(std::size_t j) const
    {
        return static_cast<double>(j) * domain_length / static_cast<double>(num_modes);
    }

    /// Signed mode number of storage slot m.
    [[nodiscard]] long signed_mode(std::size_t m) const
    {
        const auto n = static_cast<long>(num_modes);
        const auto mm = static_cast<long>(m);
        return mm <= n / 2 ? mm : mm - n;
    }

    [[nodiscard]] double wave_number(std::size_t m) const
    {
        return 2.0 * pi * static_cast<double>(signed_mode(m)) / domain_length;
    }
};

/// Plain O(N^2) DFT, normalised so that c_0 is the mean.
[[nodiscard]] inline ComplexVector forward_transform(std::span<const complex_t> u)
{
    const std::size_t n = u.size();
    ComplexVector c(n);
    for (std::size_t m = 0; m < n; ++m) {
        complex_t s{};
        for (std::size_t j = 0; j < n; ++j)
            s += u[j] * std::polar(1.0, -2.0 * pi * static_cast<double>((j * m) % n) / static_cast<double>(n));
        c[m] = s / static_cast<double>(n);
    }
    return c;
}

[[nodiscard]] inline ComplexVector inverse_transform(std::span<const complex_t> c)
{
    const std::size_t n = c.size();
    ComplexVector u(n);
    for (std::size_t j = 0; j < n; ++j) {
        complex_t s{};
        for (std::size_t m = 0; m < n; ++m)
            s += c[m] * std::polar(1.0, 2.0 * pi * static_cast<double>((j * m) % n) / static_cast<double>(n));
        u[j] = s;
    }
    return u;
}

[[nodiscard]] inline SpectralField field_from_samples(std::span<const double> samples, double domain_length)
{
    const std::size_t n = samples.size();
    if (n < 2 || (n & (n - 1)) != 0)
        throw std::invalid_argument("number of modes must be a power of two >= 2");
    if (!(domain_length > 0.0))
        throw std::invalid_argument("domain length must be > 0");
    ComplexVector u(samples.begin(), samples.end());
    return {n, domain_length, forward_transform(u)};
}

/// Complex physical values; the imaginary parts measure the loss of realness.
[[nodiscard]] inline ComplexVector physical_values_complex(const SpectralField& f)
{
    return inverse_transform(f.coefficients);
}

[[nodiscard]] inline std::vector<double> physical_values(const SpectralField& f)
{
    const ComplexVector u = physical_values_complex(f);
    std::vector<double> out(u.size());
    for (std::size_t j = 0; j < u.size(); ++j)
        out[j] = u[j].real();
    return out;
}

/// exp(-(x - center)^2 / (2 width^2)) sampled on x_j = j L / N.
[[nodiscard]] inline SpectralField gauss_initial(std::size_t num_modes, double domain_length, double center,
                                                 double width)
{
    if (!(width > 0.0))
        throw std::invalid_argument("width must be > 0");
    if (!(center >= 0.0 && center < domain_length))
        throw std::invalid_argument("center must lie in [0, domain_length)");
    std::vector<double> u(num_modes);
    for (std::size_t j = 0; j < num_modes; ++j) {
        const double x = static_cast<double>(j) * domain_length / static_cast<double>(num_modes);
        u[j] = std::exp(-(x - center) * (x - center) / (2.0 * width * width));
    }
    return field_from_samples(u, domain_length);
}

/// Multiplies every coefficient by the value of `mode_multiplier(|kappa|)`,
/// conjugated for negative wave numbers. The Nyquist mode is its own mirror
/// image and gets the real part, which is how the sampled cosine evolves.
template <class Multiplier>
[[nodiscard]] SpectralField apply_mode_multiplier(const SpectralField& field, Multiplier&& mode_multiplier)
{
    SpectralField out = field;
    const std::size_t n = field.num_modes;
    for (std::size_t m = 0; m < n; ++m) {
        const long s = field.signed_mode(m);
        const double kappa = 2.0 * pi * static_cast<double>(std::labs(s)) / field.domain_length;
        complex_t R = mode_multiplier(kappa);
        if (2 * static_cast<std::size_t>(std::labs(s)) == n)
            R = R.real();
        else if (s < 0)
            R = std::conj(R);
        out.coefficients[m] *= R;
    }
    return out;
}

/// Field after K Parareal iterations over [0, P dT].
[[nodiscard]] inline SpectralField evolve_parareal(const SpectralField& field, const PararealConfig& cfg, int K)
{
    const PararealConfig c = cfg.with_iterations(K);
    c.validate();
    return apply_mode_multiplier(field, [&](double kappa) { return parareal_stability(c, kappa); });
}

/// Field propagated exactly over [0, T].
[[nodiscard]] inline SpectralField evolve_exact(const SpectralField& field, const PhysicsParams& params, double T)
{
    return apply_mode_multiplier(field, [&](double kappa) { return exact_propagator(params, kappa, T); });
}

} // namespace parawave
