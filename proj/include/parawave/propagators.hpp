#pragma once
//
// One-slice propagators: a one-step method applied N times over a slice of
// length dT, optionally with its polar form split against the exact integrator.
//

#include "parawave/errors.hpp"
#include "parawave/symbols.hpp"

#include <cmath>
#include <complex>
#include <memory>
#include <stdexcept>
#include <string>
#include <variant>

namespace parawave {

enum class MethodKind { ExactIntegrator, BackwardEuler, TrapezoidalRule };

inline constexpr double pole_tolerance = 1e-14;

/// Stability function R(z) of a one-step method for u' = lambda u, z = lambda h.
[[nodiscard]] inline complex_t one_step_stability(MethodKind method, complex_t z)
{
    switch (method) {
    case MethodKind::ExactIntegrator:
        return std::exp(z);
    case MethodKind::BackwardEuler: {
        const complex_t den = 1.0 - z;
        if (std::abs(den) < pole_tolerance)
            throw PoleError("backward Euler evaluated at its pole z = 1");
        return 1.0 / den;
    }
    case MethodKind::TrapezoidalRule: {
        const complex_t den = 1.0 - 0.5 * z;
        if (std::abs(den) < pole_tolerance)
            throw PoleError("trapezoidal rule evaluated at its pole z = 2");
        return (1.0 + 0.5 * z) / den;
    }
    }
    throw std::logic_error("unhandled MethodKind");
}

/// x^n by repeated squaring.
[[nodiscard]] inline complex_t ipow(complex_t x, int n)
{
    complex_t result{1.0, 0.0};
    for (; n > 0; n >>= 1) {
        if (n & 1)
            result *= x;
        x *= x;
    }
    return result;
}

struct PropagatorSpec;

namespace modifier {
struct None {};
/// |R| e^{i angle(R_exact)}: keeps the method's amplitude, exact phase.
struct ExactPhase {};
/// |R_exact| e^{i angle(R)}: keeps the method's phase, exact amplitude.
struct ExactAmplitude {};
/// |R| e^{i angle(G)}: a fine propagator that inherits the coarse phase error.
struct PhaseOfCoarse {
    std::shared_ptr<const PropagatorSpec> coarse;
};
} // namespace modifier

using Modifier = std::variant<modifier::None, modifier::ExactPhase, modifier::ExactAmplitude,
                              modifier::PhaseOfCoarse>;

struct PropagatorSpec {
    MethodKind method = MethodKind::ExactIntegrator;
    int steps_per_slice = 1;
    double slice_length = 1.0;
    SpatialSymbol symbol{};
    Modifier modifier{};

    [[nodiscard]] double step_size() const { return slice_length / steps_per_slice; }

    void validate() const
    {
        if (steps_per_slice < 1)
            throw std::invalid_argument("steps per slice must be >= 1");
        if (!(slice_length > 0.0) || !std::isfinite(slice_length))
            throw std::invalid_argument("slice length must be > 0");
        symbol.validate();
        if (const auto* m = std::get_if<modifier::PhaseOfCoarse>(&modifier)) {
            if (!m->coarse)
                throw std::invalid_argument("phase-of-coarse modifier without a coarse propagator");
            if (!std::holds_alternative<modifier::None>(m->coarse->modifier))
                throw std::invalid_argument("phase-of-coarse modifier may only nest one level");
            m->coarse->validate();
        }
    }
};

/// Exact integrator of the continuous problem over `length`, for the same physics.
[[nodiscard]] inline complex_t exact_propagator(const PhysicsParams& params, double kappa, double length)
{
    return std::exp(eval_symbol(SpatialSymbol::exact(params), kappa) * length);
}

/// R over one time slice for wave number kappa.
[[nodiscard]] inline complex_t slice_propagator(const PropagatorSpec& spec, double kappa)
{
    const complex_t z = eval_symbol(spec.symbol, kappa) * spec.step_size();
    const complex_t R = ipow(one_step_stability(spec.method, z), spec.steps_per_slice);

    return std::visit(
        [&](const auto& mod) -> complex_t {
            using T = std::decay_t<decltype(mod)>;
            if constexpr (std::is_same_v<T, modifier::None>) {
                return R;
            }
            else if constexpr (std::is_same_v<T, modifier::ExactPhase>) {
                const complex_t ref = exact_propagator(spec.symbol.params, kappa, spec.slice_length);
                return std::polar(std::abs(R), std::arg(ref));
            }
            else if constexpr (std::is_same_v<T, modifier::ExactAmplitude>) {
                const complex_t ref = exact_propagator(spec.symbol.params, kappa, spec.slice_length);
                return std::polar(std::abs(ref), std::arg(R));
            }
            else {
                return std::polar(std::abs(R), std::arg(slice_propagator(*mod.coarse, kappa)));
            }
        },
        spec.modifier);
}

[[nodiscard]] inline std::string to_string(MethodKind m)
{
    switch (m) {
    case MethodKind::ExactIntegrator: return "exact";
    case MethodKind::BackwardEuler: return "be";
    case MethodKind::TrapezoidalRule: return "trap";
    }
    return "?";
}

} // namespace parawave
