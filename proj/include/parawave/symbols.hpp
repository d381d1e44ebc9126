#pragma once
//
// Scalar symbols of the 1-D advection-diffusion operator  u_t + U u_x = nu u_xx.
// Substituting a plane wave exp(i kappa x) turns the PDE into u_t = delta(kappa) u.
//

#include <cmath>
#include <complex>
#include <stdexcept>

namespace parawave {

using complex_t = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;

struct PhysicsParams {
    double U = 1.0;  ///< advection velocity
    double nu = 0.0; ///< diffusion coefficient, >= 0

    void validate() const
    {
        if (!std::isfinite(U))
            throw std::invalid_argument("advection velocity U must be finite");
        if (!(nu >= 0.0) || !std::isfinite(nu))
            throw std::invalid_argument("diffusion coefficient nu must be finite and >= 0");
    }
};

enum class SymbolKind { Exact, UpwindFirstOrder, CentredSecondOrder };

struct SpatialSymbol {
    SymbolKind kind = SymbolKind::Exact;
    PhysicsParams params{};
    double dx = 0.0; ///< mesh width, only used by the finite-difference kinds

    static SpatialSymbol exact(PhysicsParams p) { return {SymbolKind::Exact, p, 0.0}; }
    static SpatialSymbol upwind(PhysicsParams p, double dx) { return {SymbolKind::UpwindFirstOrder, p, dx}; }
    static SpatialSymbol centred(PhysicsParams p, double dx) { return {SymbolKind::CentredSecondOrder, p, dx}; }

    [[nodiscard]] bool is_finite_difference() const { return kind != SymbolKind::Exact; }

    void validate() const
    {
        params.validate();
        if (is_finite_difference() && !(dx > 0.0 && std::isfinite(dx)))
            throw std::invalid_argument("finite-difference symbol needs dx > 0");
    }
};

/// delta(kappa): the coefficient of the scalar ODE for wave number kappa.
///
/// The finite-difference kinds only approximate the advection term; diffusion
/// always contributes the exact -nu kappa^2.
[[nodiscard]] inline complex_t eval_symbol(const SpatialSymbol& sym, double kappa)
{
    if (!(kappa >= 0.0))
        throw std::invalid_argument("wave number must be >= 0");
    const double U = sym.params.U;
    const double diffusion = -sym.params.nu * kappa * kappa;
    constexpr complex_t I{0.0, 1.0};

    switch (sym.kind) {
    case SymbolKind::Exact:
        return {diffusion, -U * kappa};
    case SymbolKind::UpwindFirstOrder: {
        // (1 - exp(-i k dx)) / dx, written without cancellation for small k dx
        const double h = sym.dx;
        const double theta = kappa * h;
        const double s = std::sin(0.5 * theta);
        const complex_t diff_quot{2.0 * s * s / h, std::sin(theta) / h};
        return -U * diff_quot + diffusion;
    }
    case SymbolKind::CentredSecondOrder:
        return -U * I * (std::sin(kappa * sym.dx) / sym.dx) + diffusion;
    }
    throw std::logic_error("unhandled SymbolKind");
}

} // namespace parawave
