#pragma once
//
// Linear Parareal for the scalar test problem u' = delta(kappa) u on [0, P*dT].
//
// With one-step propagators F and G over a slice, an iteration is
//   M_g u^k = (M_g - M_f) u^{k-1} + b,   b = (u0, 0, ..., 0),
// where M_f, M_g are unit lower-bidiagonal with -F / -G on the subdiagonal.
// The deviation from the fine serial solution evolves with E = I - M_g^{-1} M_f,
// and starting from the coarse run the final value after K iterations is
//   u_P = [ (sum_{j=0}^{K} E^j) M_g^{-1} b ]_P  =:  M_parareal u0.
//

#include "parawave/complex_matrix.hpp"
#include "parawave/propagators.hpp"
#include "parawave/svd.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace parawave {

struct PararealConfig {
    int P = 16;               ///< number of time slices (= processors)
    int K = 0;                ///< iterations
    double slice_length = 1.0;
    PropagatorSpec coarse{};
    PropagatorSpec fine{};

    [[nodiscard]] double final_time() const { return P * slice_length; }

    void validate() const
    {
        if (P < 1)
            throw std::invalid_argument("P must be >= 1");
        if (K < 0 || K > P)
            throw std::invalid_argument("K must lie in [0, P]");
        coarse.validate();
        fine.validate();
        if (coarse.slice_length != slice_length || fine.slice_length != slice_length)
            throw std::invalid_argument("coarse and fine propagators must use the configured slice length");
    }

    [[nodiscard]] PararealConfig with_iterations(int k) const
    {
        PararealConfig c = *this;
        c.K = k;
        return c;
    }
};

/// Coarse and fine one-slice propagators at wave number kappa.
struct SlicePair {
    complex_t coarse;
    complex_t fine;
};

[[nodiscard]] inline SlicePair slice_pair(const PararealConfig& cfg, double kappa)
{
    return {slice_propagator(cfg.coarse, kappa), slice_propagator(cfg.fine, kappa)};
}

/// (P+1)x(P+1) matrix with 1 on the diagonal and -R on the first subdiagonal.
[[nodiscard]] inline ComplexMatrix build_system_matrix(complex_t R, int P)
{
    if (P < 1)
        throw std::invalid_argument("P must be >= 1");
    const auto n = static_cast<std::size_t>(P) + 1;
    ComplexMatrix m = ComplexMatrix::identity(n);
    for (std::size_t i = 1; i < n; ++i)
        m(i, i - 1) = -R;
    return m;
}

/// Solves build_system_matrix(R, P) x = rhs by forward substitution.
[[nodiscard]] inline ComplexVector solve_system(complex_t R, std::span<const complex_t> rhs)
{
    ComplexVector x(rhs.begin(), rhs.end());
    for (std::size_t i = 1; i < x.size(); ++i)
        x[i] += R * x[i - 1];
    return x;
}

namespace detail {

inline ComplexMatrix error_matrix(complex_t G, complex_t F, int P)
{
    const auto n = static_cast<std::size_t>(P) + 1;
    ComplexMatrix E(n);
    // column j of M_f is e_j - F e_{j+1}
    for (std::size_t j = 0; j < n; ++j) {
        ComplexVector col(n);
        col[j] = 1.0;
        if (j + 1 < n)
            col[j + 1] = -F;
        const ComplexVector x = solve_system(G, col);
        for (std::size_t i = 0; i < n; ++i)
            E(i, j) = (i == j ? 1.0 : 0.0) - x[i];
    }
    return E;
}

inline complex_t parareal_stability(complex_t G, complex_t F, int P, int K)
{
    const ComplexMatrix E = error_matrix(G, F, P);
    ComplexVector b(static_cast<std::size_t>(P) + 1);
    b[0] = 1.0;
    ComplexVector term = solve_system(G, b);
    complex_t sum = term.back();
    for (int j = 1; j <= K; ++j) {
        term = E * term;
        sum += term.back();
    }
    return sum;
}

} // namespace detail

/// E = I - M_g^{-1} M_f.
///
/// E is strictly lower triangular. Parareal errors always have a zero first
/// component (the initial value is imposed exactly), and on that subspace
/// E^P = 0; on the full space only E^{P+1} vanishes, see error_space_restriction.
[[nodiscard]] inline ComplexMatrix error_matrix(const PararealConfig& cfg, double kappa)
{
    cfg.validate();
    const auto [G, F] = slice_pair(cfg, kappa);
    return detail::error_matrix(G, F, cfg.P);
}

/// A D with D = diag(0, 1, ..., 1): the action of A on vectors whose first entry is zero.
[[nodiscard]] inline ComplexMatrix error_space_restriction(ComplexMatrix a)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        a(i, 0) = 0.0;
    return a;
}

/// Scalar stability function M_parareal of K coarse-initialised iterations over [0, P dT].
[[nodiscard]] inline complex_t parareal_stability(const PararealConfig& cfg, double kappa)
{
    cfg.validate();
    const auto [G, F] = slice_pair(cfg, kappa);
    return detail::parareal_stability(G, F, cfg.P, cfg.K);
}

/// All iterates u^0 .. u^K of the literal recurrence
///   u_p^k = G u_{p-1}^k + F u_{p-1}^{k-1} - G u_{p-1}^{k-1},
/// starting from `initial` (which must carry u0 in entry 0).
[[nodiscard]] inline std::vector<ComplexVector>
parareal_iterates(const PararealConfig& cfg, double kappa, ComplexVector initial)
{
    cfg.validate();
    if (initial.size() != static_cast<std::size_t>(cfg.P) + 1)
        throw std::invalid_argument("initial iterate must have P+1 entries");
    const auto [G, F] = slice_pair(cfg, kappa);

    std::vector<ComplexVector> iterates;
    iterates.reserve(static_cast<std::size_t>(cfg.K) + 1);
    iterates.push_back(std::move(initial));
    for (int k = 1; k <= cfg.K; ++k) {
        const ComplexVector& prev = iterates.back();
        ComplexVector next(prev.size());
        next[0] = prev[0];
        for (std::size_t p = 1; p < next.size(); ++p)
            next[p] = G * next[p - 1] + F * prev[p - 1] - G * prev[p - 1];
        iterates.push_back(std::move(next));
    }
    return iterates;
}

/// Serial coarse run u_p = G^p u0, the usual Parareal starting guess.
[[nodiscard]] inline ComplexVector coarse_serial(const PararealConfig& cfg, double kappa, complex_t u0)
{
    const complex_t G = slice_propagator(cfg.coarse, kappa);
    ComplexVector u(static_cast<std::size_t>(cfg.P) + 1);
    u[0] = u0;
    for (std::size_t p = 1; p < u.size(); ++p)
        u[p] = G * u[p - 1];
    return u;
}

/// Serial fine run u_p = F^p u0, the fixed point of the iteration.
[[nodiscard]] inline ComplexVector fine_serial(const PararealConfig& cfg, double kappa, complex_t u0)
{
    const complex_t F = slice_propagator(cfg.fine, kappa);
    ComplexVector u(static_cast<std::size_t>(cfg.P) + 1);
    u[0] = u0;
    for (std::size_t p = 1; p < u.size(); ++p)
        u[p] = F * u[p - 1];
    return u;
}

/// u_P^K from the literal iteration with a coarse start. Independent of the matrix form.
[[nodiscard]] inline complex_t parareal_iterative_oracle(const PararealConfig& cfg, double kappa, complex_t u0)
{
    return parareal_iterates(cfg, kappa, coarse_serial(cfg, kappa, u0)).back().back();
}

/// d(k) = |M_parareal(k) - F^P| for k = 0..P.
[[nodiscard]] inline std::vector<double> defect_curve(const PararealConfig& cfg, double kappa)
{
    cfg.validate();
    const auto [G, F] = slice_pair(cfg, kappa);
    const complex_t fine = ipow(F, cfg.P);

    const ComplexMatrix E = detail::error_matrix(G, F, cfg.P);
    ComplexVector b(static_cast<std::size_t>(cfg.P) + 1);
    b[0] = 1.0;
    ComplexVector term = solve_system(G, b);
    complex_t sum = term.back();

    std::vector<double> d;
    d.reserve(static_cast<std::size_t>(cfg.P) + 1);
    d.push_back(std::abs(sum - fine));
    for (int k = 1; k <= cfg.P; ++k) {
        term = E * term;
        sum += term.back();
        d.push_back(std::abs(sum - fine));
    }
    return d;
}

/// Smallest k >= 1 with sigma^k <= tol, or nullopt if sigma >= 1.
[[nodiscard]] inline std::optional<int> iterations_for_tolerance(double sigma, double tol)
{
    if (!(tol > 0.0 && tol < 1.0))
        throw std::invalid_argument("tolerance must lie in (0, 1)");
    if (!(sigma >= 0.0))
        throw std::invalid_argument("sigma must be >= 0");
    if (sigma >= 1.0)
        return std::nullopt;
    if (sigma <= tol)
        return 1;
    // log-space comparison with 1e-12 relative slack, so that 0.1^2 <= 0.01 holds
    const double q = std::log(tol) / std::log(sigma);
    return std::max(1, static_cast<int>(std::ceil(q * (1.0 - 1e-12))));
}

/// Pipelined cost model with unit cost per coarse or fine step:
///   serial = P N_f,  parareal = P N_c + k (N_c + N_f).
[[nodiscard]] inline double speedup_model(int P, int coarse_steps, int fine_steps, int iterations)
{
    const double serial = static_cast<double>(P) * fine_steps;
    const double parallel = static_cast<double>(P) * coarse_steps
                            + static_cast<double>(iterations) * (coarse_steps + fine_steps);
    return serial / parallel;
}

struct SpeedupEstimate {
    double sigma = 0.0;
    std::optional<int> iterations;
    std::optional<double> speedup;
};

[[nodiscard]] inline SpeedupEstimate projected_speedup(const PararealConfig& cfg, double kappa, double tol)
{
    if (cfg.coarse.method != cfg.fine.method)
        throw std::invalid_argument("projected speedup needs the same method on both levels");
    SpeedupEstimate est;
    est.sigma = max_singular_value(error_matrix(cfg, kappa));
    est.iterations = iterations_for_tolerance(est.sigma, tol);
    if (est.iterations)
        est.speedup = speedup_model(cfg.P, cfg.coarse.steps_per_slice, cfg.fine.steps_per_slice,
                                    *est.iterations);
    return est;
}

struct ConvergenceReport {
    double sigma = 0.0;
    std::vector<double> defect_per_k;
    std::optional<int> iterations_to_tol;
};

[[nodiscard]] inline ConvergenceReport convergence_report(const PararealConfig& cfg, double kappa, double tol)
{
    ConvergenceReport r;
    r.sigma = max_singular_value(error_matrix(cfg, kappa));
    r.defect_per_k = defect_curve(cfg, kappa);
    r.iterations_to_tol = iterations_for_tolerance(r.sigma, tol);
    return r;
}

} // namespace parawave
