#pragma once
// Independent reference computations used only by the tests. None of them
// reuse the library's forward substitution, SVD or root selection.

#include "parawave/complex_matrix.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

namespace oracle {

using parawave::complex_t;
using parawave::ComplexMatrix;

/// Gauss-Jordan inverse with partial pivoting.
inline ComplexMatrix dense_inverse(const ComplexMatrix& a)
{
    const std::size_t n = a.size();
    ComplexMatrix m = a;
    ComplexMatrix inv = ComplexMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(m(r, c)) > std::abs(m(piv, c)))
                piv = r;
        if (std::abs(m(piv, c)) == 0.0)
            throw std::runtime_error("singular");
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(m(c, j), m(piv, j));
            std::swap(inv(c, j), inv(piv, j));
        }
        const complex_t d = m(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            m(c, j) /= d;
            inv(c, j) /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c)
                continue;
            const complex_t f = m(r, c);
            for (std::size_t j = 0; j < n; ++j) {
                m(r, j) -= f * m(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

inline ComplexMatrix conj_transpose(const ComplexMatrix& a)
{
    ComplexMatrix t(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            t(i, j) = std::conj(a(j, i));
    return t;
}

/// sigma_max^2 as the converged Rayleigh quotient of power iteration on A^H A.
inline double power_sigma_max_squared(const ComplexMatrix& a, int iterations = 20000)
{
    const ComplexMatrix h = conj_transpose(a) * a;
    std::mt19937 rng(12345);
    std::normal_distribution<double> nd;
    std::vector<complex_t> x(a.size());
    for (auto& v : x)
        v = {nd(rng), nd(rng)};
    double lambda = 0.0;
    for (int it = 0; it < iterations; ++it) {
        const auto y = h * std::span<const complex_t>(x);
        const double ny = parawave::norm2(y);
        if (ny == 0.0)
            return 0.0;
        double num = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i)
            num += std::real(std::conj(x[i]) * y[i]);
        const double den = parawave::norm2(x) * parawave::norm2(x);
        const double next = num / den;
        for (std::size_t i = 0; i < x.size(); ++i)
            x[i] = y[i] / ny;
        if (it > 50 && std::abs(next - lambda) <= 1e-15 * std::abs(next))
            return next;
        lambda = next;
    }
    return lambda;
}

inline double binomial(int n, int k)
{
    double r = 1.0;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

/// Scalar Parareal after K iterations from a coarse start:
///   u_P^K = sum_{j=0}^{K} C(P, j) (F - G)^j G^{P-j} u0.
inline complex_t binomial_parareal(complex_t G, complex_t F, int P, int K)
{
    complex_t s{};
    for (int j = 0; j <= K; ++j)
        s += binomial(P, j) * std::pow(F - G, j) * std::pow(G, P - j);
    return s;
}

} // namespace oracle
