#include "parawave/svd.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace parawave;

namespace {

ComplexMatrix random_matrix(std::size_t n, std::mt19937& rng)
{
    std::normal_distribution<double> nd;
    ComplexMatrix a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = {nd(rng), nd(rng)};
    return a;
}

} // namespace

TEST(Svd, ZeroMatrix)
{
    EXPECT_EQ(max_singular_value(ComplexMatrix(5)), 0.0);
}

TEST(Svd, DiagonalWithPhases)
{
    ComplexMatrix a(4);
    a(0, 0) = complex_t(0.0, 3.0);
    a(1, 1) = -1.0;
    a(2, 2) = std::polar(7.5, 1.0);
    a(3, 3) = 0.25;
    const auto sv = singular_values(a);
    ASSERT_EQ(sv.size(), 4u);
    EXPECT_DOUBLE_EQ(sv[0], 7.5);
    EXPECT_DOUBLE_EQ(sv[1], 3.0);
    EXPECT_DOUBLE_EQ(sv[2], 1.0);
    EXPECT_DOUBLE_EQ(sv[3], 0.25);
}

TEST(Svd, TwoByTwoClosedForm)
{
    // [[1, 1], [0, 1]] has singular values (1 +- sqrt 5) / 2 in absolute value
    ComplexMatrix a(2);
    a(0, 0) = 1.0;
    a(0, 1) = 1.0;
    a(1, 1) = 1.0;
    const auto sv = singular_values(a);
    EXPECT_NEAR(sv[0], (1.0 + std::sqrt(5.0)) / 2.0, 1e-15);
    EXPECT_NEAR(sv[1], (std::sqrt(5.0) - 1.0) / 2.0, 1e-15);
}

TEST(Svd, FrobeniusNormIsPreserved)
{
    std::mt19937 rng(7);
    for (std::size_t n : {3u, 17u, 65u}) {
        const ComplexMatrix a = random_matrix(n, rng);
        double fro = 0.0;
        for (complex_t z : a.data())
            fro += std::norm(z);
        double s2 = 0.0;
        for (double s : singular_values(a))
            s2 += s * s;
        EXPECT_NEAR(s2, fro, 1e-11 * fro);
    }
}

TEST(Svd, AgreesWithPowerIteration)
{
    std::mt19937 rng(99);
    for (std::size_t n : {2u, 9u, 33u, 65u}) {
        ComplexMatrix a = random_matrix(n, rng);
        // strictly lower triangular, like the Parareal error matrix
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j)
                a(i, j) = 0.0;
        const double sigma = max_singular_value(a);
        const double ref2 = oracle::power_sigma_max_squared(a);
        EXPECT_NEAR(sigma * sigma, ref2, 1e-8 * ref2) << n;
    }
}

TEST(Svd, ScalingIsExact)
{
    std::mt19937 rng(3);
    const ComplexMatrix a = random_matrix(12, rng);
    ComplexMatrix b = a;
    ComplexMatrix scale = ComplexMatrix::identity(12);
    for (std::size_t i = 0; i < 12; ++i)
        scale(i, i) = std::polar(2.0, 0.3 * double(i));
    b = a * scale;
    // column phases do not change singular values, uniform modulus scales them
    EXPECT_NEAR(max_singular_value(b), 2.0 * max_singular_value(a), 1e-13 * max_singular_value(b));
}

TEST(Svd, RejectsNonFinite)
{
    ComplexMatrix a(3);
    a(1, 2) = complex_t(NAN, 0.0);
    EXPECT_THROW((void)max_singular_value(a), std::invalid_argument);
}
