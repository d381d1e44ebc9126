#include "parawave/symbols.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace parawave;

TEST(Symbols, ExactSymbolAtKappaTwo)
{
    const complex_t d = eval_symbol(SpatialSymbol::exact({1.0, 0.0}), 2.0);
    EXPECT_DOUBLE_EQ(d.real(), 0.0);
    EXPECT_DOUBLE_EQ(d.imag(), -2.0);
}

TEST(Symbols, ZeroWaveNumberGivesZero)
{
    EXPECT_EQ(eval_symbol(SpatialSymbol::exact({1.0, 0.1}), 0.0), complex_t(0.0, 0.0));
    EXPECT_EQ(eval_symbol(SpatialSymbol::upwind({1.0, 0.1}, 0.5), 0.0), complex_t(0.0, 0.0));
    EXPECT_EQ(eval_symbol(SpatialSymbol::centred({1.0, 0.1}, 0.5), 0.0), complex_t(0.0, 0.0));
}

TEST(Symbols, UpwindTendsToExactForTinyMesh)
{
    const complex_t d = eval_symbol(SpatialSymbol::upwind({1.0, 0.0}, 1e-6), 1.0);
    EXPECT_LT(std::abs(d - complex_t(0.0, -1.0)), 1e-5);
}

TEST(Symbols, ExactRealAndImaginaryParts)
{
    for (double U : {-2.0, 0.0, 1.0, 3.5})
        for (double nu : {0.0, 0.1, 0.5})
            for (double k : {0.0, 0.3, 1.7, pi}) {
                const complex_t d = eval_symbol(SpatialSymbol::exact({U, nu}), k);
                EXPECT_EQ(d.real(), -nu * k * k);
                EXPECT_EQ(d.imag(), -U * k);
            }
}

TEST(Symbols, FiniteDifferenceConsistency)
{
    for (auto kind : {SymbolKind::UpwindFirstOrder, SymbolKind::CentredSecondOrder})
        for (double k : {0.1, 1.0, 2.5, pi}) {
            const PhysicsParams p{1.0, 0.1};
            const complex_t exact = eval_symbol(SpatialSymbol::exact(p), k);
            double last = INFINITY;
            for (double dx : {1e-2, 1e-4, 1e-6}) {
                const double err = std::abs(eval_symbol({kind, p, dx}, k) - exact);
                EXPECT_LT(err, last) << "kappa=" << k << " dx=" << dx;
                last = err;
            }
            EXPECT_LT(last, 1e-5);
        }
}

TEST(Symbols, UpwindMatchesDefinition)
{
    // -U (1 - exp(-i k dx)) / dx - nu k^2, straight from the definition
    const PhysicsParams p{1.3, 0.2};
    for (double dx : {0.25, 1.0})
        for (double k : {0.4, 2.0, pi}) {
            const complex_t I{0.0, 1.0};
            const complex_t ref = -p.U * (1.0 - std::exp(-I * k * dx)) / dx - p.nu * k * k;
            EXPECT_LT(std::abs(eval_symbol(SpatialSymbol::upwind(p, dx), k) - ref), 1e-14);
        }
}

TEST(Symbols, CentredIsPurelyImaginaryWithoutDiffusion)
{
    for (double k : {0.1, 1.0, 2.0, pi}) {
        const complex_t d = eval_symbol(SpatialSymbol::centred({1.0, 0.0}, 1.0), k);
        EXPECT_EQ(d.real(), 0.0);
        EXPECT_DOUBLE_EQ(d.imag(), -std::sin(k));
    }
}

TEST(Symbols, InvalidInputs)
{
    EXPECT_THROW((void)eval_symbol(SpatialSymbol::exact({1.0, 0.0}), -0.1), std::invalid_argument);
    EXPECT_THROW(SpatialSymbol::upwind({1.0, 0.0}, 0.0).validate(), std::invalid_argument);
    EXPECT_THROW(SpatialSymbol::exact({1.0, -0.1}).validate(), std::invalid_argument);
    EXPECT_NO_THROW(SpatialSymbol::exact({1.0, 0.0}).validate());
}
