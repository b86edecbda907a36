#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <numbers>
#include <random>

#include "anyonlab/errors.hpp"
#include "anyonlab/oscillator.hpp"
#include "anyonlab/tonks_girardeau.hpp"
#include "oracles.hpp"

using namespace anyonlab;
using namespace anyonlab::tonks;

TEST(OccupationSet, Validation) {
    EXPECT_THROW(OccupationSet({1, 1}), ContractError);
    EXPECT_THROW(OccupationSet({2, 1}), ContractError);
    EXPECT_THROW(OccupationSet({-1, 2}), ContractError);
    EXPECT_EQ(OccupationSet::ground(3).energy(), 9);
}

TEST(TgLevels, GroundEnergyIsNSquared) {
    for (int n = 1; n <= 12; ++n) EXPECT_EQ(tg_levels(n, 1).front().energy, n * n);
    EXPECT_EQ(tg_levels(5, 1).front().energy, 25);
    EXPECT_THROW(tg_levels(13, 1), CapacityError);
    EXPECT_THROW(tg_levels(2, 10001), CapacityError);
}

TEST(TgLevels, FirstFourPairLevels) {
    EXPECT_EQ(tg_energies(2, 4), (std::vector<std::int64_t>{4, 6, 8, 8}));
    const auto lv = tg_levels(2, 4);
    ASSERT_EQ(lv.size(), 3u);
    EXPECT_EQ(lv[2].sets, (std::vector<OccupationSet>{OccupationSet({0, 3}), OccupationSet({1, 2})}));
}

TEST(TgLevels, AgreesWithExhaustiveEnumeration) {
    for (int n = 1; n <= 4; ++n) {
        const auto all = oracle::tg_exhaustive(n, 70);
        const int count = 60;
        const auto got = tg_energies(n, count);
        for (int i = 0; i < count; ++i) EXPECT_EQ(got[i], all[i].first) << n << " " << i;
    }
}

TEST(TgLevels, MultiplicitiesArePartitionCounts) {
    for (int n = 1; n <= 4; ++n) {
        const auto lv = tg_levels(n, 400);
        for (int m = 0; m <= 10; ++m) {
            ASSERT_LT(static_cast<std::size_t>(m), lv.size());
            EXPECT_EQ(lv[m].energy, n * n + 2 * m);
            EXPECT_EQ(lv[m].multiplicity(), oracle::partitions_at_most(m, n)) << n << " " << m;
        }
    }
}

TEST(TgEigenstate, DiagonalZeroAndSymmetry) {
    const auto psi = tg_eigenfunction(OccupationSet({0, 1}));
    const double on[2] = {0.5, 0.5};
    EXPECT_EQ(psi(on), 0.0);
    std::mt19937_64 rng(1);
    std::normal_distribution<double> g;
    for (int i = 0; i < 200; ++i) {
        const double a[2] = {g(rng), g(rng)}, b[2] = {a[1], a[0]};
        EXPECT_NEAR(psi(a), psi(b), 1e-15);
    }
    const auto psi4 = tg_eigenfunction(OccupationSet({0, 2, 3, 5}));
    for (int i = 0; i < 200; ++i) {
        double x[4] = {g(rng), g(rng), g(rng), g(rng)};
        const double v = psi4(x);
        std::swap(x[1], x[3]);
        EXPECT_NEAR(psi4(x), v, 1e-14);
        x[2] = x[0];
        EXPECT_EQ(psi4(x), 0.0);
    }
}

TEST(TgEigenstate, TwoByTwoDeterminant) {
    const auto psi = tg_eigenfunction(OccupationSet({0, 1}));
    const double x[2] = {1.0, -1.0};
    const double v0 = oracle::hermite_function(0, 1.0), v0m = oracle::hermite_function(0, -1.0);
    const double v1 = oracle::hermite_function(1, 1.0), v1m = oracle::hermite_function(1, -1.0);
    const double want = std::abs(v0 * v1m - v0m * v1) / std::sqrt(2.0);
    EXPECT_NEAR(psi(x), want, 1e-14);
    EXPECT_NEAR(want, 2.0 / std::sqrt(std::numbers::pi) * std::exp(-1.0), 1e-14);
}

TEST(TgEigenstate, PositiveOnTheWedge) {
    std::mt19937_64 rng(2);
    std::normal_distribution<double> g;
    for (int n = 1; n <= 6; ++n) {
        const auto psi = tg_eigenfunction(OccupationSet::ground(n));
        for (int i = 0; i < 100; ++i) {
            std::vector<double> x(n);
            for (auto& v : x) v = g(rng);
            std::sort(x.begin(), x.end());
            EXPECT_GT(psi(x), 0.0);
        }
    }
}

TEST(TgEigenstate, GradientMatchesFiniteDifference) {
    const auto psi = tg_eigenfunction(OccupationSet({0, 1, 3}));
    const std::vector<double> x = {-0.9, 0.2, 1.4};
    std::vector<double> grad(3);
    const double v = psi.value_and_gradient(x, grad);
    EXPECT_DOUBLE_EQ(v, psi(x));
    const double h = 1e-6;
    for (int j = 0; j < 3; ++j) {
        auto xp = x, xm = x;
        xp[j] += h;
        xm[j] -= h;
        EXPECT_NEAR(grad[j], (psi(xp) - psi(xm)) / (2 * h), 1e-7);
    }
}

TEST(TgEigenstate, Normalization) {
    EXPECT_NEAR(tg_norm_check(OccupationSet({0}), 64), 1.0, 1e-12);
    EXPECT_NEAR(tg_norm_check(OccupationSet({0, 1}), 64), 1.0, 1e-8);
    EXPECT_NEAR(tg_norm_check(OccupationSet({0, 1, 2}), 48), 1.0, 1e-6);
    EXPECT_THROW(tg_norm_check(OccupationSet::ground(5), 8), CapacityError);
}

TEST(TgEigenstate, LinearVanishingAcrossTheDiagonal) {
    for (auto occ : {OccupationSet({0, 1}), OccupationSet({0, 2})}) {
        // Off the origin: for {0, 2} both modes are even and psi vanishes identically at x0 = 0.
        const double r3 = diagonal_vanishing_rate(occ, 0.3, 1e-3);
        const double r4 = diagonal_vanishing_rate(occ, 0.3, 1e-4);
        EXPECT_GT(r4, 0.0);
        EXPECT_NEAR(r3 / r4, 1.0, 1e-2);
    }
    const auto occ = OccupationSet({0, 2});
    const double d = 0.05;
    const double a = diagonal_vanishing_rate(occ, 0.3, d), b = diagonal_vanishing_rate(occ, 0.3, d / 2);
    EXPECT_LT(std::abs(a - b), 2.0 * d * std::max(a, 1.0));
}

TEST(TgEigenstate, EnergyResidualByFiniteDifferences) {
    const auto psi = tg_eigenfunction(OccupationSet({0, 1}));
    const auto residual = [&](double h) {
        double worst = 0;
        for (double x1 = -2.0; x1 <= 2.0; x1 += 0.5)
            for (double x2 = -2.0; x2 <= 2.0; x2 += 0.5) {
                if (std::abs(x1 - x2) < 0.4) continue;
                const double c[2] = {x1, x2};
                double lap = 0;
                for (int j = 0; j < 2; ++j) {
                    double p[2] = {x1, x2}, m[2] = {x1, x2};
                    p[j] += h;
                    m[j] -= h;
                    lap += (psi(p) - 2 * psi(c) + psi(m)) / (h * h);
                }
                worst = std::max(worst, std::abs(-lap + (x1 * x1 + x2 * x2) * psi(c) - 4.0 * psi(c)));
            }
        return worst;
    };
    const double r1 = residual(0.02), r2 = residual(0.01);
    EXPECT_LT(r1, 1e-3);
    EXPECT_NEAR(r1 / r2, 4.0, 0.2);
}

TEST(Determinant, SmallMatrices) {
    EXPECT_DOUBLE_EQ(determinant({2.0}, 1), 2.0);
    EXPECT_NEAR(determinant({1, 2, 3, 4}, 2), -2.0, 1e-15);
    EXPECT_NEAR(determinant({0, 1, 0, 1, 0, 0, 0, 0, 1}, 3), -1.0, 1e-15);
    EXPECT_EQ(determinant({1, 2, 2, 4}, 2), 0.0);
}
