#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "anyonlab/errors.hpp"
#include "anyonlab/geometry.hpp"
#include "oracles.hpp"

using namespace anyonlab;
using namespace anyonlab::geometry;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST(VectorPotential, KnownValues) {
    const Vec2 a = vector_potential_A0({1.0, 0.0});
    EXPECT_DOUBLE_EQ(a.x, 0.0);
    EXPECT_DOUBLE_EQ(a.y, 1.0);
    const Vec2 b = vector_potential_A0({0.0, 2.0});
    EXPECT_DOUBLE_EQ(b.x, -0.5);
    EXPECT_DOUBLE_EQ(b.y, 0.0);
    EXPECT_THROW(vector_potential_A0({0.0, 0.0}), DomainError);
}

TEST(VectorPotential, DivergenceAndCurlFree) {
    const double h = 1e-4;
    for (Point2 r : {Point2{1.0, 0.5}, Point2{-0.7, 1.3}, Point2{0.2, -2.0}}) {
        const Vec2 xp = vector_potential_A0({r.x + h, r.y}), xm = vector_potential_A0({r.x - h, r.y});
        const Vec2 yp = vector_potential_A0({r.x, r.y + h}), ym = vector_potential_A0({r.x, r.y - h});
        const double div = (xp.x - xm.x + yp.y - ym.y) / (2 * h);
        const double curl = (xp.y - xm.y - yp.x + ym.x) / (2 * h);
        EXPECT_NEAR(div, 0.0, 1e-6);
        EXPECT_NEAR(curl, 0.0, 1e-6);
    }
}

TEST(SingularGaugePhase, Directions) {
    EXPECT_NEAR(singular_gauge_phase({1, 1}, {0, 0}), kPi / 4, 1e-15);
    EXPECT_NEAR(singular_gauge_phase({0, 1}, {0, 0}), kPi / 2, 1e-15);
    EXPECT_THROW(singular_gauge_phase({1, 1}, {1, 1}), DomainError);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int i = 0; i < 1000; ++i) {
        const Point2 a{u(rng), u(rng)}, b{u(rng), u(rng)};
        const double d = singular_gauge_phase(a, b) - singular_gauge_phase(b, a);
        EXPECT_NEAR(std::abs(d), kPi, 1e-12);
        const double t = singular_gauge_phase(a, b);
        EXPECT_GT(t, -kPi);
        EXPECT_LE(t, kPi);
    }
}

TEST(PhaseS, ValuesEvennessAndLine) {
    EXPECT_NEAR(phase_S({1, 1}), kPi / 4, 1e-15);
    EXPECT_THROW(phase_S({0, 1}), DomainError);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-5, 5);
    for (int i = 0; i < 10000; ++i) {
        const Point2 r{u(rng), u(rng)};
        EXPECT_EQ(phase_S(r), phase_S({-r.x, -r.y}));
        EXPECT_LT(std::abs(phase_S(r)), kPi / 2);
    }
}

TEST(GaugeResidual, VanishesOffTheLine) {
    for (Point2 r : {Point2{1, 0.1}, Point2{-2, 3}}) {
        const Vec2 g = gauge_residual(r);
        EXPECT_NEAR(g.x, 0.0, 1e-12);
        EXPECT_NEAR(g.y, 0.0, 1e-12);
    }
    EXPECT_THROW(gauge_residual({0, 1}), DomainError);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-4, 4);
    for (int i = 0; i < 10000; ++i) {
        const Point2 r{u(rng), u(rng)};
        EXPECT_LE(std::sqrt(norm2(gauge_residual(r))), 1e-12 * (1 + 1 / norm2(r)));
    }
}

TEST(GaugeResidual, FiniteDifferenceGradientMatchesA0) {
    const double h = 1e-4;
    const Point2 r{1.0, 0.5};
    const double gx = (phase_S({r.x + h, r.y}) - phase_S({r.x - h, r.y})) / (2 * h);
    const double gy = (phase_S({r.x, r.y + h}) - phase_S({r.x, r.y - h})) / (2 * h);
    const Vec2 a = vector_potential_A0(r);
    EXPECT_NEAR(gx, a.x, 1e-8);
    EXPECT_NEAR(gy, a.y, 1e-8);
}

TEST(TildeGaugeResidual, BoundAndMonotonicity) {
    const Vec2 z = tilde_gauge_residual({1, 0});
    EXPECT_EQ(z.x, 0.0);
    EXPECT_EQ(z.y, 0.0);
    EXPECT_THROW(tilde_gauge_residual({0, 0.3}), DomainError);
    EXPECT_LT(norm2(tilde_gauge_residual({1, 0.1})), norm2(tilde_gauge_residual({1, 0.5})));
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-3, 3);
    int tested = 0;
    while (tested < 10000) {
        const Point2 r{u(rng), u(rng)};
        if (!(std::abs(r.y) < std::abs(r.x))) continue;
        ++tested;
        EXPECT_LE(std::sqrt(norm2(tilde_gauge_residual(r))), 2.0 * std::abs(r.y) / (r.x * r.x) + 1e-14);
    }
}

TEST(Circumradius, EquilateralCollinearRandom) {
    EXPECT_NEAR(circumradius_sum({0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}), 1.5, 1e-13);
    EXPECT_NEAR(circumradius_sum({0, 0}, {1, 0}, {2, 0}), 0.0, 1e-15);
    EXPECT_THROW(circumradius_sum({0, 0}, {0, 0}, {1, 1}), DomainError);
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(-3, 3);
    for (int i = 0; i < 1000; ++i) {
        const double p[6] = {u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
        const double want = oracle::inverse_circumradius_term(p[0], p[1], p[2], p[3], p[4], p[5]);
        const double got = circumradius_sum({p[0], p[1]}, {p[2], p[3]}, {p[4], p[5]});
        EXPECT_NEAR(got, want, 1e-10 * want) << i;
    }
}

TEST(Circumradius, TendsToZeroNearCollinear) {
    double prev = circumradius_sum({0, 0}, {1, 0.1}, {2, 0});
    for (double d : {1e-2, 1e-3, 1e-4}) {
        const double v = circumradius_sum({0, 0}, {1, d}, {2, 0});
        EXPECT_LT(v, prev);
        prev = v;
    }
    EXPECT_LT(prev, 1e-7);
}

TEST(PeierlsLinkPhase, SubtendedAngleAndAntisymmetry) {
    const double h = 0.1;
    EXPECT_NEAR(peierls_link_phase({1, -h / 2}, {1, h / 2}, 1.0), 2 * std::atan(h / 2), 1e-15);
    EXPECT_THROW(peierls_link_phase({-1, 0}, {1, 0}, 1.0), DomainError);
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int i = 0; i < 1000; ++i) {
        const Point2 a{u(rng), u(rng)}, b{u(rng), u(rng)};
        const double alpha = u(rng);
        EXPECT_DOUBLE_EQ(peierls_link_phase(a, b, alpha), -peierls_link_phase(b, a, alpha));
    }
    const PhaseLink l = make_phase_link({1, 0}, {0, 1}, 0.5);
    EXPECT_DOUBLE_EQ(l.reversed().phase, -l.phase);
}

TEST(PeierlsLinkPhase, PlaquetteFlux) {
    const auto loop = [](Point2 c, double h, double alpha) {
        const Point2 v[4] = {{c.x - h / 2, c.y - h / 2}, {c.x + h / 2, c.y - h / 2}, {c.x + h / 2, c.y + h / 2},
                             {c.x - h / 2, c.y + h / 2}};
        double s = 0;
        for (int e = 0; e < 4; ++e) s += peierls_link_phase(v[e], v[(e + 1) % 4], alpha);
        return s;
    };
    for (double alpha : {0.25, 0.5, 1.0, 1.7}) {
        EXPECT_NEAR(loop({0, 0}, 0.1, alpha), 2 * kPi * alpha, 1e-12);
        EXPECT_NEAR(loop({0.3, -0.2}, 0.1, alpha), 0.0, 1e-12);
        EXPECT_NEAR(loop({-2, 1}, 0.5, alpha), 0.0, 1e-12);
    }
}

TEST(ClassicalHamiltonian, MatchesDirectSquare) {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int n = 2; n <= 6; ++n) {
        std::vector<Point2> x(n);
        std::vector<Vec2> p(n);
        std::vector<std::pair<double, double>> xo(n), po(n);
        for (int j = 0; j < n; ++j) {
            x[j] = {u(rng), u(rng)};
            p[j] = {u(rng), u(rng)};
            xo[j] = {x[j].x, x[j].y};
            po[j] = {p[j].x, p[j].y};
        }
        const double alpha = 0.7;
        const double want = oracle::classical_direct(xo, po, alpha);
        EXPECT_NEAR(classical_hamiltonian(x, p, alpha).total(), want, 1e-12 * std::abs(want));
    }
}

TEST(ClassicalHamiltonian, CollinearReduction) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-3, 3);
    for (int n = 2; n <= 6; ++n) {
        std::vector<Point2> x(n);
        std::vector<Vec2> p(n);
        for (int j = 0; j < n; ++j) {
            x[j] = {u(rng), 0.0};
            p[j] = {u(rng), 0.0};
        }
        const double alpha = 0.9;
        const auto t = classical_hamiltonian(x, p, alpha);
        EXPECT_EQ(t.cross, 0.0);
        EXPECT_NEAR(t.three_body, 0.0, 1e-12 * (1 + t.two_body));
        double want = 0;
        for (int j = 0; j < n; ++j) {
            want += p[j].x * p[j].x + x[j].x * x[j].x;
            for (int k = 0; k < n; ++k)
                if (k != j) want += alpha * alpha / ((x[j].x - x[k].x) * (x[j].x - x[k].x));
        }
        EXPECT_NEAR(t.total(), want, 1e-12 * want);
    }
    const std::vector<Point2> same = {{0, 0}, {0, 0}};
    const std::vector<Vec2> mom = {{1, 0}, {0, 1}};
    EXPECT_THROW(classical_hamiltonian(same, mom, 1.0), DomainError);
}
