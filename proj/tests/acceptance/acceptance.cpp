// One PASS/FAIL line per acceptance criterion. Usage: anyonlab_acceptance [criterion...]
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "anyonlab/calogero.hpp"
#include "anyonlab/geometry.hpp"
#include "anyonlab/hardy.hpp"
#include "anyonlab/lanczos.hpp"
#include "anyonlab/pair.hpp"
#include "anyonlab/tonks_girardeau.hpp"
#include "anyonlab/vmc.hpp"
#include "oracles.hpp"

using namespace anyonlab;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Check {
    bool ok = true;
    void require(bool cond, const char* what) {
        if (!cond) {
            ok = false;
            std::printf("    violated: %s\n", what);
        }
    }
};

double even_ground(const pair::PairProblem& p) {
    return pair::relative_spectrum(p, pair::SolveSettings{}).front().eigenvalue;
}

bool criterion_1() {
    Check c;
    const auto t0 = Clock::now();
    for (int n = 1; n <= 8; ++n) {
        const auto e = tonks::tg_energies(n, 1);
        std::printf("    N=%d ground=%lld\n", n, static_cast<long long>(e.front()));
        c.require(e.front() == static_cast<std::int64_t>(n) * n, "ground energy equals N^2");
    }
    const auto levels = tonks::tg_energies(2, 4);
    std::printf("    N=2 levels: %lld %lld %lld %lld\n", static_cast<long long>(levels[0]),
                static_cast<long long>(levels[1]), static_cast<long long>(levels[2]),
                static_cast<long long>(levels[3]));
    c.require(levels == std::vector<std::int64_t>{4, 6, 8, 8}, "N=2 levels are 4, 6, 8, 8");
    const double dt = seconds_since(t0);
    std::printf("    runtime %.4f s\n", dt);
    c.require(dt < 1.0, "runtime below 1 s");
    return c.ok;
}

bool criterion_2() {
    Check c;
    for (double eps : {0.5, 0.25, 0.125}) {
        const auto t0 = Clock::now();
        const auto coarse = pair::PairProblem::standard(1.0, eps);
        const auto fine = coarse.refined();
        const double ec = even_ground(coarse) - 1.0 / eps;
        const double ef = even_ground(fine) - 1.0 / eps;
        const double ex = pair::richardson(ec, ef, coarse.spacing_ratio(fine), pair::richardson_order(1.0));
        std::printf("    eps=%g grid %dx%d: %.6f (%.3f%%), %dx%d: %.6f, extrapolated %.6f (%.3f%%), %.1f s\n", eps,
                    coarse.nx, coarse.ny, ec, 100 * std::abs(ec - 3) / 3, fine.nx, fine.ny, ef, ex,
                    100 * std::abs(ex - 3) / 3, seconds_since(t0));
        c.require(std::abs(ec - 3.0) <= 0.05 * 3.0, "default grid within 5% of 3");
        c.require(std::abs(ex - 3.0) <= 0.02 * 3.0, "Richardson value within 2% of 3");
    }
    return c.ok;
}

bool criterion_3() {
    Check c;
    const std::vector<double> alphas{0.25, 0.5, 0.75, 1.0};
    const std::vector<double> epss{0.5, 0.25, 0.125};
    std::vector<double> at_smallest;
    for (double a : alphas) {
        std::vector<double> dev;
        for (double eps : epss) {
            const double r = even_ground(pair::PairProblem::standard(a, eps)) - 1.0 / eps;
            dev.push_back(std::abs(r - 3.0));
            std::printf("    alpha=%g eps=%g reduced=%.6f deviation=%.6f\n", a, eps, r, dev.back());
            if (eps == 0.125) at_smallest.push_back(r);
        }
        c.require(dev[1] <= dev[0] && dev[2] <= dev[1], "deviation from 3 non-increasing in eps");
    }
    for (std::size_t i = 0; i < at_smallest.size(); ++i) {
        c.require(std::abs(at_smallest[i] - 3.0) <= 0.1 * 3.0, "eps=0.125 value within 10% of 3");
        for (std::size_t j = i + 1; j < at_smallest.size(); ++j)
            c.require(std::abs(at_smallest[i] - at_smallest[j]) <=
                          0.1 * std::max(std::abs(at_smallest[i]), std::abs(at_smallest[j])),
                      "eps=0.125 values pairwise within 10%");
    }
    const double boson = even_ground(pair::PairProblem::standard(0.0, 0.125)) - 8.0;
    std::printf("    alpha=0 eps=0.125 reduced=%.6f\n", boson);
    c.require(std::abs(boson - 1.0) <= 0.02, "alpha=0 value within 2% of 1");
    return c.ok;
}

bool criterion_4() {
    Check c;
    const pair::StudyTemplate tmpl;
    const double half_coarse = pair::convergence_point(0.5, 0.5, tmpl).overlap;
    const double half_fine = pair::convergence_point(0.5, 0.125, tmpl).overlap;
    std::printf("    alpha=0.5 overlap eps=0.5: %.6f, eps=0.125: %.6f\n", half_coarse, half_fine);
    c.require(half_fine > half_coarse, "alpha=0.5 overlap increases as eps decreases");
    c.require(half_fine >= 0.9, "alpha=0.5 overlap at eps=0.125 at least 0.9");
    for (double eps : {0.5, 0.25, 0.125}) {
        const double o = pair::convergence_point(1.0, eps, tmpl).overlap;
        std::printf("    alpha=1 eps=%g overlap %.8f\n", eps, o);
        c.require(o >= 0.99, "alpha=1 overlap at least 0.99");
    }
    return c.ok;
}

bool criterion_5() {
    Check c;
    const auto t0 = Clock::now();
    mc::McSettings s;
    s.seed = 12345;
    std::vector<vmc::MCEstimate> est;
    for (double a : {0.0, 0.5, 1.0}) {
        const vmc::AnsatzState state{tonks::OccupationSet({0, 1, 2}), a, 0.25};
        est.push_back(vmc::mc_energy(state, s));
        const auto& e = est.back();
        std::printf("    alpha=%g mean=%.5f se=%.5f samples=%ld acceptance=%.3f splitting=%g\n", a, e.mean,
                    e.standard_error, e.samples, e.acceptance, vmc::splitting_energy(state));
    }
    const auto& mid = est[1];
    c.require(mid.samples >= 1000000, "10^6 samples");
    c.require(std::abs(mid.mean - 21.0) <= 3.0 * mid.standard_error, "alpha=0.5 mean equals 21 within 3 sigma");
    c.require(mid.standard_error <= 0.01 * 21.0, "sigma at most 1%");
    for (std::size_t i = 0; i < est.size(); ++i)
        for (std::size_t j = i + 1; j < est.size(); ++j)
            c.require(std::abs(est[i].mean - est[j].mean) <=
                          3.0 * std::hypot(est[i].standard_error, est[j].standard_error),
                      "estimates across alpha within 3 sigma");
    const double dt = seconds_since(t0);
    std::printf("    runtime %.1f s\n", dt);
    c.require(dt < 600.0, "runtime below 10 min");
    return c.ok;
}

bool criterion_6() {
    Check c;
    const vmc::Probe probe{[](geometry::Point2 r) { return r.x * std::exp(-0.5 * geometry::norm2(r)); },
                           [](geometry::Point2 r) {
                               const double g = std::exp(-0.5 * geometry::norm2(r));
                               return geometry::Vec2{g * (1.0 - r.x * r.x), -g * r.x * r.y};
                           }};
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (double a : {0.3, 0.7, 1.0}) {
        double worst = 0.0;
        int n = 0;
        while (n < 10000) {
            const geometry::Point2 r{u(rng), u(rng)};
            if (r.x == 0.0) continue;
            worst = std::max(worst, std::abs(vmc::gauge_pointwise_check(a, r, probe)));
            ++n;
        }
        std::printf("    alpha=%g max residual %.3e over %d points\n", a, worst, n);
        c.require(worst <= 1e-10, "pointwise residual at most 1e-10");
    }
    return c.ok;
}

bool criterion_7() {
    Check c;
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    double circ = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const geometry::Point2 p[3] = {{u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}};
        // Reference in extended precision.
        using L = long double;
        auto dist = [](geometry::Point2 a, geometry::Point2 b) {
            return std::hypot(static_cast<L>(a.x) - b.x, static_cast<L>(a.y) - b.y);
        };
        const L area = 0.5L * std::abs((static_cast<L>(p[1].x) - p[0].x) * (static_cast<L>(p[2].y) - p[0].y) -
                                       (static_cast<L>(p[2].x) - p[0].x) * (static_cast<L>(p[1].y) - p[0].y));
        const L big_r = dist(p[1], p[2]) * dist(p[0], p[2]) * dist(p[0], p[1]) / (4.0L * area);
        const double expect = static_cast<double>(1.0L / (2.0L * big_r * big_r));
        circ = std::max(circ, std::abs(geometry::circumradius_sum(p[0], p[1], p[2]) - expect) / expect);
    }
    std::printf("    circumradius max relative error %.3e over 1000 triangles\n", circ);
    c.require(circ <= 1e-10, "circumradius relative error at most 1e-10");
    double cross = 0.0;
    double three = 0.0;
    for (int n = 2; n <= 6; ++n)
        for (int trial = 0; trial < 200; ++trial) {
            // Points and momenta along a horizontal line at a random height.
            const double height = u(rng);
            std::vector<geometry::Point2> x(n);
            std::vector<geometry::Vec2> p(n);
            for (int j = 0; j < n; ++j) {
                x[j] = {u(rng), height};
                p[j] = {u(rng), 0.0};
            }
            for (double a : {0.5, 1.0}) {
                const auto t = geometry::classical_hamiltonian(x, p, a);
                cross = std::max(cross, std::abs(t.cross));
                three = std::max(three, std::abs(t.three_body));
            }
        }
    std::printf("    collinear cross term max %.3e, three-body max %.3e\n", cross, three);
    c.require(cross <= 1e-12, "collinear cross term vanishes to 1e-12");
    c.require(three <= 1e-12, "collinear three-body term vanishes to 1e-12");
    return c.ok;
}

bool criterion_8() {
    Check c;
    for (double a : {0.25, 0.5, 1.0, 1.5}) {
        const double closed = calogero::calogero_ground_energy(2, a);
        const double numeric = calogero::calogero_pair_relative(a).energy + 1.0;
        std::printf("    alpha=%g closed %.8f radial %.8f\n", a, closed, numeric);
        c.require(std::abs(closed - numeric) <= 1e-4, "closed form matches the radial oracle within 1e-4");
    }
    const double defect = calogero::periodicity_defect(2.5);
    std::printf("    periodicity_defect(2.5) = %.6f\n", defect);
    c.require(defect > 0.0, "1D periodicity defect positive");
    pair::SolveSettings s;
    s.k = 6;
    s.tol = 1e-10;
    const auto lo = pair::pair_eigenstates(pair::PairProblem::standard(0.5, 0.5, 48), s);
    const auto hi = pair::pair_eigenstates(pair::PairProblem::standard(2.5, 0.5, 48), s);
    double worst = 0.0;
    for (std::size_t i = 0; i < lo.size(); ++i) worst = std::max(worst, std::abs(lo[i].eigenvalue - hi[i].eigenvalue));
    std::printf("    2D pair spectra alpha=0.5 vs 2.5: max difference %.3e\n", worst);
    c.require(worst <= 1e-8, "2D spectra periodic in alpha within 1e-8");
    return c.ok;
}

bool criterion_9() {
    Check c;
    std::vector<double> fermi;
    std::vector<double> half;
    for (int n : {80, 160, 320}) {
        const hardy::HardyGrid g{8.0, n};
        fermi.push_back(hardy::hardy_rayleigh_pair(1.0, g).value);
        half.push_back(hardy::hardy_rayleigh_pair(0.5, g).value);
        std::printf("    n=%d alpha=1: %.6f  alpha=0.5: %.6f\n", n, fermi.back(), half.back());
    }
    for (std::size_t i = 0; i < fermi.size(); ++i) {
        c.require(fermi[i] >= 1.8 && fermi[i] <= 2.05, "alpha=1 estimate in [1.8, 2.05]");
        if (i > 0) {
            c.require(fermi[i] < fermi[i - 1], "alpha=1 estimate decreases under refinement");
            c.require(std::abs(half[i] - 0.5) < std::abs(half[i - 1] - 0.5), "alpha=0.5 estimate approaches 0.5");
        }
    }
    const double tol = 1e-9;
    for (double a : {0.25, 0.5, 0.75, 1.0}) {
        const hardy::HardyGrid g{8.0, 40};
        const auto h = hardy::hardy_kinetic(a, g);
        const auto w = hardy::hardy_weight(g);
        double lowest = 1e300;
        for (std::uint64_t seed = 1; seed <= 50; ++seed) {
            spectra::ComplexVector v = spectra::random_unit_vector(h.dimension(), seed);
            v = 0.5 * (v + pair::reflect(v));
            lowest = std::min(lowest, hardy::rayleigh_quotient(h, v, w));
        }
        std::printf("    alpha=%g lowest random even quotient %.4f, bound %.4f\n", a, lowest, 2 * a * a);
        c.require(lowest >= 2.0 * a * a - tol, "random even quotients at least 2 alpha^2");
    }
    return c.ok;
}

spectra::SparseHermitianOperator tridiagonal(const std::vector<double>& d, double off) {
    std::vector<spectra::Triplet> t;
    const int n = static_cast<int>(d.size());
    for (int i = 0; i < n; ++i) {
        t.push_back({i, i, d[i]});
        if (i + 1 < n) {
            t.push_back({i, i + 1, off});
            t.push_back({i + 1, i, off});
        }
    }
    return spectra::SparseHermitianOperator::from_triplets(n, t);
}

bool criterion_10() {
    Check c;
    const int n = 200;
    const double h = 1.0 / (n + 1);
    const auto lap = tridiagonal(std::vector<double>(n, 2.0 / (h * h)), -1.0 / (h * h));
    const auto r = spectra::lowest_eigenpairs(lap, 6, 1e-8, 50000, 3);
    const auto want = oracle::dirichlet_laplacian_spectrum(n);
    double worst = 0.0;
    for (int j = 0; j < 6; ++j) worst = std::max(worst, std::abs(r.eigenvalues[j] - want[j]));
    std::printf("    Dirichlet Laplacian: max error %.3e\n", worst);
    c.require(r.complete() && worst <= 1e-10, "Dirichlet spectrum within 1e-10");

    const double ho = 0.01;
    const int m = static_cast<int>(std::lround(20.0 / ho)) - 1;
    std::vector<double> d(m);
    for (int i = 0; i < m; ++i) {
        const double x = -10.0 + (i + 1) * ho;
        d[i] = 2.0 / (ho * ho) + x * x;
    }
    const auto osc = spectra::lowest_eigenpairs(tridiagonal(d, -1.0 / (ho * ho)), 5, 1e-7, 200000, 1);
    double owe = 0.0;
    for (int j = 0; j < 5; ++j) owe = std::max(owe, std::abs(osc.eigenvalues[j] - (2.0 * j + 1.0)));
    std::printf("    oscillator: %.6f %.6f %.6f %.6f %.6f, max error %.3e\n", osc.eigenvalues[0], osc.eigenvalues[1],
                osc.eigenvalues[2], osc.eigenvalues[3], osc.eigenvalues[4], owe);
    c.require(osc.complete() && owe <= 1e-3, "oscillator levels within 1e-3");

    const auto p = pair::PairProblem::standard(0.5, 0.5, 40);
    pair::SolveSettings s;
    s.shift_invert = false;
    const auto a = pair::pair_eigenstates(p, s);
    const auto b = pair::pair_eigenstates(p, s);
    bool same = a.size() == b.size();
    for (std::size_t i = 0; same && i < a.size(); ++i)
        same = a[i].eigenvalue == b[i].eigenvalue &&
               std::memcmp(a[i].values.data(), b[i].values.data(), sizeof(spectra::Complex) * a[i].values.size()) == 0;
    const auto r2 = spectra::lowest_eigenpairs(lap, 6, 1e-8, 50000, 3);
    same = same && std::memcmp(r.eigenvalues.data(), r2.eigenvalues.data(), sizeof(double) * 6) == 0 &&
           r.iterations == r2.iterations;
    std::printf("    repeated solves bitwise identical: %s\n", same ? "yes" : "no");
    c.require(same, "identical seeds give bitwise-identical results");
    return c.ok;
}

const std::vector<std::pair<const char*, std::function<bool()>>> kCriteria{
    {"TG ground state and N=2 levels", criterion_1},
    {"fermionic anchor alpha=1 reduced energy 3", criterion_2},
    {"alpha-independence at eps=0.125", criterion_3},
    {"eigenfunction overlap convergence", criterion_4},
    {"splitting identity by Monte Carlo", criterion_5},
    {"gauge model pointwise identity", criterion_6},
    {"circumradius identity and collinear terms", criterion_7},
    {"Calogero closed form and periodicity contrast", criterion_8},
    {"Hardy constant estimates", criterion_9},
    {"solver certification", criterion_10},
};

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> which;
    for (int i = 1; i < argc; ++i) which.push_back(std::atoi(argv[i]));
    if (which.empty())
        for (int i = 1; i <= static_cast<int>(kCriteria.size()); ++i) which.push_back(i);
    int failed = 0;
    for (int id : which) {
        if (id < 1 || id > static_cast<int>(kCriteria.size())) {
            std::fprintf(stderr, "unknown criterion %d\n", id);
            return 2;
        }
        const auto& [name, run] = kCriteria[static_cast<std::size_t>(id - 1)];
        std::printf("criterion %d: %s\n", id, name);
        std::fflush(stdout);
        const auto t0 = Clock::now();
        bool ok = false;
        try {
            ok = run();
        } catch (const std::exception& e) {
            std::printf("    error: %s\n", e.what());
        }
        std::printf("%s %d %s (%.1f s)\n", ok ? "PASS" : "FAIL", id, name, seconds_since(t0));
        std::fflush(stdout);
        failed += ok ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
