#include "anyonlab/hardy.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "anyonlab/errors.hpp"
#include "anyonlab/geometry.hpp"
#include "anyonlab/lanczos.hpp"

namespace anyonlab::hardy {

using spectra::Complex;
using spectra::ComplexVector;

std::string_view method_name(Method m) {
    switch (m) {
        case Method::AnalyticPair: return "analytic-pair";
        case Method::RayleighGrid: return "rayleigh-grid";
        case Method::VariationalUpper: return "variational-upper";
    }
    return "unknown";
}

double hardy_pair_analytic(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("hardy_pair_analytic: alpha must lie in [0, 1]");
    double best = std::numeric_limits<double>::infinity();
    for (int q = -4; q <= 4; q += 2) best = std::min(best, (q + alpha) * (q + alpha));
    return 2.0 * best;
}

namespace {

pair::PairProblem as_pair(double alpha, const HardyGrid& g) {
    if (g.n % 2 != 0) throw ConfigurationError("HardyGrid: n must be even so the flux sits at a plaquette centre");
    pair::PairProblem p;
    p.alpha = alpha;
    p.epsilon = 1.0;
    p.lx = p.ly = g.box;
    p.nx = p.ny = g.n;
    return p;
}

}  // namespace

spectra::SparseHermitianOperator hardy_kinetic(double alpha, const HardyGrid& grid) {
    return pair::build_relative_hamiltonian(as_pair(alpha, grid), false);
}

Eigen::VectorXd hardy_weight(const HardyGrid& grid) {
    const pair::Grid2D g = as_pair(0.0, grid).grid();
    Eigen::VectorXd w(g.size());
    for (int i = 0; i < g.nx; ++i)
        for (int j = 0; j < g.ny; ++j) w[g.index(i, j)] = 1.0 / geometry::norm2(g.point(i, j));
    return w;
}

double rayleigh_quotient(const spectra::SparseHermitianOperator& h, const ComplexVector& v,
                         const Eigen::VectorXd& weight) {
    if (v.size() != h.dimension() || weight.size() != h.dimension()) {
        throw ContractError("rayleigh_quotient: dimension mismatch");
    }
    const double num = v.dot(spectra::matvec(h, v)).real();
    const double den = v.cwiseAbs2().dot(weight);
    if (!(den > 0.0)) throw DomainError("rayleigh_quotient: zero vector");
    return num / den;
}

HardyEstimate hardy_rayleigh_pair(double alpha, const HardyGrid& grid, const HardySolve& solve) {
    const pair::PairProblem p = as_pair(alpha, grid);
    const auto h = pair::build_relative_hamiltonian(p, false);
    const Eigen::VectorXd w = hardy_weight(grid);
    const Eigen::VectorXd d = w.cwiseSqrt().cwiseInverse();
    const auto a = h.congruence(d);

    spectra::LanczosOptions opt;
    opt.k = 1;
    opt.tol = solve.tol;
    opt.max_iter = solve.max_iter;
    opt.seed = solve.seed;
    opt.resolve_degeneracy = false;
    opt.projector = [](ComplexVector& v) { pair::project_parity(v, 1); };
    const auto res = spectra::lowest_eigenpairs_shift_invert(a, 0.0, opt);
    if (!res.complete()) throw SolverError("hardy_rayleigh_pair: eigensolver did not converge");

    ComplexVector g = res.eigenvectors.col(0);
    const ComplexVector ag = spectra::matvec(a, g);
    const double mu = g.dot(ag).real() / g.squaredNorm();

    HardyEstimate e;
    e.alpha = alpha;
    e.particles = 2;
    e.method = Method::RayleighGrid;
    e.value = mu;
    e.n = grid.n;
    e.h = 2.0 * grid.box / (grid.n + 1);
    e.box = grid.box;
    e.residual = (ag - mu * g).norm() / g.norm();
    return e;
}

HardyEstimate hardy_upper_bound(int particles, double alpha, const TrialFamily& trial, const mc::McSettings& settings) {
    if (particles < 2 || particles > 6) throw CapacityError("hardy_upper_bound: 2 to 6 particles supported");
    if (!(trial.beta > 0.0) || !(trial.width > 0.0)) throw DomainError("hardy_upper_bound: beta and width must be positive");
    const int np = particles;
    const double beta = trial.beta;
    const double w2 = trial.width * trial.width;

    mc::MetropolisProblem prob;
    prob.dimension = 2 * np;
    prob.observables = 2;
    prob.scales.assign(static_cast<std::size_t>(2 * np), trial.width);
    prob.initial = [np, &trial](int chain) {
        std::vector<double> x(static_cast<std::size_t>(2 * np));
        const double turn = 0.37 * chain;
        for (int j = 0; j < np; ++j) {
            const double t = 2.0 * std::numbers::pi * j / np + turn;
            x[2 * j] = trial.width * std::cos(t);
            x[2 * j + 1] = trial.width * std::sin(t);
        }
        return x;
    };
    prob.log_density = [np, beta, w2](std::span<const double> x) {
        double lp = 0.0;
        for (int j = 0; j < np; ++j) {
            lp -= (x[2 * j] * x[2 * j] + x[2 * j + 1] * x[2 * j + 1]) / w2;
            for (int k = j + 1; k < np; ++k) {
                const double dx = x[2 * j] - x[2 * k];
                const double dy = x[2 * j + 1] - x[2 * k + 1];
                const double r2 = dx * dx + dy * dy;
                if (r2 == 0.0) return -std::numeric_limits<double>::infinity();
                lp += beta * std::log(r2);
            }
        }
        return lp;
    };
    prob.measure = [np, beta, w2, alpha](std::span<const double> x, std::span<double> out) {
        double kinetic = 0.0;
        double weight = 0.0;
        for (int j = 0; j < np; ++j) {
            const geometry::Point2 pj{x[2 * j], x[2 * j + 1]};
            geometry::Vec2 glog = (-1.0 / w2) * pj;
            geometry::Vec2 a{};
            for (int k = 0; k < np; ++k) {
                if (k == j) continue;
                const geometry::Point2 d = pj - geometry::Point2{x[2 * k], x[2 * k + 1]};
                const double r2 = geometry::norm2(d);
                glog = glog + (beta / r2) * d;
                a = a + (1.0 / r2) * geometry::perp(d);
                if (k > j) weight += 1.0 / r2;
            }
            // Phi is real, so |D_j Phi|^2 / Phi^2 = |grad_j log Phi|^2 + alpha^2 |A_j|^2.
            kinetic += geometry::norm2(glog) + alpha * alpha * geometry::norm2(a);
        }
        out[0] = kinetic;
        out[1] = weight;
    };

    const auto chains = mc::run_chains(prob, settings);
    const auto est = mc::ratio_across_chains(chains, 0, 1);
    if (!std::isfinite(est.mean) || !std::isfinite(est.standard_error)) {
        throw SolverError("hardy_upper_bound: Monte-Carlo estimate is not finite");
    }
    HardyEstimate e;
    e.alpha = alpha;
    e.particles = np;
    e.method = Method::VariationalUpper;
    e.value = est.mean;
    e.standard_error = est.standard_error;
    e.samples = settings.samples();
    return e;
}

HardyEstimate hardy_upper_bound_N3(double alpha, const TrialFamily& trial, const mc::McSettings& settings) {
    return hardy_upper_bound(3, alpha, trial, settings);
}

}  // namespace anyonlab::hardy
