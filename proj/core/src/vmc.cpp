#include "anyonlab/vmc.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <vector>

#include "anyonlab/errors.hpp"
#include "anyonlab/oscillator.hpp"

namespace anyonlab::vmc {

using geometry::Point2;
using geometry::Vec2;

double splitting_energy(const AnsatzState& state) {
    return state.particles() / state.epsilon + static_cast<double>(state.occupations.energy());
}

namespace {

Point2 particle(std::span<const double> pos, int j) { return {pos[2 * j], pos[2 * j + 1]}; }

bool inside_guard(std::span<const double> pos, int n) {
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
            if (std::abs(pos[2 * j] - pos[2 * k]) < kDiagonalGuard) return true;
    return false;
}

// Inverse of the standard normal CDF by bisection on erfc.
double normal_quantile(double p) {
    double lo = -10.0;
    double hi = 10.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (0.5 * std::erfc(-mid / std::sqrt(2.0)) < p ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

LocalEnergy local_energy_of(const AnsatzState& state, const tonks::TgEigenstate& psi, std::span<const double> pos) {
    const int n = state.particles();
    std::vector<double> xs(static_cast<std::size_t>(n));
    std::vector<double> grad(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) xs[j] = pos[2 * j];
    const double value = psi.value_and_gradient(xs, grad);
    const oscillator::TransverseGround u(state.epsilon);

    std::vector<Point2> pts(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) pts[j] = particle(pos, j);

    LocalEnergy e;
    for (int j = 0; j < n; ++j) {
        // D_j Psi / Psi = -i grad_j log|Phi| + alpha (A_j - grad_j T), T = sum_{j<k} S(x_j - x_k).
        Vec2 grad_t{};
        for (int k = 0; k < n; ++k)
            if (k != j) grad_t = grad_t + geometry::grad_phase_S(pts[j] - pts[k]);
        const Vec2 a = geometry::pair_vector_potential(pts, static_cast<std::size_t>(j));
        const double lx = grad[j] / value;
        const double ly = u.log_derivative(pts[j].y);
        const std::complex<double> dx{state.alpha * (a.x - grad_t.x), -lx};
        const std::complex<double> dy{state.alpha * (a.y - grad_t.y), -ly};
        e.longitudinal += lx * lx;
        e.transverse += ly * ly;
        e.magnetic += std::norm(dx) + std::norm(dy) - lx * lx - ly * ly;
        e.potential += pts[j].x * pts[j].x + pts[j].y * pts[j].y / (state.epsilon * state.epsilon);
    }
    return e;
}

}  // namespace

LocalEnergy local_energy(const AnsatzState& state, std::span<const double> pos) {
    const int n = state.particles();
    if (static_cast<int>(pos.size()) != 2 * n) throw ContractError("local_energy: expected 2N coordinates");
    if (inside_guard(pos, n)) throw DomainError("local_energy: configuration inside the diagonal guard band");
    return local_energy_of(state, tonks::TgEigenstate(state.occupations), pos);
}

MCEstimate mc_energy(const AnsatzState& state, const mc::McSettings& settings) {
    const int n = state.particles();
    if (n > kMaxParticles) throw CapacityError("mc_energy: at most " + std::to_string(kMaxParticles) + " particles");
    const tonks::TgEigenstate psi(state.occupations);
    const double eps = state.epsilon;

    mc::MetropolisProblem prob;
    prob.dimension = 2 * n;
    prob.observables = 1;
    prob.scales.resize(static_cast<std::size_t>(2 * n));
    for (int j = 0; j < n; ++j) {
        prob.scales[2 * j] = 1.0;
        prob.scales[2 * j + 1] = std::sqrt(eps);
    }
    prob.initial = [n](int) {
        std::vector<double> x(static_cast<std::size_t>(2 * n), 0.0);
        // |v_0|^2 has standard deviation 1/sqrt(2).
        for (int j = 0; j < n; ++j) x[2 * j] = normal_quantile((j + 0.5) / n) / std::sqrt(2.0);
        return x;
    };
    prob.log_density = [&psi, n, eps](std::span<const double> pos) {
        if (inside_guard(pos, n)) return -std::numeric_limits<double>::infinity();
        std::vector<double> xs(static_cast<std::size_t>(n));
        double ysq = 0.0;
        for (int j = 0; j < n; ++j) {
            xs[j] = pos[2 * j];
            ysq += pos[2 * j + 1] * pos[2 * j + 1];
        }
        const double v = psi(xs);
        if (v == 0.0) return -std::numeric_limits<double>::infinity();
        return 2.0 * std::log(std::abs(v)) - ysq / eps;
    };
    prob.measure = [&state, &psi](std::span<const double> pos, std::span<double> out) {
        out[0] = local_energy_of(state, psi, pos).total();
    };

    const auto chains = mc::run_chains(prob, settings);
    const auto est = mc::across_chains(chains, 0);
    MCEstimate r;
    r.mean = est.mean;
    r.standard_error = est.standard_error;
    r.samples = settings.samples();
    r.seed = settings.seed;
    r.chains = settings.chains;
    double acc = 0.0;
    for (const auto& c : chains) {
        acc += c.acceptance;
        r.guard_rejections += c.guard_rejections;
    }
    r.acceptance = acc / static_cast<double>(chains.size());
    r.guard_rate = static_cast<double>(r.guard_rejections) / static_cast<double>(r.samples);
    return r;
}

namespace {

std::complex<double> gauged(double alpha, Point2 r, const Probe& probe) {
    return std::polar(probe.value(r), -alpha * geometry::phase_S(r));
}

}  // namespace

double gauge_pointwise_check(double alpha, Point2 r, const Probe& probe) {
    if (r.x == 0.0) throw DomainError("gauge_pointwise_check: point on the discontinuity line x = 0");
    using C = std::complex<double>;
    const double f = probe.value(r);
    const Vec2 gf = probe.gradient(r);
    const Vec2 gs = geometry::grad_phase_S(r);
    const Vec2 a0 = geometry::vector_potential_A0(r);
    const C phase = std::polar(1.0, -alpha * geometry::phase_S(r));
    // grad (f e^{-i alpha S}) by the product rule, then apply -i grad + alpha A0.
    const C dx = phase * C(gf.x, -alpha * f * gs.x);
    const C dy = phase * C(gf.y, -alpha * f * gs.y);
    const C cx = C(0.0, -1.0) * dx + alpha * a0.x * f * phase;
    const C cy = C(0.0, -1.0) * dy + alpha * a0.y * f * phase;
    return std::norm(cx) + std::norm(cy) - geometry::norm2(gf);
}

double gauge_strip_energy(double alpha, double y, double h, const Probe& probe) {
    if (!(h > 0.0)) throw DomainError("gauge_strip_energy: h must be positive");
    const Point2 right{0.5 * h, y};
    const Point2 left{-0.5 * h, y};
    const std::complex<double> jump = (gauged(alpha, right, probe) - gauged(alpha, left, probe)) / h;
    const double plain = (probe.value(right) - probe.value(left)) / h;
    return h * (std::norm(jump) - plain * plain);
}

}  // namespace anyonlab::vmc
