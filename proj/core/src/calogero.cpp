#include "anyonlab/calogero.hpp"

#include <cmath>
#include <vector>

#include "anyonlab/errors.hpp"

namespace anyonlab::calogero {

double calogero_lambda(double alpha) { return 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * alpha * alpha)); }

double calogero_ground_energy(int n_particles, double alpha) {
    if (n_particles < 1) throw ContractError("calogero_ground_energy: N must be positive");
    const double n = n_particles;
    return n + calogero_lambda(alpha) * n * (n - 1.0);
}

double CalogeroModel::lambda() const { return calogero_lambda(alpha); }
double CalogeroModel::ground_energy() const { return calogero_ground_energy(particles, alpha); }

namespace {

// With r = e^t and f = r^{1/2} g the radial problem -f'' + (alpha^2/r^2 + r^2/4) f = mu f
// becomes -g'' + (1/4 + alpha^2 + e^{4t}/4) g = mu e^{2t} g, a symmetric tridiagonal
// pencil A - mu B with diagonal B > 0. Sylvester inertia of A - mu B counts eigenvalues below mu.
struct Pencil {
    std::vector<double> diag;
    std::vector<double> mass;
    double off = 0.0;

    int count_below(double mu) const {
        int negatives = 0;
        double d = 0.0;
        for (std::size_t i = 0; i < diag.size(); ++i) {
            const double a = diag[i] - mu * mass[i];
            d = (i == 0) ? a : a - off * off / d;
            if (d == 0.0) d = -1e-300;
            if (d < 0.0) ++negatives;
        }
        return negatives;
    }
};

double lowest_pencil_eigenvalue(double alpha, double t_min, double t_max, int points) {
    const double h = (t_max - t_min) / (points + 1);
    Pencil p;
    p.diag.resize(points);
    p.mass.resize(points);
    p.off = -1.0 / (h * h);
    for (int i = 0; i < points; ++i) {
        const double t = t_min + (i + 1) * h;
        p.diag[i] = 2.0 / (h * h) + 0.25 + alpha * alpha + 0.25 * std::exp(4.0 * t);
        p.mass[i] = std::exp(2.0 * t);
    }
    double lo = 0.0;
    double hi = 1.0;
    while (p.count_below(hi) < 1) hi *= 2.0;
    for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (p.count_below(mid) >= 1 ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

RadialResult calogero_pair_relative(double alpha, const RadialGrid& grid) {
    if (alpha < 0.0) throw DomainError("calogero_pair_relative: alpha must be non-negative");
    if (!(grid.r_min > 0.0 && grid.r_max > grid.r_min) || grid.points < 16) {
        throw ConfigurationError("calogero_pair_relative: invalid radial grid");
    }
    const double t_min = std::log(grid.r_min);
    const double t_max = std::log(grid.r_max);
    // mu is the eigenvalue of -f'' + (alpha^2/r^2 + r^2/4) f; the pair operator is twice that.
    RadialResult res;
    res.coarse = 2.0 * lowest_pencil_eigenvalue(alpha, t_min, t_max, grid.points);
    res.fine = 2.0 * lowest_pencil_eigenvalue(alpha, t_min, t_max, 2 * grid.points + 1);
    res.energy = res.fine + (res.fine - res.coarse) / 3.0;
    res.error_estimate = std::abs(res.fine - res.energy);
    return res;
}

double periodicity_defect(double alpha) {
    double reduced = std::fmod(alpha, 2.0);
    if (reduced < 0.0) reduced += 2.0;
    return calogero_ground_energy(2, alpha) - calogero_ground_energy(2, reduced);
}

}  // namespace anyonlab::calogero
