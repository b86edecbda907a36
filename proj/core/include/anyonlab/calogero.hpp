#pragma once

namespace anyonlab::calogero {

/// H = sum (p_j^2 + x_j^2) + g/2 sum_{j != k} (x_j - x_k)^{-2}, with g = 2 alpha^2 coming
/// from the ordered-pair sum of the reduced classical Hamilton function.
struct CalogeroModel {
    int particles = 1;
    double alpha = 0.0;

    double pair_coupling() const { return 2.0 * alpha * alpha; }
    /// Hard-core root of lambda (lambda - 1) = alpha^2, lambda >= 1.
    double lambda() const;
    /// N + lambda N (N - 1)
    double ground_energy() const;
};

double calogero_lambda(double alpha);
double calogero_ground_energy(int n_particles, double alpha);

/// Radial discretization for the relative pair problem. The grid is uniform in
/// t = log r on [log r_min, log r_max] with `points` interior nodes.
struct RadialGrid {
    double r_min = 1e-6;
    double r_max = 14.0;
    int points = 4000;
};

struct RadialResult {
    double energy = 0.0;          ///< Richardson-extrapolated lowest eigenvalue
    double coarse = 0.0;          ///< value on the given grid
    double fine = 0.0;            ///< value on the grid with halved log spacing
    double error_estimate = 0.0;  ///< |fine - energy|, a-posteriori
};

/// Lowest eigenvalue of -2 d^2/dr^2 + r^2/2 + 2 alpha^2 / r^2 on r > 0 with vanishing
/// boundary values. Equals 1 + 2 lambda.
RadialResult calogero_pair_relative(double alpha, const RadialGrid& grid = {});

/// E(2, alpha) - E(2, alpha mod 2).
double periodicity_defect(double alpha);

}  // namespace anyonlab::calogero
