#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "anyonlab/geometry.hpp"
#include "anyonlab/metropolis.hpp"
#include "anyonlab/tonks_girardeau.hpp"

namespace anyonlab::vmc {

inline constexpr int kMaxParticles = 6;
inline constexpr double kDiagonalGuard = 1e-12;

/// Psi = psi_k(x_1..x_N) prod u_eps(y_j) prod_{j<k} exp(-i alpha S(x_j - x_k)).
struct AnsatzState {
    tonks::OccupationSet occupations;
    double alpha = 0.0;
    double epsilon = 1.0;

    int particles() const { return occupations.particles(); }
};

/// N e_eps + lambda_1D(occupations).
double splitting_energy(const AnsatzState& state);

/// Contributions to sum_j |D_j Psi|^2 / |Psi|^2 + V at one configuration.
struct LocalEnergy {
    double longitudinal = 0.0;  ///< sum (d_{x_j} psi / psi)^2
    double transverse = 0.0;    ///< sum (u'/u)^2
    double magnetic = 0.0;      ///< alpha^2 sum |A_j - grad_j T|^2, the gauge remainder
    double potential = 0.0;     ///< sum x_j^2 + y_j^2 / eps^2

    double total() const { return longitudinal + transverse + magnetic + potential; }
};

/// Positions as (x_1, y_1, ..., x_N, y_N). Throws DomainError within the diagonal guard band.
LocalEnergy local_energy(const AnsatzState& state, std::span<const double> positions);

struct MCEstimate {
    double mean = 0.0;
    double standard_error = 0.0;
    long samples = 0;
    std::uint64_t seed = 0;
    int chains = 0;
    double acceptance = 0.0;
    long guard_rejections = 0;
    double guard_rate = 0.0;
};

/// Metropolis estimate of <Psi|H|Psi> sampling |psi_k|^2 prod u_eps^2.
MCEstimate mc_energy(const AnsatzState& state, const mc::McSettings& settings);

/// Smooth real probe function with its gradient.
struct Probe {
    std::function<double(geometry::Point2)> value;
    std::function<geometry::Vec2(geometry::Point2)> gradient;
};

/// |(-i grad + alpha A0)(f exp(-i alpha S))|^2 - |grad f|^2 at r (x != 0).
double gauge_pointwise_check(double alpha, geometry::Point2 r, const Probe& probe);

/// Direct difference-quotient evaluation of the same energy density across the line x = 0
/// at height y, multiplied by the strip width h. Tends to 0 with h when the probe vanishes
/// on the line and grows like 1/h otherwise.
double gauge_strip_energy(double alpha, double y, double h, const Probe& probe);

}  // namespace anyonlab::vmc
