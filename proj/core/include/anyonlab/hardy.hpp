#pragma once

#include <cstdint>
#include <string_view>

#include "anyonlab/metropolis.hpp"
#include "anyonlab/pair.hpp"
#include "anyonlab/sparse.hpp"

namespace anyonlab::hardy {

enum class Method { AnalyticPair, RayleighGrid, VariationalUpper };

std::string_view method_name(Method m);

struct HardyEstimate {
    double alpha = 0.0;
    int particles = 2;
    double value = 0.0;
    Method method = Method::AnalyticPair;
    double standard_error = 0.0;
    // resolution metadata (grid estimates)
    int n = 0;
    double h = 0.0;
    double box = 0.0;
    double residual = 0.0;
    long samples = 0;
};

/// 2 min_{q even} (q + alpha)^2, the best pair constant in the bosonic sector. alpha in [0, 1].
double hardy_pair_analytic(double alpha);

/// Square trap-free grid [-box, box]^2 with n x n nodes (n even).
struct HardyGrid {
    double box = 8.0;
    int n = 160;
};

struct HardySolve {
    double tol = 1e-9;
    int max_iter = 20000;
    std::uint64_t seed = 1;
};

/// Kinetic pair operator 2 (-i grad + alpha A0)^2 on the grid, Dirichlet walls.
spectra::SparseHermitianOperator hardy_kinetic(double alpha, const HardyGrid& grid);

/// |r|^{-2} at every node.
Eigen::VectorXd hardy_weight(const HardyGrid& grid);

/// <v, H v> / <v, W v> for a diagonal weight W.
double rayleigh_quotient(const spectra::SparseHermitianOperator& h, const spectra::ComplexVector& v,
                         const Eigen::VectorXd& weight);

/// Smallest even-sector generalized eigenvalue of H v = mu W v, via the symmetrized
/// operator |r| H |r| and a Cholesky-based inverse iteration.
HardyEstimate hardy_rayleigh_pair(double alpha, const HardyGrid& grid, const HardySolve& solve = {});

/// Trial state prod_{j<k} |x_j - x_k|^beta exp(-sum |x_j|^2 / (2 width^2)).
struct TrialFamily {
    double beta = 1.5;
    double width = 1.0;
};

/// Monte-Carlo quotient sum_j <|D_j Phi|^2> / sum_{j<k} <|Phi|^2 / |x_j - x_k|^2>, an upper
/// bound on the N-particle constant.
HardyEstimate hardy_upper_bound(int particles, double alpha, const TrialFamily& trial, const mc::McSettings& settings);

HardyEstimate hardy_upper_bound_N3(double alpha, const TrialFamily& trial, const mc::McSettings& settings);

}  // namespace anyonlab::hardy
