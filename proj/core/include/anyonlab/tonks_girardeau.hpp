#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "anyonlab/oscillator.hpp"

namespace anyonlab::tonks {

inline constexpr int kMaxParticles = 12;
inline constexpr int kMaxLevelCount = 10000;

/// Strictly increasing oscillator level indices n_1 < ... < n_N.
class OccupationSet {
public:
    explicit OccupationSet(std::vector<int> levels);
    /// {0, 1, ..., n - 1}
    static OccupationSet ground(int n);

    std::span<const int> levels() const { return levels_; }
    int particles() const { return static_cast<int>(levels_.size()); }
    /// sum (2 n_i + 1)
    std::int64_t energy() const;

    friend bool operator==(const OccupationSet&, const OccupationSet&) = default;
    friend auto operator<=>(const OccupationSet&, const OccupationSet&) = default;

private:
    std::vector<int> levels_;
};

struct TgLevel {
    std::int64_t energy = 0;
    std::vector<OccupationSet> sets;  ///< every realizing occupation set, lexicographic order

    int multiplicity() const { return static_cast<int>(sets.size()); }
};

/// Distinct levels covering the lowest `count` eigenvalues counted with multiplicity.
/// The last level is always complete, so it may push the state total past `count`.
std::vector<TgLevel> tg_levels(int n_particles, int count);

/// The lowest `count` eigenvalues with multiplicity, flattened.
std::vector<std::int64_t> tg_energies(int n_particles, int count);

/// psi(x) = (N!)^{-1/2} prod_{i<j} sgn(x_j - x_i) det[v_{n_a}(x_b)].
/// Exchange-symmetric, zero on every diagonal; the global sign makes the ground
/// occupation positive on x_1 < ... < x_N.
class TgEigenstate {
public:
    explicit TgEigenstate(OccupationSet occ);

    const OccupationSet& occupations() const { return occ_; }
    double energy() const { return static_cast<double>(occ_.energy()); }
    int particles() const { return occ_.particles(); }

    double operator()(std::span<const double> x) const;

    /// Value together with d psi / d x_j for every j; gradient is of the
    /// determinant times the (locally constant) sign factor.
    double value_and_gradient(std::span<const double> x, std::span<double> grad) const;

private:
    OccupationSet occ_;
    double norm_;
    std::vector<oscillator::OscillatorMode> modes_;
};

TgEigenstate tg_eigenfunction(const OccupationSet& occ);

/// Tensor Gauss-Hermite quadrature of |psi|^2 over R^N (N <= 4).
double tg_norm_check(const OccupationSet& occ, int quadrature_degree);

/// |psi(x0 + delta, x0 - delta, rest)| / delta. With no `rest` given the remaining
/// particles sit at x0 + 1.5, x0 + 3, ... .
double diagonal_vanishing_rate(const OccupationSet& occ, double x0, double delta, std::span<const double> rest = {});

/// Determinant of a small dense matrix (row-major, n x n) by row-pivoted elimination.
double determinant(std::vector<double> a, int n);

}  // namespace anyonlab::tonks
