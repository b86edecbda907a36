#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace anyonlab::spectra {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;

struct Triplet {
    int row = 0;
    int col = 0;
    Complex value;
};

/// Compressed-row complex Hermitian matrix. Construction verifies A = A^dagger
/// structurally and by a seeded randomized pairing test.
class SparseHermitianOperator {
public:
    SparseHermitianOperator() = default;

    /// Duplicate entries are summed. Throws ContractError when the result is not Hermitian
    /// within `tolerance` (relative to the largest entry).
    static SparseHermitianOperator from_triplets(int dimension, std::vector<Triplet> triplets,
                                                 double tolerance = 1e-12);

    static SparseHermitianOperator identity(int dimension);

    int dimension() const { return dimension_; }
    std::size_t nonzeros() const { return values_.size(); }

    std::span<const int> row_offsets() const { return row_offsets_; }
    std::span<const int> columns() const { return columns_; }
    std::span<const Complex> values() const { return values_; }

    /// out = A in. Rows are processed in order with a fixed summation order.
    void apply(const Complex* in, Complex* out) const;

    /// Entry (i, j), zero when not stored.
    Complex at(int i, int j) const;

    /// D A D for a real diagonal D.
    SparseHermitianOperator congruence(const Eigen::VectorXd& diagonal) const;

    /// Largest Gershgorin row sum; an upper bound on the spectral radius.
    double gershgorin_bound() const;

private:
    int dimension_ = 0;
    std::vector<int> row_offsets_;
    std::vector<int> columns_;
    std::vector<Complex> values_;
};

/// Column-major Eigen copy of A - shift I, for direct factorizations.
Eigen::SparseMatrix<Complex> to_eigen(const SparseHermitianOperator& op, Complex shift = 0.0);

ComplexVector matvec(const SparseHermitianOperator& op, const ComplexVector& v);

/// max |<u, A v> - conj(<v, A u>)| over `trials` seeded random unit pairs.
double hermiticity_defect(const SparseHermitianOperator& op, std::uint64_t seed, int trials = 3);

/// Seeded complex Gaussian vector, normalized.
ComplexVector random_unit_vector(int dimension, std::uint64_t seed);

}  // namespace anyonlab::spectra
