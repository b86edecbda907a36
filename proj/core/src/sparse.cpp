#include "anyonlab/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "anyonlab/errors.hpp"

namespace anyonlab::spectra {

SparseHermitianOperator SparseHermitianOperator::from_triplets(int dimension, std::vector<Triplet> triplets,
                                                               double tolerance) {
    if (dimension <= 0) throw ContractError("SparseHermitianOperator: dimension must be positive");
    for (const auto& t : triplets) {
        if (t.row < 0 || t.row >= dimension || t.col < 0 || t.col >= dimension) {
            throw ContractError("SparseHermitianOperator: entry (" + std::to_string(t.row) + ", " +
                                std::to_string(t.col) + ") out of range");
        }
    }
    std::stable_sort(triplets.begin(), triplets.end(),
                     [](const Triplet& a, const Triplet& b) { return a.row != b.row ? a.row < b.row : a.col < b.col; });

    SparseHermitianOperator op;
    op.dimension_ = dimension;
    op.row_offsets_.assign(static_cast<std::size_t>(dimension) + 1, 0);
    for (std::size_t i = 0; i < triplets.size();) {
        std::size_t j = i;
        Complex sum{};
        while (j < triplets.size() && triplets[j].row == triplets[i].row && triplets[j].col == triplets[i].col) {
            sum += triplets[j].value;
            ++j;
        }
        op.columns_.push_back(triplets[i].col);
        op.values_.push_back(sum);
        ++op.row_offsets_[triplets[i].row + 1];
        i = j;
    }
    std::partial_sum(op.row_offsets_.begin(), op.row_offsets_.end(), op.row_offsets_.begin());

    double scale = 0.0;
    for (const auto& v : op.values_) scale = std::max(scale, std::abs(v));
    const double tol = tolerance * std::max(scale, 1.0);
    for (int i = 0; i < dimension; ++i) {
        for (int p = op.row_offsets_[i]; p < op.row_offsets_[i + 1]; ++p) {
            const int j = op.columns_[p];
            if (std::abs(op.at(j, i) - std::conj(op.values_[p])) > tol) {
                throw ContractError("SparseHermitianOperator: entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                    ") has no conjugate partner");
            }
        }
    }
    const double defect = hermiticity_defect(op, 0x5eed);
    if (defect > tol * 10.0 * std::sqrt(static_cast<double>(dimension))) {
        throw ContractError("SparseHermitianOperator: randomized pairing test failed");
    }
    return op;
}

SparseHermitianOperator SparseHermitianOperator::identity(int dimension) {
    std::vector<Triplet> t;
    t.reserve(static_cast<std::size_t>(dimension));
    for (int i = 0; i < dimension; ++i) t.push_back({i, i, 1.0});
    return from_triplets(dimension, std::move(t));
}

void SparseHermitianOperator::apply(const Complex* in, Complex* out) const {
    for (int i = 0; i < dimension_; ++i) {
        Complex acc{};
        for (int p = row_offsets_[i]; p < row_offsets_[i + 1]; ++p) acc += values_[p] * in[columns_[p]];
        out[i] = acc;
    }
}

Complex SparseHermitianOperator::at(int i, int j) const {
    const auto first = columns_.begin() + row_offsets_[i];
    const auto last = columns_.begin() + row_offsets_[i + 1];
    const auto it = std::lower_bound(first, last, j);
    if (it == last || *it != j) return {};
    return values_[static_cast<std::size_t>(it - columns_.begin())];
}

SparseHermitianOperator SparseHermitianOperator::congruence(const Eigen::VectorXd& d) const {
    if (d.size() != dimension_) throw ContractError("congruence: diagonal size mismatch");
    SparseHermitianOperator out = *this;
    for (int i = 0; i < dimension_; ++i)
        for (int p = row_offsets_[i]; p < row_offsets_[i + 1]; ++p) out.values_[p] *= d[i] * d[columns_[p]];
    return out;
}

double SparseHermitianOperator::gershgorin_bound() const {
    double bound = 0.0;
    for (int i = 0; i < dimension_; ++i) {
        double s = 0.0;
        for (int p = row_offsets_[i]; p < row_offsets_[i + 1]; ++p) s += std::abs(values_[p]);
        bound = std::max(bound, s);
    }
    return bound;
}

ComplexVector matvec(const SparseHermitianOperator& op, const ComplexVector& v) {
    if (v.size() != op.dimension()) {
        throw ContractError("matvec: vector of size " + std::to_string(v.size()) + " for operator of dimension " +
                            std::to_string(op.dimension()));
    }
    ComplexVector y(op.dimension());
    op.apply(v.data(), y.data());
    return y;
}

ComplexVector random_unit_vector(int dimension, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    ComplexVector v(dimension);
    for (int i = 0; i < dimension; ++i) {
        const double re = normal(rng);
        const double im = normal(rng);
        v[i] = {re, im};
    }
    v.normalize();
    return v;
}

double hermiticity_defect(const SparseHermitianOperator& op, std::uint64_t seed, int trials) {
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        const ComplexVector u = random_unit_vector(op.dimension(), seed + 2 * t);
        const ComplexVector v = random_unit_vector(op.dimension(), seed + 2 * t + 1);
        const Complex lhs = u.dot(matvec(op, v));  // Eigen dot conjugates the first argument
        const Complex rhs = std::conj(v.dot(matvec(op, u)));
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

}  // namespace anyonlab::spectra

namespace anyonlab::spectra {

Eigen::SparseMatrix<Complex> to_eigen(const SparseHermitianOperator& op, Complex shift) {
    const int n = op.dimension();
    std::vector<Eigen::Triplet<Complex>> trip;
    trip.reserve(op.nonzeros() + static_cast<std::size_t>(n));
    const auto rows = op.row_offsets();
    const auto cols = op.columns();
    const auto vals = op.values();
    for (int r = 0; r < n; ++r)
        for (int k = rows[r]; k < rows[r + 1]; ++k) trip.emplace_back(r, cols[k], vals[k]);
    if (shift != Complex(0.0))
        for (int r = 0; r < n; ++r) trip.emplace_back(r, r, -shift);
    Eigen::SparseMatrix<Complex> m(n, n);
    m.setFromTriplets(trip.begin(), trip.end());
    return m;
}

}  // namespace anyonlab::spectra
