#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <functional>

#include "anyonlab/sparse.hpp"

namespace anyonlab::spectra {

/// Any Hermitian map v -> A v on C^dimension.
struct LinearMap {
    int dimension = 0;
    std::function<void(const Complex*, Complex*)> apply;
};

LinearMap as_linear_map(const SparseHermitianOperator& op);

struct LanczosOptions {
    int k = 1;
    /// Absolute residual bound ||A v - lambda v|| for unit v.
    double tol = 1e-8;
    /// Matrix-vector product budget per Krylov run.
    int max_iter = 50000;
    std::uint64_t seed = 1;
    /// Krylov basis size before a thick restart; 0 picks max(2k + 40, 64).
    int krylov_dim = 0;
    /// After convergence, search the orthogonal complement for eigenvalues that a single
    /// Krylov sequence misses (exact degeneracies) and swap them in.
    bool resolve_degeneracy = true;
    /// Optional projector applied to every new Krylov vector (e.g. onto a symmetry sector).
    /// Must commute with A.
    std::function<void(ComplexVector&)> projector;
};

struct EigenResult {
    Eigen::VectorXd eigenvalues;    ///< ascending
    Eigen::MatrixXcd eigenvectors;  ///< orthonormal columns
    Eigen::VectorXd residuals;      ///< ||A v - lambda v||, recomputed explicitly
    int iterations = 0;             ///< matrix-vector products used
    std::uint64_t seed = 0;
    int converged = 0;              ///< leading pairs meeting the tolerance
    int requested = 0;

    bool complete() const { return converged >= requested; }
};

/// Thick-restart Lanczos with full reorthogonalization for the k smallest eigenpairs.
/// Never throws on non-convergence: the result carries `converged < requested` instead.
EigenResult lowest_eigenpairs(const LinearMap& op, const LanczosOptions& options);
EigenResult lowest_eigenpairs(const SparseHermitianOperator& op, const LanczosOptions& options);

/// Same contract, iterating on -(A - shift)^{-1} through a sparse LDL^T factorization.
/// `shift` must lie below the spectrum. The options' tolerance applies to A itself; the
/// inner tolerance is tightened until the explicit residuals meet it. `iterations` counts solves.
EigenResult lowest_eigenpairs_shift_invert(const SparseHermitianOperator& op, double shift,
                                           const LanczosOptions& options);

/// Convenience overload matching the positional signature (op, k, tol, max_iter, seed).
EigenResult lowest_eigenpairs(const SparseHermitianOperator& op, int k, double tol, int max_iter, std::uint64_t seed);

}  // namespace anyonlab::spectra
