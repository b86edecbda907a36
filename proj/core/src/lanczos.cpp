#include "anyonlab/lanczos.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SparseCholesky>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>

#include "anyonlab/errors.hpp"

namespace anyonlab::spectra {

LinearMap as_linear_map(const SparseHermitianOperator& op) {
    return {op.dimension(), [&op](const Complex* in, Complex* out) { op.apply(in, out); }};
}

namespace {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXd;

struct KrylovRun {
    VectorXd values;
    MatrixXcd vectors;
    VectorXd estimates;  // Ritz residual estimates
    int matvecs = 0;
    int converged = 0;
};

// Removes components along `locked` and the first `cols` columns of `basis`, twice.
void orthogonalize(ComplexVector& w, const MatrixXcd& locked, const MatrixXcd& basis, int cols) {
    for (int pass = 0; pass < 2; ++pass) {
        if (locked.cols() > 0) w.noalias() -= locked * (locked.adjoint() * w);
        if (cols > 0) w.noalias() -= basis.leftCols(cols) * (basis.leftCols(cols).adjoint() * w);
    }
}

// Empty when the (projected) space is exhausted by `locked` and the basis.
std::optional<ComplexVector> try_fresh_vector(int n, std::uint64_t seed, const LanczosOptions& opt,
                                              const MatrixXcd& locked, const MatrixXcd& basis, int cols) {
    for (std::uint64_t attempt = 0; attempt < 8; ++attempt) {
        ComplexVector v = random_unit_vector(n, seed + 0x9e3779b97f4a7c15ULL * attempt);
        if (opt.projector) opt.projector(v);
        orthogonalize(v, locked, basis, cols);
        if (opt.projector) opt.projector(v);
        const double nv = v.norm();
        if (nv > 1e-8) return ComplexVector(v / nv);
    }
    return std::nullopt;
}

ComplexVector fresh_vector(int n, std::uint64_t seed, const LanczosOptions& opt, const MatrixXcd& locked,
                           const MatrixXcd& basis, int cols) {
    auto v = try_fresh_vector(n, seed, opt, locked, basis, cols);
    if (!v) throw SolverError("lanczos: could not generate a start vector outside the current subspace");
    return *v;
}

KrylovRun thick_restart(const LinearMap& op, int k, const LanczosOptions& opt, const MatrixXcd& locked,
                        std::uint64_t seed) {
    const int n = op.dimension;
    const int available = n - static_cast<int>(locked.cols());
    if (k > available) throw ContractError("lanczos: more eigenpairs requested than the dimension allows");
    int m = opt.krylov_dim > 0 ? opt.krylov_dim : std::max(2 * k + 40, 64);
    m = std::min(m, available);
    m = std::max(m, std::min(2 * k + 2, available));

    MatrixXcd basis(n, m + 1);
    MatrixXd t = MatrixXd::Zero(m, m);
    basis.col(0) = fresh_vector(n, seed, opt, locked, basis, 0);

    KrylovRun run;
    int start = 0;
    double beta_last = 0.0;
    ComplexVector w(n);
    std::uint64_t refresh = 1;

    while (true) {
        int size = m;  // shrinks when the projected space is exhausted
        for (int j = start; j < m; ++j) {
            op.apply(basis.col(j).data(), w.data());
            ++run.matvecs;
            if (opt.projector) opt.projector(w);
            t(j, j) = basis.col(j).dot(w).real();
            orthogonalize(w, locked, basis, j + 1);
            double beta = w.norm();
            const double scale = std::max(std::abs(t(j, j)), 1.0);
            if (beta < 1e-12 * scale) {
                // Invariant subspace: continue with a fresh direction, decoupled.
                beta = 0.0;
                auto next = j + 1 < available ? try_fresh_vector(n, seed + 7919 * refresh++, opt, locked, basis, j + 1)
                                              : std::nullopt;
                if (!next) {
                    size = j + 1;
                    break;
                }
                basis.col(j + 1) = *next;
            } else {
                basis.col(j + 1) = w / beta;
            }
            if (j + 1 < m) {
                t(j + 1, j) = beta;
                t(j, j + 1) = beta;
            } else {
                beta_last = beta;
            }
        }

        if (size < m) {
            // Invariant subspace with nothing left to add: the Ritz pairs are exact.
            if (size < k) throw ContractError("lanczos: the projected space holds fewer than k eigenpairs");
            Eigen::SelfAdjointEigenSolver<MatrixXd> eig(t.topLeftCorner(size, size));
            run.values = eig.eigenvalues().head(k);
            run.vectors = basis.leftCols(size) * eig.eigenvectors().leftCols(k).cast<Complex>();
            run.estimates = VectorXd::Zero(k);
            run.converged = k;
            return run;
        }

        Eigen::SelfAdjointEigenSolver<MatrixXd> eig(t);
        const VectorXd& theta = eig.eigenvalues();
        const MatrixXd& s = eig.eigenvectors();
        VectorXd est(m);
        for (int i = 0; i < m; ++i) est[i] = std::abs(beta_last * s(m - 1, i));

        int conv = 0;
        while (conv < k && est[conv] <= 0.5 * opt.tol) ++conv;
        const bool exhausted = m == available;  // the full space: the Ritz pairs are exact
        if (conv == k || exhausted || run.matvecs >= opt.max_iter) {
            run.values = theta.head(k);
            run.vectors = basis.leftCols(m) * s.leftCols(k).cast<Complex>();
            run.estimates = est.head(k);
            run.converged = exhausted ? k : conv;
            return run;
        }

        const int keep = std::min(m - 2, std::max(k + (m - k) / 2, conv + 1));
        const MatrixXcd kept = basis.leftCols(m) * s.leftCols(keep).cast<Complex>();
        basis.leftCols(keep) = kept;
        basis.col(keep) = basis.col(m);
        t.setZero();
        for (int i = 0; i < keep; ++i) {
            t(i, i) = theta[i];
            t(i, keep) = t(keep, i) = beta_last * s(m - 1, i);
        }
        start = keep;
    }
}

}  // namespace

EigenResult lowest_eigenpairs(const LinearMap& op, const LanczosOptions& options) {
    if (options.k < 1) throw ContractError("lowest_eigenpairs: k must be positive");
    if (!(options.tol > 0.0)) throw ContractError("lowest_eigenpairs: tol must be positive");
    if (options.k > op.dimension) throw ContractError("lowest_eigenpairs: k exceeds the dimension");

    const int k = options.k;
    KrylovRun run = thick_restart(op, k, options, MatrixXcd(op.dimension, 0), options.seed);
    int matvecs = run.matvecs;
    VectorXd values = run.values;
    MatrixXcd vectors = run.vectors;
    int converged = run.converged;

    if (options.resolve_degeneracy && converged == k && k < op.dimension) {
        // Lowest eigenpair of A restricted to the complement of the current set; anything
        // below the current k-th value was missed and replaces it.
        const double cluster = 10.0 * options.tol;
        for (int probe = 0; probe < k; ++probe) {
            KrylovRun extra = thick_restart(op, 1, options, vectors, options.seed + 1000003ULL * (probe + 1));
            matvecs += extra.matvecs;
            if (extra.converged < 1 || !(extra.values[0] < values[k - 1] - cluster)) break;
            vectors.col(k - 1) = extra.vectors.col(0);
            values[k - 1] = extra.values[0];
            std::vector<int> order(static_cast<std::size_t>(k));
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return values[a] < values[b]; });
            VectorXd v2(k);
            MatrixXcd x2(op.dimension, k);
            for (int i = 0; i < k; ++i) {
                v2[i] = values[order[i]];
                x2.col(i) = vectors.col(order[i]);
            }
            values = v2;
            vectors = x2;
        }
    }

    EigenResult res;
    res.requested = k;
    res.seed = options.seed;
    res.iterations = matvecs;
    res.eigenvalues = values;
    res.eigenvectors = vectors;
    res.residuals.resize(k);
    ComplexVector av(op.dimension);
    for (int i = 0; i < k; ++i) {
        op.apply(vectors.col(i).data(), av.data());
        res.residuals[i] = (av - values[i] * vectors.col(i)).norm();
    }
    res.converged = 0;
    while (res.converged < std::min(converged, k) && res.residuals[res.converged] <= options.tol) ++res.converged;
    return res;
}

EigenResult lowest_eigenpairs(const SparseHermitianOperator& op, const LanczosOptions& options) {
    return lowest_eigenpairs(as_linear_map(op), options);
}

EigenResult lowest_eigenpairs_shift_invert(const SparseHermitianOperator& op, double shift,
                                           const LanczosOptions& options) {
    const int n = op.dimension();
    const int k = options.k;
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<Complex>> ldlt(to_eigen(op, shift));
    if (ldlt.info() != Eigen::Success) throw SolverError("shift-invert: factorization failed");
    const LinearMap inv{n, [&ldlt, n](const Complex* in, Complex* out) {
                            Eigen::Map<const ComplexVector> x(in, n);
                            Eigen::Map<ComplexVector> y(out, n);
                            y = -ldlt.solve(x);
                        }};

    LanczosOptions inner = options;
    inner.tol = 1e-2 * options.tol;
    EigenResult res;
    res.requested = k;
    res.seed = options.seed;
    for (int pass = 0; pass < 4; ++pass) {
        const EigenResult r = lowest_eigenpairs(inv, inner);
        res.iterations += r.iterations;

        // Rayleigh-Ritz for A on the converged subspace.
        const MatrixXcd& v = r.eigenvectors;
        MatrixXcd av(n, k);
        for (int i = 0; i < k; ++i) op.apply(v.col(i).data(), av.col(i).data());
        MatrixXcd g = v.adjoint() * av;
        g = 0.5 * (g + g.adjoint()).eval();
        Eigen::SelfAdjointEigenSolver<MatrixXcd> eig(g);
        res.eigenvalues = eig.eigenvalues();
        res.eigenvectors = v * eig.eigenvectors();
        const MatrixXcd aw = av * eig.eigenvectors();
        res.residuals.resize(k);
        double worst = 0.0;
        for (int i = 0; i < k; ++i) {
            res.residuals[i] = (aw.col(i) - res.eigenvalues[i] * res.eigenvectors.col(i)).norm();
            worst = std::max(worst, res.residuals[i]);
        }
        res.converged = 0;
        while (res.converged < std::min(r.converged, k) && res.residuals[res.converged] <= options.tol) ++res.converged;
        if (res.complete() || r.converged < k) break;
        inner.tol *= std::max(1e-4, 0.1 * options.tol / worst);
        if (inner.tol < 1e-15) break;
    }
    return res;
}

EigenResult lowest_eigenpairs(const SparseHermitianOperator& op, int k, double tol, int max_iter,
                              std::uint64_t seed) {
    LanczosOptions opt;
    opt.k = k;
    opt.tol = tol;
    opt.max_iter = max_iter;
    opt.seed = seed;
    return lowest_eigenpairs(op, opt);
}

}  // namespace anyonlab::spectra
