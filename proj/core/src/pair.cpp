#include "anyonlab/pair.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "anyonlab/errors.hpp"

namespace anyonlab::pair {

using geometry::Point2;
using spectra::Complex;
using spectra::Triplet;

Grid2D Grid2D::make(double lx, double ly, int nx, int ny) {
    if (nx < 2 || ny < 2 || !(lx > 0.0) || !(ly > 0.0)) throw ConfigurationError("Grid2D: invalid box or resolution");
    Grid2D g;
    g.nx = nx;
    g.ny = ny;
    g.lx = lx;
    g.ly = ly;
    g.hx = 2.0 * lx / (nx + 1);
    g.hy = 2.0 * ly / (ny + 1);
    return g;
}

PairProblem PairProblem::standard(double alpha, double epsilon, int nx, double lx, double ly_factor) {
    if (!(epsilon > 0.0)) throw ConfigurationError("PairProblem: epsilon must be positive");
    PairProblem p;
    p.alpha = alpha;
    p.epsilon = epsilon;
    p.lx = lx;
    p.nx = nx;
    p.ly = ly_factor * std::sqrt(epsilon);
    const double hx = 2.0 * lx / (nx + 1);
    const double hy = hx * std::sqrt(epsilon);
    const int ny = static_cast<int>(std::lround((2.0 * p.ly / hy - 1.0) / 2.0)) * 2;
    p.ny = std::max(ny, 2);
    return p;
}

Grid2D PairProblem::grid() const { return Grid2D::make(lx, ly, nx, ny); }

void PairProblem::validate() const {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw ConfigurationError("PairProblem: epsilon must be positive");
    if (!std::isfinite(alpha)) throw ConfigurationError("PairProblem: alpha must be finite");
    if (nx % 2 != 0 || ny % 2 != 0) {
        throw ConfigurationError("PairProblem: resolution (" + std::to_string(nx) + ", " + std::to_string(ny) +
                                 ") puts the flux on a grid line; both counts must be even");
    }
    (void)grid();
}

PairProblem PairProblem::refined() const {
    PairProblem p = *this;
    p.nx = 2 * nx;
    p.ny = 2 * ny;
    return p;
}

double PairProblem::spacing_ratio(const PairProblem& finer) const {
    return (2.0 * lx / (nx + 1)) / (2.0 * finer.lx / (finer.nx + 1));
}

spectra::SparseHermitianOperator build_relative_hamiltonian(const PairProblem& p, bool with_trap) {
    p.validate();
    const Grid2D g = p.grid();
    const double tx = 2.0 / (g.hx * g.hx);
    const double ty = 2.0 / (g.hy * g.hy);
    const double eps2 = p.epsilon * p.epsilon;

    std::vector<Triplet> t;
    t.reserve(static_cast<std::size_t>(g.size()) * 5);
    for (int i = 0; i < g.nx; ++i) {
        for (int j = 0; j < g.ny; ++j) {
            const int a = g.index(i, j);
            const Point2 ra = g.point(i, j);
            double diag = 2.0 * (tx + ty);
            if (with_trap) diag += 0.5 * ra.x * ra.x + ra.y * ra.y / (2.0 * eps2);
            t.push_back({a, a, diag});
            auto hop = [&](int i2, int j2, double amplitude) {
                if (i2 < 0 || i2 >= g.nx || j2 < 0 || j2 >= g.ny) return;
                const int b = g.index(i2, j2);
                const double phase = geometry::peierls_link_phase(ra, g.point(i2, j2), p.alpha);
                t.push_back({a, b, -amplitude * std::polar(1.0, phase)});
            };
            hop(i + 1, j, tx);
            hop(i - 1, j, tx);
            hop(i, j + 1, ty);
            hop(i, j - 1, ty);
        }
    }
    return spectra::SparseHermitianOperator::from_triplets(g.size(), std::move(t));
}

std::vector<double> plaquette_fluxes(const Grid2D& g, double alpha) {
    std::vector<double> flux;
    flux.reserve(static_cast<std::size_t>(g.nx - 1) * (g.ny - 1));
    for (int i = 0; i + 1 < g.nx; ++i) {
        for (int j = 0; j + 1 < g.ny; ++j) {
            const Point2 c[4] = {g.point(i, j), g.point(i + 1, j), g.point(i + 1, j + 1), g.point(i, j + 1)};
            double s = 0.0;
            for (int e = 0; e < 4; ++e) s += geometry::peierls_link_phase(c[e], c[(e + 1) % 4], alpha);
            flux.push_back(s);
        }
    }
    return flux;
}

ComplexVector reflect(const ComplexVector& v) { return v.reverse(); }

void project_parity(ComplexVector& v, int parity) {
    const ComplexVector r = reflect(v);
    v = 0.5 * (v + static_cast<double>(parity) * r);
}

std::vector<RelativeState> pair_eigenstates(const PairProblem& p, const SolveSettings& s) {
    const auto h = build_relative_hamiltonian(p);
    spectra::LanczosOptions opt;
    opt.k = s.k;
    opt.tol = s.tol;
    opt.max_iter = s.max_iter;
    opt.seed = s.seed;
    const auto res = s.shift_invert ? spectra::lowest_eigenpairs_shift_invert(h, 0.0, opt) : spectra::lowest_eigenpairs(h, opt);
    if (!res.complete()) {
        throw SolverError("pair_eigenstates: " + std::to_string(res.converged) + " of " + std::to_string(s.k) +
                          " eigenpairs converged after " + std::to_string(res.iterations) + " products");
    }

    std::vector<RelativeState> out;
    const double cluster = 10.0 * s.tol;
    for (int i = 0; i < s.k;) {
        int j = i + 1;
        while (j < s.k && res.eigenvalues[j] - res.eigenvalues[j - 1] < cluster) ++j;
        const int m = j - i;
        const Eigen::MatrixXcd v = res.eigenvectors.middleCols(i, m);
        Eigen::MatrixXcd pv(v.rows(), m);
        for (int c = 0; c < m; ++c) pv.col(c) = reflect(v.col(c));
        Eigen::MatrixXcd gram = v.adjoint() * pv;
        gram = 0.5 * (gram + gram.adjoint()).eval();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(gram);
        const Eigen::MatrixXcd rotated = v * eig.eigenvectors();
        for (int c = 0; c < m; ++c) {
            RelativeState st;
            st.values = rotated.col(c);
            st.values.normalize();
            const ComplexVector hv = spectra::matvec(h, st.values);
            st.eigenvalue = st.values.dot(hv).real();
            st.residual = (hv - st.eigenvalue * st.values).norm();
            st.parity_expectation = st.values.dot(reflect(st.values)).real();
            st.parity = st.parity_expectation >= 0.0 ? 1 : -1;
            out.push_back(std::move(st));
        }
        i = j;
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const RelativeState& a, const RelativeState& b) { return a.eigenvalue < b.eigenvalue; });
    return out;
}

std::vector<RelativeState> relative_spectrum(const PairProblem& p, const SolveSettings& s) {
    auto all = pair_eigenstates(p, s);
    std::vector<RelativeState> even;
    for (auto& st : all)
        if (st.parity == 1) even.push_back(std::move(st));
    if (even.empty()) throw SolverError("relative_spectrum: no even-sector state among the lowest " + std::to_string(s.k));
    return even;
}

std::vector<double> com_levels(double epsilon, int count) {
    if (!(epsilon > 0.0)) throw DomainError("com_levels: epsilon must be positive");
    if (count < 1) return {};
    std::vector<double> e;
    for (int n = 0; n < count; ++n)
        for (int m = 0; m < count; ++m) e.push_back((2.0 * n + 1.0) + (2.0 * m + 1.0) / epsilon);
    std::sort(e.begin(), e.end());
    e.resize(static_cast<std::size_t>(count));
    return e;
}

double trial_overlap(const RelativeState& state, const PairProblem& p) {
    const Grid2D g = p.grid();
    if (state.values.size() != g.size()) throw ContractError("trial_overlap: state does not live on this grid");
    ComplexVector ansatz(g.size());
    for (int i = 0; i < g.nx; ++i) {
        const double x = g.x(i);
        const double profile = std::abs(x) * std::exp(-0.25 * x * x);
        for (int j = 0; j < g.ny; ++j) {
            const double y = g.y(j);
            const double transverse = std::exp(-0.25 * y * y / p.epsilon);
            const double s = geometry::phase_S({x, y});
            ansatz[g.index(i, j)] = std::polar(profile * transverse, -p.alpha * s);
        }
    }
    ansatz.normalize();
    const Complex ov = state.values.dot(ansatz) / state.values.norm();
    return std::norm(ov);
}

double diagonal_mass(const RelativeState& state, const PairProblem& p, double eta) {
    const Grid2D g = p.grid();
    if (state.values.size() != g.size()) throw ContractError("diagonal_mass: state does not live on this grid");
    if (!(eta > 0.0)) throw DomainError("diagonal_mass: eta must be positive");
    double inside = 0.0;
    double total = 0.0;
    for (int i = 0; i < g.nx; ++i) {
        double col = 0.0;
        for (int j = 0; j < g.ny; ++j) col += std::norm(state.values[g.index(i, j)]);
        total += col;
        if (std::abs(g.x(i)) < eta) inside += col;
    }
    return inside / total;
}

double richardson_order(double alpha) {
    double a = std::fmod(std::abs(alpha), 2.0);
    const double gamma = std::min(a, 2.0 - a);
    if (gamma < 1e-12 || std::abs(gamma - 1.0) < 1e-12) return 2.0;
    return 2.0 * gamma;
}

double richardson(double coarse, double fine, double ratio, double order) {
    return fine + (fine - coarse) / (std::pow(ratio, order) - 1.0);
}

ConvergenceRow convergence_point(double alpha, double epsilon, const StudyTemplate& tmpl) {
    const PairProblem p = PairProblem::standard(alpha, epsilon, tmpl.nx, tmpl.lx, tmpl.ly_factor);
    const auto even = relative_spectrum(p, tmpl.solve);
    const RelativeState& ground = even.front();
    ConvergenceRow row;
    row.alpha = alpha;
    row.epsilon = epsilon;
    row.reduced_energy = ground.eigenvalue - 1.0 / epsilon;
    row.deviation = std::abs(row.reduced_energy - 3.0);
    row.overlap = trial_overlap(ground, p);
    row.diagonal_mass = diagonal_mass(ground, p, std::sqrt(epsilon));
    row.residual = ground.residual;
    row.parity = ground.parity;
    return row;
}

std::vector<ConvergenceRow> convergence_study(const std::vector<double>& alphas, const std::vector<double>& epsilons,
                                              const StudyTemplate& tmpl) {
    for (std::size_t i = 1; i < epsilons.size(); ++i) {
        if (!(epsilons[i] < epsilons[i - 1])) throw ConfigurationError("convergence_study: epsilons must be descending");
    }
    std::vector<ConvergenceRow> rows;
    for (double a : alphas)
        for (double e : epsilons) rows.push_back(convergence_point(a, e, tmpl));
    return rows;
}

}  // namespace anyonlab::pair
