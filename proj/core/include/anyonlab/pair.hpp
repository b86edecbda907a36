#pragma once

#include <cstdint>
#include <vector>

#include "anyonlab/geometry.hpp"
#include "anyonlab/lanczos.hpp"
#include "anyonlab/sparse.hpp"

namespace anyonlab::pair {

using spectra::ComplexVector;

/// Cell-centred rectangular grid on [-lx, lx] x [-ly, ly] with Dirichlet walls.
/// Nodes sit at -l + (i + 1) h with h = 2 l / (n + 1); for even n the origin is a plaquette centre.
struct Grid2D {
    int nx = 0;
    int ny = 0;
    double lx = 0.0;
    double ly = 0.0;
    double hx = 0.0;
    double hy = 0.0;

    static Grid2D make(double lx, double ly, int nx, int ny);

    int size() const { return nx * ny; }
    int index(int i, int j) const { return i * ny + j; }
    double x(int i) const { return -lx + (i + 1) * hx; }
    double y(int j) const { return -ly + (j + 1) * hy; }
    geometry::Point2 point(int i, int j) const { return {x(i), y(j)}; }
    /// Index of the reflected node r -> -r.
    int mirror(int idx) const { return size() - 1 - idx; }
};

/// Relative-coordinate two-anyon problem
///   H_rel = 2 (-i grad + alpha A0)^2 + r_x^2 / 2 + r_y^2 / (2 eps^2).
struct PairProblem {
    double alpha = 0.0;
    double epsilon = 1.0;
    double lx = 8.0;  ///< half-width along the guide
    double ly = 10.0;  ///< transverse half-width
    int nx = 320;
    int ny = 400;

    /// Box lx x (ly_factor sqrt(eps)), transverse spacing hy ~ hx sqrt(eps), ny rounded to even.
    static PairProblem standard(double alpha, double epsilon, int nx = 320, double lx = 8.0, double ly_factor = 10.0);

    Grid2D grid() const;
    /// Throws ConfigurationError unless the flux sits at a plaquette centre and epsilon > 0.
    void validate() const;
    /// Same box, roughly half the spacing (nx -> 2 nx, ny -> 2 ny).
    PairProblem refined() const;
    /// hx of this problem divided by hx of `finer`.
    double spacing_ratio(const PairProblem& finer) const;
};

spectra::SparseHermitianOperator build_relative_hamiltonian(const PairProblem& p, bool with_trap = true);

/// Sum of counterclockwise link phases around every plaquette, row-major over (nx-1) x (ny-1).
std::vector<double> plaquette_fluxes(const Grid2D& grid, double alpha);

/// Apply the reflection r -> -r to a grid vector.
ComplexVector reflect(const ComplexVector& v);

/// Projector onto the even (+1) or odd (-1) reflection sector.
void project_parity(ComplexVector& v, int parity);

struct RelativeState {
    ComplexVector values;  ///< unit discrete norm
    double eigenvalue = 0.0;
    int parity = 0;
    double parity_expectation = 0.0;  ///< <psi, P psi>
    double residual = 0.0;
};

struct SolveSettings {
    int k = 4;
    double tol = 1e-7;
    int max_iter = 200000;
    std::uint64_t seed = 1;
    /// Iterate on H^{-1} (H is positive definite); plain Lanczos on H otherwise.
    bool shift_invert = true;
};

/// Lowest k eigenpairs with parity labels; degenerate clusters are rotated onto parity eigenvectors.
/// Throws SolverError when the eigensolver does not converge.
std::vector<RelativeState> pair_eigenstates(const PairProblem& p, const SolveSettings& s);

/// Even-sector (bosonic) states among the lowest k.
std::vector<RelativeState> relative_spectrum(const PairProblem& p, const SolveSettings& s);

/// Lowest (2n + 1) + (2m + 1) / eps of the centre-of-mass oscillator.
std::vector<double> com_levels(double epsilon, int count);

/// |<Phi, exp(-i alpha S) psi_rel(r_x) u_rel(r_y)>|^2 with psi_rel ~ |x| exp(-x^2/4)
/// and u_rel ~ exp(-y^2 / (4 eps)), both normalized on the grid.
double trial_overlap(const RelativeState& state, const PairProblem& p);

/// Discrete mass of |Phi|^2 on the strip |r_x| < eta.
double diagonal_mass(const RelativeState& state, const PairProblem& p, double eta);

/// Expected discretization order of eigenvalues in the even sector: 2 for alpha in {0, 1} mod 2,
/// else 2 dist(alpha, 2Z).
double richardson_order(double alpha);
double richardson(double coarse, double fine, double ratio, double order);

struct ConvergenceRow {
    double alpha = 0.0;
    double epsilon = 0.0;
    double reduced_energy = 0.0;  ///< lambda_rel - 1/eps
    double deviation = 0.0;       ///< |reduced_energy - 3|
    double overlap = 0.0;
    double diagonal_mass = 0.0;   ///< eta = sqrt(eps)
    double residual = 0.0;
    int parity = 0;
};

struct StudyTemplate {
    int nx = 320;
    double lx = 8.0;
    double ly_factor = 10.0;
    SolveSettings solve;
};

/// Rows ordered alpha-major, epsilon in the given (descending) order.
std::vector<ConvergenceRow> convergence_study(const std::vector<double>& alphas, const std::vector<double>& epsilons,
                                              const StudyTemplate& tmpl);

ConvergenceRow convergence_point(double alpha, double epsilon, const StudyTemplate& tmpl);

}  // namespace anyonlab::pair
