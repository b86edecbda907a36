#include "anyonlab/oscillator.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "anyonlab/errors.hpp"

namespace anyonlab::oscillator {

namespace {

const double kPiQuarter = std::pow(std::numbers::pi, -0.25);

// v_n and v_{n-1} at x.
std::pair<double, double> recurrence(int n, double x) {
    double prev = 0.0;
    double cur = kPiQuarter * std::exp(-0.5 * x * x);
    for (int k = 0; k < n; ++k) {
        const double next = std::sqrt(2.0 / (k + 1)) * x * cur - std::sqrt(static_cast<double>(k) / (k + 1)) * prev;
        prev = cur;
        cur = next;
    }
    return {cur, prev};
}

}  // namespace

OscillatorMode::OscillatorMode(int n) : n_(n) {
    if (n < 0 || n > kMaxModeIndex) {
        throw CapacityError("ho_mode: index " + std::to_string(n) + " outside [0, " + std::to_string(kMaxModeIndex) + "]");
    }
}

double OscillatorMode::operator()(double x) const { return recurrence(n_, x).first; }

double OscillatorMode::derivative(double x) const {
    // v_n' = sqrt(2n) v_{n-1} - x v_n
    const auto [vn, vnm1] = recurrence(n_, x);
    return std::sqrt(2.0 * n_) * vnm1 - x * vn;
}

double OscillatorMode::second_derivative(double x) const { return (x * x - eigenvalue()) * (*this)(x); }

OscillatorMode ho_mode(int n) { return OscillatorMode(n); }

std::vector<double> ho_values(int n_max, double x) {
    if (n_max < 0 || n_max > kMaxModeIndex) throw CapacityError("ho_values: mode budget exceeded");
    std::vector<double> v(static_cast<std::size_t>(n_max) + 1);
    v[0] = kPiQuarter * std::exp(-0.5 * x * x);
    if (n_max >= 1) v[1] = std::sqrt(2.0) * x * v[0];
    for (int k = 1; k < n_max; ++k) {
        v[k + 1] = std::sqrt(2.0 / (k + 1)) * x * v[k] - std::sqrt(static_cast<double>(k) / (k + 1)) * v[k - 1];
    }
    return v;
}

TransverseGround::TransverseGround(double epsilon) : epsilon_(epsilon) {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw DomainError("transverse_ground: epsilon must be positive");
    prefactor_ = std::pow(std::numbers::pi * epsilon, -0.25);
}

double TransverseGround::operator()(double y) const { return prefactor_ * std::exp(-y * y / (2.0 * epsilon_)); }

TransverseGround transverse_ground(double epsilon) { return TransverseGround(epsilon); }

QuadratureRule gauss_hermite(int n) {
    if (n < 1 || n > kMaxQuadratureOrder) {
        throw CapacityError("gauss_hermite: order " + std::to_string(n) + " outside [1, " +
                            std::to_string(kMaxQuadratureOrder) + "]");
    }
    // Golub-Welsch start: Jacobi matrix with off-diagonal sqrt(k/2).
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd off(std::max(n - 1, 0));
    for (int k = 1; k < n; ++k) off[k - 1] = std::sqrt(0.5 * k);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);

    QuadratureRule rule;
    rule.nodes.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);

    // Newton polish on v_n(x) = 0 using the normalized recurrence.
    for (double& x : rule.nodes) {
        for (int it = 0; it < 8; ++it) {
            const auto [vn, vnm1] = recurrence(n, x);
            const double dv = std::sqrt(2.0 * n) * vnm1 - x * vn;
            if (dv == 0.0) break;
            const double step = vn / dv;
            x -= step;
            if (std::abs(step) < 1e-16 * std::max(1.0, std::abs(x))) break;
        }
    }
    // Exact symmetry about zero.
    for (int i = 0; i < n / 2; ++i) {
        const double a = 0.5 * (rule.nodes[n - 1 - i] - rule.nodes[i]);
        rule.nodes[i] = -a;
        rule.nodes[n - 1 - i] = a;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;

    // Christoffel weights: w_i exp(x_i^2) = 1 / sum_{k<n} v_k(x_i)^2.
    rule.weights.resize(n);
    rule.scaled_weights.resize(n);
    for (int i = 0; i < n; ++i) {
        const double x = rule.nodes[i];
        const auto v = ho_values(n - 1, x);
        double s = 0.0;
        for (double vk : v) s += vk * vk;
        rule.scaled_weights[i] = 1.0 / s;
        rule.weights[i] = std::exp(-x * x) / s;
    }
    return rule;
}

}  // namespace anyonlab::oscillator
