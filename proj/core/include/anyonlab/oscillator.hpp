#pragma once

#include <vector>

namespace anyonlab::oscillator {

inline constexpr int kMaxModeIndex = 200;
inline constexpr int kMaxQuadratureOrder = 200;
inline constexpr int kDefaultQuadratureOrder = 128;

/// Normalized eigenfunction v_n of -d^2/dx^2 + x^2, evaluated with the
/// orthonormal three-term recurrence so that no raw Hermite polynomial is formed.
class OscillatorMode {
public:
    explicit OscillatorMode(int n);

    int index() const { return n_; }
    double eigenvalue() const { return 2.0 * n_ + 1.0; }
    int parity() const { return n_ % 2 == 0 ? 1 : -1; }

    double operator()(double x) const;
    double derivative(double x) const;
    /// v_n'' = (x^2 - (2n + 1)) v_n
    double second_derivative(double x) const;

private:
    int n_;
};

OscillatorMode ho_mode(int n);

/// Values v_0(x), ..., v_{n_max}(x) in one recurrence sweep.
std::vector<double> ho_values(int n_max, double x);

/// Ground state of -d^2/dy^2 + y^2 / eps^2.
class TransverseGround {
public:
    explicit TransverseGround(double epsilon);

    double epsilon() const { return epsilon_; }
    /// e_eps = 1 / eps
    double energy() const { return 1.0 / epsilon_; }
    /// u_eps(y) = (pi eps)^{-1/4} exp(-y^2 / (2 eps))
    double operator()(double y) const;
    /// u'/u = -y / eps
    double log_derivative(double y) const { return -y / epsilon_; }

private:
    double epsilon_;
    double prefactor_;
};

TransverseGround transverse_ground(double epsilon);

/// Gauss-Hermite rule for the weight exp(-x^2); exact for polynomials up to degree 2n - 1.
/// `scaled_weights[i] = weights[i] * exp(nodes[i]^2)`, computed without overflow, integrates
/// functions that already carry their own Gaussian decay (products of oscillator modes).
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    std::vector<double> scaled_weights;

    template <class F>
    double integrate(F&& f) const {
        double sum = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) sum += scaled_weights[i] * f(nodes[i]);
        return sum;
    }
};

QuadratureRule gauss_hermite(int n);

}  // namespace anyonlab::oscillator
