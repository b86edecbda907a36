#pragma once

#include <array>
#include <span>

namespace anyonlab::geometry {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
    friend constexpr bool operator==(Point2, Point2) = default;
};

/// Plain 2D real vector (gradients, momenta, vector potentials).
using Vec2 = Point2;

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double norm2(Vec2 a) { return dot(a, a); }
/// (x, y)^perp = (-y, x)
constexpr Vec2 perp(Vec2 a) { return {-a.y, a.x}; }

/// Reduces an angle to the branch (-pi, pi].
double reduce_angle(double theta);

/// Directed lattice link carrying a Peierls phase. The phase is kept on (-pi, pi].
struct PhaseLink {
    Point2 from;
    Point2 to;
    double phase = 0.0;

    PhaseLink reversed() const;
};

PhaseLink make_phase_link(Point2 from, Point2 to, double alpha);

/// Unit Aharonov-Bohm vector potential x^perp / |x|^2. Throws DomainError at the origin.
Vec2 vector_potential_A0(Point2 r);

/// arg(a - b) on (-pi, pi].
double singular_gauge_phase(Point2 a, Point2 b);

/// S(x, y) = arctan(y / x), discontinuous across x = 0. Even under r -> -r.
double phase_S(Point2 r);

/// Analytic gradient of S. Throws DomainError on x = 0.
Vec2 grad_phase_S(Point2 r);

/// grad S - A0; identically zero off the line x = 0.
Vec2 gauge_residual(Point2 r);

/// grad(y/x) - A0. Its norm is y^2 / (x^2 |r|), bounded by |y| / x^2.
Vec2 tilde_gauge_residual(Point2 r);

/// Cyclic three-body sum of (p1-p2)^perp.(p1-p3)^perp / (|p1-p2|^2 |p1-p3|^2).
/// Equals 1 / (2 R^2) with R the circumradius, and 0 for collinear points.
double circumradius_sum(Point2 p1, Point2 p2, Point2 p3);

/// alpha times the line integral of A0 along the straight segment a -> b,
/// i.e. alpha times the signed angle the segment subtends at the origin.
double peierls_link_phase(Point2 a, Point2 b, double alpha);

/// Terms of the expanded classical Hamilton function
///   sum |p_j + alpha A(x_j)|^2 + sum |x_j|^2
/// grouped as kinetic+trap, momentum cross term, three-body term, two-body term.
struct ClassicalTerms {
    double kinetic_trap = 0.0;
    double cross = 0.0;
    double three_body = 0.0;
    double two_body = 0.0;

    double total() const { return kinetic_trap + cross + three_body + two_body; }
};

ClassicalTerms classical_hamiltonian(std::span<const Point2> positions, std::span<const Vec2> momenta,
                                     double alpha);

/// Total vector potential seen by particle j: sum_{k != j} A0(x_j - x_k).
Vec2 pair_vector_potential(std::span<const Point2> positions, std::size_t j);

}  // namespace anyonlab::geometry
