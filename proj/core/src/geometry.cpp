#include "anyonlab/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "anyonlab/errors.hpp"

namespace anyonlab::geometry {

namespace {

constexpr double pi = std::numbers::pi;

void require_distinct(Point2 a, Point2 b, const char* what) {
    if (a == b) throw DomainError(std::string(what) + ": coincident points");
}

}  // namespace

double reduce_angle(double theta) {
    double r = std::remainder(theta, 2.0 * pi);  // [-pi, pi]
    if (r <= -pi) r += 2.0 * pi;
    return r;
}

PhaseLink PhaseLink::reversed() const {
    return {to, from, phase == pi ? pi : -phase};
}

PhaseLink make_phase_link(Point2 from, Point2 to, double alpha) {
    return {from, to, reduce_angle(peierls_link_phase(from, to, alpha))};
}

Vec2 vector_potential_A0(Point2 r) {
    const double r2 = norm2(r);
    if (r2 == 0.0) throw DomainError("vector_potential_A0: flux singularity at the origin");
    return {-r.y / r2, r.x / r2};
}

double singular_gauge_phase(Point2 a, Point2 b) {
    require_distinct(a, b, "singular_gauge_phase");
    const Point2 d = a - b;
    double theta = std::atan2(d.y, d.x);
    if (theta == -pi) theta = pi;
    return theta;
}

double phase_S(Point2 r) {
    if (r.x == 0.0) throw DomainError("phase_S: point on the discontinuity line x = 0");
    return std::atan(r.y / r.x);
}

Vec2 grad_phase_S(Point2 r) {
    if (r.x == 0.0) throw DomainError("grad_phase_S: point on the discontinuity line x = 0");
    // d/dx arctan(y/x) = -y/x^2 / (1 + (y/x)^2), d/dy = 1/x / (1 + (y/x)^2)
    const double t = r.y / r.x;
    const double w = 1.0 / (1.0 + t * t);
    return {-t / r.x * w, w / r.x};
}

Vec2 gauge_residual(Point2 r) {
    if (r.x == 0.0) throw DomainError("gauge_residual: point on the discontinuity line x = 0");
    return grad_phase_S(r) - vector_potential_A0(r);
}

Vec2 tilde_gauge_residual(Point2 r) {
    if (r.x == 0.0) throw DomainError("tilde_gauge_residual: point on the discontinuity line x = 0");
    const Vec2 grad_tilde{-r.y / (r.x * r.x), 1.0 / r.x};
    return grad_tilde - vector_potential_A0(r);
}

double circumradius_sum(Point2 p1, Point2 p2, Point2 p3) {
    require_distinct(p1, p2, "circumradius_sum");
    require_distinct(p2, p3, "circumradius_sum");
    require_distinct(p1, p3, "circumradius_sum");
    // The terms cancel for near-collinear triangles; extended precision keeps the relative error small.
    using L = long double;
    auto term = [](Point2 a, Point2 b, Point2 c) {
        const L abx = static_cast<L>(a.x) - b.x, aby = static_cast<L>(a.y) - b.y;
        const L acx = static_cast<L>(a.x) - c.x, acy = static_cast<L>(a.y) - c.y;
        return (abx * acx + aby * acy) / ((abx * abx + aby * aby) * (acx * acx + acy * acy));
    };
    return static_cast<double>(term(p1, p2, p3) + term(p2, p3, p1) + term(p3, p1, p2));
}

double peierls_link_phase(Point2 a, Point2 b, double alpha) {
    const double cross = a.x * b.y - a.y * b.x;
    const double dotp = dot(a, b);
    if (norm2(a) == 0.0 || norm2(b) == 0.0 || (cross == 0.0 && dotp <= 0.0)) {
        throw DomainError("peierls_link_phase: segment passes through the flux");
    }
    return alpha * std::atan2(cross, dotp);
}

Vec2 pair_vector_potential(std::span<const Point2> positions, std::size_t j) {
    Vec2 a{};
    for (std::size_t k = 0; k < positions.size(); ++k) {
        if (k == j) continue;
        a = a + vector_potential_A0(positions[j] - positions[k]);
    }
    return a;
}

ClassicalTerms classical_hamiltonian(std::span<const Point2> positions, std::span<const Vec2> momenta,
                                     double alpha) {
    if (positions.size() != momenta.size()) {
        throw ContractError("classical_hamiltonian: positions and momenta differ in length");
    }
    const std::size_t n = positions.size();
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) require_distinct(positions[j], positions[k], "classical_hamiltonian");

    auto a0 = [&](std::size_t j, std::size_t k) { return vector_potential_A0(positions[j] - positions[k]); };

    ClassicalTerms t;
    for (std::size_t j = 0; j < n; ++j) {
        t.kinetic_trap += norm2(momenta[j]) + norm2(positions[j]);
        for (std::size_t k = 0; k < n; ++k) {
            if (k == j) continue;
            const Vec2 ajk = a0(j, k);
            t.cross += 2.0 * alpha * dot(momenta[j], ajk);
            t.two_body += alpha * alpha * norm2(ajk);
        }
    }
    // Each unordered triple contributes its six ordered products A0(x_j - x_k) . A0(x_j - x_l),
    // i.e. twice the cyclic circumradius sum.
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k)
            for (std::size_t l = k + 1; l < n; ++l)
                t.three_body += 2.0 * alpha * alpha * circumradius_sum(positions[j], positions[k], positions[l]);
    return t;
}

}  // namespace anyonlab::geometry
