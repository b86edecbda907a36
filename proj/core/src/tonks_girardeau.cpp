#include "anyonlab/tonks_girardeau.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <set>
#include <string>

#include "anyonlab/errors.hpp"

namespace anyonlab::tonks {

OccupationSet::OccupationSet(std::vector<int> levels) : levels_(std::move(levels)) {
    if (levels_.empty()) throw ContractError("OccupationSet: empty");
    if (levels_.front() < 0) throw ContractError("OccupationSet: negative level");
    for (std::size_t i = 1; i < levels_.size(); ++i) {
        if (levels_[i] <= levels_[i - 1]) throw ContractError("OccupationSet: levels must be strictly increasing");
    }
}

OccupationSet OccupationSet::ground(int n) {
    std::vector<int> levels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) levels[i] = i;
    return OccupationSet(std::move(levels));
}

std::int64_t OccupationSet::energy() const {
    std::int64_t e = 0;
    for (int n : levels_) e += 2 * static_cast<std::int64_t>(n) + 1;
    return e;
}

std::vector<TgLevel> tg_levels(int n_particles, int count) {
    if (n_particles < 1 || n_particles > kMaxParticles) {
        throw CapacityError("tg_levels: N must lie in [1, " + std::to_string(kMaxParticles) + "]");
    }
    if (count < 1 || count > kMaxLevelCount) {
        throw CapacityError("tg_levels: count must lie in [1, " + std::to_string(kMaxLevelCount) + "]");
    }

    using Entry = std::pair<std::int64_t, OccupationSet>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;
    std::set<OccupationSet> seen;
    const auto start = OccupationSet::ground(n_particles);
    frontier.emplace(start.energy(), start);
    seen.insert(start);

    std::vector<TgLevel> out;
    int emitted = 0;
    while (!frontier.empty()) {
        auto [energy, occ] = frontier.top();
        if (emitted >= count && energy > out.back().energy) break;
        frontier.pop();

        if (out.empty() || out.back().energy != energy) out.push_back({energy, {}});
        out.back().sets.push_back(occ);
        ++emitted;

        const auto lv = occ.levels();
        for (std::size_t i = 0; i < lv.size(); ++i) {
            if (i + 1 < lv.size() && lv[i] + 1 == lv[i + 1]) continue;
            std::vector<int> next(lv.begin(), lv.end());
            ++next[i];
            OccupationSet succ(std::move(next));
            if (seen.insert(succ).second) frontier.emplace(succ.energy(), std::move(succ));
        }
    }
    return out;
}

std::vector<std::int64_t> tg_energies(int n_particles, int count) {
    std::vector<std::int64_t> e;
    for (const auto& level : tg_levels(n_particles, count)) {
        for (int m = 0; m < level.multiplicity() && static_cast<int>(e.size()) < count; ++m) e.push_back(level.energy);
    }
    return e;
}

double determinant(std::vector<double> a, int n) {
    double det = 1.0;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int r = k + 1; r < n; ++r)
            if (std::abs(a[r * n + k]) > std::abs(a[piv * n + k])) piv = r;
        if (a[piv * n + k] == 0.0) return 0.0;
        if (piv != k) {
            for (int c = 0; c < n; ++c) std::swap(a[k * n + c], a[piv * n + c]);
            det = -det;
        }
        const double p = a[k * n + k];
        det *= p;
        for (int r = k + 1; r < n; ++r) {
            const double f = a[r * n + k] / p;
            if (f == 0.0) continue;
            for (int c = k + 1; c < n; ++c) a[r * n + c] -= f * a[k * n + c];
        }
    }
    return det;
}

TgEigenstate::TgEigenstate(OccupationSet occ) : occ_(std::move(occ)) {
    const int n = occ_.particles();
    if (n > kMaxParticles) throw CapacityError("tg_eigenfunction: too many particles");
    double factorial = 1.0;
    for (int k = 2; k <= n; ++k) factorial *= k;
    norm_ = 1.0 / std::sqrt(factorial);
    for (int level : occ_.levels()) modes_.emplace_back(level);
}

namespace {

// prod_{i<j} sgn(x_j - x_i); zero on any coincidence.
int sign_factor(std::span<const double> x) {
    int s = 1;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            if (x[i] == x[j]) return 0;
            if (x[j] < x[i]) s = -s;
        }
    return s;
}

}  // namespace

double TgEigenstate::operator()(std::span<const double> x) const {
    const int n = particles();
    if (static_cast<int>(x.size()) != n) throw ContractError("TgEigenstate: coordinate count mismatch");
    const int s = sign_factor(x);
    if (s == 0) return 0.0;
    std::vector<double> m(static_cast<std::size_t>(n * n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) m[a * n + b] = modes_[a](x[b]);
    return norm_ * s * determinant(std::move(m), n);
}

double TgEigenstate::value_and_gradient(std::span<const double> x, std::span<double> grad) const {
    const int n = particles();
    if (static_cast<int>(x.size()) != n || static_cast<int>(grad.size()) != n) {
        throw ContractError("TgEigenstate: coordinate count mismatch");
    }
    const int s = sign_factor(x);
    std::vector<double> m(static_cast<std::size_t>(n * n));
    std::vector<double> dm(static_cast<std::size_t>(n * n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            m[a * n + b] = modes_[a](x[b]);
            dm[a * n + b] = modes_[a].derivative(x[b]);
        }
    // Column b depends on x_b only: d det / d x_b replaces column b by derivatives.
    for (int b = 0; b < n; ++b) {
        auto mb = m;
        for (int a = 0; a < n; ++a) mb[a * n + b] = dm[a * n + b];
        grad[b] = norm_ * s * determinant(std::move(mb), n);
    }
    return norm_ * s * determinant(std::move(m), n);
}

TgEigenstate tg_eigenfunction(const OccupationSet& occ) { return TgEigenstate(occ); }

double tg_norm_check(const OccupationSet& occ, int quadrature_degree) {
    const int n = occ.particles();
    if (n > 4) throw CapacityError("tg_norm_check: tensor quadrature limited to N <= 4");
    const auto rule = oscillator::gauss_hermite(quadrature_degree);
    const TgEigenstate psi(occ);
    const int q = quadrature_degree;

    std::vector<int> idx(static_cast<std::size_t>(n), 0);
    std::vector<double> x(static_cast<std::size_t>(n));
    double sum = 0.0;
    while (true) {
        double w = 1.0;
        for (int j = 0; j < n; ++j) {
            x[j] = rule.nodes[idx[j]];
            w *= rule.scaled_weights[idx[j]];
        }
        const double v = psi(x);
        sum += w * v * v;
        int j = 0;
        while (j < n && ++idx[j] == q) idx[j++] = 0;
        if (j == n) break;
    }
    return sum;
}

double diagonal_vanishing_rate(const OccupationSet& occ, double x0, double delta, std::span<const double> rest) {
    const int n = occ.particles();
    if (n < 2) throw ContractError("diagonal_vanishing_rate: needs at least two particles");
    if (!(delta > 0.0)) throw DomainError("diagonal_vanishing_rate: delta must be positive");
    std::vector<double> x{x0 + delta, x0 - delta};
    if (rest.empty()) {
        for (int j = 2; j < n; ++j) x.push_back(x0 + 1.5 * (j - 1));
    } else {
        if (static_cast<int>(rest.size()) != n - 2) throw ContractError("diagonal_vanishing_rate: rest size mismatch");
        x.insert(x.end(), rest.begin(), rest.end());
    }
    return std::abs(TgEigenstate(occ)(x)) / delta;
}

}  // namespace anyonlab::tonks
