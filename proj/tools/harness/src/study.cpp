#include "anyonlab/harness/study.hpp"

#include <atomic>
#include <chrono>
#include <charconv>
#include <cmath>
#include <exception>
#include <numbers>
#include <random>
#include <thread>

#include "anyonlab/calogero.hpp"
#include "anyonlab/errors.hpp"
#include "anyonlab/geometry.hpp"
#include "anyonlab/hardy.hpp"
#include "anyonlab/pair.hpp"
#include "anyonlab/tonks_girardeau.hpp"
#include "anyonlab/vmc.hpp"

namespace anyonlab::harness {

bool StudyTable::all_ok() const {
    for (const auto& r : rows)
        if (!r.ok) return false;
    return true;
}

std::string fmt(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string fmt(long long v) { return std::to_string(v); }

std::string fmt_list(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

std::vector<Row> run_tasks(const std::vector<Task>& tasks, int workers, std::size_t columns) {
    std::vector<std::vector<Row>> slots(tasks.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            const auto t0 = std::chrono::steady_clock::now();
            try {
                slots[i] = tasks[i]();
            } catch (const std::exception& e) {
                Row r;
                r.values.assign(columns, "");
                r.ok = false;
                r.error = e.what();
                slots[i] = {r};
            }
            const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            for (auto& r : slots[i]) r.runtime_s = dt / static_cast<double>(slots[i].size());
        }
    };
    const int n = std::max(1, std::min<int>(workers, static_cast<int>(tasks.size())));
    if (n == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (int i = 0; i < n; ++i) pool.emplace_back(work);
    }
    std::vector<Row> out;
    for (auto& s : slots)
        for (auto& r : s) out.push_back(std::move(r));
    return out;
}

namespace {

Row row(std::vector<std::string> values) {
    Row r;
    r.values = std::move(values);
    return r;
}

StudyTable tg_study(const ExperimentConfig& c, std::vector<Task>& tasks) {
    for (int n : c.n) {
        tasks.push_back([n, count = c.count] {
            std::vector<Row> rows;
            int index = 0;
            for (const auto& level : tonks::tg_levels(n, count))
                for (const auto& set : level.sets) {
                    if (index >= count) break;
                    rows.push_back(row({fmt(static_cast<long long>(n)), fmt(static_cast<long long>(index++)),
                                        fmt(static_cast<long long>(level.energy)),
                                        fmt(static_cast<long long>(level.multiplicity())),
                                        fmt_list({set.levels().begin(), set.levels().end()})}));
                }
            return rows;
        });
    }
    return {"tg", {"n", "index", "energy", "multiplicity", "occupations"}, {}};
}

StudyTable calogero_study(const ExperimentConfig& c, std::vector<Task>& tasks) {
    for (int n : c.n)
        for (double a : c.alpha) {
            tasks.push_back([n, a] {
                const auto radial = calogero::calogero_pair_relative(a);
                const double lambda = calogero::calogero_lambda(a);
                return std::vector<Row>{row({fmt(static_cast<long long>(n)), fmt(a), fmt(lambda),
                                             fmt(calogero::calogero_ground_energy(n, a)), fmt(1.0 + 2.0 * lambda),
                                             fmt(radial.energy), fmt(radial.error_estimate),
                                             fmt(calogero::periodicity_defect(a))})};
            });
        }
    return {"calogero",
            {"n", "alpha", "lambda", "ground_energy", "pair_relative_closed", "pair_relative_numeric",
             "numeric_error_estimate", "periodicity_defect"},
            {}};
}

pair::SolveSettings solve_settings(const ExperimentConfig& c) {
    pair::SolveSettings s;
    s.k = c.count;
    s.tol = c.tol;
    s.seed = c.seed.value_or(1);
    return s;
}

StudyTable spectrum_study(const ExperimentConfig& c, std::vector<Task>& tasks) {
    for (double a : c.alpha)
        for (double e : c.eps) {
            tasks.push_back([a, e, c] {
                const auto p = pair::PairProblem::standard(a, e, c.grid[0], c.box);
                std::vector<Row> rows;
                int index = 0;
                for (const auto& st : pair::pair_eigenstates(p, solve_settings(c))) {
                    rows.push_back(row({fmt(a), fmt(e), fmt(static_cast<long long>(p.nx)),
                                        fmt(static_cast<long long>(p.ny)), fmt(static_cast<long long>(index++)),
                                        fmt(st.eigenvalue), fmt(st.eigenvalue - 1.0 / e),
                                        fmt(static_cast<long long>(st.parity)), fmt(st.parity_expectation),
                                        fmt(st.residual)}));
                }
                return rows;
            });
        }
    return {"spectrum2d",
            {"alpha", "epsilon", "nx", "ny", "index", "eigenvalue", "reduced_energy", "parity", "parity_expectation",
             "residual"},
            {}};
}

StudyTable convergence_study(const ExperimentConfig& c, std::vector<Task>& tasks) {
    for (double a : c.alpha)
        for (double e : c.eps) {
            tasks.push_back([a, e, c] {
                pair::StudyTemplate t;
                t.nx = c.grid[0];
                t.lx = c.box;
                t.solve = solve_settings(c);
                const auto r = pair::convergence_point(a, e, t);
                const auto p = pair::PairProblem::standard(a, e, t.nx, t.lx, t.ly_factor);
                std::string fine;
                std::string extrapolated;
                if (c.grid.size() == 2) {
                    pair::StudyTemplate tf = t;
                    tf.nx = c.grid[1];
                    const auto pf = pair::PairProblem::standard(a, e, tf.nx, tf.lx, tf.ly_factor);
                    const double ef = pair::relative_spectrum(pf, tf.solve).front().eigenvalue - 1.0 / e;
                    fine = fmt(ef);
                    extrapolated = fmt(pair::richardson(r.reduced_energy, ef, p.spacing_ratio(pf),
                                                        pair::richardson_order(a)));
                }
                return std::vector<Row>{row({fmt(a), fmt(e), fmt(static_cast<long long>(p.nx)),
                                             fmt(static_cast<long long>(p.ny)), fmt(r.reduced_energy),
                                             fmt(r.deviation), fine, extrapolated, fmt(r.overlap),
                                             fmt(r.diagonal_mass), fmt(r.residual)})};
            });
        }
    return {"convergence",
            {"alpha", "epsilon", "nx", "ny", "reduced_energy", "deviation", "reduced_energy_fine", "extrapolated",
             "overlap", "diagonal_mass", "residual"},
            {}};
}

mc::McSettings mc_settings(const ExperimentConfig& c) {
    mc::McSettings s;
    s.chains = c.chains;
    s.per_chain = c.samples / c.chains;
    s.seed = *c.seed;
    return s;
}

StudyTable variational_study(const ExperimentConfig& c, std::vector<Task>& tasks) {
    for (int n : c.n)
        for (double a : c.alpha)
            for (double e : c.eps) {
                tasks.push_back([n, a, e, c] {
                    const auto occ = c.occ.empty() ? tonks::OccupationSet::ground(n) : tonks::OccupationSet(c.occ);
                    const vmc::AnsatzState st{occ, a, e};
                    const auto r = vmc::mc_energy(st, mc_settings(c));
                    return std::vector<Row>{row({fmt(static_cast<long long>(n)), fmt(a), fmt(e),
                                                 fmt_list({occ.levels().begin(), occ.levels().end()}),
                                                 fmt(vmc::splitting_energy(st)), fmt(r.mean), fmt(r.standard_error),
                                                 fmt(static_cast<long long>(r.samples)), fmt(r.acceptance),
                                                 fmt(static_cast<long long>(r.guard_rejections))})};
                });
            }
    return {"variational",
            {"n", "alpha", "epsilon", "occupations", "splitting_energy", "mc_mean", "mc_standard_error", "samples",
             "acceptance", "guard_rejections"},
            {}};
}

Row hardy_row(const hardy::HardyEstimate& h, const std::string& analytic) {
    const bool grid = h.method == hardy::Method::RayleighGrid;
    return row({std::string(hardy::method_name(h.method)), fmt(static_cast<long long>(h.particles)), fmt(h.alpha),
                grid ? fmt(static_cast<long long>(h.n)) : "", grid ? fmt(h.h) : "", grid ? fmt(h.box) : "",
                fmt(h.value), fmt(h.standard_error), analytic, grid ? fmt(h.residual) : ""});
}

StudyTable hardy_study(const ExperimentConfig& c, std::vector<Task>& tasks) {
    for (int n : c.n)
        for (double a : c.alpha) {
            if (n == 2) {
                const std::string analytic = fmt(hardy::hardy_pair_analytic(a));
                tasks.push_back([a, analytic] {
                    hardy::HardyEstimate h;
                    h.alpha = a;
                    h.value = hardy::hardy_pair_analytic(a);
                    return std::vector<Row>{hardy_row(h, analytic)};
                });
                for (int g : c.grid) {
                    tasks.push_back([a, g, c, analytic] {
                        hardy::HardySolve s;
                        s.tol = c.tol;
                        s.seed = c.seed.value_or(1);
                        return std::vector<Row>{hardy_row(hardy::hardy_rayleigh_pair(a, {c.box, g}, s), analytic)};
                    });
                }
            } else {
                tasks.push_back([n, a, c] {
                    const hardy::TrialFamily trial{c.beta, 1.0};
                    return std::vector<Row>{hardy_row(hardy::hardy_upper_bound(n, a, trial, mc_settings(c)), "")};
                });
            }
        }
    return {"hardy",
            {"method", "n", "alpha", "resolution", "h", "box", "value", "standard_error", "analytic", "residual"},
            {}};
}

Row check_row(const std::string& name, const std::string& alpha, double value, double threshold) {
    const bool has = threshold > 0.0;
    return row({name, alpha, fmt(value), has ? fmt(threshold) : "", has ? (value <= threshold ? "1" : "0") : ""});
}

std::vector<Row> alpha_free_checks(int count, std::uint64_t seed) {
    using geometry::Point2;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    double gauge = 0.0;
    double tilde = 0.0;
    for (int i = 0; i < count; ++i) {
        const Point2 r{u(rng), u(rng)};
        gauge = std::max(gauge, std::sqrt(geometry::norm2(geometry::gauge_residual(r))));
        if (std::abs(r.y) < std::abs(r.x) && r.y != 0.0)
            tilde = std::max(tilde, std::sqrt(geometry::norm2(geometry::tilde_gauge_residual(r))) * r.x * r.x /
                                        std::abs(r.y));
    }
    double circ = 0.0;
    for (int i = 0; i < count / 10; ++i) {
        const Point2 p[3] = {{u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}};
        // R = abc / (4 Area) in extended precision; the area is ill-conditioned for thin triangles.
        using L = long double;
        auto dist = [](Point2 s, Point2 t) { return std::hypot(static_cast<L>(s.x) - t.x, static_cast<L>(s.y) - t.y); };
        const L area = 0.5L * std::abs((static_cast<L>(p[1].x) - p[0].x) * (static_cast<L>(p[2].y) - p[0].y) -
                                       (static_cast<L>(p[2].x) - p[0].x) * (static_cast<L>(p[1].y) - p[0].y));
        const L big_r = dist(p[1], p[2]) * dist(p[0], p[2]) * dist(p[0], p[1]) / (4.0L * area);
        const double expect = static_cast<double>(1.0L / (2.0L * big_r * big_r));
        circ = std::max(circ, std::abs(geometry::circumradius_sum(p[0], p[1], p[2]) - expect) / expect);
    }
    double cross = 0.0;
    double three = 0.0;
    for (int n = 2; n <= 6; ++n)
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Point2> x(n);
            std::vector<geometry::Vec2> p(n);
            for (int j = 0; j < n; ++j) {
                x[j] = {u(rng), 0.0};
                p[j] = {u(rng), 0.0};
            }
            const auto t = geometry::classical_hamiltonian(x, p, 1.0);
            cross = std::max(cross, std::abs(t.cross));
            three = std::max(three, std::abs(t.three_body));
        }
    return {check_row("gauge_residual_max", "", gauge, 1e-12), check_row("tilde_bound_constant", "", tilde, 2.0),
            check_row("circumradius_relative_error", "", circ, 1e-10),
            check_row("collinear_cross_term_max", "", cross, 1e-12),
            check_row("collinear_three_body_max", "", three, 1e-12)};
}

StudyTable gauge_study(const ExperimentConfig& c, std::vector<Task>& tasks) {
    const std::uint64_t seed = *c.seed;
    tasks.push_back([count = c.count, seed] { return alpha_free_checks(count, seed); });
    for (double a : c.alpha) {
        tasks.push_back([a, count = c.count, seed] {
            const vmc::Probe nodal{[](geometry::Point2 r) { return r.x * std::exp(-0.5 * geometry::norm2(r)); },
                                   [](geometry::Point2 r) {
                                       const double g = std::exp(-0.5 * geometry::norm2(r));
                                       return geometry::Vec2{g * (1.0 - r.x * r.x), -g * r.x * r.y};
                                   }};
            const vmc::Probe nodeless{[](geometry::Point2 r) { return std::exp(-0.5 * geometry::norm2(r)); },
                                      [](geometry::Point2 r) {
                                          const double g = std::exp(-0.5 * geometry::norm2(r));
                                          return geometry::Vec2{-g * r.x, -g * r.y};
                                      }};
            std::mt19937_64 rng(seed + 1);
            std::uniform_real_distribution<double> u(-3.0, 3.0);
            double worst = 0.0;
            for (int i = 0; i < count; ++i) {
                geometry::Point2 r{u(rng), u(rng)};
                if (r.x == 0.0) continue;
                worst = std::max(worst, std::abs(vmc::gauge_pointwise_check(a, r, nodal)));
            }
            const std::string as = fmt(a);
            return std::vector<Row>{
                check_row("pointwise_nodal_max", as, worst, 1e-10),
                check_row("strip_nodal_h1e-2", as, vmc::gauge_strip_energy(a, 0.3, 1e-2, nodal), 0.0),
                check_row("strip_nodal_h1e-3", as, vmc::gauge_strip_energy(a, 0.3, 1e-3, nodal), 0.0),
                check_row("strip_nodeless_h1e-2", as, vmc::gauge_strip_energy(a, 0.3, 1e-2, nodeless), 0.0),
                check_row("strip_nodeless_h1e-3", as, vmc::gauge_strip_energy(a, 0.3, 1e-3, nodeless), 0.0)};
        });
    }
    return {"gauge-checks", {"check", "alpha", "value", "threshold", "pass"}, {}};
}

}  // namespace

StudyTable run_study(const ExperimentConfig& c) {
    std::vector<Task> tasks;
    StudyTable t;
    if (c.study == "tg") t = tg_study(c, tasks);
    else if (c.study == "calogero") t = calogero_study(c, tasks);
    else if (c.study == "spectrum2d") t = spectrum_study(c, tasks);
    else if (c.study == "convergence") t = convergence_study(c, tasks);
    else if (c.study == "variational") t = variational_study(c, tasks);
    else if (c.study == "hardy") t = hardy_study(c, tasks);
    else if (c.study == "gauge-checks") t = gauge_study(c, tasks);
    else throw ConfigurationError("study: unknown study '" + c.study + "'");
    t.rows = run_tasks(tasks, c.workers, t.columns.size());
    return t;
}

}  // namespace anyonlab::harness
