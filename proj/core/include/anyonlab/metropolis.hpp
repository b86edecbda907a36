#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace anyonlab::mc {

struct McSettings {
    int chains = 32;
    long per_chain = 31250;
    long burn_in = 4000;
    /// Initial proposal width (in units of the per-coordinate scales); tuned during burn-in.
    double step = 0.5;
    std::uint64_t seed = 0;
    double target_acceptance = 0.4;

    long samples() const { return static_cast<long>(chains) * per_chain; }
};

/// Random-walk Metropolis over R^d. `log_density` returns log|Psi|^2 or nullopt-like -inf to
/// reject a point outright (counted as a guard rejection). `measure` writes one value per
/// observable into its output span.
struct MetropolisProblem {
    int dimension = 0;
    int observables = 1;
    std::vector<double> scales;  ///< per-coordinate proposal scale
    std::function<std::vector<double>(int chain)> initial;
    std::function<double(std::span<const double>)> log_density;
    std::function<void(std::span<const double>, std::span<double>)> measure;
};

struct ChainSummary {
    std::vector<double> means;  ///< per observable
    double acceptance = 0.0;    ///< after burn-in
    double step = 0.0;          ///< frozen proposal width
    long guard_rejections = 0;
};

/// Runs the chains in fixed order, each with its own generator seeded from (seed, chain).
std::vector<ChainSummary> run_chains(const MetropolisProblem& problem, const McSettings& settings);

/// Mean and standard error across chain means of one observable.
struct Estimate {
    double mean = 0.0;
    double standard_error = 0.0;
};

Estimate across_chains(const std::vector<ChainSummary>& chains, int observable);

/// Ratio of two observables: overall ratio of means with the across-chain spread of per-chain ratios.
Estimate ratio_across_chains(const std::vector<ChainSummary>& chains, int numerator, int denominator);

}  // namespace anyonlab::mc
