#include "anyonlab/metropolis.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "anyonlab/errors.hpp"

namespace anyonlab::mc {

std::vector<ChainSummary> run_chains(const MetropolisProblem& problem, const McSettings& s) {
    if (s.chains < 2) throw ContractError("run_chains: at least two chains are needed for an error bar");
    if (s.per_chain < 1 || s.burn_in < 0) throw ContractError("run_chains: invalid chain length");
    if (static_cast<int>(problem.scales.size()) != problem.dimension) {
        throw ContractError("run_chains: scale vector does not match the dimension");
    }
    const int d = problem.dimension;
    std::vector<ChainSummary> out;
    out.reserve(static_cast<std::size_t>(s.chains));

    for (int c = 0; c < s.chains; ++c) {
        std::seed_seq seq{static_cast<std::uint32_t>(s.seed), static_cast<std::uint32_t>(s.seed >> 32),
                          static_cast<std::uint32_t>(c)};
        std::mt19937_64 rng(seq);
        std::normal_distribution<double> normal;
        std::uniform_real_distribution<double> uniform;

        std::vector<double> x = problem.initial(c);
        double logp = problem.log_density(x);
        if (!std::isfinite(logp)) throw ContractError("run_chains: initial configuration has zero density");
        std::vector<double> trial(static_cast<std::size_t>(d));
        std::vector<double> obs(static_cast<std::size_t>(problem.observables));

        ChainSummary summary;
        summary.means.assign(static_cast<std::size_t>(problem.observables), 0.0);
        double step = s.step;
        long accepted = 0;
        long window_accepted = 0;
        long window = 0;

        const long total = s.burn_in + s.per_chain;
        for (long it = 0; it < total; ++it) {
            for (int i = 0; i < d; ++i) trial[i] = x[i] + step * problem.scales[i] * normal(rng);
            const double u = uniform(rng);
            const double logq = problem.log_density(trial);
            bool accept = false;
            if (!std::isfinite(logq)) {
                if (it >= s.burn_in) ++summary.guard_rejections;
            } else {
                accept = logq >= logp || u < std::exp(logq - logp);
            }
            if (accept) {
                x.swap(trial);
                logp = logq;
            }
            if (it < s.burn_in) {
                window_accepted += accept;
                if (++window == 200) {
                    const double rate = static_cast<double>(window_accepted) / window;
                    step *= std::exp(rate - s.target_acceptance);
                    window = window_accepted = 0;
                }
                continue;
            }
            accepted += accept;
            problem.measure(x, obs);
            for (int k = 0; k < problem.observables; ++k) summary.means[k] += obs[k];
        }
        for (double& m : summary.means) m /= static_cast<double>(s.per_chain);
        summary.acceptance = static_cast<double>(accepted) / static_cast<double>(s.per_chain);
        summary.step = step;
        out.push_back(std::move(summary));
    }
    return out;
}

Estimate across_chains(const std::vector<ChainSummary>& chains, int observable) {
    const double n = static_cast<double>(chains.size());
    double mean = 0.0;
    for (const auto& c : chains) mean += c.means[observable];
    mean /= n;
    double var = 0.0;
    for (const auto& c : chains) var += (c.means[observable] - mean) * (c.means[observable] - mean);
    var /= (n - 1.0);
    return {mean, std::sqrt(var / n)};
}

Estimate ratio_across_chains(const std::vector<ChainSummary>& chains, int numerator, int denominator) {
    const double n = static_cast<double>(chains.size());
    double num = 0.0;
    double den = 0.0;
    for (const auto& c : chains) {
        num += c.means[numerator];
        den += c.means[denominator];
    }
    const double ratio = num / den;
    double var = 0.0;
    for (const auto& c : chains) {
        const double r = c.means[numerator] / c.means[denominator];
        var += (r - ratio) * (r - ratio);
    }
    var /= (n - 1.0);
    return {ratio, std::sqrt(var / n)};
}

}  // namespace anyonlab::mc
