#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace anyonlab::harness {

inline constexpr const char* kStudies[] = {"tg",          "calogero", "spectrum2d",  "convergence",
                                           "variational", "hardy",    "gauge-checks"};

/// Parameters of one study run. Execution-only fields (out, workers, no_cache) do not
/// enter the content hash.
struct ExperimentConfig {
    std::string study;
    std::vector<double> alpha;
    std::vector<double> eps;
    std::vector<int> n;
    int count = 0;
    double tol = 0.0;
    std::optional<std::uint64_t> seed;
    std::vector<int> grid;
    double box = 8.0;
    std::vector<int> occ;
    long samples = 1000000;
    int chains = 32;
    double beta = 1.5;

    std::string out = "out";
    int workers = 1;
    bool no_cache = false;

    /// Fills study-specific defaults for fields left empty.
    void apply_defaults();
    /// Throws ConfigurationError naming the offending field as "study.field[index]".
    void validate() const;
    nlohmann::json normalized() const;
    std::string hash() const;
};

/// Hex SHA-256 digest.
std::string sha256_hex(const std::string& data);

bool is_known_study(const std::string& name);

}  // namespace anyonlab::harness
