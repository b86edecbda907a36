#include "anyonlab/harness/config.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string_view>

#include "anyonlab/errors.hpp"

namespace anyonlab::harness {

bool is_known_study(const std::string& name) {
    return std::find(std::begin(kStudies), std::end(kStudies), std::string_view(name)) != std::end(kStudies);
}

void ExperimentConfig::apply_defaults() {
    const auto fill = [](auto& v, auto def) {
        if (v.empty()) v = def;
    };
    if (study == "tg") {
        fill(n, std::vector<int>{2});
        if (count == 0) count = 4;
    } else if (study == "calogero") {
        fill(n, std::vector<int>{2});
        fill(alpha, std::vector<double>{0.0, 0.25, 0.5, 1.0, 1.5});
    } else if (study == "spectrum2d") {
        fill(alpha, std::vector<double>{1.0});
        fill(eps, std::vector<double>{0.5});
        fill(grid, std::vector<int>{320});
        if (count == 0) count = 4;
        if (tol == 0.0) tol = 1e-7;
    } else if (study == "convergence") {
        fill(alpha, std::vector<double>{0.0, 0.5, 1.0});
        fill(eps, std::vector<double>{0.5, 0.25, 0.125});
        fill(grid, std::vector<int>{320});
        if (count == 0) count = 4;
        if (tol == 0.0) tol = 1e-7;
    } else if (study == "variational") {
        fill(n, std::vector<int>{3});
        fill(alpha, std::vector<double>{0.0, 0.5, 1.0});
        fill(eps, std::vector<double>{0.25});
    } else if (study == "hardy") {
        fill(n, std::vector<int>{2});
        fill(alpha, std::vector<double>{0.5, 1.0});
        fill(grid, std::vector<int>{80, 160, 320});
        if (tol == 0.0) tol = 1e-9;
    } else if (study == "gauge-checks") {
        fill(alpha, std::vector<double>{0.3, 0.7, 1.0});
        if (count == 0) count = 10000;
        if (!seed) seed = 1;
    }
}

namespace {

[[noreturn]] void fail(const std::string& study, const std::string& field, const std::string& msg) {
    throw ConfigurationError(study + "." + field + ": " + msg);
}

template <class T, class Pred>
void each(const std::string& study, const std::string& field, const std::vector<T>& v, Pred ok, const char* msg) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!ok(v[i])) fail(study, field + "[" + std::to_string(i) + "]", msg);
}

}  // namespace

void ExperimentConfig::validate() const {
    const std::string& s = study;
    if (!is_known_study(s)) throw ConfigurationError("study: unknown study '" + s + "'");
    const auto finite = [](double a) { return std::isfinite(a); };
    each(s, "alpha", alpha, finite, "must be finite");
    each(s, "eps", eps, [](double e) { return std::isfinite(e) && e > 0.0; }, "must be positive");
    if (workers < 1) fail(s, "workers", "must be at least 1");
    if (!(box > 0.0)) fail(s, "box", "must be positive");

    if (s == "tg") {
        each(s, "n", n, [](int v) { return v >= 1 && v <= 12; }, "particle number must lie in 1..12");
        if (count < 1 || count > 10000) fail(s, "count", "must lie in 1..10000");
    } else if (s == "calogero") {
        each(s, "n", n, [](int v) { return v >= 1; }, "particle number must be positive");
        each(s, "alpha", alpha, [](double a) { return a >= 0.0; }, "must be non-negative");
    } else if (s == "spectrum2d" || s == "convergence") {
        if (alpha.empty()) fail(s, "alpha", "at least one value required");
        if (eps.empty()) fail(s, "eps", "at least one value required");
        each(s, "grid", grid, [](int v) { return v >= 4 && v % 2 == 0; }, "must be even and at least 4");
        if (grid.empty() || grid.size() > 2) fail(s, "grid", "one resolution, or two for Richardson extrapolation");
        if (grid.size() == 2 && grid[1] != 2 * grid[0]) fail(s, "grid[1]", "must be twice grid[0]");
        if (count < 1) fail(s, "count", "must be positive");
        if (!(tol > 0.0)) fail(s, "tol", "must be positive");
        if (s == "convergence")
            for (std::size_t i = 1; i < eps.size(); ++i)
                if (!(eps[i] < eps[i - 1])) fail(s, "eps[" + std::to_string(i) + "]", "list must be descending");
    } else if (s == "variational") {
        if (!seed) fail(s, "seed", "required for Monte-Carlo studies");
        each(s, "n", n, [](int v) { return v >= 1 && v <= 6; }, "particle number must lie in 1..6");
        if (!occ.empty() && n.size() != 1) fail(s, "occ", "needs exactly one particle number");
        if (!occ.empty() && static_cast<int>(occ.size()) != n[0]) fail(s, "occ", "length must equal n");
        for (std::size_t i = 1; i < occ.size(); ++i)
            if (occ[i] <= occ[i - 1]) fail(s, "occ[" + std::to_string(i) + "]", "levels must be strictly increasing");
        if (chains < 2) fail(s, "chains", "at least 2");
        if (samples < chains) fail(s, "samples", "at least one sample per chain");
    } else if (s == "hardy") {
        each(s, "n", n, [](int v) { return v >= 2 && v <= 6; }, "particle number must lie in 2..6");
        each(s, "alpha", alpha, [](double a) { return a >= 0.0 && a <= 1.0; }, "must lie in [0, 1]");
        each(s, "grid", grid, [](int v) { return v >= 4 && v % 2 == 0; }, "must be even and at least 4");
        const bool mc = std::any_of(n.begin(), n.end(), [](int v) { return v > 2; });
        if (mc && !seed) fail(s, "seed", "required for Monte-Carlo studies");
        if (mc && !(beta > 0.0)) fail(s, "beta", "must be positive");
        if (mc && chains < 2) fail(s, "chains", "at least 2");
    } else if (s == "gauge-checks") {
        if (count < 1) fail(s, "count", "must be positive");
    }
}

nlohmann::json ExperimentConfig::normalized() const {
    nlohmann::json j;
    j["study"] = study;
    j["alpha"] = alpha;
    j["eps"] = eps;
    j["n"] = n;
    j["count"] = count;
    j["tol"] = tol;
    j["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
    j["grid"] = grid;
    j["box"] = box;
    j["occ"] = occ;
    j["samples"] = samples;
    j["chains"] = chains;
    j["beta"] = beta;
    return j;
}

std::string ExperimentConfig::hash() const { return sha256_hex(normalized().dump()); }

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
    std::string hex;
    char buf[3];
    for (unsigned int i = 0; i < len; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", md[i]);
        hex += buf;
    }
    return hex;
}

}  // namespace anyonlab::harness
