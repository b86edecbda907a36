#include "anyonlab/harness/output.hpp"

#include <chrono>
#include <ctime>
#include <fstream>

#include "anyonlab/errors.hpp"

#ifndef ANYONLAB_VERSION
#define ANYONLAB_VERSION "0.0.0"
#endif

namespace anyonlab::harness {

std::string tool_version() { return ANYONLAB_VERSION; }

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
}

std::string utc_now() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

void write_csv(const StudyTable& table, const std::filesystem::path& file) {
    std::ofstream out(file);
    if (!out) throw ConfigurationError("out: cannot write " + file.string());
    for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << csv_field(table.columns[i]);
    out << ",status\n";
    for (const auto& r : table.rows) {
        for (std::size_t i = 0; i < r.values.size(); ++i) out << (i ? "," : "") << csv_field(r.values[i]);
        out << "," << (r.ok ? "ok" : "failed") << "\n";
    }
}

nlohmann::json make_manifest(const ExperimentConfig& config, const StudyTable& table) {
    nlohmann::json m;
    m["schema_version"] = kSchemaVersion;
    m["tool_version"] = tool_version();
    m["study"] = table.study;
    m["config_hash"] = config.hash();
    m["config"] = config.normalized();
    m["created"] = utc_now();
    m["status"] = table.all_ok() ? "ok" : "partial";
    m["columns"] = table.columns;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : table.rows) {
        nlohmann::json jr;
        nlohmann::json values = nlohmann::json::object();
        for (std::size_t i = 0; i < table.columns.size(); ++i) values[table.columns[i]] = r.values[i];
        jr["values"] = values;
        jr["status"] = r.ok ? "ok" : "failed";
        if (!r.ok) jr["error"] = r.error;
        jr["runtime_s"] = r.runtime_s;
        rows.push_back(jr);
    }
    m["rows"] = rows;
    return m;
}

nlohmann::json read_manifest(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ConfigurationError("manifest: cannot read " + file.string());
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigurationError("manifest: " + file.string() + " is not valid JSON: " + e.what());
    }
}

std::optional<nlohmann::json> cached_manifest(const ExperimentConfig& config, const std::filesystem::path& dir) {
    const auto file = dir / "manifest.json";
    if (!std::filesystem::exists(file) || !std::filesystem::exists(dir / "results.csv")) return std::nullopt;
    try {
        auto m = read_manifest(file);
        if (m.value("config_hash", "") == config.hash() && m.value("status", "") == "ok" &&
            m.value("tool_version", "") == tool_version())
            return m;
    } catch (const ConfigurationError&) {
    }
    return std::nullopt;
}

}  // namespace anyonlab::harness
