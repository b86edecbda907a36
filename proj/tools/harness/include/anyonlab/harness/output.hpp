#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "anyonlab/harness/config.hpp"
#include "anyonlab/harness/study.hpp"

namespace anyonlab::harness {

inline constexpr int kSchemaVersion = 1;

std::string tool_version();

void write_csv(const StudyTable& table, const std::filesystem::path& file);

nlohmann::json make_manifest(const ExperimentConfig& config, const StudyTable& table);

/// Manifest in `dir` when it records a complete run of the same config hash.
std::optional<nlohmann::json> cached_manifest(const ExperimentConfig& config, const std::filesystem::path& dir);

nlohmann::json read_manifest(const std::filesystem::path& file);

}  // namespace anyonlab::harness
