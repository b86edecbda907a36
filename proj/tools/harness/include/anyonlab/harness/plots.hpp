#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace anyonlab::harness {

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

struct Chart {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<Series> series;
    bool log_x = false;
};

/// Standalone SVG line chart. Output depends only on the chart contents.
std::string render_svg(const Chart& chart);

/// Charts for a manifest's study. Throws ConfigurationError for an empty manifest, a study
/// without plots, or missing columns.
std::vector<std::pair<std::string, Chart>> charts_for(const nlohmann::json& manifest);

/// Writes every chart as dir/plots/<name>.svg and returns the paths.
std::vector<std::filesystem::path> render_plots(const nlohmann::json& manifest, const std::filesystem::path& dir);

}  // namespace anyonlab::harness
