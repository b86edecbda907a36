#include "anyonlab/harness/plots.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "anyonlab/errors.hpp"

namespace anyonlab::harness {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 150.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 50.0;
constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf"};

std::string num(double v, const char* f = "%.2f") {
    char buf[32];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else if (c == '&') out += "&amp;";
        else out += c;
    }
    return out;
}

}  // namespace

std::string render_svg(const Chart& chart) {
    double x0 = std::numeric_limits<double>::infinity();
    double x1 = -x0;
    double y0 = x0;
    double y1 = -x0;
    const auto tx = [&](double x) { return chart.log_x ? std::log10(x) : x; };
    for (const auto& s : chart.series)
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            x0 = std::min(x0, tx(s.x[i]));
            x1 = std::max(x1, tx(s.x[i]));
            y0 = std::min(y0, s.y[i]);
            y1 = std::max(y1, s.y[i]);
        }
    if (!std::isfinite(x0)) x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;
    if (x1 - x0 < 1e-12) x0 -= 0.5, x1 += 0.5;
    if (y1 - y0 < 1e-12) y0 -= 0.5, y1 += 0.5;
    const double pad = 0.05 * (y1 - y0);
    y0 -= pad;
    y1 += pad;

    const double pw = kWidth - kLeft - kRight;
    const double ph = kHeight - kTop - kBottom;
    const auto px = [&](double x) { return kLeft + (tx(x) - x0) / (x1 - x0) * pw; };
    const auto py = [&](double y) { return kTop + (y1 - y) / (y1 - y0) * ph; };

    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    o << "<text x=\"" << num(kLeft + pw / 2) << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">"
      << escape(chart.title) << "</text>\n";
    o << "<rect x=\"" << num(kLeft) << "\" y=\"" << num(kTop) << "\" width=\"" << num(pw) << "\" height=\"" << num(ph)
      << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double fx = x0 + (x1 - x0) * i / 4.0;
        const double fy = y0 + (y1 - y0) * i / 4.0;
        const double sx = kLeft + pw * i / 4.0;
        const double sy = kTop + ph - ph * i / 4.0;
        const double label_x = chart.log_x ? std::pow(10.0, fx) : fx;
        o << "<line x1=\"" << num(sx) << "\" y1=\"" << num(kTop + ph) << "\" x2=\"" << num(sx) << "\" y2=\""
          << num(kTop + ph + 5) << "\" stroke=\"black\"/>\n";
        o << "<text x=\"" << num(sx) << "\" y=\"" << num(kTop + ph + 18) << "\" text-anchor=\"middle\">"
          << num(label_x, "%.3g") << "</text>\n";
        o << "<line x1=\"" << num(kLeft - 5) << "\" y1=\"" << num(sy) << "\" x2=\"" << num(kLeft) << "\" y2=\""
          << num(sy) << "\" stroke=\"black\"/>\n";
        o << "<text x=\"" << num(kLeft - 8) << "\" y=\"" << num(sy + 4) << "\" text-anchor=\"end\">"
          << num(fy, "%.4g") << "</text>\n";
    }
    o << "<text x=\"" << num(kLeft + pw / 2) << "\" y=\"" << num(kHeight - 10) << "\" text-anchor=\"middle\">"
      << escape(chart.x_label) << "</text>\n";
    o << "<text x=\"16\" y=\"" << num(kTop + ph / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << num(kTop + ph / 2) << ")\">" << escape(chart.y_label) << "</text>\n";

    for (std::size_t k = 0; k < chart.series.size(); ++k) {
        const auto& s = chart.series[k];
        const char* color = kColors[k % std::size(kColors)];
        o << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < s.x.size(); ++i) o << (i ? " " : "") << num(px(s.x[i])) << "," << num(py(s.y[i]));
        o << "\"/>\n";
        for (std::size_t i = 0; i < s.x.size(); ++i)
            o << "<circle cx=\"" << num(px(s.x[i])) << "\" cy=\"" << num(py(s.y[i])) << "\" r=\"3\" fill=\"" << color
              << "\"/>\n";
        const double ly = kTop + 14.0 + 18.0 * static_cast<double>(k);
        o << "<line x1=\"" << num(kWidth - kRight + 12) << "\" y1=\"" << num(ly) << "\" x2=\""
          << num(kWidth - kRight + 32) << "\" y2=\"" << num(ly) << "\" stroke=\"" << color
          << "\" stroke-width=\"1.5\"/>\n";
        o << "<text x=\"" << num(kWidth - kRight + 38) << "\" y=\"" << num(ly + 4) << "\">" << escape(s.label)
          << "</text>\n";
    }
    o << "</svg>\n";
    return o.str();
}

namespace {

struct Frame {
    std::string study;
    std::vector<nlohmann::json> rows;

    void require(std::initializer_list<const char*> cols, const nlohmann::json& columns) const {
        for (const char* c : cols)
            if (std::find(columns.begin(), columns.end(), c) == columns.end())
                throw ConfigurationError("plot: study '" + study + "' manifest lacks column '" + c + "'");
    }
};

double as_double(const nlohmann::json& values, const char* col) { return std::stod(values.at(col).get<std::string>()); }

bool has_value(const nlohmann::json& values, const char* col) {
    return values.contains(col) && !values.at(col).get<std::string>().empty();
}

/// One series per distinct `group` value, in order of first appearance.
std::vector<Series> grouped(const Frame& f, const char* group, const char* x, const char* y, const std::string& prefix,
                            const std::function<bool(const nlohmann::json&)>& keep = {}) {
    std::vector<Series> out;
    std::map<std::string, std::size_t> index;
    for (const auto& v : f.rows) {
        if (!has_value(v, x) || !has_value(v, y) || (keep && !keep(v))) continue;
        const std::string key = v.at(group).get<std::string>();
        auto it = index.find(key);
        if (it == index.end()) {
            it = index.emplace(key, out.size()).first;
            out.push_back({prefix + key, {}, {}});
        }
        out[it->second].x.push_back(as_double(v, x));
        out[it->second].y.push_back(as_double(v, y));
    }
    return out;
}

}  // namespace

std::vector<std::pair<std::string, Chart>> charts_for(const nlohmann::json& manifest) {
    Frame f;
    f.study = manifest.value("study", "");
    if (!manifest.contains("rows") || manifest["rows"].empty())
        throw ConfigurationError("plot: manifest for study '" + f.study + "' has no rows");
    for (const auto& r : manifest["rows"])
        if (r.value("status", "") == "ok") f.rows.push_back(r["values"]);
    if (f.rows.empty()) throw ConfigurationError("plot: manifest for study '" + f.study + "' has no successful rows");
    const auto& cols = manifest.at("columns");

    std::vector<std::pair<std::string, Chart>> charts;
    if (f.study == "convergence") {
        f.require({"alpha", "epsilon", "reduced_energy", "overlap"}, cols);
        charts.push_back({"reduced_energy",
                          {"Reduced relative energy", "epsilon", "lambda_rel - 1/epsilon",
                           grouped(f, "alpha", "epsilon", "reduced_energy", "alpha="), true}});
        charts.push_back({"overlap",
                          {"Overlap with the trial state", "epsilon", "overlap",
                           grouped(f, "alpha", "epsilon", "overlap", "alpha="), true}});
    } else if (f.study == "spectrum2d") {
        f.require({"alpha", "epsilon", "reduced_energy", "index"}, cols);
        charts.push_back({"spectrum",
                          {"Lowest relative level", "epsilon", "lambda - 1/epsilon",
                           grouped(f, "alpha", "epsilon", "reduced_energy", "alpha=",
                                   [](const nlohmann::json& v) { return v.at("index").get<std::string>() == "0"; }),
                           true}});
    } else if (f.study == "hardy") {
        f.require({"method", "alpha", "h", "value"}, cols);
        charts.push_back({"hardy",
                          {"Hardy quotient versus grid spacing", "h", "quotient",
                           grouped(f, "alpha", "h", "value", "alpha=",
                                   [](const nlohmann::json& v) {
                                       return v.at("method").get<std::string>() == "rayleigh-grid";
                                   }),
                           true}});
        if (charts.back().second.series.empty())
            throw ConfigurationError("plot: study 'hardy' manifest has no grid estimates");
    } else {
        throw ConfigurationError("plot: study '" + f.study + "' has no plots");
    }
    return charts;
}

std::vector<std::filesystem::path> render_plots(const nlohmann::json& manifest, const std::filesystem::path& dir) {
    const auto charts = charts_for(manifest);
    std::filesystem::create_directories(dir / "plots");
    std::vector<std::filesystem::path> files;
    for (const auto& [name, chart] : charts) {
        const auto file = dir / "plots" / (name + ".svg");
        std::ofstream(file) << render_svg(chart);
        files.push_back(file);
    }
    return files;
}

}  // namespace anyonlab::harness
