#pragma once

#include <functional>
#include <string>
#include <vector>

#include "anyonlab/harness/config.hpp"

namespace anyonlab::harness {

struct Row {
    std::vector<std::string> values;  ///< one per column, already formatted
    bool ok = true;
    std::string error;
    double runtime_s = 0.0;
};

struct StudyTable {
    std::string study;
    std::vector<std::string> columns;
    std::vector<Row> rows;

    bool all_ok() const;
};

/// A unit of work producing one or more rows; failures turn into flagged rows.
using Task = std::function<std::vector<Row>()>;

/// Runs tasks on `workers` threads. Output order follows task order.
std::vector<Row> run_tasks(const std::vector<Task>& tasks, int workers, std::size_t columns);

/// Builds and runs the named study. The config must already be validated.
StudyTable run_study(const ExperimentConfig& config);

/// Shortest round-trip representation.
std::string fmt(double v);
std::string fmt(long long v);
std::string fmt_list(const std::vector<int>& v);

}  // namespace anyonlab::harness
