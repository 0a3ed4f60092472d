#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "moho/metrics.hpp"
#include "moho/runhistory.hpp"

namespace moho {

struct LoadedRun {
    std::string task;
    std::string optimizer;
    std::uint64_t seed = 0;
    RunHistory history;
};

// Scans <dir>/<task>/<optimizer>/<seed>.jsonl recursively.
std::vector<LoadedRun> load_history_tree(const std::filesystem::path& dir);

// Per-task worst point and HV normalization bounds, computed across every
// run of the report set.
struct TaskNormalization {
    std::vector<double> ref;
    double hv_min = 0.0;
    double hv_max = 0.0;
};

std::map<std::string, TaskNormalization> compute_task_normalization(
    const std::vector<LoadedRun>& runs);

std::map<CurveKey, ConvergenceCurve> compute_curves(
    const std::vector<LoadedRun>& runs,
    const std::map<std::string, TaskNormalization>& norms);

struct ReportOptions {
    int grid_resolution = 201;
};

struct ReportSummary {
    int n_histories = 0;
    std::vector<std::string> warnings;
};

// Emits curves.csv, auc.csv and plot.svg into `outdir`.
ReportSummary write_report(const std::filesystem::path& indir,
                           const std::filesystem::path& outdir,
                           const ReportOptions& options);

// Self-contained convergence plot (mean lines + standard-error bands).
std::string render_convergence_svg(const AggregateResult& agg);

}  // namespace moho
