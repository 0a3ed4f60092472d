#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace moho {

// Normalized incumbent HV-regret trace: xs strictly increasing trial
// fractions, ys non-increasing regrets in [0, 1].
struct ConvergenceCurve {
    std::vector<double> xs;
    std::vector<double> ys;
};

// Pareto dominance: no-worse in every objective, strictly better in one.
bool dominates(const std::vector<double>& a, const std::vector<double>& b);

// Indices of the non-dominated subset; exact duplicates keep the first.
std::vector<size_t> pareto_indices(const std::vector<std::vector<double>>& points);
std::vector<std::vector<double>> pareto_front(
    const std::vector<std::vector<double>>& points);

// Dominated area between a 2-d front and a reference point; points not
// weakly dominating `ref` are clipped out.
double hypervolume_2d(const std::vector<std::vector<double>>& front,
                      const std::vector<double>& ref);

// Per-trial normalized regret y_t = (hv_max - HV_t) / (hv_max - hv_min),
// clipped to [0, 1], at x_t = (t + 1) / n_trials.
ConvergenceCurve hv_regret_curve(const std::vector<std::vector<double>>& objectives,
                                 const std::vector<double>& ref,
                                 double hv_min, double hv_max);

// Step interpolation: y = 1 before the first point, last value carried
// forward afterwards.
double curve_value_at(const ConvergenceCurve& curve, double x);

// Trapezoidal area under the curve over x in [0, 1].
double auc(const ConvergenceCurve& curve);

struct CurveKey {
    std::string optimizer;
    std::string task;
    std::uint64_t seed = 0;

    auto operator<=>(const CurveKey&) const = default;
};

struct AggregateCurve {
    std::vector<double> xs;
    std::vector<double> mean;
    std::vector<double> stderr_;
    int n_seeds = 0;
};

struct AggregateResult {
    std::map<std::string, AggregateCurve> by_optimizer;
    // (optimizer, task, seed) cells expected from the observed axes but absent.
    std::vector<CurveKey> missing;
};

// Averages curves on a common grid: tasks within each seed first, then mean
// and standard error across seeds.
AggregateResult aggregate(const std::map<CurveKey, ConvergenceCurve>& curves,
                          int grid_resolution);

}  // namespace moho
