#include "moho/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace moho {

bool dominates(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("objective length mismatch");
    bool strict = false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
        if (a[i] < b[i]) strict = true;
    }
    return strict;
}

std::vector<size_t> pareto_indices(const std::vector<std::vector<double>>& points) {
    std::vector<size_t> out;
    for (size_t i = 0; i < points.size(); ++i) {
        bool keep = true;
        for (size_t j = 0; j < points.size() && keep; ++j) {
            if (j == i) continue;
            if (dominates(points[j], points[i])) keep = false;
            if (j < i && points[j] == points[i]) keep = false;  // duplicate rule
        }
        if (keep) out.push_back(i);
    }
    return out;
}

std::vector<std::vector<double>> pareto_front(
    const std::vector<std::vector<double>>& points) {
    std::vector<std::vector<double>> out;
    for (size_t i : pareto_indices(points)) out.push_back(points[i]);
    return out;
}

double hypervolume_2d(const std::vector<std::vector<double>>& front,
                      const std::vector<double>& ref) {
    if (ref.size() != 2)
        throw std::invalid_argument("hypervolume supports exactly 2 objectives");
    std::vector<std::vector<double>> pts;
    for (const auto& p : front) {
        if (p.size() != 2)
            throw std::invalid_argument("hypervolume supports exactly 2 objectives");
        if (p[0] <= ref[0] && p[1] <= ref[1]) pts.push_back(p);
    }
    if (pts.empty()) return 0.0;
    // Tolerate weakly dominated input: keep the staircase only.
    std::sort(pts.begin(), pts.end());
    double hv = 0.0;
    double best_f2 = std::numeric_limits<double>::infinity();
    std::vector<std::vector<double>> stair;
    for (const auto& p : pts) {
        if (p[1] < best_f2) {
            stair.push_back(p);
            best_f2 = p[1];
        }
    }
    for (size_t i = 0; i < stair.size(); ++i) {
        double next_f1 = i + 1 < stair.size() ? stair[i + 1][0] : ref[0];
        hv += (next_f1 - stair[i][0]) * (ref[1] - stair[i][1]);
    }
    return hv;
}

ConvergenceCurve hv_regret_curve(const std::vector<std::vector<double>>& objectives,
                                 const std::vector<double>& ref,
                                 double hv_min, double hv_max) {
    if (objectives.empty()) throw std::invalid_argument("empty history");
    const auto n = objectives.size();
    ConvergenceCurve curve;
    curve.xs.reserve(n);
    curve.ys.reserve(n);
    std::vector<std::vector<double>> front;
    const double span = hv_max - hv_min;
    for (size_t t = 0; t < n; ++t) {
        const auto& p = objectives[t];
        bool dominated = false;
        for (const auto& q : front) {
            if (q == p || dominates(q, p)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) {
            std::erase_if(front, [&](const std::vector<double>& q) {
                return dominates(p, q);
            });
            front.push_back(p);
        }
        double hv = hypervolume_2d(front, ref);
        double y = span > 0.0 ? (hv_max - hv) / span : 0.0;
        curve.xs.push_back(static_cast<double>(t + 1) / static_cast<double>(n));
        curve.ys.push_back(std::clamp(y, 0.0, 1.0));
    }
    return curve;
}

double curve_value_at(const ConvergenceCurve& curve, double x) {
    if (curve.xs.empty() || x < curve.xs.front()) return 1.0;
    auto it = std::upper_bound(curve.xs.begin(), curve.xs.end(), x);
    return curve.ys[static_cast<size_t>(it - curve.xs.begin()) - 1];
}

double auc(const ConvergenceCurve& curve) {
    if (curve.xs.size() != curve.ys.size() || curve.xs.empty())
        throw std::invalid_argument("malformed curve");
    double area = 0.0;
    // Right-continuous step at y = 1 before the first observation.
    area += std::min(curve.xs.front(), 1.0) * 1.0;
    for (size_t i = 0; i + 1 < curve.xs.size(); ++i) {
        double w = curve.xs[i + 1] - curve.xs[i];
        area += w * (curve.ys[i] + curve.ys[i + 1]) / 2.0;
    }
    if (curve.xs.back() < 1.0) area += (1.0 - curve.xs.back()) * curve.ys.back();
    return area;
}

AggregateResult aggregate(const std::map<CurveKey, ConvergenceCurve>& curves,
                          int grid_resolution) {
    if (curves.empty()) throw std::invalid_argument("no curves to aggregate");
    if (grid_resolution < 2) throw std::invalid_argument("grid too small");

    std::set<std::string> optimizers, tasks;
    std::set<std::uint64_t> seeds;
    for (const auto& [key, _] : curves) {
        optimizers.insert(key.optimizer);
        tasks.insert(key.task);
        seeds.insert(key.seed);
    }

    AggregateResult result;
    std::vector<double> grid(static_cast<size_t>(grid_resolution));
    for (int i = 0; i < grid_resolution; ++i)
        grid[static_cast<size_t>(i)] =
            static_cast<double>(i) / (grid_resolution - 1);

    for (const auto& opt : optimizers) {
        std::vector<std::vector<double>> per_seed;  // task-averaged curves
        for (auto seed : seeds) {
            std::vector<double> acc(grid.size(), 0.0);
            int n_tasks = 0;
            for (const auto& task : tasks) {
                auto it = curves.find(CurveKey{opt, task, seed});
                if (it == curves.end()) {
                    result.missing.push_back(CurveKey{opt, task, seed});
                    continue;
                }
                for (size_t g = 0; g < grid.size(); ++g)
                    acc[g] += curve_value_at(it->second, grid[g]);
                ++n_tasks;
            }
            if (n_tasks == 0) continue;
            for (double& v : acc) v /= n_tasks;
            per_seed.push_back(std::move(acc));
        }
        if (per_seed.empty()) continue;

        AggregateCurve agg;
        agg.xs = grid;
        agg.n_seeds = static_cast<int>(per_seed.size());
        agg.mean.resize(grid.size());
        agg.stderr_.resize(grid.size(), 0.0);
        for (size_t g = 0; g < grid.size(); ++g) {
            double m = 0.0;
            for (const auto& s : per_seed) m += s[g];
            m /= static_cast<double>(per_seed.size());
            agg.mean[g] = m;
            if (per_seed.size() > 1) {
                double ss = 0.0;
                for (const auto& s : per_seed) ss += (s[g] - m) * (s[g] - m);
                double sd = std::sqrt(ss / static_cast<double>(per_seed.size() - 1));
                agg.stderr_[g] = sd / std::sqrt(static_cast<double>(per_seed.size()));
            }
        }
        result.by_optimizer.emplace(opt, std::move(agg));
    }
    return result;
}

}  // namespace moho
