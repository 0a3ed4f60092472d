#include "moho/scalarization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace moho {

void WeightVector::validate() const {
    if (w.empty()) throw std::invalid_argument("weight vector is empty");
    double sum = 0.0;
    for (double x : w) {
        if (!(x >= 0.0)) throw std::invalid_argument("weights must be non-negative");
        sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("weights must sum to 1");
}

WeightVector sample_weights(int m, Rng& rng) {
    if (m < 1) throw std::invalid_argument("objective count must be >= 1");
    if (m == 1) return WeightVector{{1.0}};
    std::vector<double> w(static_cast<size_t>(m));
    double sum = 0.0;
    for (double& x : w) {
        x = rng.exponential();
        sum += x;
    }
    for (double& x : w) x /= sum;
    return WeightVector{std::move(w)};
}

std::vector<std::vector<double>> normalize_objectives(
    const std::vector<std::vector<double>>& costs) {
    if (costs.empty()) throw std::invalid_argument("empty history");
    const size_t m = costs.front().size();
    std::vector<double> lo(m, std::numeric_limits<double>::infinity());
    std::vector<double> hi(m, -std::numeric_limits<double>::infinity());
    for (const auto& row : costs) {
        if (row.size() != m) throw std::invalid_argument("ragged cost matrix");
        for (size_t j = 0; j < m; ++j) {
            lo[j] = std::min(lo[j], row[j]);
            hi[j] = std::max(hi[j], row[j]);
        }
    }
    std::vector<std::vector<double>> out(costs.size(), std::vector<double>(m));
    for (size_t i = 0; i < costs.size(); ++i) {
        for (size_t j = 0; j < m; ++j) {
            double span = hi[j] - lo[j];
            out[i][j] = span > 0.0 ? (costs[i][j] - lo[j]) / span : 0.0;
        }
    }
    return out;
}

double scalarize(const std::vector<double>& f_norm, const WeightVector& w,
                 const ScalarizationParams& params) {
    if (f_norm.size() != w.w.size())
        throw std::invalid_argument("objective/weight length mismatch");
    double best = -std::numeric_limits<double>::infinity();
    double sum = 0.0;
    for (size_t j = 0; j < f_norm.size(); ++j) {
        double t = w.w[j] * f_norm[j];
        best = std::max(best, t);
        sum += t;
    }
    return best + params.rho * sum;
}

}  // namespace moho
