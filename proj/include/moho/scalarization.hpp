#pragma once

#include <vector>

#include "moho/rng.hpp"

namespace moho {

// Point on the probability simplex: w_j >= 0, sum w_j = 1.
struct WeightVector {
    std::vector<double> w;

    int size() const { return static_cast<int>(w.size()); }
    void validate() const;
};

struct ScalarizationParams {
    double rho = 0.05;
};

// Uniform draw from the (m-1)-simplex via normalized exponentials.
WeightVector sample_weights(int m, Rng& rng);

// Per-objective min-max normalization of observed raw costs into [0, 1].
// A degenerate objective (max == min, including a single row) maps to 0.
std::vector<std::vector<double>> normalize_objectives(
    const std::vector<std::vector<double>>& costs);

// Augmented Tchebycheff scalarization:
//   max_j(w_j * f_j) + rho * sum_j(w_j * f_j).
double scalarize(const std::vector<double>& f_norm, const WeightVector& w,
                 const ScalarizationParams& params);

}  // namespace moho
