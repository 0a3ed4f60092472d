#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "moho/configspace.hpp"
#include "moho/scalarization.hpp"
#include "moho/surrogate.hpp"

namespace moho {

struct HpiSettings {
    int pool_size = 64;
    int exact_limit = 12;       // full 2^d enumeration up to this many players
    int permutation_factor = 2; // n_permutations = factor * d beyond the limit

    void validate() const;
};

// Cooperative tunability game: players are the hyperparameters of the
// original space; a coalition's value is the surrogate-predicted improvement
// achievable by moving only that coalition away from the reference
// configuration, over a shared random pool of configurations.
class TunabilityGame {
public:
    TunabilityGame(const ConfigSpace& space, const Forest& forest,
                   WeightVector weights, const Configuration& reference,
                   std::vector<Configuration> pool);

    int players() const { return d_; }
    const WeightVector& weights() const { return weights_; }

    // v(S) = max(0, cost(reference) - min over hybrids of cost(hybrid)),
    // hybrids taking pool values on S and reference values elsewhere.
    double value(std::uint64_t coalition_mask) const;

private:
    int d_;
    WeightVector weights_;
    std::vector<double> reference_encoded_;
    std::vector<std::vector<double>> pool_encoded_;
    const Forest* forest_;
    double reference_cost_;
};

struct HpiResult {
    std::vector<double> shapley;
    std::vector<int> important;  // sorted by descending (clamped) Shapley value
    std::string method;          // "exact" or "permutation"
    double total_gain = 0.0;     // sum of Shapley values
};

using CoalitionValueFn = std::function<double(std::uint64_t)>;

// Exact Shapley values by full subset enumeration; d <= exact_limit.
std::vector<double> shapley_exact(const CoalitionValueFn& value_fn, int d,
                                  int exact_limit = 12);

// Permutation-sampling estimator of the Shapley values, memoizing coalition
// evaluations. When n_permutations covers all d! orderings the average is
// taken over each distinct permutation exactly once, matching the exact
// values up to float accumulation.
std::vector<double> shapley_permutation(const CoalitionValueFn& value_fn, int d,
                                        int n_permutations, Rng& rng);

// Cumulative threshold rule: order by Shapley value (negatives clamped to 0)
// and keep a prefix whose clamped sum first reaches tau times the clamped
// total. A non-positive or non-finite total selects everything.
std::vector<int> select_important(const std::vector<double>& shapley, double tau);

// Full HPI step: fresh pool, exact or permutation Shapley, threshold select.
HpiResult compute_hpi(const ConfigSpace& space, const Forest& forest,
                      const WeightVector& weights, const Configuration& reference,
                      double tau, const HpiSettings& settings, Rng& rng);

}  // namespace moho
