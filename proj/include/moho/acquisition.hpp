#pragma once

#include <stdexcept>
#include <vector>

#include "moho/configspace.hpp"
#include "moho/surrogate.hpp"

namespace moho {

struct AcquisitionSettings {
    int n_random_candidates = 1000;
    int n_local_starts = 5;
    int local_steps = 20;
    int duplicate_retry_limit = 100;

    void validate() const;
};

// Raised when a (reduced) space cannot produce an unseen configuration;
// the optimizer falls back to the original space.
struct SpaceExhausted : std::runtime_error {
    SpaceExhausted() : std::runtime_error("configuration space exhausted") {}
};

// Expected improvement for minimization under a normal predictive
// distribution; deterministic max(best - mean, 0) when variance is zero.
double expected_improvement(double mean, double variance, double best);

// Maximizes EI over `space` by random candidates plus hill-climbing local
// search, returning a configuration absent from `history_encoded`.
// Duplicate comparison is exact per dimension except continuous, which uses
// a 1e-12 tolerance on the encoded value.
Configuration optimize_acquisition(const ConfigSpace& space, const Forest& forest,
                                   const std::vector<std::vector<double>>& history_encoded,
                                   double best_scalarized,
                                   const AcquisitionSettings& settings, Rng& rng);

}  // namespace moho
