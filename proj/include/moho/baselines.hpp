#pragma once

#include <cstdint>
#include <vector>

#include "moho/benchmarks.hpp"
#include "moho/runhistory.hpp"

namespace moho {

struct Nsga2Settings {
    int population_size = 20;  // even
    double crossover_prob = 0.9;
    double mutation_prob = 0.0;  // 0 -> 1/D
    double sbx_eta = 15.0;
    double pm_eta = 20.0;

    void validate() const;
};

// B uniform samples from the task's space, evaluated and recorded.
RunHistory run_random_search(const Task& task, int budget, std::uint64_t seed);

// Deb's fast non-dominated sort: front k holds the points dominated only by
// points in fronts < k.
std::vector<std::vector<size_t>> fast_nondominated_sort(
    const std::vector<std::vector<double>>& points);

// Crowding distance within one front; boundary points are infinite.
std::vector<double> crowding_distance(const std::vector<std::vector<double>>& front);

// Generational NSGA-II with SBX/polynomial mutation on numeric dimensions
// and uniform crossover/random reset on categorical ones. Every objective
// evaluation is appended to the history; stops at exactly `budget`.
RunHistory run_nsga2(const Task& task, const Nsga2Settings& settings, int budget,
                     std::uint64_t seed);

}  // namespace moho
