#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "moho/benchmarks.hpp"
#include "moho/runhistory.hpp"

namespace moho {

struct SuiteTaskSpec {
    std::string name;
    int dim = 10;
    int multiplier = 0;  // 0 -> task default (3 for zdt1-3, else 5)
    int trials = 0;      // 0 -> task_budget(dim, multiplier)

    int resolved_trials() const;
};

struct SuiteOptimizerSpec {
    std::string name;  // hpi-parego | parego | random | nsga2
    nlohmann::json overrides = nlohmann::json::object();
};

struct SuiteConfig {
    std::vector<SuiteTaskSpec> tasks;
    std::vector<SuiteOptimizerSpec> optimizers;
    std::vector<std::uint64_t> seeds;
    std::string output_dir;

    static SuiteConfig from_json(const nlohmann::json& doc);
    void validate() const;
};

struct CellFailure {
    std::string task;
    std::string optimizer;
    std::uint64_t seed = 0;
    std::string error;
};

struct SuiteResult {
    int executed = 0;
    int skipped = 0;
    std::vector<CellFailure> failures;
};

const std::vector<std::string>& optimizer_names();

// Runs one named optimizer (hpi-parego, parego, random, nsga2).
RunHistory run_named_optimizer(const std::string& name, const Task& task,
                               int trials, std::uint64_t seed,
                               const nlohmann::json& overrides);

// History file location: <outdir>/<task>/<optimizer>/<seed>.jsonl.
std::filesystem::path history_path(const std::filesystem::path& outdir,
                                   const std::string& task,
                                   const std::string& optimizer,
                                   std::uint64_t seed);

// Executes the full matrix with `workers` threads, skipping cells whose
// history file already exists. Failures land in <outdir>/failures.csv.
SuiteResult run_suite(const SuiteConfig& config,
                      const std::filesystem::path& outdir, int workers);

}  // namespace moho
