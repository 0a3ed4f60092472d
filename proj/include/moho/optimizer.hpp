#pragma once

#include <optional>
#include <string>

#include "moho/acquisition.hpp"
#include "moho/benchmarks.hpp"
#include "moho/hpi.hpp"
#include "moho/runhistory.hpp"
#include "moho/scalarization.hpp"
#include "moho/surrogate.hpp"

namespace moho {

enum class ScheduleKind { Symmetric, Constant, InitPhase, ConvPhase };

std::string to_string(ScheduleKind k);
ScheduleKind schedule_from_string(const std::string& s);

// Trial-indexed reduction threshold over thirds of the budget. A disabled
// third means no space reduction there.
struct ThresholdSchedule {
    ScheduleKind kind = ScheduleKind::Symmetric;
    double tau = 0.8;

    void validate() const;
};

// none = no reduction at this trial.
std::optional<double> threshold_at(const ThresholdSchedule& schedule, int trial,
                                   int budget);

enum class AnchorMode { Incumbent, Default, Random };

std::string to_string(AnchorMode m);
AnchorMode anchor_from_string(const std::string& s);

struct OptimizerSettings {
    int budget = 100;
    int n_init = 0;  // 0 -> ceil(budget / 10), at least 8
    int weight_update_u = 10;
    double random_chance_r = 0.1;
    int retrain_every = 2;
    double rho = 0.05;
    ThresholdSchedule schedule;
    AnchorMode anchor_mode = AnchorMode::Incumbent;
    bool hpi_enabled = true;
    ForestParams forest;
    AcquisitionSettings acquisition;
    HpiSettings hpi;

    int resolved_n_init() const;
    void validate() const;
    nlohmann::json to_json() const;
    static OptimizerSettings from_json(const nlohmann::json& overrides, int budget);
};

// Best scalarized record under the current weights; ties keep the earliest.
const TrialRecord& incumbent_record(const RunHistory& history,
                                    const WeightVector& weights, double rho);
Configuration incumbent(const RunHistory& history, const WeightVector& weights,
                        double rho);

// The HPI-ParEGO loop: initial design (default configuration first), then
// per trial: weight resampling every u iterations, surrogate refit every
// retrain_every evaluations, r-chance random interleaving from the original
// space, HPI-based space reduction when the schedule enables it, and EI
// maximization over the (possibly reduced) space with fallback to the
// original space when the reduced one is exhausted.
RunHistory run(const Task& task, const OptimizerSettings& settings,
               std::uint64_t seed);

// Vanilla ParEGO: the same loop with the reduction branch disabled.
RunHistory run_parego(const Task& task, const OptimizerSettings& settings,
                      std::uint64_t seed);

}  // namespace moho
