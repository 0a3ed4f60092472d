#include "moho/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace moho {

std::string to_string(ScheduleKind k) {
    switch (k) {
        case ScheduleKind::Symmetric: return "symmetric";
        case ScheduleKind::Constant: return "constant";
        case ScheduleKind::InitPhase: return "init_phase";
        case ScheduleKind::ConvPhase: return "conv_phase";
    }
    return "?";
}

ScheduleKind schedule_from_string(const std::string& s) {
    if (s == "symmetric") return ScheduleKind::Symmetric;
    if (s == "constant") return ScheduleKind::Constant;
    if (s == "init_phase") return ScheduleKind::InitPhase;
    if (s == "conv_phase") return ScheduleKind::ConvPhase;
    throw std::invalid_argument("unknown schedule: " + s);
}

void ThresholdSchedule::validate() const {
    if (!(tau > 0.0 && tau <= 1.0))
        throw std::invalid_argument("tau must be in (0, 1]");
}

std::optional<double> threshold_at(const ThresholdSchedule& schedule, int trial,
                                   int budget) {
    if (trial < 0 || trial >= budget)
        throw std::invalid_argument("trial outside budget");
    const int first = budget / 3, second = 2 * budget / 3;
    const int third = trial < first ? 0 : trial < second ? 1 : 2;
    switch (schedule.kind) {
        case ScheduleKind::Symmetric:
            return third == 1 ? std::optional<double>(schedule.tau) : std::nullopt;
        case ScheduleKind::Constant:
            return schedule.tau;
        case ScheduleKind::InitPhase:
            return third >= 1 ? std::optional<double>(schedule.tau) : std::nullopt;
        case ScheduleKind::ConvPhase:
            return third <= 1 ? std::optional<double>(schedule.tau) : std::nullopt;
    }
    return std::nullopt;
}

std::string to_string(AnchorMode m) {
    switch (m) {
        case AnchorMode::Incumbent: return "incumbent";
        case AnchorMode::Default: return "default";
        case AnchorMode::Random: return "random";
    }
    return "?";
}

AnchorMode anchor_from_string(const std::string& s) {
    if (s == "incumbent") return AnchorMode::Incumbent;
    if (s == "default") return AnchorMode::Default;
    if (s == "random") return AnchorMode::Random;
    throw std::invalid_argument("unknown anchor mode: " + s);
}

int OptimizerSettings::resolved_n_init() const {
    if (n_init > 0) return n_init;
    return std::max(8, (budget + 9) / 10);
}

void OptimizerSettings::validate() const {
    if (budget < 1) throw std::invalid_argument("budget must be positive");
    if (resolved_n_init() >= budget)
        throw std::invalid_argument("initial design must be smaller than budget");
    if (weight_update_u < 1) throw std::invalid_argument("u must be positive");
    if (!(random_chance_r >= 0.0 && random_chance_r <= 1.0))
        throw std::invalid_argument("r must be in [0, 1]");
    if (retrain_every < 1) throw std::invalid_argument("retrain_every must be positive");
    if (!(rho > 0.0)) throw std::invalid_argument("rho must be positive");
    schedule.validate();
    forest.validate();
    acquisition.validate();
    hpi.validate();
}

nlohmann::json OptimizerSettings::to_json() const {
    nlohmann::json j;
    j["budget"] = budget;
    j["n_init"] = resolved_n_init();
    j["u"] = weight_update_u;
    j["r"] = random_chance_r;
    j["retrain_every"] = retrain_every;
    j["rho"] = rho;
    j["schedule"] = to_string(schedule.kind);
    j["tau"] = schedule.tau;
    j["anchor"] = to_string(anchor_mode);
    j["hpi_enabled"] = hpi_enabled;
    j["forest"] = {{"n_trees", forest.n_trees},
                   {"max_depth", forest.max_depth ? nlohmann::json(*forest.max_depth)
                                                  : nlohmann::json()},
                   {"min_samples_split", forest.min_samples_split},
                   {"max_features_fraction", forest.max_features_fraction},
                   {"bootstrap", forest.bootstrap}};
    j["acquisition"] = {{"n_random_candidates", acquisition.n_random_candidates},
                        {"n_local_starts", acquisition.n_local_starts},
                        {"local_steps", acquisition.local_steps},
                        {"duplicate_retry_limit", acquisition.duplicate_retry_limit}};
    j["hpi"] = {{"pool_size", hpi.pool_size},
                {"exact_limit", hpi.exact_limit},
                {"permutation_factor", hpi.permutation_factor}};
    return j;
}

OptimizerSettings OptimizerSettings::from_json(const nlohmann::json& overrides,
                                               int budget) {
    OptimizerSettings s;
    s.budget = budget;
    if (overrides.contains("n_init")) s.n_init = overrides.at("n_init").get<int>();
    if (overrides.contains("u")) s.weight_update_u = overrides.at("u").get<int>();
    if (overrides.contains("r")) s.random_chance_r = overrides.at("r").get<double>();
    if (overrides.contains("retrain_every"))
        s.retrain_every = overrides.at("retrain_every").get<int>();
    if (overrides.contains("rho")) s.rho = overrides.at("rho").get<double>();
    if (overrides.contains("schedule"))
        s.schedule.kind = schedule_from_string(overrides.at("schedule").get<std::string>());
    if (overrides.contains("tau")) s.schedule.tau = overrides.at("tau").get<double>();
    if (overrides.contains("anchor"))
        s.anchor_mode = anchor_from_string(overrides.at("anchor").get<std::string>());
    if (overrides.contains("n_trees"))
        s.forest.n_trees = overrides.at("n_trees").get<int>();
    if (overrides.contains("pool_size"))
        s.hpi.pool_size = overrides.at("pool_size").get<int>();
    if (overrides.contains("n_random_candidates"))
        s.acquisition.n_random_candidates =
            overrides.at("n_random_candidates").get<int>();
    return s;
}

const TrialRecord& incumbent_record(const RunHistory& history,
                                    const WeightVector& weights, double rho) {
    if (history.records.empty()) throw std::invalid_argument("empty history");
    auto normalized = normalize_objectives(history.objective_matrix());
    const ScalarizationParams params{rho};
    size_t best = 0;
    double best_cost = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < normalized.size(); ++i) {
        double c = scalarize(normalized[i], weights, params);
        if (c < best_cost) {  // strict: ties keep the earliest trial
            best_cost = c;
            best = i;
        }
    }
    return history.records[best];
}

Configuration incumbent(const RunHistory& history, const WeightVector& weights,
                        double rho) {
    return incumbent_record(history, weights, rho).config;
}

namespace {

struct LoopState {
    const Task& task;
    const OptimizerSettings& settings;
    RunHistory history;
    Rng rng;
    std::vector<std::vector<double>> encoded;  // one row per record

    void evaluate_and_record(Configuration config, TrialSource source,
                             const std::vector<double>& weights, bool reduced,
                             std::optional<std::vector<int>> important,
                             std::optional<std::vector<double>> shapley,
                             std::optional<Configuration> anchor) {
        TrialRecord r;
        r.trial_index = static_cast<int>(history.records.size());
        r.objectives = task.evaluate(config);
        encoded.push_back(encode(config, task.space));
        r.config = std::move(config);
        r.weights = weights;
        r.reduced = reduced;
        r.selected_important = std::move(important);
        r.shapley = std::move(shapley);
        r.anchor = std::move(anchor);
        r.source = source;
        history.records.push_back(std::move(r));
    }

    // Uniform unseen configuration by rejection; nullopt when the space
    // appears fully enumerated.
    std::optional<Configuration> random_unseen() {
        for (int attempt = 0; attempt < 10000; ++attempt) {
            Configuration c = sample_one(task.space, rng);
            auto enc = encode(c, task.space);
            bool dup = false;
            for (const auto& row : encoded) {
                bool equal = true;
                for (int j = 0; j < task.space.size() && equal; ++j) {
                    const auto js = static_cast<size_t>(j);
                    if (task.space.spec(j).kind == ParamKind::Continuous)
                        equal = std::abs(enc[js] - row[js]) <= 1e-12;
                    else
                        equal = enc[js] == row[js];
                }
                if (equal) {
                    dup = true;
                    break;
                }
            }
            if (!dup) return c;
        }
        return std::nullopt;
    }
};

}  // namespace

RunHistory run(const Task& task, const OptimizerSettings& settings,
               std::uint64_t seed) {
    settings.validate();
    if (task.objective_count < 2)
        throw std::invalid_argument("optimizer requires at least two objectives");

    LoopState st{task, settings, {}, Rng(seed), {}};
    st.history.task_name = task.name;
    st.history.optimizer_name = settings.hpi_enabled ? "hpi-parego" : "parego";
    st.history.seed = seed;
    st.history.budget = settings.budget;
    st.history.settings = settings.to_json();
    st.history.space = task.space;

    const int n_init = settings.resolved_n_init();
    const int budget = settings.budget;
    const ScalarizationParams scal{settings.rho};

    // Initial design: the default configuration first, then random samples.
    st.evaluate_and_record(default_configuration(task.space), TrialSource::Initial,
                           {}, false, std::nullopt, std::nullopt, std::nullopt);
    for (int i = 1; i < n_init; ++i)
        st.evaluate_and_record(sample_one(task.space, st.rng), TrialSource::Initial,
                               {}, false, std::nullopt, std::nullopt, std::nullopt);

    WeightVector weights;
    Forest forest;
    for (int i = n_init; i < budget; ++i) {
        if ((i - n_init) % settings.weight_update_u == 0)
            weights = sample_weights(task.objective_count, st.rng);

        // Normalization bounds and scalarized costs refresh every iteration;
        // the forest itself refits on its own cadence.
        auto normalized = normalize_objectives(st.history.objective_matrix());
        std::vector<double> targets(normalized.size());
        for (size_t k = 0; k < normalized.size(); ++k)
            targets[k] = scalarize(normalized[k], weights, scal);
        if ((i - n_init) % settings.retrain_every == 0 || forest.empty())
            forest = fit(st.encoded, targets, settings.forest, st.rng);
        const double best_scalarized =
            *std::min_element(targets.begin(), targets.end());

        if (st.rng.uniform01() < settings.random_chance_r) {
            st.evaluate_and_record(sample_one(task.space, st.rng),
                                   TrialSource::RandomInterleave, weights.w, false,
                                   std::nullopt, std::nullopt, std::nullopt);
            continue;
        }

        ConfigSpace search_space = task.space;
        bool reduced = false;
        std::optional<std::vector<int>> important;
        std::optional<std::vector<double>> shapley;
        std::optional<Configuration> anchor;
        const auto tau =
            settings.hpi_enabled
                ? threshold_at(settings.schedule, i, budget)
                : std::nullopt;
        if (tau) {
            Configuration ref;
            switch (settings.anchor_mode) {
                case AnchorMode::Incumbent:
                    ref = incumbent(st.history, weights, settings.rho);
                    break;
                case AnchorMode::Default:
                    ref = default_configuration(task.space);
                    break;
                case AnchorMode::Random:
                    ref = sample_one(task.space, st.rng);
                    break;
            }
            HpiResult hpi = compute_hpi(task.space, forest, weights, ref, *tau,
                                        settings.hpi, st.rng);
            std::set<int> keep(hpi.important.begin(), hpi.important.end());
            search_space = reduce(task.space, keep, ref);
            reduced = true;
            important = hpi.important;
            shapley = std::move(hpi.shapley);
            anchor = std::move(ref);
        }

        Configuration next;
        TrialSource source = TrialSource::Acquisition;
        try {
            next = optimize_acquisition(search_space, forest, st.encoded,
                                        best_scalarized, settings.acquisition,
                                        st.rng);
        } catch (const SpaceExhausted&) {
            // Reduced space dried up: retry once over the original space.
            source = TrialSource::Fallback;
            try {
                next = optimize_acquisition(task.space, forest, st.encoded,
                                            best_scalarized, settings.acquisition,
                                            st.rng);
            } catch (const SpaceExhausted&) {
                auto unseen = st.random_unseen();
                if (!unseen) break;  // whole space enumerated: truncate the run
                next = std::move(*unseen);
            }
        }
        st.evaluate_and_record(std::move(next), source, weights.w, reduced,
                               std::move(important), std::move(shapley),
                               std::move(anchor));
    }
    return std::move(st.history);
}

RunHistory run_parego(const Task& task, const OptimizerSettings& settings,
                      std::uint64_t seed) {
    OptimizerSettings s = settings;
    s.hpi_enabled = false;
    return run(task, s, seed);
}

}  // namespace moho
