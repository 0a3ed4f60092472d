#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "moho/configspace.hpp"

namespace moho {

enum class TrialSource { Initial, RandomInterleave, Acquisition, Fallback };

std::string to_string(TrialSource s);
TrialSource trial_source_from_string(const std::string& s);

struct TrialRecord {
    int trial_index = 0;
    Configuration config;
    std::vector<double> objectives;
    std::vector<double> weights;  // empty while no scalarization is in effect
    bool reduced = false;
    std::optional<std::vector<int>> selected_important;
    std::optional<std::vector<double>> shapley;  // per-hyperparameter importance
    std::optional<Configuration> anchor;  // recorded alongside a reduction
    TrialSource source = TrialSource::Initial;
};

// Trajectory of one optimizer run plus enough metadata to reproduce it.
struct RunHistory {
    std::string task_name;
    std::string optimizer_name;
    std::uint64_t seed = 0;
    int budget = 0;
    nlohmann::json settings;  // settings snapshot, optimizer-specific
    ConfigSpace space;
    std::vector<TrialRecord> records;

    std::vector<std::vector<double>> objective_matrix() const;
};

// Line-delimited JSON: one metadata line, then one line per record.
std::string to_jsonl(const RunHistory& history);
void write_jsonl(const RunHistory& history, const std::filesystem::path& path);
RunHistory read_jsonl(const std::filesystem::path& path);
RunHistory parse_jsonl(const std::string& text);

}  // namespace moho
