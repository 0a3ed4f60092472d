#include "moho/runhistory.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace moho {

std::string to_string(TrialSource s) {
    switch (s) {
        case TrialSource::Initial: return "initial";
        case TrialSource::RandomInterleave: return "random_interleave";
        case TrialSource::Acquisition: return "acquisition";
        case TrialSource::Fallback: return "fallback";
    }
    return "?";
}

TrialSource trial_source_from_string(const std::string& s) {
    if (s == "initial") return TrialSource::Initial;
    if (s == "random_interleave") return TrialSource::RandomInterleave;
    if (s == "acquisition") return TrialSource::Acquisition;
    if (s == "fallback") return TrialSource::Fallback;
    throw std::invalid_argument("unknown trial source: " + s);
}

std::vector<std::vector<double>> RunHistory::objective_matrix() const {
    std::vector<std::vector<double>> out;
    out.reserve(records.size());
    for (const auto& r : records) out.push_back(r.objectives);
    return out;
}

namespace {

nlohmann::json value_to_json(const ParamValue& v) {
    if (const double* x = std::get_if<double>(&v)) return *x;
    if (const std::int64_t* x = std::get_if<std::int64_t>(&v)) return *x;
    return std::get<std::string>(v);
}

nlohmann::json config_to_json(const Configuration& c) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& v : c.values) arr.push_back(value_to_json(v));
    return arr;
}

Configuration config_from_json(const nlohmann::json& arr, const ConfigSpace& space) {
    Configuration c;
    for (int j = 0; j < space.size(); ++j) {
        const auto& v = arr.at(static_cast<size_t>(j));
        switch (space.spec(j).kind) {
            case ParamKind::Continuous: c.values.emplace_back(v.get<double>()); break;
            case ParamKind::Integer: c.values.emplace_back(v.get<std::int64_t>()); break;
            case ParamKind::Categorical: c.values.emplace_back(v.get<std::string>()); break;
        }
    }
    return c;
}

}  // namespace

std::string to_jsonl(const RunHistory& history) {
    std::ostringstream out;
    nlohmann::json meta;
    meta["type"] = "meta";
    meta["task"] = history.task_name;
    meta["optimizer"] = history.optimizer_name;
    meta["seed"] = history.seed;
    meta["budget"] = history.budget;
    meta["settings"] = history.settings;
    meta["space"] = history.space.to_json();
    out << meta.dump() << '\n';
    for (const auto& r : history.records) {
        nlohmann::json line;
        line["trial"] = r.trial_index;
        line["source"] = to_string(r.source);
        line["config"] = config_to_json(r.config);
        line["objectives"] = r.objectives;
        if (!r.weights.empty()) line["weights"] = r.weights;
        line["reduced"] = r.reduced;
        if (r.selected_important) line["important"] = *r.selected_important;
        if (r.shapley) line["shapley"] = *r.shapley;
        if (r.anchor) line["anchor"] = config_to_json(*r.anchor);
        out << line.dump() << '\n';
    }
    return out.str();
}

void write_jsonl(const RunHistory& history, const std::filesystem::path& path) {
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    // Write to a sibling temp file first so interrupted runs never leave a
    // partial history behind (suite resumability keys on file existence).
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot write " + path.string());
        f << to_jsonl(history);
    }
    std::filesystem::rename(tmp, path);
}

RunHistory parse_jsonl(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line.empty())
        throw std::runtime_error("empty history");
    nlohmann::json meta = nlohmann::json::parse(line);
    if (meta.value("type", "") != "meta")
        throw std::runtime_error("history must start with a metadata line");

    RunHistory h;
    h.task_name = meta.at("task").get<std::string>();
    h.optimizer_name = meta.at("optimizer").get<std::string>();
    h.seed = meta.at("seed").get<std::uint64_t>();
    h.budget = meta.at("budget").get<int>();
    h.settings = meta.value("settings", nlohmann::json::object());
    h.space = ConfigSpace::from_json(meta.at("space"));

    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line);
        TrialRecord r;
        r.trial_index = j.at("trial").get<int>();
        r.source = trial_source_from_string(j.at("source").get<std::string>());
        r.config = config_from_json(j.at("config"), h.space);
        r.objectives = j.at("objectives").get<std::vector<double>>();
        if (j.contains("weights")) r.weights = j.at("weights").get<std::vector<double>>();
        r.reduced = j.value("reduced", false);
        if (j.contains("important"))
            r.selected_important = j.at("important").get<std::vector<int>>();
        if (j.contains("shapley"))
            r.shapley = j.at("shapley").get<std::vector<double>>();
        if (j.contains("anchor"))
            r.anchor = config_from_json(j.at("anchor"), h.space);
        h.records.push_back(std::move(r));
    }
    return h;
}

RunHistory read_jsonl(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_jsonl(buf.str());
}

}  // namespace moho
