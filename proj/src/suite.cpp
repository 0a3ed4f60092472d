#include "moho/suite.hpp"

#include <atomic>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "moho/baselines.hpp"
#include "moho/benchmarks.hpp"
#include "moho/optimizer.hpp"

namespace moho {

int SuiteTaskSpec::resolved_trials() const {
    if (trials > 0) return trials;
    int mult = multiplier > 0 ? multiplier : default_trial_multiplier(name);
    return task_budget(dim, mult);
}

SuiteConfig SuiteConfig::from_json(const nlohmann::json& doc) {
    SuiteConfig c;
    for (const auto& t : doc.at("tasks")) {
        SuiteTaskSpec spec;
        spec.name = t.at("name").get<std::string>();
        spec.dim = t.value("dim", 10);
        spec.multiplier = t.value("multiplier", 0);
        spec.trials = t.value("trials", 0);
        c.tasks.push_back(std::move(spec));
    }
    for (const auto& o : doc.at("optimizers")) {
        SuiteOptimizerSpec spec;
        if (o.is_string()) {
            spec.name = o.get<std::string>();
        } else {
            spec.name = o.at("name").get<std::string>();
            spec.overrides = o.value("settings", nlohmann::json::object());
        }
        c.optimizers.push_back(std::move(spec));
    }
    c.seeds = doc.at("seeds").get<std::vector<std::uint64_t>>();
    c.output_dir = doc.value("output_dir", "results");
    c.validate();
    return c;
}

const std::vector<std::string>& optimizer_names() {
    static const std::vector<std::string> names = {"hpi-parego", "parego", "random",
                                                   "nsga2"};
    return names;
}

void SuiteConfig::validate() const {
    if (tasks.empty() || optimizers.empty() || seeds.empty())
        throw std::invalid_argument("suite needs tasks, optimizers and seeds");
    for (const auto& o : optimizers) {
        const auto& valid = optimizer_names();
        if (std::find(valid.begin(), valid.end(), o.name) == valid.end()) {
            std::string msg = "unknown optimizer '" + o.name + "'; valid names:";
            for (const auto& n : valid) msg += " " + n;
            throw std::invalid_argument(msg);
        }
    }
}

RunHistory run_named_optimizer(const std::string& name, const Task& task,
                               int trials, std::uint64_t seed,
                               const nlohmann::json& overrides) {
    if (name == "hpi-parego" || name == "parego") {
        auto settings = OptimizerSettings::from_json(overrides, trials);
        settings.hpi_enabled = (name == "hpi-parego");
        return run(task, settings, seed);
    }
    if (name == "random") return run_random_search(task, trials, seed);
    if (name == "nsga2") {
        Nsga2Settings settings;
        if (overrides.contains("population_size"))
            settings.population_size = overrides.at("population_size").get<int>();
        if (overrides.contains("crossover_prob"))
            settings.crossover_prob = overrides.at("crossover_prob").get<double>();
        if (overrides.contains("mutation_prob"))
            settings.mutation_prob = overrides.at("mutation_prob").get<double>();
        if (overrides.contains("sbx_eta"))
            settings.sbx_eta = overrides.at("sbx_eta").get<double>();
        if (overrides.contains("pm_eta"))
            settings.pm_eta = overrides.at("pm_eta").get<double>();
        return run_nsga2(task, settings, trials, seed);
    }
    std::string msg = "unknown optimizer '" + name + "'; valid names:";
    for (const auto& n : optimizer_names()) msg += " " + n;
    throw std::invalid_argument(msg);
}

std::filesystem::path history_path(const std::filesystem::path& outdir,
                                   const std::string& task,
                                   const std::string& optimizer,
                                   std::uint64_t seed) {
    return outdir / task / optimizer / (std::to_string(seed) + ".jsonl");
}

SuiteResult run_suite(const SuiteConfig& config,
                      const std::filesystem::path& outdir, int workers) {
    config.validate();
    struct Cell {
        SuiteTaskSpec task;
        SuiteOptimizerSpec optimizer;
        std::uint64_t seed;
    };
    std::vector<Cell> cells;
    for (const auto& t : config.tasks)
        for (const auto& o : config.optimizers)
            for (auto seed : config.seeds) cells.push_back({t, o, seed});

    SuiteResult result;
    std::atomic<size_t> cursor{0};
    std::mutex mu;
    if (workers < 1) workers = 1;

    auto worker = [&]() {
        for (;;) {
            size_t i = cursor.fetch_add(1);
            if (i >= cells.size()) return;
            const Cell& cell = cells[i];
            auto path = history_path(outdir, cell.task.name, cell.optimizer.name,
                                     cell.seed);
            if (std::filesystem::exists(path)) {
                std::lock_guard lock(mu);
                ++result.skipped;
                continue;
            }
            try {
                Task task = make_task(cell.task.name, cell.task.dim);
                auto history =
                    run_named_optimizer(cell.optimizer.name, task,
                                        cell.task.resolved_trials(), cell.seed,
                                        cell.optimizer.overrides);
                write_jsonl(history, path);
                std::lock_guard lock(mu);
                ++result.executed;
            } catch (const std::exception& e) {
                std::lock_guard lock(mu);
                result.failures.push_back(
                    {cell.task.name, cell.optimizer.name, cell.seed, e.what()});
            }
        }
    };

    std::vector<std::thread> threads;
    const int n_threads = std::min<int>(workers, static_cast<int>(cells.size()));
    threads.reserve(static_cast<size_t>(n_threads));
    for (int t = 0; t < n_threads; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();

    if (!result.failures.empty()) {
        std::filesystem::create_directories(outdir);
        std::ofstream f(outdir / "failures.csv", std::ios::trunc);
        f << "task,optimizer,seed,error\n";
        for (const auto& fail : result.failures) {
            std::string sanitized = fail.error;
            for (char& c : sanitized)
                if (c == ',' || c == '\n') c = ';';
            f << fail.task << ',' << fail.optimizer << ',' << fail.seed << ','
              << sanitized << '\n';
        }
    }
    return result;
}

}  // namespace moho
