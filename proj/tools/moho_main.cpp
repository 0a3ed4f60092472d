#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "moho/baselines.hpp"
#include "moho/benchmarks.hpp"
#include "moho/metrics.hpp"
#include "moho/optimizer.hpp"
#include "moho/report.hpp"
#include "moho/suite.hpp"

namespace fs = std::filesystem;

namespace {

struct RunFlags {
    std::string task = "zdt1";
    std::string optimizer = "parego";
    std::uint64_t seed = 0;
    int trials = 0;
    int dim = 10;
    std::string outdir = "results";
    double tau = 0.8;
    std::string schedule = "symmetric";
    std::string anchor = "incumbent";
    double r = 0.1;
    int u = 10;
};

int cmd_run(const RunFlags& flags) {
    moho::Task task = moho::make_task(flags.task, flags.dim);
    int trials = flags.trials > 0
                     ? flags.trials
                     : moho::task_budget(flags.dim,
                                         moho::default_trial_multiplier(flags.task));
    nlohmann::json overrides{{"tau", flags.tau},
                             {"schedule", flags.schedule},
                             {"anchor", flags.anchor},
                             {"r", flags.r},
                             {"u", flags.u}};
    auto start = std::chrono::steady_clock::now();
    auto history = moho::run_named_optimizer(flags.optimizer, task, trials,
                                             flags.seed, overrides);
    auto elapsed = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    auto path = moho::history_path(flags.outdir, flags.task, flags.optimizer,
                                   flags.seed);
    moho::write_jsonl(history, path);

    // Final hypervolume against this run's own worst point.
    auto objectives = history.objective_matrix();
    std::vector<double> ref(objectives.front().size(),
                            -std::numeric_limits<double>::infinity());
    for (const auto& row : objectives)
        for (size_t j = 0; j < row.size(); ++j) ref[j] = std::max(ref[j], row[j]);
    double hv = moho::hypervolume_2d(moho::pareto_front(objectives), ref);

    std::cout << "history: " << path.string() << "\n"
              << "trials: " << history.records.size() << "\n"
              << "final_hv: " << hv << "\n"
              << "runtime_s: " << elapsed << "\n";
    return 0;
}

int cmd_suite(const std::string& config_path, const std::string& outdir_override,
              int workers) {
    std::ifstream f(config_path);
    if (!f) {
        std::cerr << "cannot read suite config: " << config_path << "\n";
        return 1;
    }
    nlohmann::json doc = nlohmann::json::parse(f);
    auto config = moho::SuiteConfig::from_json(doc);
    fs::path outdir = outdir_override.empty() ? fs::path(config.output_dir)
                                              : fs::path(outdir_override);
    auto result = moho::run_suite(config, outdir, workers);
    std::cout << "executed: " << result.executed << "\n"
              << "skipped: " << result.skipped << "\n"
              << "failed: " << result.failures.size() << "\n";
    if (!result.failures.empty()) {
        std::cerr << "failures recorded in " << (outdir / "failures.csv").string()
                  << "\n";
        return 1;
    }
    return 0;
}

int cmd_report(const std::string& indir, const std::string& outdir, int grid) {
    moho::ReportOptions options;
    options.grid_resolution = grid;
    auto summary = moho::write_report(indir, outdir, options);
    for (const auto& w : summary.warnings) std::cerr << "warning: " << w << "\n";
    std::cout << "histories: " << summary.n_histories << "\n"
              << "report: " << outdir << "/{curves.csv,auc.csv,plot.svg}\n";
    return 0;
}

int cmd_pareto(const std::string& history_path) {
    auto history = moho::read_jsonl(history_path);
    auto objectives = history.objective_matrix();
    auto idx = moho::pareto_indices(objectives);
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        return objectives[a] < objectives[b];
    });
    for (size_t i : idx) {
        const auto& rec = history.records[i];
        std::cout << "trial " << rec.trial_index << ": (";
        for (size_t j = 0; j < rec.config.values.size(); ++j) {
            if (j) std::cout << ", ";
            const auto& v = rec.config.values[j];
            if (const double* x = std::get_if<double>(&v))
                std::cout << *x;
            else if (const std::int64_t* x = std::get_if<std::int64_t>(&v))
                std::cout << *x;
            else
                std::cout << std::get<std::string>(v);
        }
        std::cout << ") -> (";
        for (size_t j = 0; j < rec.objectives.size(); ++j) {
            if (j) std::cout << ", ";
            std::cout << rec.objectives[j];
        }
        std::cout << ")\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multi-objective hyperparameter optimization toolkit"};
    app.require_subcommand(1);

    RunFlags run_flags;
    auto* run = app.add_subcommand("run", "Execute a single optimizer run");
    run->add_option("--task", run_flags.task, "Task name (zdt1..zdt4, zdt6, mixed)");
    run->add_option("--optimizer", run_flags.optimizer,
                    "Optimizer (hpi-parego, parego, random, nsga2)");
    run->add_option("--seed", run_flags.seed, "Random seed");
    run->add_option("--trials", run_flags.trials, "Trial budget (0 = task default)");
    run->add_option("--dim", run_flags.dim, "Task dimensionality");
    run->add_option("--outdir", run_flags.outdir, "Output directory");
    run->add_option("--tau", run_flags.tau, "HPI threshold");
    run->add_option("--schedule", run_flags.schedule,
                    "Threshold schedule (symmetric, constant, init_phase, conv_phase)");
    run->add_option("--anchor", run_flags.anchor,
                    "Reduction anchor (incumbent, default, random)");
    run->add_option("--r", run_flags.r, "Random interleave chance");
    run->add_option("--u", run_flags.u, "Weight update interval");

    std::string suite_config, suite_outdir;
    int workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    auto* suite = app.add_subcommand("suite", "Run an experiment matrix");
    suite->add_option("--config", suite_config, "Suite config JSON")->required();
    suite->add_option("--outdir", suite_outdir, "Override the config output_dir");
    suite->add_option("--workers", workers, "Parallel cells");

    std::string report_in, report_out = "report";
    int grid = 201;
    auto* report = app.add_subcommand("report", "Aggregate histories into a report");
    report->add_option("--indir", report_in, "History tree")->required();
    report->add_option("--outdir", report_out, "Report output directory");
    report->add_option("--grid", grid, "Curve grid resolution");

    std::string pareto_file;
    auto* pareto = app.add_subcommand("pareto", "Print the Pareto set of a history");
    pareto->add_option("--history", pareto_file, "History JSONL file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(run_flags);
        if (suite->parsed()) return cmd_suite(suite_config, suite_outdir, workers);
        if (report->parsed()) return cmd_report(report_in, report_out, grid);
        if (pareto->parsed()) return cmd_pareto(pareto_file);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
