#include "moho/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <stdexcept>

namespace moho {

namespace fs = std::filesystem;

std::vector<LoadedRun> load_history_tree(const fs::path& dir) {
    std::vector<LoadedRun> runs;
    if (!fs::exists(dir)) return runs;
    std::vector<fs::path> files;
    for (const auto& entry : fs::recursive_directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".jsonl")
            files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());  // deterministic report contents
    for (const auto& path : files) {
        LoadedRun run;
        run.history = read_jsonl(path);
        run.task = run.history.task_name;
        run.optimizer = run.history.optimizer_name;
        run.seed = run.history.seed;
        runs.push_back(std::move(run));
    }
    return runs;
}

std::map<std::string, TaskNormalization> compute_task_normalization(
    const std::vector<LoadedRun>& runs) {
    std::map<std::string, TaskNormalization> norms;
    for (const auto& run : runs) {
        auto& norm = norms[run.task];
        for (const auto& rec : run.history.records) {
            if (norm.ref.empty())
                norm.ref.assign(rec.objectives.size(),
                                -std::numeric_limits<double>::infinity());
            for (size_t j = 0; j < rec.objectives.size(); ++j)
                norm.ref[j] = std::max(norm.ref[j], rec.objectives[j]);
        }
    }
    for (auto& [task, norm] : norms) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        for (const auto& run : runs) {
            if (run.task != task) continue;
            double final_hv = hypervolume_2d(
                pareto_front(run.history.objective_matrix()), norm.ref);
            lo = std::min(lo, final_hv);
            hi = std::max(hi, final_hv);
        }
        norm.hv_min = lo;
        norm.hv_max = hi;
    }
    return norms;
}

std::map<CurveKey, ConvergenceCurve> compute_curves(
    const std::vector<LoadedRun>& runs,
    const std::map<std::string, TaskNormalization>& norms) {
    std::map<CurveKey, ConvergenceCurve> curves;
    for (const auto& run : runs) {
        const auto& norm = norms.at(run.task);
        curves[CurveKey{run.optimizer, run.task, run.seed}] = hv_regret_curve(
            run.history.objective_matrix(), norm.ref, norm.hv_min, norm.hv_max);
    }
    return curves;
}

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string svg_coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace

std::string render_convergence_svg(const AggregateResult& agg) {
    const double width = 860, height = 540;
    const double ml = 70, mr = 180, mt = 30, mb = 55;
    const double pw = width - ml - mr, ph = height - mt - mb;
    auto px = [&](double x) { return ml + x * pw; };
    auto py = [&](double y) { return mt + (1.0 - y) * ph; };

    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                    "#9467bd", "#ff7f0e", "#8c564b"};
    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + svg_coord(width) +
           "\" height=\"" + svg_coord(height) + "\" viewBox=\"0 0 " +
           svg_coord(width) + " " + svg_coord(height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (int i = 0; i <= 5; ++i) {
        double t = i / 5.0;
        svg += "<line x1=\"" + svg_coord(px(t)) + "\" y1=\"" + svg_coord(py(0)) +
               "\" x2=\"" + svg_coord(px(t)) + "\" y2=\"" + svg_coord(py(1)) +
               "\" stroke=\"#dddddd\"/>\n";
        svg += "<line x1=\"" + svg_coord(px(0)) + "\" y1=\"" + svg_coord(py(t)) +
               "\" x2=\"" + svg_coord(px(1)) + "\" y2=\"" + svg_coord(py(t)) +
               "\" stroke=\"#dddddd\"/>\n";
        svg += "<text x=\"" + svg_coord(px(t)) + "\" y=\"" + svg_coord(py(0) + 20) +
               "\" font-size=\"12\" text-anchor=\"middle\">" + fmt(t) + "</text>\n";
        svg += "<text x=\"" + svg_coord(px(0) - 10) + "\" y=\"" +
               svg_coord(py(t) + 4) + "\" font-size=\"12\" text-anchor=\"end\">" +
               fmt(t) + "</text>\n";
    }
    svg += "<rect x=\"" + svg_coord(ml) + "\" y=\"" + svg_coord(mt) + "\" width=\"" +
           svg_coord(pw) + "\" height=\"" + svg_coord(ph) +
           "\" fill=\"none\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + svg_coord(ml + pw / 2) + "\" y=\"" +
           svg_coord(height - 12) +
           "\" font-size=\"14\" text-anchor=\"middle\">normalized trials</text>\n";
    svg += "<text x=\"18\" y=\"" + svg_coord(mt + ph / 2) +
           "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 18 " +
           svg_coord(mt + ph / 2) +
           ")\">normalized HV regret</text>\n";

    int color = 0;
    double legend_y = mt + 10;
    for (const auto& [name, curve] : agg.by_optimizer) {
        const char* c = palette[color % 6];
        // Standard-error band.
        std::string band = "<path d=\"M";
        for (size_t i = 0; i < curve.xs.size(); ++i) {
            double upper = std::min(1.0, curve.mean[i] + curve.stderr_[i]);
            band += (i ? " L" : "") + std::string(" ") + svg_coord(px(curve.xs[i])) +
                    " " + svg_coord(py(upper));
        }
        for (size_t k = curve.xs.size(); k-- > 0;) {
            double lower = std::max(0.0, curve.mean[k] - curve.stderr_[k]);
            band += " L " + svg_coord(px(curve.xs[k])) + " " + svg_coord(py(lower));
        }
        band += " Z\" fill=\"" + std::string(c) + "\" fill-opacity=\"0.15\" stroke=\"none\"/>\n";
        svg += band;

        std::string line = "<polyline fill=\"none\" stroke=\"" + std::string(c) +
                           "\" stroke-width=\"1.8\" points=\"";
        for (size_t i = 0; i < curve.xs.size(); ++i)
            line += svg_coord(px(curve.xs[i])) + "," +
                    svg_coord(py(std::clamp(curve.mean[i], 0.0, 1.0))) + " ";
        line += "\"/>\n";
        svg += line;

        svg += "<line x1=\"" + svg_coord(width - mr + 14) + "\" y1=\"" +
               svg_coord(legend_y) + "\" x2=\"" + svg_coord(width - mr + 44) +
               "\" y2=\"" + svg_coord(legend_y) + "\" stroke=\"" + c +
               "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"" + svg_coord(width - mr + 50) + "\" y=\"" +
               svg_coord(legend_y + 4) + "\" font-size=\"13\">" + name + "</text>\n";
        legend_y += 20;
        ++color;
    }
    svg += "</svg>\n";
    return svg;
}

ReportSummary write_report(const fs::path& indir, const fs::path& outdir,
                           const ReportOptions& options) {
    ReportSummary summary;
    auto runs = load_history_tree(indir);
    summary.n_histories = static_cast<int>(runs.size());
    if (runs.empty()) throw std::runtime_error("no histories found under " + indir.string());

    auto norms = compute_task_normalization(runs);
    auto curves = compute_curves(runs, norms);
    auto agg = aggregate(curves, options.grid_resolution);
    for (const auto& key : agg.missing)
        summary.warnings.push_back("missing cell: optimizer=" + key.optimizer +
                                   " task=" + key.task +
                                   " seed=" + std::to_string(key.seed));

    fs::create_directories(outdir);
    {
        std::ofstream f(outdir / "curves.csv", std::ios::trunc);
        f << "optimizer,x,mean,stderr\n";
        for (const auto& [name, curve] : agg.by_optimizer)
            for (size_t i = 0; i < curve.xs.size(); ++i)
                f << name << ',' << fmt(curve.xs[i]) << ',' << fmt(curve.mean[i])
                  << ',' << fmt(curve.stderr_[i]) << '\n';
    }
    {
        std::ofstream f(outdir / "auc.csv", std::ios::trunc);
        f << "optimizer,task,seed,auc\n";
        for (const auto& [key, curve] : curves)
            f << key.optimizer << ',' << key.task << ',' << key.seed << ','
              << fmt(auc(curve)) << '\n';
    }
    {
        std::ofstream f(outdir / "plot.svg", std::ios::trunc);
        f << render_convergence_svg(agg);
    }
    return summary;
}

}  // namespace moho
