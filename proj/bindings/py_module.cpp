#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <variant>

#include "moho/acquisition.hpp"
#include "moho/baselines.hpp"
#include "moho/benchmarks.hpp"
#include "moho/hpi.hpp"
#include "moho/metrics.hpp"
#include "moho/optimizer.hpp"
#include "moho/runhistory.hpp"
#include "moho/scalarization.hpp"
#include "moho/suite.hpp"
#include "moho/surrogate.hpp"

namespace py = pybind11;
using namespace moho;

namespace {

py::object value_to_py(const ParamValue& v) {
    if (const double* x = std::get_if<double>(&v)) return py::float_(*x);
    if (const std::int64_t* x = std::get_if<std::int64_t>(&v)) return py::int_(*x);
    return py::str(std::get<std::string>(v));
}

Configuration config_from_py(const py::sequence& seq, const ConfigSpace& space) {
    Configuration c;
    for (int j = 0; j < space.size(); ++j) {
        py::object item = seq[static_cast<size_t>(j)];
        switch (space.spec(j).kind) {
            case ParamKind::Continuous:
                c.values.emplace_back(item.cast<double>());
                break;
            case ParamKind::Integer:
                c.values.emplace_back(item.cast<std::int64_t>());
                break;
            case ParamKind::Categorical:
                c.values.emplace_back(item.cast<std::string>());
                break;
        }
    }
    return c;
}

py::list config_to_py(const Configuration& c) {
    py::list out;
    for (const auto& v : c.values) out.append(value_to_py(v));
    return out;
}

py::dict record_to_py(const TrialRecord& r) {
    py::dict d;
    d["trial"] = r.trial_index;
    d["config"] = config_to_py(r.config);
    d["objectives"] = r.objectives;
    d["weights"] = r.weights;
    d["reduced"] = r.reduced;
    d["source"] = to_string(r.source);
    if (r.selected_important) d["important"] = *r.selected_important;
    if (r.anchor) d["anchor"] = config_to_py(*r.anchor);
    return d;
}

py::dict history_to_py(const RunHistory& h) {
    py::dict d;
    d["task"] = h.task_name;
    d["optimizer"] = h.optimizer_name;
    d["seed"] = h.seed;
    d["budget"] = h.budget;
    d["settings"] = h.settings.dump();
    py::list records;
    for (const auto& r : h.records) records.append(record_to_py(r));
    d["records"] = records;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Multi-objective hyperparameter optimization toolkit";

    py::class_<Rng>(m, "Rng").def(py::init<std::uint64_t>(), py::arg("seed") = 0);

    py::class_<ConfigSpace>(m, "ConfigSpace")
        .def_static("from_json",
                    [](const std::string& text) {
                        return ConfigSpace::from_json(nlohmann::json::parse(text));
                    },
                    py::arg("text"))
        .def("to_json", [](const ConfigSpace& s) { return s.to_json().dump(); })
        .def("__len__", &ConfigSpace::size)
        .def_property_readonly("tunable_count", &ConfigSpace::tunable_count)
        .def("sample",
             [](const ConfigSpace& s, int count, Rng& rng) {
                 py::list out;
                 for (const auto& c : sample(s, count, rng)) out.append(config_to_py(c));
                 return out;
             },
             py::arg("count"), py::arg("rng"))
        .def("default_configuration",
             [](const ConfigSpace& s) { return config_to_py(default_configuration(s)); })
        .def("encode",
             [](const ConfigSpace& s, const py::sequence& config) {
                 return encode(config_from_py(config, s), s);
             },
             py::arg("config"))
        .def("reduce",
             [](const ConfigSpace& s, const std::set<int>& important,
                const py::sequence& anchor) {
                 return reduce(s, important, config_from_py(anchor, s));
             },
             py::arg("important"), py::arg("anchor"));

    m.def("zdt_evaluate",
          [](int variant, const std::vector<double>& x) {
              auto f = zdt_evaluate(variant, x);
              return py::make_tuple(f[0], f[1]);
          },
          py::arg("variant"), py::arg("x"));
    m.def("analytic_pareto_front", &analytic_pareto_front, py::arg("variant"),
          py::arg("n_points"));
    m.def("task_budget", &task_budget, py::arg("dimension"), py::arg("multiplier"));
    m.def("default_trial_multiplier", &default_trial_multiplier, py::arg("task"));
    m.def("task_names", &task_names);

    m.def("sample_weights",
          [](int m_objectives, Rng& rng) { return sample_weights(m_objectives, rng).w; },
          py::arg("m"), py::arg("rng"));
    m.def("normalize_objectives", &normalize_objectives, py::arg("costs"));
    m.def("scalarize",
          [](const std::vector<double>& f, const std::vector<double>& w, double rho) {
              return scalarize(f, WeightVector{w}, ScalarizationParams{rho});
          },
          py::arg("f"), py::arg("weights"), py::arg("rho") = 0.05);

    m.def("expected_improvement", &expected_improvement, py::arg("mean"),
          py::arg("variance"), py::arg("best"));

    py::class_<Forest>(m, "Forest")
        .def("predict",
             [](const Forest& f, const std::vector<double>& x) {
                 auto [mean, var] = f.predict(x);
                 return py::make_tuple(mean, var);
             },
             py::arg("x"));
    m.def("fit_forest",
          [](const std::vector<std::vector<double>>& X, const std::vector<double>& y,
             int n_trees, std::uint64_t seed) {
              ForestParams params;
              params.n_trees = n_trees;
              Rng rng(seed);
              return fit(X, y, params, rng);
          },
          py::arg("X"), py::arg("y"), py::arg("n_trees") = 64, py::arg("seed") = 0);

    m.def("shapley_exact",
          [](const std::function<double(std::uint64_t)>& value_fn, int d) {
              return shapley_exact(value_fn, d);
          },
          py::arg("value_fn"), py::arg("d"),
          "value_fn receives coalitions as bitmasks over the d players");
    m.def("shapley_permutation",
          [](const std::function<double(std::uint64_t)>& value_fn, int d,
             int n_permutations, Rng& rng) {
              return shapley_permutation(value_fn, d, n_permutations, rng);
          },
          py::arg("value_fn"), py::arg("d"), py::arg("n_permutations"), py::arg("rng"));
    m.def("select_important", &select_important, py::arg("shapley"), py::arg("tau"));

    m.def("pareto_front", &pareto_front, py::arg("points"));
    m.def("pareto_indices", &pareto_indices, py::arg("points"));
    m.def("hypervolume_2d", &hypervolume_2d, py::arg("front"), py::arg("ref"));
    m.def("fast_nondominated_sort", &fast_nondominated_sort, py::arg("points"));
    m.def("crowding_distance", &crowding_distance, py::arg("front"));
    m.def("auc",
          [](const std::vector<double>& xs, const std::vector<double>& ys) {
              return auc(ConvergenceCurve{xs, ys});
          },
          py::arg("xs"), py::arg("ys"));

    m.def("run_optimizer",
          [](const std::string& optimizer, const std::string& task_name, int dim,
             int trials, std::uint64_t seed, const std::string& overrides_json) {
              auto task = make_task(task_name, dim);
              auto overrides = nlohmann::json::parse(overrides_json);
              return history_to_py(
                  run_named_optimizer(optimizer, task, trials, seed, overrides));
          },
          py::arg("optimizer"), py::arg("task"), py::arg("dim") = 10,
          py::arg("trials") = 100, py::arg("seed") = 0,
          py::arg("overrides") = std::string("{}"));
}
