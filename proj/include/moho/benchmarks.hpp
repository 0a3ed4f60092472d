#pragma once

#include <array>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "moho/configspace.hpp"

namespace moho {

// A multi-objective test problem over a configuration space. `evaluate` is
// deterministic and returns `objective_count` costs to minimize.
struct Task {
    std::string name;
    ConfigSpace space;
    int objective_count = 2;
    std::function<std::vector<double>(const Configuration&)> evaluate;
    // Reference points of the true Pareto front; empty function when unknown.
    std::function<std::vector<std::array<double, 2>>(int)> analytic_front;
};

// Standard ZDT problem family (variants 1, 2, 3, 4, 6); minimization, m = 2.
// Domain: [0,1]^n, except ZDT4 where x2..xn are in [-5,5].
std::array<double, 2> zdt_evaluate(int variant, std::span<const double> x);

// Samples of the true front, non-dominated within the returned set.
std::vector<std::array<double, 2>> analytic_pareto_front(int variant, int n_points);

// trials = multiplier * round(20 + 40 * sqrt(D)).
int task_budget(int dimension, int multiplier);

// Default trial multiplier: 3 for zdt1-3, 5 otherwise.
int default_trial_multiplier(const std::string& task_name);

// Registry: "zdt1", "zdt2", "zdt3", "zdt4", "zdt6", and the synthetic
// "mixed" family (continuous + categorical, separable planted importance).
Task make_task(const std::string& name, int dimension);
std::vector<std::string> task_names();

}  // namespace moho
