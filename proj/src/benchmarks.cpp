#include "moho/benchmarks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace moho {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

void check_bounds(int variant, std::span<const double> x) {
    if (x.size() < 2) throw std::invalid_argument("ZDT needs dimension >= 2");
    for (size_t i = 0; i < x.size(); ++i) {
        double lo = 0.0, hi = 1.0;
        if (variant == 4 && i > 0) {
            lo = -5.0;
            hi = 5.0;
        }
        if (!(x[i] >= lo && x[i] <= hi))
            throw std::invalid_argument("ZDT input out of bounds");
    }
}

double tail_mean(std::span<const double> x) {
    double s = 0.0;
    for (size_t i = 1; i < x.size(); ++i) s += x[i];
    return s / static_cast<double>(x.size() - 1);
}

double zdt6_f1(double x1) {
    double s = std::sin(6.0 * kPi * x1);
    return 1.0 - std::exp(-4.0 * x1) * s * s * s * s * s * s;
}

// Minimum of ZDT6's f1 over x1 in [0,1]: coarse grid plus local refinement.
double zdt6_f1_min() {
    const int grid = 100000;
    double best_x = 0.0, best = zdt6_f1(0.0);
    for (int i = 1; i <= grid; ++i) {
        double x = static_cast<double>(i) / grid;
        double f = zdt6_f1(x);
        if (f < best) {
            best = f;
            best_x = x;
        }
    }
    double lo = std::max(0.0, best_x - 2.0 / grid);
    double hi = std::min(1.0, best_x + 2.0 / grid);
    for (int it = 0; it < 200; ++it) {
        double a = lo + (hi - lo) / 3.0, b = hi - (hi - lo) / 3.0;
        if (zdt6_f1(a) < zdt6_f1(b))
            hi = b;
        else
            lo = a;
    }
    return zdt6_f1((lo + hi) / 2.0);
}

}  // namespace

std::array<double, 2> zdt_evaluate(int variant, std::span<const double> x) {
    check_bounds(variant, x);
    const auto n = static_cast<double>(x.size());
    switch (variant) {
        case 1: {
            double f1 = x[0];
            double g = 1.0 + 9.0 * tail_mean(x);
            return {f1, g * (1.0 - std::sqrt(f1 / g))};
        }
        case 2: {
            double f1 = x[0];
            double g = 1.0 + 9.0 * tail_mean(x);
            double r = f1 / g;
            return {f1, g * (1.0 - r * r)};
        }
        case 3: {
            double f1 = x[0];
            double g = 1.0 + 9.0 * tail_mean(x);
            double r = f1 / g;
            return {f1, g * (1.0 - std::sqrt(r) - r * std::sin(10.0 * kPi * f1))};
        }
        case 4: {
            double f1 = x[0];
            double g = 1.0 + 10.0 * (n - 1.0);
            for (size_t i = 1; i < x.size(); ++i)
                g += x[i] * x[i] - 10.0 * std::cos(4.0 * kPi * x[i]);
            return {f1, g * (1.0 - std::sqrt(f1 / g))};
        }
        case 6: {
            double f1 = zdt6_f1(x[0]);
            double g = 1.0 + 9.0 * std::pow(tail_mean(x), 0.25);
            double r = f1 / g;
            return {f1, g * (1.0 - r * r)};
        }
        default:
            throw std::invalid_argument("unsupported ZDT variant");
    }
}

std::vector<std::array<double, 2>> analytic_pareto_front(int variant, int n_points) {
    if (n_points <= 0) throw std::invalid_argument("n_points must be positive");
    std::vector<std::array<double, 2>> front;
    front.reserve(static_cast<size_t>(n_points));
    switch (variant) {
        case 1:
        case 4:
            for (int i = 0; i < n_points; ++i) {
                double f1 = n_points == 1 ? 0.0
                                          : static_cast<double>(i) / (n_points - 1);
                front.push_back({f1, 1.0 - std::sqrt(f1)});
            }
            return front;
        case 2:
            for (int i = 0; i < n_points; ++i) {
                double f1 = n_points == 1 ? 0.0
                                          : static_cast<double>(i) / (n_points - 1);
                front.push_back({f1, 1.0 - f1 * f1});
            }
            return front;
        case 3: {
            // Dense sample of the g = 1 curve, then a non-dominance filter
            // keeps the five disconnected segments.
            const int dense = 200000;
            std::vector<std::array<double, 2>> kept;
            double best_f2 = std::numeric_limits<double>::infinity();
            for (int i = 0; i <= dense; ++i) {
                double f1 = static_cast<double>(i) / dense;
                double f2 =
                    1.0 - std::sqrt(f1) - f1 * std::sin(10.0 * kPi * f1);
                if (f2 < best_f2) {
                    kept.push_back({f1, f2});
                    best_f2 = f2;
                }
            }
            const auto total = static_cast<int>(kept.size());
            for (int i = 0; i < n_points; ++i) {
                int idx = n_points == 1
                              ? 0
                              : static_cast<int>(static_cast<long long>(i) *
                                                 (total - 1) / (n_points - 1));
                front.push_back(kept[static_cast<size_t>(idx)]);
            }
            return front;
        }
        case 6: {
            static const double f1_min = zdt6_f1_min();
            for (int i = 0; i < n_points; ++i) {
                double f1 = n_points == 1
                                ? f1_min
                                : f1_min + (1.0 - f1_min) * i / (n_points - 1);
                front.push_back({f1, 1.0 - f1 * f1});
            }
            return front;
        }
        default:
            throw std::invalid_argument("unsupported ZDT variant");
    }
}

int task_budget(int dimension, int multiplier) {
    if (dimension < 1 || multiplier < 1)
        throw std::invalid_argument("dimension and multiplier must be positive");
    return multiplier *
           static_cast<int>(std::lround(20.0 + 40.0 * std::sqrt(dimension)));
}

int default_trial_multiplier(const std::string& task_name) {
    if (task_name == "zdt1" || task_name == "zdt2" || task_name == "zdt3")
        return 3;
    return 5;
}

namespace {

ConfigSpace zdt_space(int variant, int dimension) {
    if (dimension < 2) throw std::invalid_argument("ZDT needs dimension >= 2");
    std::vector<HyperparameterSpec> specs;
    for (int j = 0; j < dimension; ++j) {
        HyperparameterSpec s;
        s.name = "x" + std::to_string(j + 1);
        s.kind = ParamKind::Continuous;
        s.lower = (variant == 4 && j > 0) ? -5.0 : 0.0;
        s.upper = (variant == 4 && j > 0) ? 5.0 : 1.0;
        // Off-center default so the first (default) trial never coincides
        // with the known optimum structure at the domain midpoint.
        s.default_value = s.lower + 0.75 * (s.upper - s.lower);
        specs.push_back(std::move(s));
    }
    return ConfigSpace(std::move(specs));
}

Task make_zdt(int variant, int dimension) {
    Task t;
    t.name = "zdt" + std::to_string(variant);
    t.space = zdt_space(variant, dimension);
    t.objective_count = 2;
    t.evaluate = [variant](const Configuration& c) {
        std::vector<double> x(c.values.size());
        for (size_t i = 0; i < c.values.size(); ++i) x[i] = std::get<double>(c.values[i]);
        auto [f1, f2] = zdt_evaluate(variant, x);
        return std::vector<double>{f1, f2};
    };
    t.analytic_front = [variant](int n) { return analytic_pareto_front(variant, n); };
    return t;
}

// Synthetic mixed-space family: separable per-parameter penalties with
// planted importance. Objective 1 depends only on the first ceil(D/2)
// parameters; objective 2 depends on all of them with mirrored targets on
// the first half, so the two objectives genuinely conflict.
struct MixedLayout {
    static constexpr const char* categories[4] = {"a", "b", "c", "d"};

    static HyperparameterSpec spec_for(int j) {
        HyperparameterSpec s;
        s.name = "p" + std::to_string(j);
        if (j % 4 == 3) {
            s.kind = ParamKind::Integer;
            s.lower = 0;
            s.upper = 10;
            s.default_value = std::int64_t{5};
        } else if (j % 2 == 1) {
            s.kind = ParamKind::Categorical;
            s.categories = {categories[0], categories[1], categories[2], categories[3]};
            s.default_value = std::string(categories[0]);
        } else {
            s.kind = ParamKind::Continuous;
            s.lower = 0.0;
            s.upper = 1.0;
            s.default_value = 0.5;
        }
        return s;
    }

    // Penalty in [0, 1] for parameter j against targets derived from j;
    // `mirrored` flips the target to create the f1/f2 trade-off.
    static double penalty(int j, const ParamValue& v, bool mirrored) {
        if (j % 4 == 3) {
            double c = static_cast<double>((j * 3) % 11);
            if (mirrored) c = 10.0 - c;
            double d = (static_cast<double>(std::get<std::int64_t>(v)) - c) / 10.0;
            return d * d;
        }
        if (j % 2 == 1) {
            int target = j % 4;
            if (mirrored) target = 3 - target;
            const auto& label = std::get<std::string>(v);
            int idx = 0;
            for (int k = 0; k < 4; ++k)
                if (label == categories[k]) idx = k;
            return std::abs(idx - target) / 3.0;
        }
        double c = 0.25 + 0.25 * (j % 3);
        if (mirrored) c = 1.0 - c;
        double d = std::get<double>(v) - c;
        return d * d;
    }
};

Task make_mixed(int dimension) {
    if (dimension < 2) throw std::invalid_argument("mixed needs dimension >= 2");
    std::vector<HyperparameterSpec> specs;
    for (int j = 0; j < dimension; ++j) specs.push_back(MixedLayout::spec_for(j));
    const int half = (dimension + 1) / 2;
    Task t;
    t.name = "mixed";
    t.space = ConfigSpace(std::move(specs));
    t.objective_count = 2;
    t.evaluate = [dimension, half](const Configuration& c) {
        double f1 = 0.0, f2 = 0.0;
        for (int j = 0; j < half; ++j) {
            f1 += MixedLayout::penalty(j, c.values[static_cast<size_t>(j)], false);
            f2 += MixedLayout::penalty(j, c.values[static_cast<size_t>(j)], true);
        }
        for (int j = half; j < dimension; ++j)
            f2 += MixedLayout::penalty(j, c.values[static_cast<size_t>(j)], false);
        return std::vector<double>{f1 / half, f2 / dimension};
    };
    return t;
}

}  // namespace

Task make_task(const std::string& name, int dimension) {
    if (name == "zdt1") return make_zdt(1, dimension);
    if (name == "zdt2") return make_zdt(2, dimension);
    if (name == "zdt3") return make_zdt(3, dimension);
    if (name == "zdt4") return make_zdt(4, dimension);
    if (name == "zdt6") return make_zdt(6, dimension);
    if (name == "mixed") return make_mixed(dimension);
    throw std::invalid_argument("unknown task: " + name);
}

std::vector<std::string> task_names() {
    return {"zdt1", "zdt2", "zdt3", "zdt4", "zdt6", "mixed"};
}

}  // namespace moho
