#include "moho/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "moho/metrics.hpp"

namespace moho {

void Nsga2Settings::validate() const {
    if (population_size < 2 || population_size % 2 != 0)
        throw std::invalid_argument("population_size must be a positive even number");
    if (!(crossover_prob >= 0.0 && crossover_prob <= 1.0))
        throw std::invalid_argument("crossover_prob must be in [0, 1]");
    if (!(mutation_prob >= 0.0 && mutation_prob <= 1.0))
        throw std::invalid_argument("mutation_prob must be in [0, 1]");
    if (!(sbx_eta > 0.0) || !(pm_eta > 0.0))
        throw std::invalid_argument("distribution indices must be positive");
}

RunHistory run_random_search(const Task& task, int budget, std::uint64_t seed) {
    if (budget < 1) throw std::invalid_argument("budget must be positive");
    RunHistory h;
    h.task_name = task.name;
    h.optimizer_name = "random";
    h.seed = seed;
    h.budget = budget;
    h.settings = nlohmann::json{{"budget", budget}};
    h.space = task.space;
    Rng rng(seed);
    for (int i = 0; i < budget; ++i) {
        TrialRecord r;
        r.trial_index = i;
        r.config = sample_one(task.space, rng);
        r.objectives = task.evaluate(r.config);
        r.source = TrialSource::Initial;
        h.records.push_back(std::move(r));
    }
    return h;
}

std::vector<std::vector<size_t>> fast_nondominated_sort(
    const std::vector<std::vector<double>>& points) {
    const size_t n = points.size();
    std::vector<std::vector<size_t>> dominated_by(n);
    std::vector<int> domination_count(n, 0);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            if (dominates(points[i], points[j])) {
                dominated_by[i].push_back(j);
                ++domination_count[j];
            } else if (dominates(points[j], points[i])) {
                dominated_by[j].push_back(i);
                ++domination_count[i];
            }
        }
    }
    std::vector<std::vector<size_t>> fronts;
    std::vector<size_t> current;
    for (size_t i = 0; i < n; ++i)
        if (domination_count[i] == 0) current.push_back(i);
    while (!current.empty()) {
        std::vector<size_t> next;
        for (size_t i : current) {
            for (size_t j : dominated_by[i]) {
                if (--domination_count[j] == 0) next.push_back(j);
            }
        }
        std::sort(next.begin(), next.end());
        fronts.push_back(std::move(current));
        current = std::move(next);
    }
    return fronts;
}

std::vector<double> crowding_distance(const std::vector<std::vector<double>>& front) {
    if (front.empty()) throw std::invalid_argument("empty front");
    const size_t n = front.size();
    const size_t m = front.front().size();
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(n, 0.0);
    std::vector<size_t> order(n);
    for (size_t obj = 0; obj < m; ++obj) {
        for (size_t i = 0; i < n; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            return front[a][obj] < front[b][obj];
        });
        dist[order.front()] = inf;
        dist[order.back()] = inf;
        const double span = front[order.back()][obj] - front[order.front()][obj];
        if (span <= 0.0) continue;  // degenerate objective contributes 0
        for (size_t k = 1; k + 1 < n; ++k) {
            if (dist[order[k]] == inf) continue;
            dist[order[k]] +=
                (front[order[k + 1]][obj] - front[order[k - 1]][obj]) / span;
        }
    }
    return dist;
}

namespace {

struct Individual {
    Configuration config;
    std::vector<double> objectives;
    int rank = 0;
    double crowding = 0.0;
};

void rank_population(std::vector<Individual>& pop) {
    std::vector<std::vector<double>> pts;
    pts.reserve(pop.size());
    for (const auto& ind : pop) pts.push_back(ind.objectives);
    auto fronts = fast_nondominated_sort(pts);
    for (size_t k = 0; k < fronts.size(); ++k) {
        std::vector<std::vector<double>> front_pts;
        front_pts.reserve(fronts[k].size());
        for (size_t i : fronts[k]) front_pts.push_back(pts[i]);
        auto crowd = crowding_distance(front_pts);
        for (size_t pos = 0; pos < fronts[k].size(); ++pos) {
            pop[fronts[k][pos]].rank = static_cast<int>(k);
            pop[fronts[k][pos]].crowding = crowd[pos];
        }
    }
}

bool crowded_less(const Individual& a, const Individual& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    return a.crowding > b.crowding;
}

const Individual& tournament(const std::vector<Individual>& pop, Rng& rng) {
    const auto& a = pop[rng.uniform_index(pop.size())];
    const auto& b = pop[rng.uniform_index(pop.size())];
    return crowded_less(a, b) ? a : b;
}

// Simulated binary crossover on one encoded numeric gene pair.
void sbx_gene(double& x1, double& x2, double lo, double hi, double eta, Rng& rng) {
    if (std::abs(x1 - x2) < 1e-14) return;
    double y1 = std::min(x1, x2), y2 = std::max(x1, x2);
    double u = rng.uniform01();
    auto spread = [&](double beta_bound) {
        double alpha = 2.0 - std::pow(beta_bound, -(eta + 1.0));
        if (u <= 1.0 / alpha) return std::pow(u * alpha, 1.0 / (eta + 1.0));
        return std::pow(1.0 / (2.0 - u * alpha), 1.0 / (eta + 1.0));
    };
    double beta1 = 1.0 + 2.0 * (y1 - lo) / (y2 - y1);
    double beta2 = 1.0 + 2.0 * (hi - y2) / (y2 - y1);
    double c1 = 0.5 * ((y1 + y2) - spread(beta1) * (y2 - y1));
    double c2 = 0.5 * ((y1 + y2) + spread(beta2) * (y2 - y1));
    c1 = std::clamp(c1, lo, hi);
    c2 = std::clamp(c2, lo, hi);
    if (rng.uniform01() < 0.5) std::swap(c1, c2);
    x1 = c1;
    x2 = c2;
}

// Polynomial mutation on one encoded numeric gene.
double pm_gene(double x, double lo, double hi, double eta, Rng& rng) {
    const double span = hi - lo;
    if (span <= 0.0) return x;
    double u = rng.uniform01();
    double delta;
    if (u < 0.5) {
        double b = (x - lo) / span;
        delta = std::pow(2.0 * u + (1.0 - 2.0 * u) * std::pow(1.0 - b, eta + 1.0),
                         1.0 / (eta + 1.0)) -
                1.0;
    } else {
        double b = (hi - x) / span;
        delta = 1.0 - std::pow(2.0 * (1.0 - u) +
                                   2.0 * (u - 0.5) * std::pow(1.0 - b, eta + 1.0),
                               1.0 / (eta + 1.0));
    }
    return std::clamp(x + delta * span, lo, hi);
}

void crossover(Configuration& a, Configuration& b, const ConfigSpace& space,
               const Nsga2Settings& s, Rng& rng) {
    if (rng.uniform01() >= s.crossover_prob) return;
    for (int j = 0; j < space.size(); ++j) {
        const auto& spec = space.spec(j);
        const auto js = static_cast<size_t>(j);
        if (spec.kind == ParamKind::Categorical) {
            if (rng.uniform01() < 0.5) std::swap(a.values[js], b.values[js]);
        } else {
            if (rng.uniform01() >= 0.5) continue;
            double x1 = encode_value(a.values[js], spec);
            double x2 = encode_value(b.values[js], spec);
            sbx_gene(x1, x2, spec.encoded_lower(), spec.encoded_upper(), s.sbx_eta, rng);
            a.values[js] = decode_value(x1, spec);
            b.values[js] = decode_value(x2, spec);
        }
    }
}

void mutate(Configuration& c, const ConfigSpace& space, const Nsga2Settings& s,
            double pm, Rng& rng) {
    for (int j = 0; j < space.size(); ++j) {
        if (rng.uniform01() >= pm) continue;
        const auto& spec = space.spec(j);
        const auto js = static_cast<size_t>(j);
        if (spec.kind == ParamKind::Categorical) {
            c.values[js] = spec.categories[rng.uniform_index(spec.categories.size())];
        } else {
            double x = encode_value(c.values[js], spec);
            x = pm_gene(x, spec.encoded_lower(), spec.encoded_upper(), s.pm_eta, rng);
            c.values[js] = decode_value(x, spec);
        }
    }
}

}  // namespace

RunHistory run_nsga2(const Task& task, const Nsga2Settings& settings, int budget,
                     std::uint64_t seed) {
    settings.validate();
    if (budget < settings.population_size)
        throw std::invalid_argument("budget must cover one population");

    RunHistory h;
    h.task_name = task.name;
    h.optimizer_name = "nsga2";
    h.seed = seed;
    h.budget = budget;
    h.settings = nlohmann::json{{"budget", budget},
                                {"population_size", settings.population_size},
                                {"crossover_prob", settings.crossover_prob},
                                {"sbx_eta", settings.sbx_eta},
                                {"pm_eta", settings.pm_eta}};
    h.space = task.space;

    Rng rng(seed);
    const double pm = settings.mutation_prob > 0.0
                          ? settings.mutation_prob
                          : 1.0 / static_cast<double>(task.space.size());

    auto record = [&](const Individual& ind, TrialSource source) {
        TrialRecord r;
        r.trial_index = static_cast<int>(h.records.size());
        r.config = ind.config;
        r.objectives = ind.objectives;
        r.source = source;
        h.records.push_back(std::move(r));
    };

    std::vector<Individual> pop;
    for (int i = 0; i < settings.population_size && static_cast<int>(h.records.size()) < budget; ++i) {
        Individual ind;
        ind.config = sample_one(task.space, rng);
        ind.objectives = task.evaluate(ind.config);
        record(ind, TrialSource::Initial);
        pop.push_back(std::move(ind));
    }
    rank_population(pop);

    while (static_cast<int>(h.records.size()) < budget) {
        std::vector<Individual> offspring;
        while (static_cast<int>(offspring.size()) < settings.population_size &&
               static_cast<int>(h.records.size()) < budget) {
            Configuration a = tournament(pop, rng).config;
            Configuration b = tournament(pop, rng).config;
            crossover(a, b, task.space, settings, rng);
            mutate(a, task.space, settings, pm, rng);
            mutate(b, task.space, settings, pm, rng);
            for (Configuration* c : {&a, &b}) {
                if (static_cast<int>(h.records.size()) >= budget) break;
                Individual ind;
                ind.config = std::move(*c);
                ind.objectives = task.evaluate(ind.config);
                record(ind, TrialSource::Acquisition);
                offspring.push_back(std::move(ind));
            }
        }
        // Environmental selection over parents + offspring.
        for (auto& ind : offspring) pop.push_back(std::move(ind));
        rank_population(pop);
        std::vector<std::vector<double>> pts;
        pts.reserve(pop.size());
        for (const auto& ind : pop) pts.push_back(ind.objectives);
        auto fronts = fast_nondominated_sort(pts);
        std::vector<Individual> next;
        for (const auto& front : fronts) {
            if (static_cast<int>(next.size()) + static_cast<int>(front.size()) <=
                settings.population_size) {
                for (size_t i : front) next.push_back(pop[i]);
            } else {
                std::vector<size_t> by_crowding(front.begin(), front.end());
                std::stable_sort(by_crowding.begin(), by_crowding.end(),
                                 [&](size_t x, size_t y) {
                                     return pop[x].crowding > pop[y].crowding;
                                 });
                for (size_t i : by_crowding) {
                    if (static_cast<int>(next.size()) >= settings.population_size)
                        break;
                    next.push_back(pop[i]);
                }
            }
            if (static_cast<int>(next.size()) >= settings.population_size) break;
        }
        pop = std::move(next);
        rank_population(pop);
    }
    return h;
}

}  // namespace moho
