#include "moho/hpi.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace moho {

void HpiSettings::validate() const {
    if (pool_size < 1) throw std::invalid_argument("pool_size must be positive");
    if (exact_limit < 1 || exact_limit > 24)
        throw std::invalid_argument("exact_limit out of range");
    if (permutation_factor < 1)
        throw std::invalid_argument("permutation_factor must be positive");
}

TunabilityGame::TunabilityGame(const ConfigSpace& space, const Forest& forest,
                               WeightVector weights, const Configuration& reference,
                               std::vector<Configuration> pool)
    : d_(space.size()), weights_(std::move(weights)), forest_(&forest) {
    if (pool.empty()) throw std::invalid_argument("pool must be non-empty");
    if (d_ > 63) throw std::invalid_argument("too many players for mask games");
    space.require_legal(reference);
    reference_encoded_ = encode(reference, space);
    pool_encoded_.reserve(pool.size());
    for (const auto& p : pool) {
        space.require_legal(p);
        pool_encoded_.push_back(encode(p, space));
    }
    reference_cost_ = forest_->predict_mean(reference_encoded_.data());
}

double TunabilityGame::value(std::uint64_t coalition_mask) const {
    if (coalition_mask == 0) return 0.0;  // the only hybrid is the reference
    std::vector<double> hybrid = reference_encoded_;
    double best = std::numeric_limits<double>::infinity();
    for (const auto& row : pool_encoded_) {
        for (std::uint64_t bits = coalition_mask; bits != 0; bits &= bits - 1) {
            int j = std::countr_zero(bits);
            hybrid[static_cast<size_t>(j)] = row[static_cast<size_t>(j)];
        }
        best = std::min(best, forest_->predict_mean(hybrid.data()));
        for (std::uint64_t bits = coalition_mask; bits != 0; bits &= bits - 1) {
            int j = std::countr_zero(bits);
            hybrid[static_cast<size_t>(j)] = reference_encoded_[static_cast<size_t>(j)];
        }
    }
    return std::max(0.0, reference_cost_ - best);
}

std::vector<double> shapley_exact(const CoalitionValueFn& value_fn, int d,
                                  int exact_limit) {
    if (d < 1) throw std::invalid_argument("need at least one player");
    if (d > exact_limit)
        throw std::invalid_argument("too many players for exact enumeration");

    const std::uint64_t n_masks = std::uint64_t{1} << d;
    std::vector<double> v(n_masks);
    for (std::uint64_t mask = 0; mask < n_masks; ++mask) v[mask] = value_fn(mask);

    // Permutation weight for |S| predecessors: |S|! (d-|S|-1)! / d!.
    std::vector<double> weight(static_cast<size_t>(d));
    for (int s = 0; s < d; ++s) {
        double w = 1.0 / d;
        for (int k = 1; k <= s; ++k) w *= static_cast<double>(k) / (d - k);
        weight[static_cast<size_t>(s)] = w;
    }

    std::vector<double> phi(static_cast<size_t>(d), 0.0);
    for (std::uint64_t mask = 0; mask < n_masks; ++mask) {
        const int size = std::popcount(mask);
        for (int j = 0; j < d; ++j) {
            if (mask & (std::uint64_t{1} << j)) continue;
            phi[static_cast<size_t>(j)] +=
                weight[static_cast<size_t>(size)] *
                (v[mask | (std::uint64_t{1} << j)] - v[mask]);
        }
    }
    return phi;
}

namespace {

// d! when it fits comfortably, otherwise "effectively infinite".
std::uint64_t factorial_capped(int d) {
    std::uint64_t f = 1;
    for (int k = 2; k <= d; ++k) {
        if (f > std::uint64_t{1} << 40) return std::uint64_t{1} << 62;
        f *= static_cast<std::uint64_t>(k);
    }
    return f;
}

}  // namespace

std::vector<double> shapley_permutation(const CoalitionValueFn& value_fn, int d,
                                        int n_permutations, Rng& rng) {
    if (d < 1) throw std::invalid_argument("need at least one player");
    if (d > 63) throw std::invalid_argument("too many players for mask games");
    if (n_permutations < 1)
        throw std::invalid_argument("n_permutations must be positive");

    std::unordered_map<std::uint64_t, double> memo;
    auto value = [&](std::uint64_t mask) {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        double v = value_fn(mask);
        memo.emplace(mask, v);
        return v;
    };

    std::vector<double> phi(static_cast<size_t>(d), 0.0);
    std::vector<int> perm(static_cast<size_t>(d));
    std::iota(perm.begin(), perm.end(), 0);

    auto accumulate_perm = [&]() {
        std::uint64_t mask = 0;
        double prev = value(0);
        for (int j : perm) {
            mask |= std::uint64_t{1} << j;
            double cur = value(mask);
            phi[static_cast<size_t>(j)] += cur - prev;
            prev = cur;
        }
    };

    const std::uint64_t total = factorial_capped(d);
    std::uint64_t used = 0;
    if (static_cast<std::uint64_t>(n_permutations) >= total) {
        // The request covers every ordering: enumerate each exactly once.
        std::sort(perm.begin(), perm.end());
        do {
            accumulate_perm();
            ++used;
        } while (std::next_permutation(perm.begin(), perm.end()));
    } else {
        for (int p = 0; p < n_permutations; ++p) {
            rng.shuffle(perm.begin(), perm.end());
            accumulate_perm();
        }
        used = static_cast<std::uint64_t>(n_permutations);
    }
    for (double& x : phi) x /= static_cast<double>(used);
    return phi;
}

std::vector<int> select_important(const std::vector<double>& shapley, double tau) {
    if (shapley.empty()) throw std::invalid_argument("empty Shapley vector");
    if (!(tau > 0.0 && tau <= 1.0))
        throw std::invalid_argument("tau must be in (0, 1]");

    std::vector<double> clamped(shapley.size());
    double total = 0.0;
    for (size_t j = 0; j < shapley.size(); ++j) {
        clamped[j] = std::max(shapley[j], 0.0);
        total += clamped[j];
    }

    std::vector<int> order(shapley.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return clamped[static_cast<size_t>(a)] > clamped[static_cast<size_t>(b)];
    });

    if (!(total > 0.0) || !std::isfinite(total)) return order;  // no reduction

    std::vector<int> selected;
    double cumulative = 0.0;
    for (int j : order) {
        selected.push_back(j);
        cumulative += clamped[static_cast<size_t>(j)];
        if (cumulative >= tau * total) break;
    }
    return selected;
}

HpiResult compute_hpi(const ConfigSpace& space, const Forest& forest,
                      const WeightVector& weights, const Configuration& reference,
                      double tau, const HpiSettings& settings, Rng& rng) {
    settings.validate();
    const int d = space.size();
    TunabilityGame game(space, forest, weights, reference,
                        sample(space, settings.pool_size, rng));
    auto value_fn = [&game](std::uint64_t mask) { return game.value(mask); };

    HpiResult result;
    if (d <= settings.exact_limit) {
        result.shapley = shapley_exact(value_fn, d, settings.exact_limit);
        result.method = "exact";
    } else {
        result.shapley = shapley_permutation(value_fn, d,
                                             settings.permutation_factor * d, rng);
        result.method = "permutation";
    }
    result.total_gain =
        std::accumulate(result.shapley.begin(), result.shapley.end(), 0.0);
    result.important = select_important(result.shapley, tau);
    return result;
}

}  // namespace moho
