#include "moho/surrogate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace moho {

void ForestParams::validate() const {
    if (n_trees < 1) throw std::invalid_argument("n_trees must be positive");
    if (max_depth && *max_depth < 1)
        throw std::invalid_argument("max_depth must be positive");
    if (min_samples_split < 1)
        throw std::invalid_argument("min_samples_split must be positive");
    if (!(max_features_fraction > 0.0 && max_features_fraction <= 1.0))
        throw std::invalid_argument("max_features_fraction must be in (0, 1]");
}

namespace {

struct Builder {
    const std::vector<std::vector<double>>& X;
    const std::vector<double>& y;
    const ForestParams& params;
    Rng& rng;
    int n_features;
    int mtry;

    Tree tree;
    std::vector<int> indices;            // sample indices, partitioned in place
    std::vector<int> feature_pool;
    std::vector<std::pair<double, double>> sorted;  // (x, y) per candidate split

    int build(int begin, int end, int depth) {
        const int size = end - begin;
        // Shift by the first target: constant nodes get exactly zero variance
        // and an exact leaf mean.
        const double y0 = y[static_cast<size_t>(indices[static_cast<size_t>(begin)])];
        double sum = 0.0, sumsq = 0.0;
        for (int i = begin; i < end; ++i) {
            double t = y[static_cast<size_t>(indices[static_cast<size_t>(i)])] - y0;
            sum += t;
            sumsq += t * t;
        }
        const double shifted_mean = sum / size;
        const double var = std::max(0.0, sumsq / size - shifted_mean * shifted_mean);
        const double mean = y0 + shifted_mean;

        const bool stop = size < params.min_samples_split || var <= 0.0 ||
                          (params.max_depth && depth >= *params.max_depth);
        if (!stop) {
            const double raw_sum = sum + static_cast<double>(size) * y0;
            if (int node = try_split(begin, end, raw_sum, depth); node >= 0) return node;
        }
        tree.nodes.push_back({-1, 0.0, -1, -1, mean});
        return static_cast<int>(tree.nodes.size()) - 1;
    }

    // Returns the split node index, or -1 if no feature admits a split.
    int try_split(int begin, int end, double sum, int depth) {
        const int size = end - begin;
        for (int j = 0; j < n_features; ++j) feature_pool[static_cast<size_t>(j)] = j;
        // Partial Fisher-Yates: the first mtry entries become the candidates.
        for (int j = 0; j < mtry; ++j) {
            auto pick = j + static_cast<int>(rng.uniform_index(
                                static_cast<std::uint64_t>(n_features - j)));
            std::swap(feature_pool[static_cast<size_t>(j)], feature_pool[static_cast<size_t>(pick)]);
        }

        int best_feature = -1;
        double best_threshold = 0.0;
        double best_score = std::numeric_limits<double>::infinity();
        for (int j = 0; j < mtry; ++j) {
            const int f = feature_pool[static_cast<size_t>(j)];
            sorted.resize(static_cast<size_t>(size));
            for (int i = 0; i < size; ++i) {
                int idx = indices[static_cast<size_t>(begin + i)];
                sorted[static_cast<size_t>(i)] = {X[static_cast<size_t>(idx)][static_cast<size_t>(f)],
                                                  y[static_cast<size_t>(idx)]};
            }
            std::sort(sorted.begin(), sorted.end());
            double left_sum = 0.0;
            for (int i = 0; i + 1 < size; ++i) {
                left_sum += sorted[static_cast<size_t>(i)].second;
                if (sorted[static_cast<size_t>(i)].first ==
                    sorted[static_cast<size_t>(i + 1)].first)
                    continue;
                const int nl = i + 1, nr = size - nl;
                const double right_sum = sum - left_sum;
                // Weighted within-node variance, dropping the constant sumsq:
                // minimizing it maximizes variance reduction.
                double score = -(left_sum * left_sum / nl + right_sum * right_sum / nr);
                if (score < best_score) {
                    best_score = score;
                    best_feature = f;
                    best_threshold = (sorted[static_cast<size_t>(i)].first +
                                      sorted[static_cast<size_t>(i + 1)].first) /
                                     2.0;
                }
            }
        }
        if (best_feature < 0) return -1;

        auto mid = std::partition(indices.begin() + begin, indices.begin() + end,
                                  [&](int idx) {
                                      return X[static_cast<size_t>(idx)][static_cast<size_t>(best_feature)] <=
                                             best_threshold;
                                  });
        const int split = static_cast<int>(mid - indices.begin());
        // A threshold between distinct values always separates the node.
        const int node = static_cast<int>(tree.nodes.size());
        tree.nodes.push_back({best_feature, best_threshold, -1, -1, 0.0});
        const int left = build(begin, split, depth + 1);
        const int right = build(split, end, depth + 1);
        tree.nodes[static_cast<size_t>(node)].left = left;
        tree.nodes[static_cast<size_t>(node)].right = right;
        return node;
    }
};

}  // namespace

Forest fit(const std::vector<std::vector<double>>& X, const std::vector<double>& y,
           const ForestParams& params, Rng& rng) {
    params.validate();
    if (X.empty() || X.size() != y.size())
        throw std::invalid_argument("fit needs non-empty X with matching y");
    const int n = static_cast<int>(X.size());
    const int n_features = static_cast<int>(X.front().size());
    if (n_features == 0) throw std::invalid_argument("fit needs at least one feature");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(X[static_cast<size_t>(i)].size()) != n_features)
            throw std::invalid_argument("ragged design matrix");
        for (double v : X[static_cast<size_t>(i)])
            if (!std::isfinite(v)) throw std::invalid_argument("non-finite feature");
        if (!std::isfinite(y[static_cast<size_t>(i)]))
            throw std::invalid_argument("non-finite target");
    }

    const int mtry = std::max(
        1, static_cast<int>(std::ceil(params.max_features_fraction * n_features)));
    std::vector<Tree> trees;
    trees.reserve(static_cast<size_t>(params.n_trees));
    for (int t = 0; t < params.n_trees; ++t) {
        Builder b{X, y, params, rng, n_features, mtry, {}, {}, {}, {}};
        b.feature_pool.resize(static_cast<size_t>(n_features));
        b.indices.resize(static_cast<size_t>(n));
        if (params.bootstrap) {
            for (int i = 0; i < n; ++i)
                b.indices[static_cast<size_t>(i)] = static_cast<int>(
                    rng.uniform_index(static_cast<std::uint64_t>(n)));
        } else {
            std::iota(b.indices.begin(), b.indices.end(), 0);
        }
        b.tree.nodes.reserve(static_cast<size_t>(2 * n));
        b.build(0, n, 0);
        trees.push_back(std::move(b.tree));
    }
    return Forest(std::move(trees), params, n_features);
}

std::pair<double, double> Forest::predict(const std::vector<double>& x) const {
    if (static_cast<int>(x.size()) != n_features_)
        throw std::invalid_argument("feature dimension mismatch");
    if (trees_.empty()) throw std::logic_error("forest is not fitted");
    std::vector<double> preds;
    preds.reserve(trees_.size());
    bool all_equal = true;
    for (const Tree& t : trees_) {
        preds.push_back(t.predict(x.data()));
        if (preds.back() != preds.front()) all_equal = false;
    }
    if (all_equal) return {preds.front(), 0.0};
    const auto k = static_cast<double>(preds.size());
    double mean = 0.0;
    for (double p : preds) mean += p;
    mean /= k;
    double var = 0.0;
    for (double p : preds) var += (p - mean) * (p - mean);
    return {mean, var / k};
}

double Forest::predict_mean(const double* x) const {
    double sum = 0.0;
    for (const Tree& t : trees_) sum += t.predict(x);
    return sum / static_cast<double>(trees_.size());
}

}  // namespace moho
