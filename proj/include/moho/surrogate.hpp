#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "moho/rng.hpp"

namespace moho {

struct ForestParams {
    int n_trees = 64;
    std::optional<int> max_depth;   // unbounded when absent
    int min_samples_split = 3;
    double max_features_fraction = 0.8;
    bool bootstrap = true;

    void validate() const;
};

// Axis-aligned regression tree; leaves hold the mean of their targets.
struct Tree {
    struct Node {
        int feature = -1;        // -1 marks a leaf
        double threshold = 0.0;
        int left = -1;
        int right = -1;
        double value = 0.0;      // leaf mean
    };
    std::vector<Node> nodes;

    double predict(const double* x) const {
        int i = 0;
        while (nodes[static_cast<size_t>(i)].feature >= 0) {
            const Node& n = nodes[static_cast<size_t>(i)];
            i = x[n.feature] <= n.threshold ? n.left : n.right;
        }
        return nodes[static_cast<size_t>(i)].value;
    }
};

// Random-forest regressor over encoded configurations.
class Forest {
public:
    Forest() = default;
    Forest(std::vector<Tree> trees, ForestParams params, int n_features)
        : trees_(std::move(trees)), params_(params), n_features_(n_features) {}

    int n_features() const { return n_features_; }
    const std::vector<Tree>& trees() const { return trees_; }
    const ForestParams& params() const { return params_; }
    bool empty() const { return trees_.empty(); }

    // (mean, population variance) across per-tree predictions.
    std::pair<double, double> predict(const std::vector<double>& x) const;

    // Mean only; hot path for importance games.
    double predict_mean(const double* x) const;

private:
    std::vector<Tree> trees_;
    ForestParams params_;
    int n_features_ = 0;
};

Forest fit(const std::vector<std::vector<double>>& X, const std::vector<double>& y,
           const ForestParams& params, Rng& rng);

}  // namespace moho
