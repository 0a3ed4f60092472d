#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "moho/surrogate.hpp"

using namespace moho;

namespace {

Tree leaf_tree(double value) {
    Tree t;
    t.nodes.push_back({-1, 0.0, -1, -1, value});
    return t;
}

}  // namespace

TEST_SUITE("surrogate") {

TEST_CASE("constant targets give a zero-variance constant prediction") {
    std::vector<std::vector<double>> X{{0.1}, {0.5}, {0.9}, {0.3}};
    std::vector<double> y(4, 0.7);
    Rng rng(1);
    auto forest = fit(X, y, ForestParams{}, rng);
    auto [mean, var] = forest.predict({0.42});
    CHECK(mean == 0.7);
    CHECK(var == 0.0);
}

TEST_CASE("a single sample without bootstrap is memorized") {
    ForestParams params;
    params.bootstrap = false;
    Rng rng(2);
    auto forest = fit({{0.3, 0.6}}, {1.25}, params, rng);
    auto [mean, var] = forest.predict({0.3, 0.6});
    CHECK(mean == 1.25);
    CHECK(var == 0.0);
}

TEST_CASE("identity function is learned to within 0.1 MAE") {
    Rng data_rng(3);
    std::vector<std::vector<double>> X;
    std::vector<double> y;
    for (int i = 0; i < 200; ++i) {
        double x = data_rng.uniform01();
        X.push_back({x});
        y.push_back(x);
    }
    Rng rng(4);
    auto forest = fit(X, y, ForestParams{}, rng);
    double abs_err = 0.0;
    const int grid = 101;
    for (int i = 0; i < grid; ++i) {
        double x = static_cast<double>(i) / (grid - 1);
        abs_err += std::abs(forest.predict({x}).first - x);
    }
    CHECK(abs_err / grid < 0.1);
}

TEST_CASE("predict combines trees by mean and population variance") {
    Forest forest({leaf_tree(0.0), leaf_tree(1.0)}, ForestParams{}, 1);
    auto [mean, var] = forest.predict({0.5});
    CHECK(mean == 0.5);
    CHECK(var == 0.25);

    Forest same({leaf_tree(0.3), leaf_tree(0.3), leaf_tree(0.3)}, ForestParams{}, 1);
    CHECK(same.predict({0.1}).second == 0.0);
}

TEST_CASE("predictions stay within the target range") {
    Rng data_rng(5);
    for (int round = 0; round < 5; ++round) {
        std::vector<std::vector<double>> X;
        std::vector<double> y;
        for (int i = 0; i < 60; ++i) {
            X.push_back({data_rng.uniform01(), data_rng.uniform01()});
            y.push_back(data_rng.uniform(-3.0, 3.0));
        }
        Rng rng(50 + static_cast<std::uint64_t>(round));
        auto forest = fit(X, y, ForestParams{}, rng);
        double lo = *std::min_element(y.begin(), y.end());
        double hi = *std::max_element(y.begin(), y.end());
        for (int i = 0; i < 100; ++i) {
            auto [mean, var] = forest.predict({data_rng.uniform01(), data_rng.uniform01()});
            CHECK(mean >= lo);
            CHECK(mean <= hi);
            CHECK(var >= 0.0);
        }
    }
}

TEST_CASE("fitting is reproducible under a fixed seed") {
    Rng data_rng(6);
    std::vector<std::vector<double>> X;
    std::vector<double> y;
    for (int i = 0; i < 80; ++i) {
        X.push_back({data_rng.uniform01(), data_rng.uniform01(), data_rng.uniform01()});
        y.push_back(std::sin(6.0 * X.back()[0]) + X.back()[1]);
    }
    Rng a(99), b(99);
    auto fa = fit(X, y, ForestParams{}, a);
    auto fb = fit(X, y, ForestParams{}, b);
    for (int i = 0; i < 50; ++i) {
        std::vector<double> q{data_rng.uniform01(), data_rng.uniform01(),
                              data_rng.uniform01()};
        CHECK(fa.predict(q) == fb.predict(q));
    }
}

TEST_CASE("max_depth bounds the tree size") {
    Rng data_rng(7);
    std::vector<std::vector<double>> X;
    std::vector<double> y;
    for (int i = 0; i < 100; ++i) {
        X.push_back({data_rng.uniform01()});
        y.push_back(data_rng.uniform01());
    }
    ForestParams params;
    params.max_depth = 1;
    params.n_trees = 8;
    Rng rng(8);
    auto forest = fit(X, y, params, rng);
    for (const auto& tree : forest.trees()) CHECK(tree.nodes.size() <= 3);
}

TEST_CASE("nodes below min_samples_split become leaves") {
    ForestParams params;
    params.bootstrap = false;
    params.min_samples_split = 3;
    params.n_trees = 1;
    Rng rng(9);
    auto forest = fit({{0.0}, {1.0}}, {0.0, 1.0}, params, rng);
    REQUIRE(forest.trees().size() == 1);
    CHECK(forest.trees()[0].nodes.size() == 1);
    CHECK(forest.predict({0.0}).first == 0.5);
}

TEST_CASE("invalid inputs are rejected") {
    Rng rng(10);
    CHECK_THROWS(fit({}, {}, ForestParams{}, rng));
    CHECK_THROWS(fit({{0.1}}, {std::nan("")}, ForestParams{}, rng));
    CHECK_THROWS(fit({{std::numeric_limits<double>::infinity()}}, {0.1}, ForestParams{}, rng));
    auto forest = fit({{0.1, 0.2}}, {0.5}, ForestParams{}, rng);
    CHECK_THROWS(forest.predict({0.1}));
    ForestParams bad;
    bad.max_features_fraction = 0.0;
    CHECK_THROWS(fit({{0.1}}, {0.5}, bad, rng));
}

}  // TEST_SUITE
