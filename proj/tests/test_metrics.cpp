#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "moho/metrics.hpp"
#include "moho/rng.hpp"

using namespace moho;

namespace {

// Monte-Carlo dominated-area oracle over the [lo, ref] box.
std::pair<double, double> mc_hypervolume(const std::vector<std::vector<double>>& front,
                                         const std::vector<double>& ref,
                                         int samples, Rng& rng) {
    double lo0 = ref[0], lo1 = ref[1];
    for (const auto& p : front) {
        lo0 = std::min(lo0, p[0]);
        lo1 = std::min(lo1, p[1]);
    }
    // Staircase for O(log n) dominance lookups.
    auto stair = front;
    std::sort(stair.begin(), stair.end());
    std::vector<double> xs, ys;
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : stair) {
        if (p[1] < best) {
            xs.push_back(p[0]);
            ys.push_back(p[1]);
            best = p[1];
        }
    }
    int hits = 0;
    for (int i = 0; i < samples; ++i) {
        double x = rng.uniform(lo0, ref[0]);
        double y = rng.uniform(lo1, ref[1]);
        auto it = std::upper_bound(xs.begin(), xs.end(), x);
        if (it != xs.begin() && ys[static_cast<size_t>(it - xs.begin()) - 1] <= y)
            ++hits;
    }
    const double box = (ref[0] - lo0) * (ref[1] - lo1);
    const double p = static_cast<double>(hits) / samples;
    return {p * box, std::sqrt(p * (1.0 - p) / samples) * box};
}

std::vector<std::vector<double>> random_front(Rng& rng, int max_points) {
    const int n = 1 + static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(max_points)));
    std::vector<std::vector<double>> pts;
    for (int i = 0; i < n; ++i) pts.push_back({rng.uniform01(), rng.uniform01()});
    return pareto_front(pts);
}

}  // namespace

TEST_SUITE("metrics") {

TEST_CASE("pareto front basics") {
    std::vector<std::vector<double>> pts{{1, 2}, {2, 1}, {2, 2}};
    auto front = pareto_front(pts);
    REQUIRE(front.size() == 2);
    CHECK(front[0] == std::vector<double>{1, 2});
    CHECK(front[1] == std::vector<double>{2, 1});

    CHECK(pareto_front({{3, 4}}).size() == 1);
    CHECK(pareto_front({{1, 1}, {1, 1}}).size() == 1);
}

TEST_CASE("hypervolume hand values") {
    CHECK(hypervolume_2d({{0.5, 0.5}}, {1.0, 1.0}) == 0.25);
    CHECK(hypervolume_2d({{0.25, 0.75}, {0.5, 0.5}}, {1.0, 1.0}) ==
          doctest::Approx(0.3125).epsilon(1e-15));
    CHECK(hypervolume_2d({}, {1.0, 1.0}) == 0.0);
    // Points beyond the reference contribute nothing.
    CHECK(hypervolume_2d({{2.0, 2.0}}, {1.0, 1.0}) == 0.0);
    CHECK_THROWS(hypervolume_2d({{0.1, 0.1, 0.1}}, {1.0, 1.0, 1.0}));
}

TEST_CASE("hypervolume matches the Monte-Carlo oracle") {
    Rng rng(1);
    for (int round = 0; round < 10; ++round) {
        auto front = random_front(rng, 50);
        std::vector<double> ref{1.2, 1.2};
        double exact = hypervolume_2d(front, ref);
        auto [estimate, se] = mc_hypervolume(front, ref, 200000, rng);
        CHECK(std::abs(exact - estimate) <= 3.0 * se + 1e-9);
    }
}

TEST_CASE("hypervolume is monotone under added points") {
    Rng rng(2);
    for (int round = 0; round < 50; ++round) {
        auto front = random_front(rng, 20);
        std::vector<double> ref{1.5, 1.5};
        double base = hypervolume_2d(front, ref);
        front.push_back({rng.uniform01(), rng.uniform01()});
        CHECK(hypervolume_2d(front, ref) >= base - 1e-15);
    }
}

TEST_CASE("regret curves") {
    std::vector<double> ref{1.0, 1.0};
    SUBCASE("reaching hv_max zeroes the final regret") {
        std::vector<std::vector<double>> objs{{0.9, 0.9}, {0.5, 0.5}};
        double hv_final = hypervolume_2d({{0.5, 0.5}}, ref);
        auto curve = hv_regret_curve(objs, ref, 0.0, hv_final);
        CHECK(curve.ys.back() == 0.0);
        CHECK(curve.xs.back() == 1.0);
    }
    SUBCASE("never exceeding hv_min pins the curve at one") {
        std::vector<std::vector<double>> objs{{0.9, 0.9}, {0.9, 0.9}};
        auto curve = hv_regret_curve(objs, ref, 0.5, 0.9);
        for (double y : curve.ys) CHECK(y == 1.0);
    }
    SUBCASE("degenerate bounds collapse to zero") {
        std::vector<std::vector<double>> objs{{0.9, 0.9}};
        auto curve = hv_regret_curve(objs, ref, 0.7, 0.7);
        CHECK(curve.ys[0] == 0.0);
    }
    SUBCASE("regret never increases") {
        Rng rng(3);
        for (int round = 0; round < 20; ++round) {
            std::vector<std::vector<double>> objs;
            for (int t = 0; t < 40; ++t)
                objs.push_back({rng.uniform01(), rng.uniform01()});
            auto curve = hv_regret_curve(objs, {1.0, 1.0}, 0.1, 0.9);
            for (size_t i = 1; i < curve.ys.size(); ++i)
                CHECK(curve.ys[i] <= curve.ys[i - 1] + 1e-15);
            for (size_t i = 1; i < curve.xs.size(); ++i)
                CHECK(curve.xs[i] > curve.xs[i - 1]);
        }
    }
}

TEST_CASE("area under the curve") {
    CHECK(auc({{0.2, 1.0}, {1.0, 1.0}}) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(auc({{0.0, 1.0}, {0.0, 0.0}}) == 0.0);
    CHECK(auc({{0.5, 1.0}, {0.0, 0.0}}) == doctest::Approx(0.5).epsilon(1e-15));
    // Trapezoid between points plus the implicit y=1 head.
    CHECK(auc({{0.5, 1.0}, {1.0, 0.0}}) == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("aggregation across tasks then seeds") {
    SUBCASE("single curve aggregates to itself") {
        std::map<CurveKey, ConvergenceCurve> curves;
        curves[{"opt", "task", 0}] = {{0.5, 1.0}, {0.4, 0.2}};
        auto agg = aggregate(curves, 5);
        REQUIRE(agg.by_optimizer.count("opt"));
        const auto& curve = agg.by_optimizer.at("opt");
        CHECK(curve.n_seeds == 1);
        CHECK(curve.mean[0] == 1.0);   // before the first point
        CHECK(curve.mean[2] == 0.4);   // x = 0.5
        CHECK(curve.mean[4] == 0.2);   // x = 1.0
        for (double se : curve.stderr_) CHECK(se == 0.0);
        CHECK(agg.missing.empty());
    }
    SUBCASE("identical seeds have zero standard error") {
        std::map<CurveKey, ConvergenceCurve> curves;
        curves[{"opt", "task", 0}] = {{0.5, 1.0}, {0.4, 0.2}};
        curves[{"opt", "task", 1}] = {{0.5, 1.0}, {0.4, 0.2}};
        auto agg = aggregate(curves, 5);
        for (double se : agg.by_optimizer.at("opt").stderr_) CHECK(se == 0.0);
    }
    SUBCASE("constant curves at 0.2 and 0.4 give mean 0.3 and SE 0.1") {
        std::map<CurveKey, ConvergenceCurve> curves;
        curves[{"opt", "task", 0}] = {{0.0, 1.0}, {0.2, 0.2}};
        curves[{"opt", "task", 1}] = {{0.0, 1.0}, {0.4, 0.4}};
        auto agg = aggregate(curves, 3);
        const auto& curve = agg.by_optimizer.at("opt");
        for (double m : curve.mean) CHECK(m == doctest::Approx(0.3).epsilon(1e-15));
        for (double se : curve.stderr_) CHECK(se == doctest::Approx(0.1).epsilon(1e-12));
    }
    SUBCASE("missing cells are reported") {
        std::map<CurveKey, ConvergenceCurve> curves;
        curves[{"opt", "a", 0}] = {{1.0}, {0.0}};
        curves[{"opt", "b", 0}] = {{1.0}, {0.0}};
        curves[{"opt", "a", 1}] = {{1.0}, {0.0}};
        auto agg = aggregate(curves, 3);
        REQUIRE(agg.missing.size() == 1);
        CHECK(agg.missing[0].task == "b");
        CHECK(agg.missing[0].seed == 1);
    }
}

}  // TEST_SUITE
