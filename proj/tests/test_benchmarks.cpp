#include <doctest.h>

#include <cmath>
#include <vector>

#include "moho/benchmarks.hpp"
#include "moho/metrics.hpp"

using namespace moho;

TEST_SUITE("benchmarks") {

TEST_CASE("ZDT hand values") {
    std::vector<double> zeros(10, 0.0);
    auto [a1, a2] = zdt_evaluate(1, zeros);
    CHECK(a1 == 0.0);
    CHECK(a2 == 1.0);

    std::vector<double> x(10, 0.0);
    x[0] = 0.5;
    auto [b1, b2] = zdt_evaluate(1, x);
    CHECK(b1 == 0.5);
    CHECK(b2 == doctest::Approx(1.0 - std::sqrt(0.5)).epsilon(1e-14));

    auto [c1, c2] = zdt_evaluate(2, x);
    CHECK(c1 == 0.5);
    CHECK(c2 == doctest::Approx(0.75).epsilon(1e-14));
}

TEST_CASE("ZDT rejects out-of-bounds input") {
    std::vector<double> x(5, 0.5);
    x[2] = 1.5;
    CHECK_THROWS(zdt_evaluate(1, x));
    std::vector<double> y(5, 0.5);
    y[1] = 6.0;  // legal only if it were variant 4's tail... which caps at 5
    CHECK_THROWS(zdt_evaluate(4, y));
    std::vector<double> z(5, 2.0);  // tail in range for zdt4, head out of range
    CHECK_THROWS(zdt_evaluate(4, z));
    CHECK_THROWS(zdt_evaluate(5, std::vector<double>(5, 0.5)));
    CHECK_THROWS(zdt_evaluate(1, std::vector<double>{0.5}));
}

TEST_CASE("ZDT evaluation is deterministic") {
    Rng rng(3);
    for (int variant : {1, 2, 3, 4, 6}) {
        std::vector<double> x(8);
        for (size_t i = 0; i < x.size(); ++i)
            x[i] = (variant == 4 && i > 0) ? rng.uniform(-5.0, 5.0) : rng.uniform01();
        auto a = zdt_evaluate(variant, x);
        auto b = zdt_evaluate(variant, x);
        CHECK(a[0] == b[0]);
        CHECK(a[1] == b[1]);
    }
}

TEST_CASE("analytic front hand values") {
    auto f5 = analytic_pareto_front(1, 5);
    REQUIRE(f5.size() == 5);
    CHECK(f5.front()[0] == 0.0);
    CHECK(f5.front()[1] == 1.0);
    CHECK(f5.back()[0] == 1.0);
    CHECK(f5.back()[1] == 0.0);
    CHECK(f5[1][0] == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(f5[1][1] == doctest::Approx(0.5).epsilon(1e-14));

    auto g3 = analytic_pareto_front(2, 3);
    CHECK(g3[1][0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(g3[1][1] == doctest::Approx(0.75).epsilon(1e-14));
}

TEST_CASE("analytic fronts are internally non-dominated") {
    for (int variant : {1, 2, 3, 4, 6}) {
        CAPTURE(variant);
        auto front = analytic_pareto_front(variant, 100);
        REQUIRE(front.size() == 100);
        for (size_t i = 0; i < front.size(); ++i) {
            for (size_t j = 0; j < front.size(); ++j) {
                if (i == j) continue;
                std::vector<double> a{front[i][0], front[i][1]};
                std::vector<double> b{front[j][0], front[j][1]};
                CHECK_FALSE(dominates(a, b));
            }
        }
    }
}

TEST_CASE("random evaluations never dominate the analytic front") {
    Rng rng(11);
    for (int variant : {1, 2, 3, 4, 6}) {
        CAPTURE(variant);
        auto front = analytic_pareto_front(variant, 100);
        for (int trial = 0; trial < 10000; ++trial) {
            std::vector<double> x(10);
            for (size_t i = 0; i < x.size(); ++i)
                x[i] = (variant == 4 && i > 0) ? rng.uniform(-5.0, 5.0)
                                               : rng.uniform01();
            auto f = zdt_evaluate(variant, x);
            std::vector<double> fv{f[0], f[1]};
            for (const auto& p : front)
                CHECK_FALSE(dominates(fv, std::vector<double>{p[0], p[1]}));
        }
    }
}

TEST_CASE("trial budget rule") {
    CHECK(task_budget(4, 5) == 500);
    CHECK(task_budget(1, 3) == 180);
    CHECK(task_budget(9, 1) == 140);
    CHECK(task_budget(10, 3) == 438);
    CHECK(default_trial_multiplier("zdt1") == 3);
    CHECK(default_trial_multiplier("zdt3") == 3);
    CHECK(default_trial_multiplier("zdt4") == 5);
    CHECK(default_trial_multiplier("zdt6") == 5);
    CHECK_THROWS(task_budget(0, 1));
}

TEST_CASE("task registry") {
    for (const auto& name : {"zdt1", "zdt2", "zdt3", "zdt4", "zdt6"}) {
        auto task = make_task(name, 10);
        CHECK(task.objective_count == 2);
        CHECK(task.space.size() == 10);
        REQUIRE(task.analytic_front);
        auto def = default_configuration(task.space);
        auto f = task.evaluate(def);
        CHECK(f.size() == 2);
    }
    CHECK_THROWS(make_task("zdt5", 10));
    CHECK_THROWS(make_task("lcbench", 10));
}

TEST_CASE("task evaluation matches the raw ZDT form") {
    auto task = make_task("zdt3", 6);
    Rng rng(5);
    for (int i = 0; i < 50; ++i) {
        auto c = sample_one(task.space, rng);
        std::vector<double> x;
        for (const auto& v : c.values) x.push_back(std::get<double>(v));
        auto direct = zdt_evaluate(3, x);
        auto via_task = task.evaluate(c);
        CHECK(via_task[0] == direct[0]);
        CHECK(via_task[1] == direct[1]);
    }
}

TEST_CASE("mixed task plants importance and exercises all kinds") {
    auto task = make_task("mixed", 8);
    CHECK(task.space.size() == 8);
    bool has_cat = false, has_int = false, has_cont = false;
    for (int j = 0; j < task.space.size(); ++j) {
        switch (task.space.spec(j).kind) {
            case ParamKind::Continuous: has_cont = true; break;
            case ParamKind::Integer: has_int = true; break;
            case ParamKind::Categorical: has_cat = true; break;
        }
    }
    CHECK(has_cat);
    CHECK(has_int);
    CHECK(has_cont);

    // Objective 1 ignores the second half of the parameters.
    Rng rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        auto a = sample_one(task.space, rng);
        auto b = a;
        for (int j = 4; j < 8; ++j) {
            auto mutated = sample_one(task.space, rng);
            b.values[static_cast<size_t>(j)] = mutated.values[static_cast<size_t>(j)];
        }
        CHECK(task.evaluate(a)[0] == task.evaluate(b)[0]);
    }

    // ...but objective 2 depends on them.
    auto base = default_configuration(task.space);
    auto changed = base;
    changed.values[7] = std::int64_t{10};
    CHECK(task.evaluate(base)[1] != task.evaluate(changed)[1]);
}

}  // TEST_SUITE
