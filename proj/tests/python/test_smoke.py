import json
import math

import moho


def test_scalarize_hand_values():
    assert abs(moho.scalarize([0.4, 0.6], [0.5, 0.5], 0.05) - 0.325) <= 1e-12
    assert abs(moho.scalarize([0.4, 0.6], [1.0, 0.0], 0.05) - 0.42) <= 1e-12
    assert abs(moho.scalarize([0.4, 0.6], [0.0, 1.0], 0.05) - 0.63) <= 1e-12


def test_zdt_evaluate():
    f1, f2 = moho.zdt_evaluate(1, [0.5] + [0.0] * 9)
    assert f1 == 0.5
    assert abs(f2 - (1.0 - math.sqrt(0.5))) <= 1e-12
    f1, f2 = moho.zdt_evaluate(2, [0.5] + [0.0] * 9)
    assert abs(f2 - 0.75) <= 1e-12


def test_task_budget():
    assert moho.task_budget(4, 5) == 500
    assert moho.task_budget(1, 3) == 180
    assert moho.task_budget(10, 3) == 438
    assert moho.default_trial_multiplier("zdt1") == 3
    assert moho.default_trial_multiplier("zdt6") == 5


def test_hypervolume():
    assert moho.hypervolume_2d([[0.5, 0.5]], [1.0, 1.0]) == 0.25
    hv = moho.hypervolume_2d([[0.25, 0.75], [0.5, 0.5]], [1.0, 1.0])
    assert abs(hv - 0.3125) <= 1e-15


def test_pareto_front():
    front = moho.pareto_front([[1, 2], [2, 1], [2, 2]])
    assert sorted(front) == [[1, 2], [2, 1]]
    fronts = moho.fast_nondominated_sort([[1, 2], [2, 1], [2, 2]])
    assert fronts == [[0, 1], [2]]


def test_shapley_exact_via_callable():
    table = {0: 0.0, 1: 1.0, 2: 2.0, 3: 4.0}
    phi = moho.shapley_exact(lambda mask: table[mask], 2)
    assert phi == [1.5, 2.5]


def test_select_important():
    assert moho.select_important([0.5, 0.3, 0.15, 0.05], 0.8) == [0, 1]
    assert moho.select_important([0.6, -0.1, 0.5], 0.8) == [0, 2]


def test_configspace_roundtrip_and_encode():
    doc = json.dumps(
        {
            "hyperparameters": [
                {"name": "lr", "kind": "continuous", "lower": 1e-4, "upper": 1.0,
                 "log": True, "default": 0.01},
                {"name": "k", "kind": "categorical", "categories": ["a", "b", "c"],
                 "default": "a"},
            ]
        }
    )
    space = moho.ConfigSpace.from_json(doc)
    assert len(space) == 2
    enc = space.encode([0.01, "c"])
    assert abs(enc[0] - math.log(0.01)) <= 1e-12
    assert enc[1] == 2.0
    rng = moho.Rng(0)
    configs = space.sample(5, rng)
    assert len(configs) == 5
    for c in configs:
        assert 1e-4 <= c[0] <= 1.0
        assert c[1] in ("a", "b", "c")


def test_forest_fit_predict():
    X = [[i / 9.0] for i in range(10)]
    y = [0.7] * 10
    forest = moho.fit_forest(X, y, n_trees=8, seed=1)
    mean, var = forest.predict([0.5])
    assert mean == 0.7
    assert var == 0.0
    assert moho.expected_improvement(0.3, 0.0, 0.5) == 0.2


def test_run_optimizer_deterministic():
    a = moho.run_optimizer("hpi-parego", "zdt1", dim=4, trials=30, seed=1)
    b = moho.run_optimizer("hpi-parego", "zdt1", dim=4, trials=30, seed=1)
    assert a["records"] == b["records"]
    assert len(a["records"]) == 30
    assert a["records"][0]["source"] == "initial"
    sources = {r["source"] for r in a["records"]}
    assert sources <= {"initial", "random_interleave", "acquisition", "fallback"}


def test_run_random_and_auc():
    h = moho.run_optimizer("random", "zdt2", dim=3, trials=20, seed=3)
    assert len(h["records"]) == 20
    assert moho.auc([0.5, 1.0], [0.0, 0.0]) == 0.5
