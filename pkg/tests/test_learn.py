import json
import time

import numpy as np
import pytest

from codefusion.features import build_candidate_schema, build_set_schema
from codefusion.learn import (
    DimensionScaler,
    GbdtClassifier,
    GbdtModel,
    GbdtRegressor,
    fit_gbdt,
    make_acceptance_dataset,
    make_ranking_dataset,
)
from codefusion.simulate import SimulationSample
from codefusion.strategies import Candidate

IDS = ("global", "local", "lm")


def test_constant_target_yields_zero_trees():
    X = np.random.default_rng(0).normal(size=(50, 3))
    model = fit_gbdt(X, np.zeros(50), objective="squared_error")
    assert model.trees == []
    assert np.all(model.predict(X) == 0.0)
    nonzero = fit_gbdt(X, np.full(50, 3.25), objective="squared_error")
    assert nonzero.trees == []
    assert np.all(nonzero.predict(X) == 3.25)


def test_single_sample_predicts_exactly():
    model = fit_gbdt(np.array([[1.0, 2.0]]), np.array([7.5]))
    assert model.predict(np.array([[1.0, 2.0]]))[0] == 7.5


def test_zero_tree_logistic_predicts_half():
    model = GbdtModel(objective="logistic", base_score=0.0, learning_rate=0.1)
    assert model.predict_proba(np.zeros((1, 4)))[0] == 0.5


def test_separable_data_high_accuracy():
    rng = np.random.default_rng(7)
    X = rng.normal(size=(200, 2))
    y = (X[:, 0] > 0.1).astype(float)
    clf = GbdtClassifier(n_trees=60, min_samples_leaf=5).fit(X, y)
    acc = (clf.predict(X) == y).mean()
    assert acc >= 0.99


def test_training_loss_monotone_nonincreasing():
    rng = np.random.default_rng(11)
    for objective in ("squared_error", "logistic"):
        X = rng.normal(size=(300, 6))
        if objective == "logistic":
            y = ((X[:, 0] + 0.4 * X[:, 2] + rng.normal(scale=0.3, size=300)) > 0).astype(float)
        else:
            y = X[:, 1] * 2.0 + rng.normal(scale=0.2, size=300)
        model = fit_gbdt(X, y, objective=objective, n_trees=50, min_samples_leaf=10)
        for a, b in zip(model.train_loss, model.train_loss[1:]):
            assert b <= a + 1e-12


def test_deterministic_fit():
    rng = np.random.default_rng(3)
    X = rng.normal(size=(150, 4))
    y = (X[:, 0] > 0).astype(float)
    a = fit_gbdt(X, y, objective="logistic", n_trees=20)
    b = fit_gbdt(X, y, objective="logistic", n_trees=20)
    assert json.dumps(a.to_dict()) == json.dumps(b.to_dict())


def test_ensemble_equals_reference_traversal():
    rng = np.random.default_rng(5)
    X = rng.normal(size=(120, 5))
    y = X[:, 0] - X[:, 3]
    model = fit_gbdt(X, y, n_trees=30, min_samples_leaf=5)
    probe = rng.normal(size=(64, 5))
    assert np.array_equal(model.predict(probe), model.reference_predict(probe))


def test_serialization_roundtrip_bit_identical(tmp_path):
    rng = np.random.default_rng(9)
    X = rng.normal(size=(200, 6))
    y = (X[:, 1] > 0.2).astype(float)
    model = fit_gbdt(X, y, objective="logistic", n_trees=40)
    path = tmp_path / "m.json"
    model.save(str(path))
    loaded = GbdtModel.load(str(path))
    battery = rng.normal(size=(500, 6))
    assert np.array_equal(model.predict_proba(battery), loaded.predict_proba(battery))


def test_prediction_latency_under_budget():
    rng = np.random.default_rng(13)
    X = rng.normal(size=(400, 8))
    y = (X[:, 0] > 0).astype(float)
    model = fit_gbdt(X, y, objective="logistic", n_trees=100)
    start = time.perf_counter()
    model.predict_proba(X[:1])
    single = time.perf_counter() - start
    assert single < 0.05  # 50 ms per-sample budget
    start = time.perf_counter()
    model.predict_proba(rng.normal(size=(10_000, 8)))
    assert time.perf_counter() - start < 1.0


def test_feature_importance_counts_splits():
    empty = GbdtModel(objective="squared_error", base_score=0.0, learning_rate=0.1)
    assert set(empty.feature_importance(3).values()) == {0}
    rng = np.random.default_rng(21)
    X = rng.normal(size=(300, 4))
    y = (X[:, 3] > 0).astype(float) * 5.0  # only feature 3 matters
    model = fit_gbdt(X, y, n_trees=10, min_samples_leaf=10)
    importance = model.feature_importance(4)
    assert importance[3] == max(importance.values())
    total_splits = sum(
        int((tree.feature >= 0).sum()) for tree in model.trees
    )
    assert sum(importance.values()) == total_splits


def test_schema_mismatch_rejected():
    X = np.zeros((30, 2))
    y = np.arange(30, dtype=float)
    model = fit_gbdt(X, y, schema_version="abc")
    schema = build_set_schema(("local",))
    with pytest.raises(ValueError):
        model.check_schema(schema)


def test_classifier_balances_classes():
    rng = np.random.default_rng(2)
    X = rng.normal(size=(400, 3))
    y = np.zeros(400)
    y[:40] = 1  # 10% positives
    clf = GbdtClassifier(n_trees=5).fit(X, y)
    assert clf.model_ is not None  # weighting path exercised


def test_get_set_params():
    clf = GbdtClassifier(n_trees=10)
    params = clf.get_params()
    assert params["n_trees"] == 10
    clf.set_params(max_depth=2)
    assert clf.max_depth == 2
    with pytest.raises(ValueError):
        clf.set_params(bogus=1)


def test_scaler_population_std():
    scaler = DimensionScaler().fit({"d": [1.0, 2.0, 3.0]})
    z = [scaler.transform("d", v) for v in (1.0, 2.0, 3.0)]
    assert z[0] == pytest.approx(-1.2247, abs=1e-4)
    assert z[1] == pytest.approx(0.0, abs=1e-12)
    assert z[2] == pytest.approx(1.2247, abs=1e-4)


def test_scaler_constant_and_single():
    scaler = DimensionScaler().fit({"c": [5.0, 5.0], "s": [4.0]})
    assert scaler.transform("c", 5.0) == 0.0
    assert scaler.transform("s", 4.0) == 0.0
    assert scaler.transform("missing", 1.0) == 0.0


def test_scaler_roundtrip(tmp_path):
    scaler = DimensionScaler().fit({"a": [1.0, 3.0], "b": [2.0]})
    path = tmp_path / "scaler.json"
    scaler.save(str(path))
    assert DimensionScaler.load(str(path)).stats == scaler.stats


def sample(pos, critical, cands_hits, file_id="f"):
    s = SimulationSample(file_id=file_id, pos=pos, critical=critical)
    for text, sid, score_dim, score, hit in cands_hits:
        s.candidates.append(
            Candidate(text=text, scores={score_dim: score}, strategies=(sid,))
        )
        s.hits.append(hit)
    return s


def test_acceptance_dataset_rules():
    schema = build_set_schema(IDS)
    pairs = [
        (sample(0, 1, [("abc", "local", "local_count", 2.0, 1)]), "ctx "),
        (sample(1, 1, [("zzz", "lm", "lm_logprob", -1.0, 0)]), "ctx x"),
        (sample(2, 1, []), "empty list excluded"),
        (sample(3, 0, [("abc", "local", "local_count", 2.0, 1)]), "non-critical"),
    ]
    X, y = make_acceptance_dataset(pairs, schema, IDS)
    assert X.shape == (2, len(schema))
    assert y.tolist() == [1.0, 0.0]


def test_ranking_dataset_targets():
    schema = build_candidate_schema(IDS)
    pairs = [
        (
            sample(
                0,
                1,
                [
                    ("longCandidate!", "lm", "lm_logprob", -2.0, 1),
                    ("no", "lm", "lm_logprob", -1.0, 0),
                ],
            ),
            "ctx ",
        ),
        (sample(1, 1, [("no", "lm", "lm_logprob", -1.0, 0)]), "no hits -> skipped"),
    ]
    X, y = make_ranking_dataset(pairs, schema, IDS)
    assert X.shape == (2, len(schema))
    assert sorted(y.tolist()) == [0.0, 14.0]


def test_acceptance_dataset_include_empty_switch():
    schema = build_set_schema(IDS)
    pairs = [
        (sample(0, 1, [("abc", "local", "local_count", 2.0, 1)]), "ctx "),
        (sample(1, 1, []), "empty list"),
    ]
    X, y = make_acceptance_dataset(pairs, schema, IDS, include_empty=True)
    assert X.shape[0] == 2
    assert y.tolist() == [1.0, 0.0]
