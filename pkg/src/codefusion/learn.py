"""Gradient-boosted regression trees, from scratch, plus the per-dimension
score scaler and the dataset builders for the acceptance and ranking
models.

Trees use exact greedy splits on raw feature values with deterministic
tie-breaking (lowest feature index, then lowest threshold), so fitting is
bit-reproducible.  The ensemble predicts base_score + lr * sum(leaf
values); the logistic objective maps that through a sigmoid for
probabilities.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .features import (
    FeatureSchema,
    extract_candidate,
    extract_context,
    extract_set,
)
from .simulate import SimulationSample

_EPS = 1e-12
_MAX_LEAF = 10.0


@dataclass
class _Tree:
    """Flat-array binary tree.  feature == -1 marks a leaf."""

    feature: np.ndarray
    threshold: np.ndarray
    left: np.ndarray
    right: np.ndarray
    value: np.ndarray

    def predict(self, X: np.ndarray) -> np.ndarray:
        node = np.zeros(len(X), dtype=np.int64)
        while True:
            feat = self.feature[node]
            active = feat >= 0
            if not active.any():
                break
            rows = np.nonzero(active)[0]
            go_left = X[rows, feat[rows]] <= self.threshold[node[rows]]
            node[rows] = np.where(go_left, self.left[node[rows]], self.right[node[rows]])
        return self.value[node]

    def to_lists(self) -> dict:
        return {
            "feature": self.feature.tolist(),
            "threshold": self.threshold.tolist(),
            "left": self.left.tolist(),
            "right": self.right.tolist(),
            "value": self.value.tolist(),
        }

    @classmethod
    def from_lists(cls, data: dict) -> "_Tree":
        return cls(
            feature=np.asarray(data["feature"], dtype=np.int64),
            threshold=np.asarray(data["threshold"], dtype=np.float64),
            left=np.asarray(data["left"], dtype=np.int64),
            right=np.asarray(data["right"], dtype=np.int64),
            value=np.asarray(data["value"], dtype=np.float64),
        )


class _TreeBuilder:
    def __init__(self, X, g, h, max_depth, min_samples_leaf):
        self.X = X
        self.g = g
        self.h = h
        self.max_depth = max_depth
        self.min_leaf = min_samples_leaf
        self.feature: List[int] = []
        self.threshold: List[float] = []
        self.left: List[int] = []
        self.right: List[int] = []
        self.value: List[float] = []

    def build(self) -> _Tree:
        self._node(np.arange(len(self.X)), depth=0)
        return _Tree(
            feature=np.asarray(self.feature, dtype=np.int64),
            threshold=np.asarray(self.threshold, dtype=np.float64),
            left=np.asarray(self.left, dtype=np.int64),
            right=np.asarray(self.right, dtype=np.int64),
            value=np.asarray(self.value, dtype=np.float64),
        )

    def _leaf_value(self, idx) -> float:
        G = float(self.g[idx].sum())
        H = float(self.h[idx].sum())
        raw = -G / (H + _EPS)
        return float(np.clip(raw, -_MAX_LEAF, _MAX_LEAF))

    def _node(self, idx: np.ndarray, depth: int) -> int:
        node_id = len(self.feature)
        self.feature.append(-1)
        self.threshold.append(0.0)
        self.left.append(-1)
        self.right.append(-1)
        self.value.append(0.0)
        split = None
        if depth < self.max_depth and len(idx) >= 2 * self.min_leaf:
            split = self._best_split(idx)
        if split is None:
            self.value[node_id] = self._leaf_value(idx)
            return node_id
        feat, thr = split
        mask = self.X[idx, feat] <= thr
        left_id = self._node(idx[mask], depth + 1)
        right_id = self._node(idx[~mask], depth + 1)
        self.feature[node_id] = feat
        self.threshold[node_id] = thr
        self.left[node_id] = left_id
        self.right[node_id] = right_id
        return node_id

    def _best_split(self, idx: np.ndarray) -> Optional[Tuple[int, float]]:
        g = self.g[idx]
        h = self.h[idx]
        G = g.sum()
        H = h.sum()
        parent = G * G / (H + _EPS)
        best_gain = 1e-12
        best: Optional[Tuple[int, float]] = None
        n = len(idx)
        for feat in range(self.X.shape[1]):
            vals = self.X[idx, feat]
            order = np.argsort(vals, kind="stable")
            v = vals[order]
            cg = np.cumsum(g[order])
            ch = np.cumsum(h[order])
            # splits after position i (0-based), left gets i+1 samples
            cut = np.nonzero(v[:-1] < v[1:])[0]
            if len(cut) == 0:
                continue
            counts = cut + 1
            ok = (counts >= self.min_leaf) & (n - counts >= self.min_leaf)
            cut = cut[ok]
            if len(cut) == 0:
                continue
            gl, hl = cg[cut], ch[cut]
            gr, hr = G - gl, H - hl
            gains = gl * gl / (hl + _EPS) + gr * gr / (hr + _EPS) - parent
            pos = int(np.argmax(gains))  # first max: lowest threshold wins ties
            if gains[pos] > best_gain:
                best_gain = float(gains[pos])
                i = cut[pos]
                best = (feat, float((v[i] + v[i + 1]) / 2.0))
        return best


@dataclass
class GbdtModel:
    objective: str  # "logistic" or "squared_error"
    base_score: float
    learning_rate: float
    trees: List[_Tree] = field(default_factory=list)
    schema_version: str = ""
    params: dict = field(default_factory=dict)
    train_loss: List[float] = field(default_factory=list)
    _packed: Optional[tuple] = field(default=None, repr=False, compare=False)

    def reference_predict(self, X: np.ndarray) -> np.ndarray:
        """Per-tree traversal; the packed fast path must match this bitwise.

        Leaf outputs are collected per tree and summed with the same
        reduction as the packed path, so only the routing differs.
        """
        X = np.atleast_2d(np.asarray(X, dtype=np.float64))
        if not self.trees:
            return np.full(len(X), self.base_score, dtype=np.float64)
        leaves = np.stack([tree.predict(X) for tree in self.trees], axis=1)
        return self.base_score + self.learning_rate * leaves.sum(axis=1)

    def _ensure_packed(self) -> tuple:
        if self._packed is None:
            n_trees = len(self.trees)
            width = max((len(t.feature) for t in self.trees), default=1)
            feat = np.full((n_trees, width), -1, dtype=np.int64)
            thr = np.zeros((n_trees, width), dtype=np.float64)
            left = np.zeros((n_trees, width), dtype=np.int64)
            right = np.zeros((n_trees, width), dtype=np.int64)
            value = np.zeros((n_trees, width), dtype=np.float64)
            for i, tree in enumerate(self.trees):
                m = len(tree.feature)
                feat[i, :m] = tree.feature
                thr[i, :m] = tree.threshold
                left[i, :m] = tree.left
                right[i, :m] = tree.right
                value[i, :m] = tree.value
            self._packed = (feat, thr, left, right, value)
        return self._packed

    def raw_predict(self, X: np.ndarray) -> np.ndarray:
        X = np.atleast_2d(np.asarray(X, dtype=np.float64))
        if not self.trees:
            return np.full(len(X), self.base_score, dtype=np.float64)
        feat, thr, left, right, value = self._ensure_packed()
        n, n_trees = len(X), len(self.trees)
        tree_idx = np.arange(n_trees)[None, :]
        node = np.zeros((n, n_trees), dtype=np.int64)
        while True:
            f = feat[tree_idx, node]
            active = f >= 0
            if not active.any():
                break
            xv = X[np.arange(n)[:, None], np.where(active, f, 0)]
            go_left = xv <= thr[tree_idx, node]
            nxt = np.where(go_left, left[tree_idx, node], right[tree_idx, node])
            node = np.where(active, nxt, node)
        leaf_sum = value[tree_idx, node].sum(axis=1)
        return self.base_score + self.learning_rate * leaf_sum

    def predict(self, X: np.ndarray) -> np.ndarray:
        return self.raw_predict(X)

    def predict_proba(self, X: np.ndarray) -> np.ndarray:
        if self.objective != "logistic":
            raise ValueError("predict_proba requires the logistic objective")
        return _sigmoid(self.raw_predict(X))

    def feature_importance(self, n_features: int) -> Dict[int, int]:
        counts = {i: 0 for i in range(n_features)}
        for tree in self.trees:
            for feat in tree.feature:
                if feat >= 0:
                    counts[int(feat)] += 1
        return counts

    def check_schema(self, schema: FeatureSchema) -> None:
        if self.schema_version and schema.version != self.schema_version:
            raise ValueError(
                f"model was fitted on schema {self.schema_version}, got {schema.version}"
            )

    def to_dict(self) -> dict:
        return {
            "format": "codefusion-gbdt-v1",
            "objective": self.objective,
            "base_score": self.base_score,
            "learning_rate": self.learning_rate,
            "schema_version": self.schema_version,
            "params": self.params,
            "train_loss": self.train_loss,
            "trees": [t.to_lists() for t in self.trees],
        }

    def save(self, path: str) -> None:
        with open(path, "w", encoding="ascii") as fh:
            json.dump(self.to_dict(), fh)

    @classmethod
    def from_dict(cls, data: dict) -> "GbdtModel":
        model = cls(
            objective=data["objective"],
            base_score=data["base_score"],
            learning_rate=data["learning_rate"],
            schema_version=data.get("schema_version", ""),
            params=data.get("params", {}),
            train_loss=data.get("train_loss", []),
        )
        model.trees = [_Tree.from_lists(t) for t in data["trees"]]
        return model

    @classmethod
    def load(cls, path: str) -> "GbdtModel":
        with open(path, "r", encoding="ascii") as fh:
            return cls.from_dict(json.load(fh))


def _sigmoid(x: np.ndarray) -> np.ndarray:
    return 1.0 / (1.0 + np.exp(-np.clip(x, -60, 60)))


def fit_gbdt(
    X: np.ndarray,
    y: np.ndarray,
    objective: str = "squared_error",
    n_trees: int = 100,
    max_depth: int = 6,
    learning_rate: float = 0.1,
    min_samples_leaf: int = 20,
    sample_weight: Optional[np.ndarray] = None,
    schema_version: str = "",
) -> GbdtModel:
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if len(X) != len(y) or len(X) == 0:
        raise ValueError("need equal, non-zero numbers of samples and targets")
    w = np.ones(len(y)) if sample_weight is None else np.asarray(sample_weight, float)

    if objective == "squared_error":
        base = float(np.average(y, weights=w))
    elif objective == "logistic":
        if not set(np.unique(y)).issubset({0.0, 1.0}):
            raise ValueError("logistic targets must be 0/1")
        rate = float(np.clip(np.average(y, weights=w), 1e-6, 1 - 1e-6))
        base = math.log(rate / (1 - rate))
    else:
        raise ValueError(f"unknown objective {objective!r}")

    params = {
        "n_trees": n_trees,
        "max_depth": max_depth,
        "learning_rate": learning_rate,
        "min_samples_leaf": min_samples_leaf,
    }
    model = GbdtModel(
        objective=objective,
        base_score=base,
        learning_rate=learning_rate,
        schema_version=schema_version,
        params=params,
    )
    pred = np.full(len(y), base, dtype=np.float64)
    min_leaf = max(1, min(min_samples_leaf, len(y)))
    for _ in range(n_trees):
        if objective == "squared_error":
            g = (pred - y) * w
            h = w.copy()
        else:
            p = _sigmoid(pred)
            g = (p - y) * w
            h = np.maximum(p * (1 - p), 1e-9) * w
        if np.max(np.abs(g)) < 1e-12:
            break
        tree = _TreeBuilder(X, g, h, max_depth, min_leaf).build()
        pred += learning_rate * tree.predict(X)
        model.trees.append(tree)
        model.train_loss.append(_loss(objective, pred, y, w))
    return model


def _loss(objective: str, pred: np.ndarray, y: np.ndarray, w: np.ndarray) -> float:
    if objective == "squared_error":
        return float(np.average((pred - y) ** 2, weights=w) / 2.0)
    p = np.clip(_sigmoid(pred), 1e-12, 1 - 1e-12)
    return float(-np.average(y * np.log(p) + (1 - y) * np.log(1 - p), weights=w))


class _EstimatorBase:
    """Minimal sklearn-style parameter plumbing."""

    _param_names: Tuple[str, ...] = (
        "n_trees",
        "max_depth",
        "learning_rate",
        "min_samples_leaf",
    )

    def __init__(self, n_trees=100, max_depth=6, learning_rate=0.1, min_samples_leaf=20):
        self.n_trees = n_trees
        self.max_depth = max_depth
        self.learning_rate = learning_rate
        self.min_samples_leaf = min_samples_leaf
        self.model_: Optional[GbdtModel] = None

    def get_params(self, deep: bool = True) -> dict:
        return {name: getattr(self, name) for name in self._param_names}

    def set_params(self, **params) -> "_EstimatorBase":
        for name, value in params.items():
            if name not in self._param_names:
                raise ValueError(f"unknown parameter {name!r}")
            setattr(self, name, value)
        return self

    def _check_fitted(self) -> GbdtModel:
        if self.model_ is None:
            raise RuntimeError("estimator is not fitted")
        return self.model_

    def feature_importance(self, n_features: int) -> Dict[int, int]:
        return self._check_fitted().feature_importance(n_features)


class GbdtRegressor(_EstimatorBase):
    def fit(self, X, y, sample_weight=None, schema_version: str = "") -> "GbdtRegressor":
        self.model_ = fit_gbdt(
            X,
            y,
            objective="squared_error",
            n_trees=self.n_trees,
            max_depth=self.max_depth,
            learning_rate=self.learning_rate,
            min_samples_leaf=self.min_samples_leaf,
            sample_weight=sample_weight,
            schema_version=schema_version,
        )
        return self

    def predict(self, X) -> np.ndarray:
        return self._check_fitted().predict(X)


class GbdtClassifier(_EstimatorBase):
    def __init__(
        self,
        n_trees=100,
        max_depth=6,
        learning_rate=0.1,
        min_samples_leaf=20,
        balance_classes=True,
    ):
        super().__init__(n_trees, max_depth, learning_rate, min_samples_leaf)
        self.balance_classes = balance_classes

    _param_names = _EstimatorBase._param_names + ("balance_classes",)

    def fit(self, X, y, sample_weight=None, schema_version: str = "") -> "GbdtClassifier":
        y = np.asarray(y, dtype=np.float64)
        if sample_weight is None and self.balance_classes:
            pos = float((y == 1).sum())
            neg = float((y == 0).sum())
            if pos > 0 and neg > 0:
                sample_weight = np.where(y == 1, neg / pos, 1.0)
        self.model_ = fit_gbdt(
            X,
            y,
            objective="logistic",
            n_trees=self.n_trees,
            max_depth=self.max_depth,
            learning_rate=self.learning_rate,
            min_samples_leaf=self.min_samples_leaf,
            sample_weight=sample_weight,
            schema_version=schema_version,
        )
        return self

    def predict_proba(self, X) -> np.ndarray:
        return self._check_fitted().predict_proba(X)

    def predict(self, X) -> np.ndarray:
        return (self.predict_proba(X) >= 0.5).astype(np.int64)


class DimensionScaler:
    """Per-dimension standardisation with population standard deviation.

    A constant dimension is marked and transforms to 0.
    """

    def __init__(self) -> None:
        self.stats: Dict[str, Tuple[float, float]] = {}

    def fit(self, values_by_dim: Dict[str, Sequence[float]]) -> "DimensionScaler":
        for dim, values in values_by_dim.items():
            arr = np.asarray(list(values), dtype=np.float64)
            if len(arr) == 0:
                continue
            mean = float(arr.mean())
            std = float(arr.std())  # population
            self.stats[dim] = (mean, std)
        return self

    def transform(self, dim: str, value: float) -> float:
        if dim not in self.stats:
            return 0.0
        mean, std = self.stats[dim]
        if std <= _EPS:
            return 0.0
        return (value - mean) / std

    def save(self, path: str) -> None:
        with open(path, "w", encoding="ascii") as fh:
            json.dump({d: list(ms) for d, ms in sorted(self.stats.items())}, fh)

    @classmethod
    def load(cls, path: str) -> "DimensionScaler":
        scaler = cls()
        with open(path, "r", encoding="ascii") as fh:
            scaler.stats = {d: (m, s) for d, (m, s) in json.load(fh).items()}
        return scaler


# --------------------------------------------------------------------------
# Dataset builders over the simulation store
# --------------------------------------------------------------------------


def make_acceptance_dataset(
    samples_with_prefixes: Sequence[Tuple[SimulationSample, str]],
    schema: FeatureSchema,
    strategy_ids: Sequence[str],
    include_empty: bool = False,
) -> Tuple[np.ndarray, np.ndarray]:
    """Set-level vectors and 0/1 labels from critical samples.

    Positions with an empty candidate list are excluded by default (there
    is nothing for the gate to suppress); ``include_empty`` turns them into
    negative samples instead.
    """
    rows: List[np.ndarray] = []
    labels: List[float] = []
    for sample, prefix in samples_with_prefixes:
        if not sample.critical:
            continue
        if not sample.candidates and not include_empty:
            continue
        ctx = extract_context(prefix)
        rows.append(extract_set(ctx, sample.candidates, schema, strategy_ids))
        labels.append(1.0 if sample.has_hit else 0.0)
    if not rows:
        return np.zeros((0, len(schema))), np.zeros(0)
    return np.vstack(rows), np.asarray(labels)


def make_ranking_dataset(
    samples_with_prefixes: Sequence[Tuple[SimulationSample, str]],
    schema: FeatureSchema,
    strategy_ids: Sequence[str],
) -> Tuple[np.ndarray, np.ndarray]:
    """Candidate-level vectors; target is the candidate length for hits and
    0 for misses.  Only critical samples that contain at least one hit
    contribute."""
    rows: List[np.ndarray] = []
    targets: List[float] = []
    for sample, prefix in samples_with_prefixes:
        if not sample.critical or not sample.has_hit:
            continue
        ctx = extract_context(prefix)
        for cand, hit in zip(sample.candidates, sample.hits):
            rows.append(extract_candidate(ctx, cand, sample.candidates, schema, strategy_ids))
            targets.append(float(cand.length) if hit else 0.0)
    if not rows:
        return np.zeros((0, len(schema))), np.zeros(0)
    return np.vstack(rows), np.asarray(targets)


def fit_score_scaler(samples: Sequence[SimulationSample], strategy_ids: Sequence[str]) -> DimensionScaler:
    """Fit the normalised-ranking scaler on every primary-dimension score
    observed in the simulation samples."""
    from .features import primary_dimension

    values: Dict[str, List[float]] = {primary_dimension(s): [] for s in strategy_ids}
    for sample in samples:
        for cand in sample.candidates:
            for sid in cand.strategies:
                dim = primary_dimension(sid)
                if dim in values and dim in cand.scores:
                    values[dim].append(cand.scores[dim])
        # non-critical samples count too: the scaler sees the raw score
        # distribution each strategy produces.
    scaler = DimensionScaler()
    scaler.fit({d: v for d, v in values.items() if v})
    return scaler
