"""L2-regularized hinge-loss linear classifier (linear SVC).

Training solves the dual with coordinate descent: one pass over all
examples per epoch in a freshly drawn seeded permutation, no shrinking,
stopping when the largest projected-gradient violation in an epoch drops
below ``tol``. The bias is folded in as an implicit constant feature of
value 1 (and is therefore regularized), which keeps the dual box-constrained
and the whole procedure deterministic for a given seed.

Primal objective, as reported in the per-epoch history:

    0.5 * (||w||^2 + b^2) + c * sum_i max(0, 1 - y_i * (w . x_i + b))

with y = +1 for the fake class and -1 for real.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin
from sklearn.exceptions import NotFittedError

from .corpus import Label
from .features import SparseVector
from .util import check_seed, fisher_yates, make_rng

# Coordinate updates below this projected-gradient magnitude are skipped.
_PG_SKIP = 1e-12

MODEL_FORMAT_VERSION = "infodemic-linear-model v1"


@dataclass(frozen=True)
class Hyper:
    c: float = 1.0
    tol: float = 1e-4
    max_iter: int = 1000
    seed: int = 0

    def __post_init__(self) -> None:
        if self.c <= 0:
            raise ValueError("c must be positive")
        if self.tol <= 0:
            raise ValueError("tol must be positive")
        if self.max_iter < 1:
            raise ValueError("max_iter must be >= 1")
        check_seed(self.seed)


@dataclass
class LinearModel:
    weights: np.ndarray
    bias: float
    positive_class: Label = Label.FAKE

    def __post_init__(self) -> None:
        self.weights = np.asarray(self.weights, dtype=np.float64)
        self.bias = float(self.bias)
        if self.weights.ndim != 1:
            raise ValueError("weights must be a 1-d vector")
        if not np.all(np.isfinite(self.weights)) or not np.isfinite(self.bias):
            raise ValueError("model parameters must be finite")

    @property
    def dimension(self) -> int:
        return self.weights.shape[0]


@dataclass
class SolverResult:
    weights: np.ndarray
    bias: float
    alpha: np.ndarray
    objective_history: tuple[float, ...] = field(default_factory=tuple)
    dual_objective_history: tuple[float, ...] = field(default_factory=tuple)
    epochs: int = 0
    max_violation: float = float("inf")
    converged: bool = False


def _label_sign(label: Label) -> float:
    return 1.0 if label is Label.FAKE else -1.0


def _check_training_input(
    xs: Sequence[SparseVector], ys: Sequence[Label]
) -> tuple[list[np.ndarray], list[np.ndarray], np.ndarray, int]:
    if len(xs) != len(ys):
        raise ValueError(f"got {len(xs)} vectors but {len(ys)} labels")
    if len(xs) < 2:
        raise ValueError("training requires at least two examples")
    dim = xs[0].dimension
    for k, x in enumerate(xs):
        if x.dimension != dim:
            raise ValueError(f"example {k} has dimension {x.dimension}, expected {dim}")
    y = np.array([_label_sign(lab) for lab in ys])
    if len(set(ys)) < 2:
        raise ValueError("training requires both classes to be present")
    idx_list = [np.asarray(x.indices, dtype=np.intp) for x in xs]
    val_list = [np.asarray(x.counts, dtype=np.float64) for x in xs]
    return idx_list, val_list, y, dim


def primal_objective(
    weights: np.ndarray,
    bias: float,
    xs: Sequence[SparseVector],
    ys: Sequence[Label],
    c: float,
) -> float:
    obj = 0.5 * (float(weights @ weights) + bias * bias)
    for x, lab in zip(xs, ys):
        idx = np.asarray(x.indices, dtype=np.intp)
        val = np.asarray(x.counts, dtype=np.float64)
        margin = _label_sign(lab) * (float(weights[idx] @ val) + bias)
        obj += c * max(0.0, 1.0 - margin)
    return obj


def solve_dual_cd(xs: Sequence[SparseVector], ys: Sequence[Label], h: Hyper) -> SolverResult:
    """Dual coordinate descent; see module docstring for the exact scheme."""
    idx_list, val_list, y, dim = _check_training_input(xs, ys)
    n = len(xs)
    qii = np.array([float(v @ v) + 1.0 for v in val_list])  # +1: bias feature
    w = np.zeros(dim)
    b = 0.0
    alpha = np.zeros(n)
    rng = make_rng(h.seed)
    history: list[float] = []
    dual_history: list[float] = []
    epochs = 0
    max_pg = float("inf")
    for _ in range(h.max_iter):
        order = fisher_yates(n, rng)
        max_pg = 0.0
        for i in order:
            ii = idx_list[i]
            vv = val_list[i]
            g = y[i] * (float(w[ii] @ vv) + b) - 1.0
            a = alpha[i]
            if a == 0.0:
                pg = min(g, 0.0)
            elif a == h.c:
                pg = max(g, 0.0)
            else:
                pg = g
            if abs(pg) > max_pg:
                max_pg = abs(pg)
            if abs(pg) > _PG_SKIP:
                new_a = min(max(a - g / qii[i], 0.0), h.c)
                d = new_a - a
                if d != 0.0:
                    alpha[i] = new_a
                    w[ii] += (d * y[i]) * vv
                    b += d * y[i]
        epochs += 1
        history.append(primal_objective(w, b, xs, ys, h.c))
        # minimization form of the dual; decreases monotonically under
        # exact coordinate updates, unlike the primal trajectory
        dual_history.append(0.5 * (float(w @ w) + b * b) - float(alpha.sum()))
        if max_pg < h.tol:
            break
    return SolverResult(
        weights=w,
        bias=float(b),
        alpha=alpha,
        objective_history=tuple(history),
        dual_objective_history=tuple(dual_history),
        epochs=epochs,
        max_violation=max_pg,
        converged=max_pg < h.tol,
    )


def train_svc(xs: Sequence[SparseVector], ys: Sequence[Label], h: Hyper) -> LinearModel:
    result = solve_dual_cd(xs, ys, h)
    return LinearModel(weights=result.weights, bias=result.bias)


def decision_value(model: LinearModel, x: SparseVector) -> float:
    """w . x + b, summed in index order."""
    if x.dimension != model.dimension:
        raise ValueError(
            f"vector dimension {x.dimension} does not match model dimension {model.dimension}"
        )
    idx = np.asarray(x.indices, dtype=np.intp)
    val = np.asarray(x.counts, dtype=np.float64)
    return float(model.weights[idx] @ val) + model.bias


def predict(model: LinearModel, x: SparseVector) -> Label:
    """Fake iff the decision value is strictly positive; 0 resolves to real."""
    return Label.FAKE if decision_value(model, x) > 0.0 else Label.REAL


def fake_confidence(model: LinearModel, x: SparseVector) -> float:
    """Monotone squash of the decision value into [0, 1] for exchange files.

    Not a calibrated probability; only the ordering and the 0.5 crossing at
    decision value 0 matter to downstream consumers.
    """
    return 1.0 / (1.0 + float(np.exp(-decision_value(model, x))))


def save_model(model: LinearModel, path: str | Path) -> None:
    """Plain-text serialization; floats via repr, so round-trips are exact."""
    lines = [MODEL_FORMAT_VERSION, str(model.dimension), repr(float(model.bias))]
    lines.extend(repr(float(wi)) for wi in model.weights)
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_model(path: str | Path) -> LinearModel:
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    if not lines or lines[0] != MODEL_FORMAT_VERSION:
        raise ValueError(f"{path}: not a {MODEL_FORMAT_VERSION} file")
    dim = int(lines[1])
    bias = float(lines[2])
    weights = np.array([float(s) for s in lines[3 : 3 + dim]])
    if weights.shape[0] != dim:
        raise ValueError(f"{path}: expected {dim} weights, found {weights.shape[0]}")
    return LinearModel(weights=weights, bias=bias)


class LinearSVC(BaseEstimator, ClassifierMixin):
    """Estimator wrapper around the dual coordinate descent solver.

    Accepts SparseVector sequences for X and Label (or "fake"/"real"
    strings) for y. After fit: ``model_``, ``coef_``, ``intercept_``,
    ``objective_history_``, ``n_epochs_``, ``violation_``.
    """

    def __init__(self, c: float = 1.0, tol: float = 1e-4, max_iter: int = 1000, seed: int = 0):
        self.c = c
        self.tol = tol
        self.max_iter = max_iter
        self.seed = seed

    def fit(self, X: Sequence[SparseVector], y: Sequence) -> "LinearSVC":
        labels = [lab if isinstance(lab, Label) else Label.parse(lab) for lab in y]
        h = Hyper(c=self.c, tol=self.tol, max_iter=self.max_iter, seed=self.seed)
        result = solve_dual_cd(X, labels, h)
        self.model_ = LinearModel(weights=result.weights, bias=result.bias)
        self.coef_ = result.weights
        self.intercept_ = result.bias
        self.objective_history_ = result.objective_history
        self.n_epochs_ = result.epochs
        self.violation_ = result.max_violation
        return self

    def _check_fitted(self) -> LinearModel:
        if not hasattr(self, "model_"):
            raise NotFittedError("LinearSVC is not fitted; call fit first")
        return self.model_

    def decision_function(self, X: Sequence[SparseVector]) -> np.ndarray:
        model = self._check_fitted()
        return np.array([decision_value(model, x) for x in X])

    def predict(self, X: Sequence[SparseVector]) -> list[Label]:
        model = self._check_fitted()
        return [predict(model, x) for x in X]
