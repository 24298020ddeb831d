"""Evaluation: per-class precision/recall/F1, weighted F1, error listings.

The fake class is the positive class throughout. Weighted F1 averages the
two per-class F1 scores using gold-label supports as weights, which is the
shared task's official metric. All 0/0 ratios resolve to 0.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping, Sequence

from .corpus import Corpus, Label, Post
from .util import check_equal_lengths


@dataclass(frozen=True)
class ConfusionMatrix:
    tp: int
    fp: int
    fn: int
    tn: int

    def __post_init__(self) -> None:
        if min(self.tp, self.fp, self.fn, self.tn) < 0:
            raise ValueError("confusion counts must be non-negative")

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.fn + self.tn


@dataclass(frozen=True)
class ClassMetrics:
    precision: float
    recall: float
    f1: float
    support: int


@dataclass(frozen=True)
class EvalReport:
    fake: ClassMetrics
    real: ClassMetrics
    weighted_f1: float
    matrix: ConfusionMatrix

    def to_dict(self) -> dict:
        return {
            "precision_fake": self.fake.precision,
            "recall_fake": self.fake.recall,
            "f1_fake": self.fake.f1,
            "support_fake": self.fake.support,
            "precision_real": self.real.precision,
            "recall_real": self.real.recall,
            "f1_real": self.real.f1,
            "support_real": self.real.support,
            "weighted_f1": self.weighted_f1,
            "confusion": {
                "tp": self.matrix.tp,
                "fp": self.matrix.fp,
                "fn": self.matrix.fn,
                "tn": self.matrix.tn,
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        rows = [
            f"{'class':<10}{'precision':>11}{'recall':>9}{'f1':>9}{'support':>9}",
            f"{'fake':<10}{self.fake.precision:>11.4f}{self.fake.recall:>9.4f}"
            f"{self.fake.f1:>9.4f}{self.fake.support:>9d}",
            f"{'real':<10}{self.real.precision:>11.4f}{self.real.recall:>9.4f}"
            f"{self.real.f1:>9.4f}{self.real.support:>9d}",
            "",
            f"weighted F1: {self.weighted_f1:.4f}",
            f"confusion (fake positive): tp={self.matrix.tp} fp={self.matrix.fp} "
            f"fn={self.matrix.fn} tn={self.matrix.tn}",
        ]
        return "\n".join(rows) + "\n"


def confusion(gold: Sequence[Label], pred: Sequence[Label]) -> ConfusionMatrix:
    check_equal_lengths("gold", gold, "pred", pred)
    if not gold:
        raise ValueError("cannot evaluate an empty label sequence")
    tp = fp = fn = tn = 0
    for g, p in zip(gold, pred):
        if g is Label.FAKE:
            if p is Label.FAKE:
                tp += 1
            else:
                fn += 1
        else:
            if p is Label.FAKE:
                fp += 1
            else:
                tn += 1
    return ConfusionMatrix(tp=tp, fp=fp, fn=fn, tn=tn)


def _prf(tp: int, fp: int, fn: int) -> tuple[float, float, float]:
    precision = tp / (tp + fp) if tp + fp else 0.0
    recall = tp / (tp + fn) if tp + fn else 0.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
    return precision, recall, f1


def evaluate(gold: Sequence[Label], pred: Sequence[Label]) -> EvalReport:
    m = confusion(gold, pred)
    p_f, r_f, f1_f = _prf(m.tp, m.fp, m.fn)
    # Real's metrics come from the transposed matrix (real as positive).
    p_r, r_r, f1_r = _prf(m.tn, m.fn, m.fp)
    support_fake = m.tp + m.fn
    support_real = m.tn + m.fp
    weighted = (f1_f * support_fake + f1_r * support_real) / (support_fake + support_real)
    return EvalReport(
        fake=ClassMetrics(p_f, r_f, f1_f, support_fake),
        real=ClassMetrics(p_r, r_r, f1_r, support_real),
        weighted_f1=weighted,
        matrix=m,
    )


def error_report(
    corpus: Corpus,
    gold: Mapping[str, Label],
    pred: Mapping[str, Label],
) -> list[tuple[Post, Label, Label]]:
    """All misclassified posts: false positives first, then false negatives,
    each group in corpus order."""
    known = {p.id for p in corpus}
    unknown = sorted(set(pred) - known)
    if unknown:
        raise ValueError(f"predictions reference ids absent from the corpus: {unknown[:5]}")
    false_pos: list[tuple[Post, Label, Label]] = []
    false_neg: list[tuple[Post, Label, Label]] = []
    for post in corpus:
        if post.id not in pred:
            continue
        if post.id not in gold:
            raise ValueError(f"no gold label for predicted id {post.id!r}")
        g = gold[post.id]
        p = pred[post.id]
        if g is Label.REAL and p is Label.FAKE:
            false_pos.append((post, g, p))
        elif g is Label.FAKE and p is Label.REAL:
            false_neg.append((post, g, p))
    return false_pos + false_neg


def gold_labels(corpus: Corpus) -> dict[str, Label]:
    """id -> gold label map; raises if any post is unlabeled."""
    out: dict[str, Label] = {}
    for post in corpus:
        if post.label is None:
            raise ValueError(f"post {post.id!r} has no gold label")
        out[post.id] = post.label
    return out
