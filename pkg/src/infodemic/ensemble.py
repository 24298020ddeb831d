"""Hard-voting combination of prediction sets and the exchange file format.

The exchange file decouples scorers from the ensemble: any model (the
native baseline or an external fine-tuned transformer) writes one TSV per
evaluation split with header ``id<TAB>label<TAB>score``, where score is the
model's fake-class confidence with six decimals. Everything downstream
(selection, voting, evaluation) consumes only these files.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping, Optional, Sequence

from .corpus import Label

EXCHANGE_HEADER = "id\tlabel\tscore"


class TieRule(enum.Enum):
    PREFER_REAL = "prefer_real"
    MEAN_SCORE = "mean_score"


@dataclass(frozen=True)
class PredictionRecord:
    id: str
    label: Label
    score: Optional[float] = None  # confidence that label is fake

    def __post_init__(self) -> None:
        if self.score is not None and not 0.0 <= self.score <= 1.0:
            raise ValueError(f"record {self.id!r}: score {self.score} outside [0, 1]")


@dataclass(frozen=True)
class PredictionSet:
    model_id: str
    records: Mapping[str, PredictionRecord]

    def __post_init__(self) -> None:
        for key, rec in self.records.items():
            if key != rec.id:
                raise ValueError(f"record keyed {key!r} carries id {rec.id!r}")

    def ids(self) -> set[str]:
        return set(self.records)

    def labels_in_order(self, ids: Sequence[str]) -> list[Label]:
        return [self.records[i].label for i in ids]


@dataclass(frozen=True)
class EnsembleConfig:
    members: tuple[PredictionSet, ...]
    tie_rule: TieRule = TieRule.PREFER_REAL

    def __post_init__(self) -> None:
        if not self.members:
            raise ValueError("ensemble requires at least one member")


def hard_vote(
    votes: Sequence[Label],
    scores: Optional[Sequence[Optional[float]]] = None,
    tie_rule: TieRule = TieRule.PREFER_REAL,
) -> Label:
    """Majority label; exact ties resolve by the configured rule."""
    if not votes:
        raise ValueError("hard_vote requires at least one vote")
    if scores is not None and len(scores) != len(votes):
        raise ValueError("scores must align with votes")
    fake = sum(1 for v in votes if v is Label.FAKE)
    real = len(votes) - fake
    if fake > real:
        return Label.FAKE
    if real > fake:
        return Label.REAL
    if tie_rule is TieRule.PREFER_REAL:
        return Label.REAL
    if scores is None or any(s is None for s in scores):
        raise ValueError("mean_score tie rule requires a score from every member")
    mean = sum(scores) / len(scores)  # type: ignore[arg-type]
    return Label.FAKE if mean > 0.5 else Label.REAL


def combine(cfg: EnsembleConfig) -> PredictionSet:
    """Per-id hard vote across members.

    Member order does not matter. The combined score is the fraction of
    members voting fake, so unanimity gives 0.0 or 1.0.
    """
    members = cfg.members
    base_ids = list(members[0].records)
    base_set = set(base_ids)
    for m in members[1:]:
        if m.ids() != base_set:
            missing = sorted(base_set - m.ids())[:5]
            extra = sorted(m.ids() - base_set)[:5]
            raise ValueError(
                f"member {m.model_id!r} id set differs: missing {missing}, unexpected {extra}"
            )
    records: dict[str, PredictionRecord] = {}
    for pid in base_ids:
        votes = [m.records[pid].label for m in members]
        scores = [m.records[pid].score for m in members]
        label = hard_vote(votes, scores, cfg.tie_rule)
        fake_fraction = sum(1 for v in votes if v is Label.FAKE) / len(votes)
        records[pid] = PredictionRecord(id=pid, label=label, score=fake_fraction)
    return PredictionSet(model_id="+".join(m.model_id for m in members), records=records)


def load_predictions(path: str | Path) -> PredictionSet:
    path = Path(path)
    lines = path.read_text(encoding="utf-8").splitlines()
    if not lines or lines[0] != EXCHANGE_HEADER:
        raise ValueError(f"{path}: expected header {EXCHANGE_HEADER!r}")
    records: dict[str, PredictionRecord] = {}
    for lineno, line in enumerate(lines[1:], start=2):
        fields = line.split("\t")
        if len(fields) != 3:
            raise ValueError(f"{path}: line {lineno}: expected 3 columns, got {len(fields)}")
        pid, label_s, score_s = fields
        if pid in records:
            raise ValueError(f"{path}: line {lineno}: duplicate id {pid!r}")
        try:
            label = Label.parse(label_s)
            score = float(score_s)
        except ValueError as e:
            raise ValueError(f"{path}: line {lineno}: {e}") from None
        if not 0.0 <= score <= 1.0:
            raise ValueError(f"{path}: line {lineno}: score {score} outside [0, 1]")
        records[pid] = PredictionRecord(id=pid, label=label, score=score)
    return PredictionSet(model_id=path.stem, records=records)


def save_predictions(pset: PredictionSet, path: str | Path) -> None:
    lines = [EXCHANGE_HEADER]
    for pid, rec in pset.records.items():
        if rec.score is None:
            raise ValueError(f"record {pid!r} has no score; exchange format requires one")
        lines.append(f"{pid}\t{rec.label}\t{rec.score:.6f}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")
