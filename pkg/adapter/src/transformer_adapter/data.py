"""Reading corpus TSVs and writing prediction exchange TSVs.

Formats mirror the main experiment package's documented interfaces:
corpus rows are ``id<TAB>tweet[<TAB>label]`` with a header, labels are the
lowercase strings "fake"/"real", and prediction files are
``id<TAB>label<TAB>score`` with the score printed to six decimals.
Preprocessing is deliberately absent here: the corpus arrives already
rewritten by the upstream pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Optional

LABELS = ("real", "fake")  # index position doubles as the class id
FAKE_INDEX = LABELS.index("fake")


@dataclass(frozen=True)
class Example:
    id: str
    text: str
    label: Optional[str] = None  # "fake" / "real"


def read_corpus(path: str | Path, expect_labels: bool) -> list[Example]:
    path = Path(path)
    lines = path.read_text(encoding="utf-8").splitlines()
    if not lines:
        raise ValueError(f"{path}: empty file (expected a header row)")
    header = lines[0].split("\t")
    try:
        id_col = header.index("id")
        text_col = header.index("tweet")
    except ValueError:
        raise ValueError(f"{path}: header must name 'id' and 'tweet', got {header}") from None
    label_col = header.index("label") if "label" in header else None
    if expect_labels and label_col is None:
        raise ValueError(f"{path}: missing 'label' column")

    examples: list[Example] = []
    seen: set[str] = set()
    for lineno, line in enumerate(lines[1:], start=2):
        fields = line.split("\t")
        if len(fields) != len(header):
            raise ValueError(f"{path}: line {lineno}: expected {len(header)} columns")
        pid = fields[id_col].strip()
        if not pid or pid in seen:
            raise ValueError(f"{path}: line {lineno}: missing or duplicate id")
        seen.add(pid)
        text = fields[text_col]
        if not text.strip():
            raise ValueError(f"{path}: line {lineno}: empty text")
        label = None
        if label_col is not None:
            label = fields[label_col].strip().lower()
            if label not in LABELS:
                raise ValueError(f"{path}: line {lineno}: unknown label {label!r}")
        examples.append(Example(id=pid, text=text, label=label))
    return examples


def write_predictions(path: str | Path, rows: list[tuple[str, str, float]]) -> None:
    """rows: (id, label, fake-confidence) in output order."""
    lines = ["id\tlabel\tscore"]
    for pid, label, score in rows:
        if label not in LABELS:
            raise ValueError(f"bad label {label!r} for id {pid!r}")
        if not 0.0 <= score <= 1.0:
            raise ValueError(f"score {score} outside [0, 1] for id {pid!r}")
        lines.append(f"{pid}\t{label}\t{score:.6f}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")
