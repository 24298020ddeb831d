"""Labeled post collections: TSV loading, validation, merging, splitting.

File format (see README): UTF-8 TSV with header ``id<TAB>tweet<TAB>label``;
the label column is absent for unlabeled input. Labels serialize as the
lowercase strings "fake" and "real". Tabs were chosen over commas because
posts routinely contain commas and quotes.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Optional

from .util import check_seed, fisher_yates, make_rng


class Label(enum.Enum):
    FAKE = "fake"
    REAL = "real"

    @classmethod
    def parse(cls, s: str) -> "Label":
        try:
            return cls(s.strip().lower())
        except ValueError:
            raise ValueError(f"unknown label {s!r} (expected 'fake' or 'real')") from None

    def __str__(self) -> str:
        return self.value


class Source(enum.Enum):
    TASK = "task"
    COAID = "coaid"
    FAKECOVID = "fakecovid"


@dataclass(frozen=True)
class Post:
    id: str
    text: str
    label: Optional[Label] = None
    source: Source = Source.TASK

    def __post_init__(self) -> None:
        if not self.id:
            raise ValueError("post id must be non-empty")
        if not self.text.strip():
            raise ValueError(f"post {self.id!r}: text is empty")


@dataclass(frozen=True)
class Corpus:
    posts: tuple[Post, ...]
    name: str = ""

    def __post_init__(self) -> None:
        seen: set[str] = set()
        for p in self.posts:
            if p.id in seen:
                raise ValueError(f"duplicate post id {p.id!r} in corpus {self.name!r}")
            seen.add(p.id)

    def __len__(self) -> int:
        return len(self.posts)

    def __iter__(self) -> Iterator[Post]:
        return iter(self.posts)

    def ids(self) -> list[str]:
        return [p.id for p in self.posts]

    def labels(self) -> list[Label]:
        missing = [p.id for p in self.posts if p.label is None]
        if missing:
            raise ValueError(f"corpus {self.name!r}: unlabeled posts: {missing[:5]}")
        return [p.label for p in self.posts]  # type: ignore[misc]

    def texts(self) -> list[str]:
        return [p.text for p in self.posts]


class SplitMode(enum.Enum):
    OFFICIAL = "official"
    HOLDOUT_N = "holdout_n"


@dataclass(frozen=True)
class SplitSpec:
    mode: SplitMode
    n: int = 0
    seed: int = 0

    def __post_init__(self) -> None:
        check_seed(self.seed)
        if self.mode is SplitMode.HOLDOUT_N and self.n < 0:
            raise ValueError("holdout size must be non-negative")


def load_dataset(
    path: str | Path,
    expect_labels: bool = True,
    source: Source = Source.TASK,
) -> Corpus:
    """Read a dataset TSV into a Corpus.

    Header must name an ``id`` and ``tweet`` column; a ``label`` column is
    required when expect_labels is true and parsed whenever present.
    Malformed rows, duplicate ids, unknown labels and empty texts are hard
    errors reported with their line number: silently dropping rows would
    corrupt downstream split sizes.
    """
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"dataset file not found: {path}")
    lines = path.read_text(encoding="utf-8").splitlines()
    if not lines:
        raise ValueError(f"{path}: empty file (expected a header row)")

    header = lines[0].split("\t")
    try:
        id_col = header.index("id")
        text_col = header.index("tweet")
    except ValueError:
        raise ValueError(f"{path}: header must name 'id' and 'tweet' columns, got {header}") from None
    label_col: Optional[int] = header.index("label") if "label" in header else None
    if expect_labels and label_col is None:
        raise ValueError(f"{path}: missing 'label' column")

    posts: list[Post] = []
    seen: set[str] = set()
    for lineno, line in enumerate(lines[1:], start=2):
        fields = line.split("\t")
        if len(fields) != len(header):
            raise ValueError(
                f"{path}: line {lineno}: expected {len(header)} columns, got {len(fields)}"
            )
        pid = fields[id_col].strip()
        text = fields[text_col]
        if not pid:
            raise ValueError(f"{path}: line {lineno}: empty id")
        if pid in seen:
            raise ValueError(f"{path}: line {lineno}: duplicate id {pid!r}")
        seen.add(pid)
        if not text.strip():
            raise ValueError(f"{path}: line {lineno}: empty text for id {pid!r}")
        label = None
        if label_col is not None:
            try:
                label = Label.parse(fields[label_col])
            except ValueError as e:
                raise ValueError(f"{path}: line {lineno}: {e}") from None
        posts.append(Post(id=pid, text=text, label=label, source=source))
    return Corpus(posts=tuple(posts), name=path.stem)


def save_corpus(corpus: Corpus, path: str | Path) -> None:
    """Write a corpus in the dataset TSV format (round-trips exactly)."""
    labeled = [p.label is not None for p in corpus]
    if any(labeled) and not all(labeled):
        raise ValueError("cannot save corpus with a mix of labeled and unlabeled posts")
    with_labels = bool(labeled) and all(labeled)

    rows = ["id\ttweet\tlabel" if with_labels else "id\ttweet"]
    for p in corpus:
        for field_name, value in (("id", p.id), ("text", p.text)):
            if "\t" in value or "\n" in value or "\r" in value:
                raise ValueError(
                    f"post {p.id!r}: {field_name} contains a tab or line break and "
                    "cannot be written as TSV"
                )
        rows.append(f"{p.id}\t{p.text}\t{p.label}" if with_labels else f"{p.id}\t{p.text}")
    Path(path).write_text("\n".join(rows) + "\n", encoding="utf-8")


def merge_auxiliary(base: Corpus, extra: Corpus) -> Corpus:
    """Append auxiliary labeled posts to a base corpus.

    Extra ids are prefixed with their source tag ("coaid:7") so raw ids may
    collide with the base corpus without conflict.
    """
    merged = list(base.posts)
    for p in extra:
        if p.label is None:
            raise ValueError(f"auxiliary post {p.id!r} is unlabeled")
        new_id = f"{p.source.value}:{p.id}"
        merged.append(Post(id=new_id, text=p.text, label=p.label, source=p.source))
    try:
        return Corpus(posts=tuple(merged), name=base.name)
    except ValueError as e:
        raise ValueError(f"merge_auxiliary: {e}") from None


def split_holdout(pool: Corpus, spec: SplitSpec) -> tuple[Corpus, Corpus]:
    """Split off ``spec.n`` seeded-random posts for hold-out validation.

    Membership comes from a Fisher-Yates shuffle of index order under
    PCG64(seed); both halves keep the pool's original relative order, and the
    result is a pure function of (pool order, spec).
    """
    if spec.mode is not SplitMode.HOLDOUT_N:
        raise ValueError(f"split_holdout requires holdout_n mode, got {spec.mode.value}")
    if spec.n >= len(pool):
        raise ValueError(f"holdout size {spec.n} must be smaller than the pool ({len(pool)})")
    perm = fisher_yates(len(pool), make_rng(spec.seed))
    holdout_idx = sorted(perm[: spec.n])
    holdout_set = set(holdout_idx)
    train = [p for i, p in enumerate(pool.posts) if i not in holdout_set]
    holdout = [pool.posts[i] for i in holdout_idx]
    return (
        Corpus(posts=tuple(train), name=f"{pool.name}-train"),
        Corpus(posts=tuple(holdout), name=f"{pool.name}-holdout"),
    )


def with_texts(corpus: Corpus, texts: Iterable[str]) -> Corpus:
    """Corpus with each post's text replaced (used after preprocessing)."""
    texts = list(texts)
    if len(texts) != len(corpus):
        raise ValueError("text count does not match corpus size")
    posts = tuple(
        Post(id=p.id, text=t, label=p.label, source=p.source)
        for p, t in zip(corpus.posts, texts)
    )
    return Corpus(posts=posts, name=corpus.name)
