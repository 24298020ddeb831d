"""Bag-of-words feature space: vocabulary building and vectorization."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional, Sequence

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.exceptions import NotFittedError

from .preprocess import load_stopwords, normalize_baseline


@dataclass(frozen=True)
class SparseVector:
    """Token counts of one document: sorted (index, count) pairs."""

    indices: tuple[int, ...]
    counts: tuple[int, ...]
    dimension: int

    def __post_init__(self) -> None:
        if len(self.indices) != len(self.counts):
            raise ValueError("indices and counts must align")
        prev = -1
        for i in self.indices:
            if i <= prev:
                raise ValueError("indices must be strictly increasing")
            prev = i
        if prev >= self.dimension:
            raise ValueError(f"index {prev} out of range for dimension {self.dimension}")
        if any(c < 1 for c in self.counts):
            raise ValueError("counts must be >= 1")

    @property
    def nnz(self) -> int:
        return len(self.indices)

    def total(self) -> int:
        return sum(self.counts)


class Vocabulary:
    """Immutable term list with dense positions 0..len-1."""

    def __init__(self, terms: Sequence[str], max_features: int):
        if not terms:
            raise ValueError("vocabulary must contain at least one term")
        if max_features < 1:
            raise ValueError("max_features must be >= 1")
        if len(terms) > max_features:
            raise ValueError(f"{len(terms)} terms exceed max_features={max_features}")
        self.terms: tuple[str, ...] = tuple(terms)
        self.max_features = max_features
        self.index: dict[str, int] = {t: i for i, t in enumerate(self.terms)}
        if len(self.index) != len(self.terms):
            raise ValueError("vocabulary terms must be unique")

    def __len__(self) -> int:
        return len(self.terms)

    def __contains__(self, term: str) -> bool:
        return term in self.index

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Vocabulary) and self.terms == other.terms

    def __repr__(self) -> str:
        return f"Vocabulary({len(self.terms)} terms, max_features={self.max_features})"


def build_vocabulary(docs: Iterable[Sequence[str]], max_features: int) -> Vocabulary:
    """Select the most frequent tokens by total corpus count.

    Ties at the frequency cutoff break lexicographically ascending; the
    selected terms are then ordered lexicographically, so the result is a
    total order independent of document order.
    """
    if max_features < 1:
        raise ValueError("max_features must be >= 1")
    freq: Counter[str] = Counter()
    for doc in docs:
        freq.update(doc)
    if not freq:
        raise ValueError("cannot build a vocabulary from a corpus with no tokens")
    top = sorted(freq.items(), key=lambda kv: (-kv[1], kv[0]))[:max_features]
    return Vocabulary(sorted(t for t, _ in top), max_features)


def vectorize(doc: Sequence[str], vocab: Vocabulary) -> SparseVector:
    """Count in-vocabulary tokens; out-of-vocabulary tokens are ignored."""
    if len(vocab) == 0:
        raise ValueError("vocabulary is empty")
    counts: Counter[int] = Counter()
    for token in doc:
        idx = vocab.index.get(token)
        if idx is not None:
            counts[idx] += 1
    indices = tuple(sorted(counts))
    return SparseVector(indices, tuple(counts[i] for i in indices), len(vocab))


def save_vocabulary(vocab: Vocabulary, path: str | Path) -> None:
    """One term per line, in index order."""
    Path(path).write_text("\n".join(vocab.terms) + "\n", encoding="utf-8")


def load_vocabulary(path: str | Path, max_features: Optional[int] = None) -> Vocabulary:
    terms = Path(path).read_text(encoding="utf-8").splitlines()
    return Vocabulary(terms, max_features if max_features is not None else len(terms))


class BowVectorizer(BaseEstimator, TransformerMixin):
    """Baseline bag-of-words vectorizer over raw post texts.

    fit() learns the vocabulary from the training texts using the baseline
    normalization (lowercase, alphanumeric tokens, stop-word removal,
    stemming); transform() maps texts to SparseVectors over that space.
    """

    def __init__(self, max_features: int = 10000, stop_words: Optional[frozenset[str]] = None):
        self.max_features = max_features
        self.stop_words = stop_words

    def _stopset(self) -> frozenset[str]:
        return self.stop_words if self.stop_words is not None else load_stopwords()

    def fit(self, X: Iterable[str], y=None) -> "BowVectorizer":
        stopwords = self._stopset()
        docs = [normalize_baseline(text, stopwords) for text in X]
        self.vocabulary_ = build_vocabulary(docs, self.max_features)
        return self

    def transform(self, X: Iterable[str]) -> list[SparseVector]:
        if not hasattr(self, "vocabulary_"):
            raise NotFittedError("BowVectorizer is not fitted; call fit first")
        stopwords = self._stopset()
        return [vectorize(normalize_baseline(text, stopwords), self.vocabulary_) for text in X]
