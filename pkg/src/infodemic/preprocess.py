"""Tweet-aware text normalization.

Two layers live here:

* the configurable span rewriter used ahead of any classifier: URLs,
  mentions, hashtags and emoji are detected by :func:`segment` and then
  kept, removed, replaced by sentinel tokens ($URL$, $MENTION$, $HASHTAG$),
  unwrapped (hashtags) or spelled out as :shortcode: text (emoji);
* the heavier bag-of-words normalization for the linear baseline:
  lowercase, alphanumeric tokens of length >= 2, stop-word removal,
  suffix stemming.

Span grammar (pinned here for testability):
  URL      https?:// then a maximal run of non-whitespace, minus any
           trailing sentence punctuation .,;:!?
  MENTION  @ followed by 1-15 word characters [A-Za-z0-9_]
  HASHTAG  # followed by a maximal run of word characters (Unicode)
  EMOJI    maximal run of table sequences (longest match), unknown
           codepoints from the pictographic blocks, and joiner codepoints
           (VS15/VS16/ZWJ) continuing a run
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Iterable, NamedTuple, Optional

from sklearn.base import BaseEstimator, TransformerMixin

from .emoji_map import (
    JOINER_CODEPOINTS,
    is_pictographic,
    load_emoji_table,
    max_sequence_length,
)
from .stem import stem

URL_TOKEN = "$URL$"
MENTION_TOKEN = "$MENTION$"
HASHTAG_TOKEN = "$HASHTAG$"

_URL_RE = re.compile(r"https?://\S+")
_MENTION_RE = re.compile(r"@[A-Za-z0-9_]{1,15}")
_HASHTAG_RE = re.compile(r"#\w+", re.UNICODE)
_TRAILING_PUNCT = ".,;:!?"

_TOKEN_RE = re.compile(r"[^\W_]{2,}", re.UNICODE)


class SpanKind(enum.Enum):
    URL = "url"
    MENTION = "mention"
    HASHTAG = "hashtag"
    EMOJI = "emoji"
    TEXT = "text"


class Span(NamedTuple):
    kind: SpanKind
    text: str


_URL_MODES = ("keep", "remove", "tokenize")
_MENTION_MODES = ("keep", "remove", "tokenize")
_HASHTAG_MODES = ("keep", "remove", "tokenize", "unwrap")
_EMOJI_MODES = ("keep", "remove", "describe")


@dataclass(frozen=True)
class PreprocessConfig:
    url_mode: str = "keep"
    mention_mode: str = "keep"
    hashtag_mode: str = "keep"
    emoji_mode: str = "keep"
    lowercase: bool = False

    def __post_init__(self) -> None:
        for value, allowed, name in (
            (self.url_mode, _URL_MODES, "url_mode"),
            (self.mention_mode, _MENTION_MODES, "mention_mode"),
            (self.hashtag_mode, _HASHTAG_MODES, "hashtag_mode"),
            (self.emoji_mode, _EMOJI_MODES, "emoji_mode"),
        ):
            if value not in allowed:
                raise ValueError(f"{name} must be one of {allowed}, got {value!r}")


def _match_emoji_unit(text: str, i: int) -> int:
    """Length of the table sequence or pictographic codepoint at ``i``, or 0."""
    table = load_emoji_table()
    limit = min(max_sequence_length(), len(text) - i)
    for length in range(limit, 0, -1):
        if text[i : i + length] in table:
            return length
    return 1 if is_pictographic(text[i]) else 0


def _match_emoji_run(text: str, i: int) -> int:
    """End index of the maximal emoji run starting at ``i`` (== i if none)."""
    j = i
    while j < len(text):
        length = _match_emoji_unit(text, j)
        if length:
            j += length
        elif j > i and ord(text[j]) in JOINER_CODEPOINTS:
            j += 1
        else:
            break
    return j


def segment(text: str) -> list[Span]:
    """Split text into URL/mention/hashtag/emoji/plain-text spans.

    Lossless: concatenating the span texts reproduces the input exactly.
    """
    spans: list[Span] = []
    n = len(text)
    i = 0
    text_start = 0

    def flush(upto: int) -> None:
        if upto > text_start:
            spans.append(Span(SpanKind.TEXT, text[text_start:upto]))

    while i < n:
        ch = text[i]
        kind: Optional[SpanKind] = None
        end = i
        if ch == "h":
            m = _URL_RE.match(text, i)
            if m:
                candidate = m.group(0).rstrip(_TRAILING_PUNCT)
                scheme_len = candidate.index("//") + 2 if "//" in candidate else 0
                if len(candidate) > scheme_len:
                    kind, end = SpanKind.URL, i + len(candidate)
        elif ch == "@":
            m = _MENTION_RE.match(text, i)
            if m:
                kind, end = SpanKind.MENTION, m.end()
        elif ch == "#":
            m = _HASHTAG_RE.match(text, i)
            if m:
                kind, end = SpanKind.HASHTAG, m.end()
        else:
            run_end = _match_emoji_run(text, i)
            if run_end > i:
                kind, end = SpanKind.EMOJI, run_end
        if kind is None:
            i += 1
            continue
        flush(i)
        spans.append(Span(kind, text[i:end]))
        i = end
        text_start = i
    flush(n)
    return spans


def _emoji_shortcodes(span_text: str) -> str:
    """Render an emoji span as concatenated :shortcode: text."""
    table = load_emoji_table()
    parts: list[str] = []
    i = 0
    while i < len(span_text):
        length = _match_emoji_unit(span_text, i)
        if length:
            unit = span_text[i : i + length]
            parts.append(f":{table[unit]}:" if unit in table else ":emoji:")
            i += length
        else:
            # joiner codepoint continuing the run; renders as nothing
            i += 1
    return "".join(parts)


def apply_pipeline(text: str, config: PreprocessConfig) -> str:
    """Rewrite one post according to the configured per-span modes.

    Whitespace runs in the result are collapsed to single spaces and the
    ends trimmed. A removed span leaves a single space in its place (then
    collapsed), so deleting a span can never splice its neighbors into a
    new URL, mention, hashtag or emoji sequence.
    """
    parts: list[str] = []
    for kind, s in segment(text):
        if kind is SpanKind.TEXT:
            parts.append(s)
        elif kind is SpanKind.URL:
            parts.append({"keep": s, "remove": " ", "tokenize": URL_TOKEN}[config.url_mode])
        elif kind is SpanKind.MENTION:
            parts.append(
                {"keep": s, "remove": " ", "tokenize": MENTION_TOKEN}[config.mention_mode]
            )
        elif kind is SpanKind.HASHTAG:
            parts.append(
                {
                    "keep": s,
                    "remove": " ",
                    "tokenize": HASHTAG_TOKEN,
                    "unwrap": s[1:],
                }[config.hashtag_mode]
            )
        else:
            parts.append(
                {
                    "keep": s,
                    "remove": " ",
                    "describe": _emoji_shortcodes(s),
                }[config.emoji_mode]
            )
    out = "".join(parts)
    if config.lowercase:
        out = out.lower()
    return " ".join(out.split())


@lru_cache(maxsize=1)
def load_stopwords() -> frozenset[str]:
    """The bundled 318-entry English stop-word list."""
    text = (
        resources.files("infodemic")
        .joinpath("data", "stopwords_english.txt")
        .read_text(encoding="utf-8")
    )
    return frozenset(text.split())


def normalize_baseline(text: str, stopwords: Optional[frozenset[str]] = None) -> list[str]:
    """Tokenize for the bag-of-words baseline.

    Lowercases, extracts alphanumeric runs of length >= 2, drops stop-words,
    then stems. Order is preserved.
    """
    if stopwords is None:
        stopwords = load_stopwords()
    return [stem(t) for t in _TOKEN_RE.findall(text.lower()) if t not in stopwords]


class TweetPreprocessor(BaseEstimator, TransformerMixin):
    """Stateless transformer wrapping :func:`apply_pipeline`.

    Parameters mirror PreprocessConfig so instances drop into sklearn
    pipelines and grid searches.
    """

    def __init__(
        self,
        url_mode: str = "keep",
        mention_mode: str = "keep",
        hashtag_mode: str = "keep",
        emoji_mode: str = "keep",
        lowercase: bool = False,
    ):
        self.url_mode = url_mode
        self.mention_mode = mention_mode
        self.hashtag_mode = hashtag_mode
        self.emoji_mode = emoji_mode
        self.lowercase = lowercase

    def _config(self) -> PreprocessConfig:
        return PreprocessConfig(
            url_mode=self.url_mode,
            mention_mode=self.mention_mode,
            hashtag_mode=self.hashtag_mode,
            emoji_mode=self.emoji_mode,
            lowercase=self.lowercase,
        )

    def fit(self, X: Iterable[str], y=None) -> "TweetPreprocessor":
        self._config()  # validate parameters
        return self

    def transform(self, X: Iterable[str]) -> list[str]:
        config = self._config()
        return [apply_pipeline(t, config) for t in X]
