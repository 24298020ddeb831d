"""Emoji lookup table and pictographic-range helpers.

The shortcode table is a bundled TSV asset (``data/emoji_map.tsv``), one row
per codepoint sequence: hex codepoints separated by spaces, a tab, then the
shortcode (without colons). Codepoints not covered by the table but falling
into a known pictographic block are still treated as emoji; they have no
shortcode and render as the generic ``:emoji:`` in describe mode.
"""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

# Unicode blocks scanned for emoji. Kept in sync with tools/gen_emoji_map.py,
# which imports this list when regenerating the asset.
EMOJI_BLOCKS: tuple[tuple[int, int], ...] = (
    (0x00A9, 0x00A9),
    (0x00AE, 0x00AE),
    (0x203C, 0x203C),
    (0x2049, 0x2049),
    (0x2122, 0x2122),
    (0x2139, 0x2139),
    (0x2194, 0x21AA),
    (0x231A, 0x231B),
    (0x2328, 0x2328),
    (0x23CF, 0x23FA),
    (0x24C2, 0x24C2),
    (0x25AA, 0x25AB),
    (0x25B6, 0x25B6),
    (0x25C0, 0x25C0),
    (0x25FB, 0x25FE),
    (0x2600, 0x27BF),
    (0x2934, 0x2935),
    (0x2B05, 0x2B07),
    (0x2B1B, 0x2B1C),
    (0x2B50, 0x2B50),
    (0x2B55, 0x2B55),
    (0x3030, 0x3030),
    (0x303D, 0x303D),
    (0x3297, 0x3297),
    (0x3299, 0x3299),
    (0x1F004, 0x1F004),
    (0x1F0CF, 0x1F0CF),
    (0x1F170, 0x1F171),
    (0x1F17E, 0x1F17F),
    (0x1F18E, 0x1F18E),
    (0x1F191, 0x1F19A),
    (0x1F1E6, 0x1F1FF),
    (0x1F201, 0x1F202),
    (0x1F21A, 0x1F21A),
    (0x1F22F, 0x1F22F),
    (0x1F232, 0x1F23A),
    (0x1F250, 0x1F251),
    (0x1F300, 0x1F5FF),
    (0x1F600, 0x1F64F),
    (0x1F680, 0x1F6FF),
    (0x1F780, 0x1F7FF),
    (0x1F900, 0x1F9FF),
    (0x1FA70, 0x1FAFF),
)

# Invisible modifiers that extend an emoji run but carry no shortcode of
# their own: variation selectors and the zero-width joiner.
JOINER_CODEPOINTS = frozenset({0xFE0E, 0xFE0F, 0x200D})

_ASSET = "emoji_map.tsv"


def is_pictographic(ch: str) -> bool:
    cp = ord(ch)
    for lo, hi in EMOJI_BLOCKS:
        if lo <= cp <= hi:
            return True
    return False


@lru_cache(maxsize=1)
def load_emoji_table() -> dict[str, str]:
    """Map emoji string (possibly multi-codepoint) -> shortcode."""
    text = (
        resources.files("infodemic")
        .joinpath("data", _ASSET)
        .read_text(encoding="utf-8")
    )
    table: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        try:
            codes, shortcode = line.split("\t")
        except ValueError:
            raise ValueError(f"{_ASSET}: malformed line {lineno}: {line!r}") from None
        seq = "".join(chr(int(c, 16)) for c in codes.split())
        table[seq] = shortcode
    return table


@lru_cache(maxsize=1)
def max_sequence_length() -> int:
    return max(len(seq) for seq in load_emoji_table())
