#!/usr/bin/env python3
"""Regenerate the bundled English stop-word list.

The list is the 318-entry built-in list shipped with scikit-learn's text
vectorizers, frozen here as a data asset so the runtime package does not
depend on scikit-learn's feature-extraction internals staying stable.

Usage: python3 tools/gen_stopwords.py
"""

from pathlib import Path

from sklearn.feature_extraction.text import ENGLISH_STOP_WORDS

OUT = Path(__file__).resolve().parents[1] / "src" / "infodemic" / "data" / "stopwords_english.txt"


def main() -> None:
    words = sorted(ENGLISH_STOP_WORDS)
    OUT.write_text("\n".join(words) + "\n", encoding="utf-8")
    print(f"wrote {len(words)} stop words to {OUT}")


if __name__ == "__main__":
    main()
