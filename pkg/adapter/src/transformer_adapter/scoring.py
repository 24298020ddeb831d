"""Batch inference: corpus TSV in, prediction exchange TSV out."""

from __future__ import annotations

from pathlib import Path

import torch
from transformers import AutoModelForSequenceClassification, AutoTokenizer

from .data import FAKE_INDEX, read_corpus, write_predictions


def score(
    model_dir: str | Path,
    input_file: str | Path,
    out_file: str | Path,
    batch_size: int = 32,
    max_seq_length: int = 128,
) -> Path:
    """Write one record per input post, in input order.

    The score is the softmax probability of the fake class; the label is
    fake exactly when that probability exceeds 0.5 (a score of exactly 0.5
    resolves to real).
    """
    model_dir = Path(model_dir)
    tokenizer = AutoTokenizer.from_pretrained(model_dir)
    model = AutoModelForSequenceClassification.from_pretrained(model_dir)
    model.eval()

    examples = read_corpus(input_file, expect_labels=False)
    rows: list[tuple[str, str, float]] = []
    with torch.no_grad():
        for start in range(0, len(examples), batch_size):
            chunk = examples[start : start + batch_size]
            batch = tokenizer(
                [e.text for e in chunk],
                padding=True,
                truncation=True,
                max_length=max_seq_length,
                return_tensors="pt",
            )
            probs = torch.softmax(model(**batch).logits, dim=-1)[:, FAKE_INDEX]
            for example, p in zip(chunk, probs.tolist()):
                label = "fake" if p > 0.5 else "real"
                rows.append((example.id, label, p))

    if len(rows) != len(examples):  # every input id must be scored
        raise RuntimeError(
            f"scored {len(rows)} posts but input has {len(examples)}"
        )
    write_predictions(out_file, rows)
    return Path(out_file)
