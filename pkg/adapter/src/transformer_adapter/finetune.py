"""Fine-tune a pretrained sequence classifier on a labeled corpus TSV."""

from __future__ import annotations

import random
from pathlib import Path

import numpy as np
import torch
from transformers import AutoModelForSequenceClassification, AutoTokenizer

from .config import FineTuneConfig
from .data import LABELS, read_corpus

TRAINING_LOG = "training_log.tsv"
EPOCH_LOG = "epoch_loss.tsv"


def _seed_everything(seed: int) -> torch.Generator:
    """Seed python, numpy and torch. Remaining nondeterminism (if any) comes
    from the backend's kernels; CPU runs reproduce exactly."""
    random.seed(seed)
    np.random.seed(seed % 2**32)
    torch.manual_seed(seed)
    generator = torch.Generator()
    generator.manual_seed(seed)
    return generator


def _encode(tokenizer, texts: list[str], max_seq_length: int):
    return tokenizer(
        texts,
        padding=True,
        truncation=True,
        max_length=max_seq_length,
        return_tensors="pt",
    )


def fine_tune(train_file: str | Path, cfg: FineTuneConfig, out_dir: str | Path) -> Path:
    """Train for cfg.epochs (optionally capped at cfg.max_steps optimizer
    steps) and save the classifier artifact plus training logs.

    The input corpus must already be preprocessed upstream; this adapter
    applies no text transforms of its own.
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    examples = read_corpus(train_file, expect_labels=True)
    if not examples:
        raise ValueError(f"{train_file}: no training examples")

    generator = _seed_everything(cfg.seed)
    tokenizer = AutoTokenizer.from_pretrained(cfg.model)
    model = AutoModelForSequenceClassification.from_pretrained(
        cfg.model,
        num_labels=len(LABELS),
        id2label=dict(enumerate(LABELS)),
        label2id={name: i for i, name in enumerate(LABELS)},
    )
    model.train()
    optimizer = torch.optim.AdamW(
        model.parameters(), lr=cfg.learning_rate, eps=cfg.epsilon
    )

    texts = [e.text for e in examples]
    labels = torch.tensor([LABELS.index(e.label) for e in examples])

    step = 0
    step_rows: list[str] = []
    epoch_rows: list[str] = []
    done = False
    for epoch in range(1, cfg.epochs + 1):
        order = torch.randperm(len(examples), generator=generator).tolist()
        epoch_losses: list[float] = []
        for start in range(0, len(order), cfg.batch_size):
            batch_idx = order[start : start + cfg.batch_size]
            batch = _encode(tokenizer, [texts[i] for i in batch_idx], cfg.max_seq_length)
            out = model(**batch, labels=labels[batch_idx])
            optimizer.zero_grad()
            out.loss.backward()
            optimizer.step()
            step += 1
            loss = float(out.loss.detach())
            epoch_losses.append(loss)
            step_rows.append(f"{epoch}\t{step}\t{loss:.6f}")
            if cfg.max_steps is not None and step >= cfg.max_steps:
                done = True
                break
        epoch_rows.append(f"{epoch}\t{sum(epoch_losses) / len(epoch_losses):.6f}")
        if done:
            break

    model.eval()
    model.save_pretrained(out_dir)
    tokenizer.save_pretrained(out_dir)
    cfg.save(out_dir / "finetune_config.json")
    (out_dir / TRAINING_LOG).write_text(
        "epoch\tstep\tloss\n" + "\n".join(step_rows) + "\n", encoding="utf-8"
    )
    (out_dir / EPOCH_LOG).write_text(
        "epoch\tmean_loss\n" + "\n".join(epoch_rows) + "\n", encoding="utf-8"
    )
    return out_dir


def read_step_losses(artifact_dir: str | Path) -> list[float]:
    lines = (Path(artifact_dir) / TRAINING_LOG).read_text(encoding="utf-8").splitlines()
    return [float(line.split("\t")[2]) for line in lines[1:]]
