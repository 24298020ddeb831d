"""Fine-tuning hyperparameters."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Optional

# COVID-Twitter-BERT v2: pretrained on COVID-period Twitter text, the
# strongest starting point for this domain.
DEFAULT_PRETRAINED_MODEL = "digitalepidemiologylab/covid-twitter-bert-v2"


@dataclass(frozen=True)
class FineTuneConfig:
    model: str = DEFAULT_PRETRAINED_MODEL
    learning_rate: float = 2e-5
    epsilon: float = 1e-8
    max_seq_length: int = 128
    batch_size: int = 8
    epochs: int = 3
    seed: int = 0
    # cap on optimizer steps for smoke runs; None trains the full epochs
    max_steps: Optional[int] = None

    def __post_init__(self) -> None:
        if not self.model:
            raise ValueError("model identifier must be non-empty")
        if self.learning_rate <= 0:
            raise ValueError("learning_rate must be positive")
        if self.epsilon <= 0:
            raise ValueError("epsilon must be positive")
        if self.max_seq_length < 1:
            raise ValueError("max_seq_length must be positive")
        if self.batch_size < 1:
            raise ValueError("batch_size must be positive")
        if self.epochs < 1:
            raise ValueError("epochs must be positive")
        if self.seed < 0:
            raise ValueError("seed must be non-negative")
        if self.max_steps is not None and self.max_steps < 1:
            raise ValueError("max_steps must be positive when set")

    def save(self, path: Path) -> None:
        path.write_text(json.dumps(asdict(self), indent=2) + "\n", encoding="utf-8")

    @classmethod
    def load(cls, path: Path) -> "FineTuneConfig":
        return cls(**json.loads(path.read_text(encoding="utf-8")))
