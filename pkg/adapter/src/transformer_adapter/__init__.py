"""Transformer fine-tuning adapter.

Fine-tunes a pretrained sequence classifier on fake/real post TSVs and
writes prediction exchange files. It shares no code with the main
experiment package: the corpus TSV it reads and the prediction TSV it
writes are the whole interface, so its outputs drop straight into the
hard-voting ensemble stage.
"""

from .config import DEFAULT_PRETRAINED_MODEL, FineTuneConfig
from .finetune import fine_tune
from .scoring import score

__version__ = "0.1.0"

__all__ = ["DEFAULT_PRETRAINED_MODEL", "FineTuneConfig", "fine_tune", "score"]
