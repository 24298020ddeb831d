import sys
from pathlib import Path

import pytest

# allow "import oracles" from any test module
sys.path.insert(0, str(Path(__file__).parent))

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def mini_train() -> Path:
    return DATA_DIR / "mini_train.tsv"


@pytest.fixture(scope="session")
def mini_val() -> Path:
    return DATA_DIR / "mini_val.tsv"


@pytest.fixture(scope="session")
def mini_test() -> Path:
    return DATA_DIR / "mini_test.tsv"


def write_mini_config(path: Path, out_dir: Path, **overrides) -> Path:
    """Write an experiment config pointing at the mini dataset."""
    values = {
        "description": "mini baseline",
        "model": "baseline_svc",
        "train": str(DATA_DIR / "mini_train.tsv"),
        "val": str(DATA_DIR / "mini_val.tsv"),
        "test": str(DATA_DIR / "mini_test.tsv"),
        "split": "official",
        "seeds": "23,30,42",
        "ensemble_k": "3",
        "url_mode": "tokenize",
        "hashtag_mode": "unwrap",
        "emoji_mode": "remove",
        "lowercase": "true",
        "max_features": "200",
        "out": str(out_dir),
    }
    values.update({k: str(v) for k, v in overrides.items()})
    lines = [f"{k} = {v}" for k, v in values.items()]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path
