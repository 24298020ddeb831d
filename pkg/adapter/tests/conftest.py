import re
from pathlib import Path

import pytest
from transformers import BertConfig, BertForSequenceClassification, BertTokenizer

FAKE_TEXTS = [
    "miracle garlic cure destroys the virus overnight",
    "drinking bleach protects you from infection",
    "microchips hidden in vaccines track citizens",
    "5g towers spread the virus says banned video",
    "secret conspiracy hides the miracle cure",
    "garlic soup cures infection in one day",
    "hidden microchip plot confirmed by insider",
    "bleach injections endorsed by viral rumor",
    "banned clip reveals radiation causes outbreak",
    "insider says vaccines contain tracking chips",
    "hot water and garlic stop the virus",
    "the outbreak is a hoax staged by elites",
    "viral rumor claims cure found in garlic",
    "conspiracy post blames towers for outbreak",
    "hoax message says chips hide in tests",
    "staged plot spreads in banned forum",
]

REAL_TEXTS = [
    "cdc reports new confirmed cases in weekly update",
    "health ministry publishes updated case counts",
    "clinical trial shows vaccine candidate is safe",
    "officials confirm recoveries in daily report",
    "study estimates transmission from tracing data",
    "ministry update lists testing capacity",
    "researchers publish peer reviewed study",
    "daily report confirms declining case numbers",
    "trial enrollment reaches thousands says update",
    "situation report documents hospital capacity",
    "tracing study finds clusters indoors",
    "surveillance update shows stable case counts",
    "officials publish weekly testing summary",
    "study measures antibody response in patients",
    "ministry confirms hospital admissions fell",
    "weekly report tracks confirmed recoveries",
]


def write_fixture_corpus(path: Path) -> Path:
    rows = ["id\ttweet\tlabel"]
    for i, text in enumerate(FAKE_TEXTS):
        rows.append(f"f{i:02d}\t{text}\tfake")
    for i, text in enumerate(REAL_TEXTS):
        rows.append(f"r{i:02d}\t{text}\treal")
    path.write_text("\n".join(rows) + "\n", encoding="utf-8")
    return path


@pytest.fixture(scope="session")
def fixture_corpus(tmp_path_factory) -> Path:
    return write_fixture_corpus(tmp_path_factory.mktemp("data") / "train32.tsv")


@pytest.fixture(scope="session")
def standin_model(tmp_path_factory) -> Path:
    """Tiny randomly initialized BERT + wordlevel vocab covering the fixture.

    Stands in for the real pretrained checkpoint, which is not fetchable
    from this environment; the smoke tests only need a trainable
    transformer with the same interface.
    """
    d = tmp_path_factory.mktemp("standin")
    words = sorted(
        {w for text in FAKE_TEXTS + REAL_TEXTS for w in re.findall(r"[a-z0-9]+", text)}
    )
    vocab = ["[PAD]", "[UNK]", "[CLS]", "[SEP]", "[MASK]"] + words
    (d / "vocab.txt").write_text("\n".join(vocab) + "\n", encoding="utf-8")
    # the fast-tokenizer conversion mis-handles ad-hoc vocab files in this
    # transformers version; the slow tokenizer round-trips correctly
    BertTokenizer(str(d / "vocab.txt")).save_pretrained(d)
    config = BertConfig(
        vocab_size=len(vocab),
        hidden_size=32,
        num_hidden_layers=2,
        num_attention_heads=2,
        intermediate_size=64,
        max_position_embeddings=160,
        num_labels=2,
        id2label={0: "real", 1: "fake"},
        label2id={"real": 0, "fake": 1},
    )
    BertForSequenceClassification(config).save_pretrained(d)
    return d
