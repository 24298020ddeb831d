import time

import pytest

from transformer_adapter.cli import main
from transformer_adapter.config import FineTuneConfig
from transformer_adapter.data import read_corpus, write_predictions
from transformer_adapter.finetune import fine_tune, read_step_losses
from transformer_adapter.scoring import score


def smoke_config(standin_model, **overrides) -> FineTuneConfig:
    values = dict(
        model=str(standin_model),
        learning_rate=2e-3,  # tiny random-init model; paper-scale 2e-5 barely moves in 50 steps
        epsilon=1e-8,
        max_seq_length=128,
        batch_size=8,
        epochs=13,
        seed=11,
        max_steps=50,
    )
    values.update(overrides)
    return FineTuneConfig(**values)


class TestConfig:
    def test_defaults_match_published_recipe(self):
        cfg = FineTuneConfig()
        assert cfg.learning_rate == 2e-5
        assert cfg.epsilon == 1e-8
        assert cfg.max_seq_length == 128
        assert cfg.batch_size == 8
        assert cfg.epochs == 3

    def test_zero_epochs_rejected(self):
        with pytest.raises(ValueError, match="epochs"):
            FineTuneConfig(epochs=0)

    @pytest.mark.parametrize(
        "field,value",
        [("learning_rate", 0.0), ("epsilon", -1e-8), ("batch_size", 0),
         ("max_seq_length", 0), ("max_steps", 0)],
    )
    def test_positive_fields_enforced(self, field, value):
        with pytest.raises(ValueError):
            FineTuneConfig(**{field: value})

    def test_round_trip(self, tmp_path):
        cfg = FineTuneConfig(seed=7, max_steps=50)
        cfg.save(tmp_path / "cfg.json")
        assert FineTuneConfig.load(tmp_path / "cfg.json") == cfg


class TestDataIO:
    def test_read_corpus(self, fixture_corpus):
        examples = read_corpus(fixture_corpus, expect_labels=True)
        assert len(examples) == 32
        assert {e.label for e in examples} == {"fake", "real"}

    def test_missing_label_column(self, tmp_path):
        p = tmp_path / "x.tsv"
        p.write_text("id\ttweet\n1\thello\n", encoding="utf-8")
        with pytest.raises(ValueError, match="label"):
            read_corpus(p, expect_labels=True)

    def test_duplicate_id(self, tmp_path):
        p = tmp_path / "x.tsv"
        p.write_text("id\ttweet\tlabel\n1\ta\tfake\n1\tb\treal\n", encoding="utf-8")
        with pytest.raises(ValueError, match="line 3"):
            read_corpus(p, expect_labels=True)

    def test_write_predictions_validates(self, tmp_path):
        with pytest.raises(ValueError, match="outside"):
            write_predictions(tmp_path / "p.tsv", [("1", "fake", 1.5)])
        with pytest.raises(ValueError, match="label"):
            write_predictions(tmp_path / "p.tsv", [("1", "bogus", 0.5)])


class TestSmoke:
    """The adapter acceptance check: a 50-step fine-tune on the 32-post
    fixture learns (strictly decreasing smoothed loss) and its prediction
    file parses cleanly with the main package's loader."""

    def test_fifty_step_finetune_and_score(self, tmp_path, standin_model, fixture_corpus):
        start = time.monotonic()
        artifact = fine_tune(fixture_corpus, smoke_config(standin_model), tmp_path / "artifact")

        losses = read_step_losses(artifact)
        assert len(losses) == 50
        buckets = [sum(losses[i : i + 10]) / 10 for i in range(0, 50, 10)]
        assert all(b < a for a, b in zip(buckets, buckets[1:])), buckets

        pred_file = score(artifact, fixture_corpus, tmp_path / "pred.tsv")

        from infodemic.ensemble import load_predictions  # the consuming side

        pset = load_predictions(pred_file)
        examples = read_corpus(fixture_corpus, expect_labels=False)
        assert set(pset.records) == {e.id for e in examples}
        assert all(0.0 <= r.score <= 1.0 for r in pset.records.values())

        elapsed = time.monotonic() - start
        assert elapsed < 300.0
        print(f"ACCEPTANCE PASS: adapter smoke (loss {buckets[0]:.3f}->{buckets[-1]:.3f}, "
              f"{elapsed:.1f}s)")

    def test_label_matches_score_threshold(self, tmp_path, standin_model, fixture_corpus):
        artifact = fine_tune(
            fixture_corpus, smoke_config(standin_model, max_steps=8, epochs=2), tmp_path / "a"
        )
        pred_file = score(artifact, fixture_corpus, tmp_path / "pred.tsv")
        for line in pred_file.read_text(encoding="utf-8").splitlines()[1:]:
            _, label, score_s = line.split("\t")
            assert (label == "fake") == (float(score_s) > 0.5)

    def test_same_seed_reproduces_prediction_file(self, tmp_path, standin_model, fixture_corpus):
        cfg = smoke_config(standin_model, max_steps=12, epochs=3)
        a = fine_tune(fixture_corpus, cfg, tmp_path / "a")
        b = fine_tune(fixture_corpus, cfg, tmp_path / "b")
        pa = score(a, fixture_corpus, tmp_path / "pa.tsv")
        pb = score(b, fixture_corpus, tmp_path / "pb.tsv")
        assert pa.read_bytes() == pb.read_bytes()

    def test_epoch_log_written(self, tmp_path, standin_model, fixture_corpus):
        artifact = fine_tune(
            fixture_corpus, smoke_config(standin_model, max_steps=8, epochs=2), tmp_path / "a"
        )
        lines = (artifact / "epoch_loss.tsv").read_text(encoding="utf-8").splitlines()
        assert lines[0] == "epoch\tmean_loss"
        assert len(lines) >= 2


class TestCli:
    def test_finetune_and_score_commands(self, tmp_path, standin_model, fixture_corpus):
        artifact = tmp_path / "artifact"
        code = main([
            "finetune",
            "--train", str(fixture_corpus),
            "--out", str(artifact),
            "--model", str(standin_model),
            "--learning-rate", "5e-4",
            "--epochs", "2",
            "--max-steps", "8",
            "--seed", "3",
        ])
        assert code == 0
        assert (artifact / "training_log.tsv").is_file()

        pred = tmp_path / "pred.tsv"
        code = main([
            "score",
            "--model-dir", str(artifact),
            "--in", str(fixture_corpus),
            "--out", str(pred),
        ])
        assert code == 0
        assert pred.read_text(encoding="utf-8").startswith("id\tlabel\tscore\n")

    def test_errors_exit_nonzero(self, tmp_path, capsys):
        code = main(["score", "--model-dir", str(tmp_path / "none"),
                     "--in", str(tmp_path / "none.tsv"), "--out", str(tmp_path / "o.tsv")])
        assert code == 2
        assert "error [score]" in capsys.readouterr().err

    def test_zero_epochs_rejected_at_cli(self, tmp_path, standin_model, fixture_corpus, capsys):
        code = main([
            "finetune", "--train", str(fixture_corpus),
            "--out", str(tmp_path / "a"), "--model", str(standin_model),
            "--epochs", "0",
        ])
        assert code == 2
        assert "epochs" in capsys.readouterr().err
