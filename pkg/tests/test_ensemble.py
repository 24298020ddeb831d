import itertools
import random

import pytest

from infodemic.corpus import Label
from infodemic.ensemble import (
    EnsembleConfig,
    PredictionRecord,
    PredictionSet,
    TieRule,
    combine,
    hard_vote,
    load_predictions,
    save_predictions,
)
from oracles import brute_force_majority

F, R = Label.FAKE, Label.REAL


def pset(model_id, labels_by_id, scores_by_id=None):
    records = {}
    for pid, label in labels_by_id.items():
        score = scores_by_id[pid] if scores_by_id else (1.0 if label is F else 0.0)
        records[pid] = PredictionRecord(id=pid, label=label, score=score)
    return PredictionSet(model_id=model_id, records=records)


class TestHardVote:
    def test_two_of_three_majority(self):
        assert hard_vote([F, F, R]) is F

    def test_unanimity(self):
        assert hard_vote([R, R, R]) is R

    def test_tie_prefers_real(self):
        assert hard_vote([F, R], tie_rule=TieRule.PREFER_REAL) is R

    def test_tie_mean_score(self):
        assert hard_vote([F, R], scores=[0.9, 0.4], tie_rule=TieRule.MEAN_SCORE) is F
        assert hard_vote([F, R], scores=[0.6, 0.1], tie_rule=TieRule.MEAN_SCORE) is R
        # mean exactly 0.5 resolves to real
        assert hard_vote([F, R], scores=[0.5, 0.5], tie_rule=TieRule.MEAN_SCORE) is R

    def test_tie_mean_score_needs_scores(self):
        with pytest.raises(ValueError, match="score"):
            hard_vote([F, R], scores=None, tie_rule=TieRule.MEAN_SCORE)
        with pytest.raises(ValueError, match="score"):
            hard_vote([F, R], scores=[0.9, None], tie_rule=TieRule.MEAN_SCORE)

    def test_empty_votes_rejected(self):
        with pytest.raises(ValueError, match="at least one"):
            hard_vote([])

    def test_misaligned_scores_rejected(self):
        with pytest.raises(ValueError, match="align"):
            hard_vote([F, R], scores=[0.5])

    @pytest.mark.parametrize("size", [3, 5])
    def test_exhaustive_matches_brute_force(self, size):
        for pattern in itertools.product([F, R], repeat=size):
            expected = brute_force_majority(pattern)
            assert expected is not None  # odd count: ties impossible
            assert hard_vote(list(pattern)) is expected

    @pytest.mark.parametrize("size", [2, 4])
    def test_even_sizes_fall_back_to_tie_rule(self, size):
        for pattern in itertools.product([F, R], repeat=size):
            expected = brute_force_majority(pattern)
            got = hard_vote(list(pattern), tie_rule=TieRule.PREFER_REAL)
            assert got is (expected if expected is not None else R)


class TestCombine:
    ids = ["a", "b", "c"]

    def member(self, model_id, labels):
        return pset(model_id, dict(zip(self.ids, labels)))

    def test_unanimous_members(self):
        m = self.member
        out = combine(EnsembleConfig((m("1", [F, R, R]),) * 3))
        assert [out.records[i].label for i in self.ids] == [F, R, R]

    def test_majority_and_score(self):
        cfg = EnsembleConfig(
            (self.member("A", [F, F, R]), self.member("B", [F, R, R]), self.member("C", [R, R, R]))
        )
        out = combine(cfg)
        assert out.records["a"].label is F
        assert out.records["a"].score == pytest.approx(2 / 3)
        assert out.records["b"].label is R
        assert out.model_id == "A+B+C"

    def test_member_permutation_invariance(self):
        rng = random.Random(17)
        ids = [f"p{i}" for i in range(12)]
        for _ in range(100):
            members = [
                pset(f"m{k}", {i: rng.choice([F, R]) for i in ids}) for k in range(3)
            ]
            baseline = combine(EnsembleConfig(tuple(members)))
            for perm in itertools.permutations(members):
                out = combine(EnsembleConfig(tuple(perm)))
                assert {i: r.label for i, r in out.records.items()} == {
                    i: r.label for i, r in baseline.records.items()
                }

    def test_k_copies_equal_member(self):
        member = self.member("solo", [F, R, F])
        out = combine(EnsembleConfig((member,) * 5))
        assert [out.records[i].label for i in self.ids] == [F, R, F]
        assert all(r.score in (0.0, 1.0) for r in out.records.values())

    def test_id_mismatch_reported(self):
        a = self.member("A", [F, R, F])
        b = pset("B", {"a": F, "b": R, "zzz": F})
        with pytest.raises(ValueError, match="zzz"):
            combine(EnsembleConfig((a, b)))

    def test_empty_members_rejected(self):
        with pytest.raises(ValueError, match="at least one"):
            EnsembleConfig(())


class TestExchangeFormat:
    def test_parse_line(self, tmp_path):
        f = tmp_path / "p.tsv"
        f.write_text("id\tlabel\tscore\n102\tfake\t0.973100\n", encoding="utf-8")
        ps = load_predictions(f)
        rec = ps.records["102"]
        assert rec.label is F
        assert rec.score == pytest.approx(0.9731)
        assert ps.model_id == "p"

    def test_round_trip(self, tmp_path):
        original = pset(
            "m", {"1": F, "2": R, "3": F}, {"1": 0.9731, "2": 0.25, "3": 0.5}
        )
        path = tmp_path / "out.tsv"
        save_predictions(original, path)
        loaded = load_predictions(path)
        assert {i: (r.label, r.score) for i, r in loaded.records.items()} == {
            i: (r.label, r.score) for i, r in original.records.items()
        }
        save_predictions(loaded, tmp_path / "again.tsv")
        assert (tmp_path / "again.tsv").read_bytes() == path.read_bytes()

    def test_duplicate_id_names_the_id(self, tmp_path):
        f = tmp_path / "p.tsv"
        f.write_text("id\tlabel\tscore\n7\tfake\t1.000000\n7\treal\t0.000000\n", encoding="utf-8")
        with pytest.raises(ValueError, match="'7'"):
            load_predictions(f)

    def test_score_out_of_range(self, tmp_path):
        f = tmp_path / "p.tsv"
        f.write_text("id\tlabel\tscore\n1\tfake\t1.500000\n", encoding="utf-8")
        with pytest.raises(ValueError, match=r"outside \[0, 1\]"):
            load_predictions(f)

    def test_malformed_line(self, tmp_path):
        f = tmp_path / "p.tsv"
        f.write_text("id\tlabel\tscore\n1\tfake\n", encoding="utf-8")
        with pytest.raises(ValueError, match="line 2"):
            load_predictions(f)

    def test_header_required(self, tmp_path):
        f = tmp_path / "p.tsv"
        f.write_text("1\tfake\t0.5\n", encoding="utf-8")
        with pytest.raises(ValueError, match="header"):
            load_predictions(f)

    def test_save_requires_scores(self, tmp_path):
        ps = PredictionSet("m", {"1": PredictionRecord("1", F, None)})
        with pytest.raises(ValueError, match="score"):
            save_predictions(ps, tmp_path / "x.tsv")

    def test_record_score_validated(self):
        with pytest.raises(ValueError, match="outside"):
            PredictionRecord("1", F, 1.2)
