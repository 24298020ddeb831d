"""Experiment runner: config files, orchestration, and the command line.

A config file is flat ``key = value`` text, one experiment per file. Paths
are resolved relative to the config file's directory; the snapshot written
into the output directory carries resolved paths, so it reruns identically
from anywhere. Stages run strictly in order (load, split, merge,
preprocess, train, predict, select, ensemble, evaluate, report) and every
failure is tagged with its stage name.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Optional, Sequence

from .corpus import (
    Corpus,
    Source,
    SplitMode,
    SplitSpec,
    load_dataset,
    save_corpus,
    split_holdout,
    merge_auxiliary,
    with_texts,
)
from .ensemble import (
    EnsembleConfig,
    PredictionRecord,
    PredictionSet,
    TieRule,
    combine,
    load_predictions,
    save_predictions,
)
from .features import BowVectorizer, load_vocabulary, save_vocabulary, vectorize
from .linear_model import (
    Hyper,
    LinearModel,
    fake_confidence,
    load_model,
    predict,
    save_model,
    train_svc,
)
from .metrics import EvalReport, error_report, evaluate, gold_labels
from .preprocess import PreprocessConfig, apply_pipeline, load_stopwords, normalize_baseline

MODEL_KINDS = ("baseline_svc", "external")
SPLIT_KINDS = ("official", "holdout")


class StageError(RuntimeError):
    """Failure wrapped with the pipeline stage it occurred in."""

    def __init__(self, stage: str, cause: BaseException):
        super().__init__(f"[{stage}] {cause}")
        self.stage = stage
        self.cause = cause


@dataclass(frozen=True)
class ExperimentConfig:
    description: str = ""
    train: Optional[Path] = None
    val: Optional[Path] = None
    test: Optional[Path] = None
    aux_coaid: Optional[Path] = None
    aux_fakecovid: Optional[Path] = None
    model: str = "baseline_svc"
    seeds: tuple[int, ...] = (23, 30, 42)
    ensemble_k: int = 3
    split: str = "official"
    holdout_n: int = 1000
    split_seed: int = 0
    url_mode: str = "keep"
    mention_mode: str = "keep"
    hashtag_mode: str = "keep"
    emoji_mode: str = "keep"
    lowercase: bool = False
    max_features: int = 10000
    svc_c: float = 1.0
    svc_tol: float = 1e-4
    svc_max_iter: int = 1000
    tie_rule: str = "prefer_real"
    external_val: tuple[Path, ...] = ()
    external_test: tuple[Path, ...] = ()
    out: Path = Path("runs/experiment")

    def preprocess_config(self) -> PreprocessConfig:
        return PreprocessConfig(
            url_mode=self.url_mode,
            mention_mode=self.mention_mode,
            hashtag_mode=self.hashtag_mode,
            emoji_mode=self.emoji_mode,
            lowercase=self.lowercase,
        )

    def validate(self) -> None:
        if self.model not in MODEL_KINDS:
            raise ValueError(f"model must be one of {MODEL_KINDS}, got {self.model!r}")
        if self.split not in SPLIT_KINDS:
            raise ValueError(f"split must be one of {SPLIT_KINDS}, got {self.split!r}")
        self.preprocess_config()
        TieRule(self.tie_rule)
        if self.model == "baseline_svc":
            if not self.seeds:
                raise ValueError("baseline runs need at least one seed")
            if len(set(self.seeds)) != len(self.seeds):
                raise ValueError("seeds must be distinct")
            if self.train is None:
                raise ValueError("baseline runs need a train file")
            if self.ensemble_k > len(self.seeds):
                raise ValueError(
                    f"ensemble_k={self.ensemble_k} exceeds the {len(self.seeds)} seeded members"
                )
            if self.split == "official" and self.val is None:
                raise ValueError("official split needs a val file")
        else:
            if not self.external_val:
                raise ValueError("external runs need external_val prediction files")
            if self.val is None:
                raise ValueError("external runs need a gold val file for member selection")
            if self.external_test and len(self.external_test) != len(self.external_val):
                raise ValueError("external_test must align one-to-one with external_val")
            if self.ensemble_k > len(self.external_val):
                raise ValueError(
                    f"ensemble_k={self.ensemble_k} exceeds the "
                    f"{len(self.external_val)} external members"
                )
        Hyper(c=self.svc_c, tol=self.svc_tol, max_iter=self.svc_max_iter, seed=self.seeds[0] if self.seeds else 0)


_PATH_KEYS = {"train", "val", "test", "aux_coaid", "aux_fakecovid", "out"}
_PATH_LIST_KEYS = {"external_val", "external_test"}
_INT_KEYS = {"ensemble_k", "holdout_n", "split_seed", "max_features", "svc_max_iter"}
_FLOAT_KEYS = {"svc_c", "svc_tol"}
_BOOL_KEYS = {"lowercase"}
_INT_LIST_KEYS = {"seeds"}
_STR_KEYS = {
    "description", "model", "split", "url_mode", "mention_mode",
    "hashtag_mode", "emoji_mode", "tie_rule",
}
_ALL_KEYS = (
    _PATH_KEYS | _PATH_LIST_KEYS | _INT_KEYS | _FLOAT_KEYS | _BOOL_KEYS
    | _INT_LIST_KEYS | _STR_KEYS
)


def _parse_bool(s: str) -> bool:
    if s.lower() in ("true", "yes", "1"):
        return True
    if s.lower() in ("false", "no", "0"):
        return False
    raise ValueError(f"expected a boolean, got {s!r}")


def parse_config(path: str | Path) -> ExperimentConfig:
    """Read a flat key-value experiment config; unknown keys are errors."""
    path = Path(path)
    base = path.parent
    values: dict = {}
    for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"{path}: line {lineno}: expected 'key = value'")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if key not in _ALL_KEYS:
            raise ValueError(f"{path}: line {lineno}: unknown key {key!r}")
        if key in values:
            raise ValueError(f"{path}: line {lineno}: duplicate key {key!r}")
        try:
            if key in _PATH_KEYS:
                values[key] = (base / value).resolve() if value else None
            elif key in _PATH_LIST_KEYS:
                values[key] = tuple(
                    (base / v.strip()).resolve() for v in value.split(",") if v.strip()
                )
            elif key in _INT_KEYS:
                values[key] = int(value)
            elif key in _FLOAT_KEYS:
                values[key] = float(value)
            elif key in _BOOL_KEYS:
                values[key] = _parse_bool(value)
            elif key in _INT_LIST_KEYS:
                values[key] = tuple(int(v.strip()) for v in value.split(",") if v.strip())
            else:
                values[key] = value
        except ValueError as e:
            raise ValueError(f"{path}: line {lineno}: bad value for {key}: {e}") from None
    cfg = ExperimentConfig(**values)
    cfg.validate()
    return cfg


def format_config(cfg: ExperimentConfig) -> str:
    """Canonical serialization; parse_config round-trips it."""

    def fmt(value) -> str:
        if value is None:
            return ""
        if isinstance(value, bool):
            return "true" if value else "false"
        if isinstance(value, tuple):
            return ",".join(str(v) for v in value)
        return str(value)

    keys = [
        "description", "model", "train", "val", "test", "aux_coaid", "aux_fakecovid",
        "split", "holdout_n", "split_seed", "seeds", "ensemble_k",
        "url_mode", "mention_mode", "hashtag_mode", "emoji_mode", "lowercase",
        "max_features", "svc_c", "svc_tol", "svc_max_iter", "tie_rule",
        "external_val", "external_test", "out",
    ]
    lines = [f"{k} = {fmt(getattr(cfg, k))}" for k in keys]
    return "\n".join(lines) + "\n"


@dataclass
class RunArtifacts:
    out_dir: Path
    config_snapshot: Path
    member_val_files: list[Path] = field(default_factory=list)
    member_test_files: list[Path] = field(default_factory=list)
    ensemble_val_file: Optional[Path] = None
    ensemble_test_file: Optional[Path] = None
    report_files: list[Path] = field(default_factory=list)
    error_files: list[Path] = field(default_factory=list)
    val_report: Optional[EvalReport] = None
    test_report: Optional[EvalReport] = None


def _stage(name: str):
    class _Ctx:
        def __enter__(self):
            return self

        def __exit__(self, exc_type, exc, tb):
            if exc is not None and not isinstance(exc, StageError):
                raise StageError(name, exc) from exc
            return False

    return _Ctx()


def _predictions_for(
    corpus: Corpus, model: LinearModel, vectors, model_id: str
) -> PredictionSet:
    records = {}
    for post, vec in zip(corpus, vectors):
        records[post.id] = PredictionRecord(
            id=post.id, label=predict(model, vec), score=fake_confidence(model, vec)
        )
    return PredictionSet(model_id=model_id, records=records)


def _aligned_labels(gold_corpus: Corpus, pset: PredictionSet) -> list:
    ids = gold_corpus.ids()
    missing = [i for i in ids if i not in pset.records]
    if missing:
        raise ValueError(f"{pset.model_id!r} lacks predictions for ids {missing[:5]}")
    return pset.labels_in_order(ids)


def _fake_f1_on(gold_corpus: Corpus, pset: PredictionSet) -> float:
    pred = _aligned_labels(gold_corpus, pset)
    return evaluate(gold_corpus.labels(), pred).fake.f1


def run_experiment(cfg: ExperimentConfig) -> RunArtifacts:
    """Execute one experiment end to end; artifacts are a pure function of
    (input files, config)."""
    cfg.validate()
    out = cfg.out
    out.mkdir(parents=True, exist_ok=True)
    members_dir = out / "members"
    members_dir.mkdir(exist_ok=True)

    snapshot = out / "config.txt"
    snapshot.write_text(format_config(cfg), encoding="utf-8")
    artifacts = RunArtifacts(out_dir=out, config_snapshot=snapshot)

    with _stage("load"):
        train_c = load_dataset(cfg.train, expect_labels=True) if cfg.train else None
        val_c = load_dataset(cfg.val, expect_labels=True) if cfg.val else None
        test_c = load_dataset(cfg.test, expect_labels=False) if cfg.test else None

    with _stage("split"):
        if cfg.model == "baseline_svc":
            if cfg.split == "holdout":
                pool_posts = list(train_c.posts) + (list(val_c.posts) if val_c else [])
                pool = Corpus(posts=tuple(pool_posts), name="pool")
                spec = SplitSpec(mode=SplitMode.HOLDOUT_N, n=cfg.holdout_n, seed=cfg.split_seed)
                train_c, val_c = split_holdout(pool, spec)

    with _stage("merge"):
        if cfg.model == "baseline_svc":
            for aux_path, source in ((cfg.aux_coaid, Source.COAID),
                                     (cfg.aux_fakecovid, Source.FAKECOVID)):
                if aux_path:
                    extra = load_dataset(aux_path, expect_labels=True, source=source)
                    train_c = merge_auxiliary(train_c, extra)

    # Raw corpora are kept for evaluation and error listings; preprocessing
    # below only feeds the feature pipeline.
    val_gold = val_c
    test_gold = test_c

    with _stage("preprocess"):
        pp = cfg.preprocess_config()
        if cfg.model == "baseline_svc":
            train_c = with_texts(train_c, (apply_pipeline(t, pp) for t in train_c.texts()))
            val_c = with_texts(val_c, (apply_pipeline(t, pp) for t in val_c.texts()))
            if test_c:
                test_c = with_texts(test_c, (apply_pipeline(t, pp) for t in test_c.texts()))

    member_val: list[PredictionSet] = []
    member_test: list[PredictionSet] = []
    member_order: list[int] = []

    if cfg.model == "baseline_svc":
        with _stage("train"):
            vec = BowVectorizer(max_features=cfg.max_features).fit(train_c.texts())
            x_train = vec.transform(train_c.texts())
            y_train = train_c.labels()
            x_val = vec.transform(val_c.texts())
            x_test = vec.transform(test_c.texts()) if test_c else None
            models = [
                train_svc(x_train, y_train,
                          Hyper(c=cfg.svc_c, tol=cfg.svc_tol,
                                max_iter=cfg.svc_max_iter, seed=seed))
                for seed in cfg.seeds
            ]
        with _stage("predict"):
            for seed, model in zip(cfg.seeds, models):
                mid = f"svc-seed{seed}"
                pv = _predictions_for(val_c, model, x_val, mid)
                member_val.append(pv)
                path = members_dir / f"{mid}.val.tsv"
                save_predictions(pv, path)
                artifacts.member_val_files.append(path)
                if test_c:
                    pt = _predictions_for(test_c, model, x_test, mid)
                    member_test.append(pt)
                    path = members_dir / f"{mid}.test.tsv"
                    save_predictions(pt, path)
                    artifacts.member_test_files.append(path)
            member_order = list(cfg.seeds)
    else:
        with _stage("predict"):
            for path in cfg.external_val:
                member_val.append(load_predictions(path))
                artifacts.member_val_files.append(Path(path))
            for path in cfg.external_test:
                member_test.append(load_predictions(path))
                artifacts.member_test_files.append(Path(path))
            member_order = list(range(len(member_val)))

    with _stage("select"):
        if cfg.ensemble_k == len(member_val):
            # no-holdout protocol: every member enters the ensemble
            chosen = list(range(len(member_val)))
        else:
            scored = [
                (-_fake_f1_on(val_gold, pset), member_order[k], k)
                for k, pset in enumerate(member_val)
            ]
            chosen = [k for _, _, k in sorted(scored)[: cfg.ensemble_k]]
            chosen.sort()

    with _stage("ensemble"):
        tie = TieRule(cfg.tie_rule)
        ens_val = combine(EnsembleConfig(tuple(member_val[k] for k in chosen), tie))
        artifacts.ensemble_val_file = out / "ensemble.val.tsv"
        save_predictions(ens_val, artifacts.ensemble_val_file)
        ens_test = None
        if member_test:
            ens_test = combine(EnsembleConfig(tuple(member_test[k] for k in chosen), tie))
            artifacts.ensemble_test_file = out / "ensemble.test.tsv"
            save_predictions(ens_test, artifacts.ensemble_test_file)

    with _stage("evaluate"):
        evaluable = []
        if val_gold is not None and len(val_gold) > 0:
            evaluable.append(("val", val_gold, ens_val))
        if ens_test is not None and test_gold is not None and all(
            p.label is not None for p in test_gold
        ):
            evaluable.append(("test", test_gold, ens_test))
        for split_name, corpus, ens in evaluable:
            gold = corpus.labels()
            pred = _aligned_labels(corpus, ens)
            report = evaluate(gold, pred)
            if split_name == "val":
                artifacts.val_report = report
            else:
                artifacts.test_report = report
            json_path = out / f"report.{split_name}.json"
            json_path.write_text(report.to_json(), encoding="utf-8")
            text_path = out / f"report.{split_name}.txt"
            text_path.write_text(report.to_text(), encoding="utf-8")
            artifacts.report_files += [json_path, text_path]

    with _stage("report"):
        for split_name, corpus, ens in evaluable:
            gold_map = gold_labels(corpus)
            pred_map = {pid: rec.label for pid, rec in ens.records.items()}
            rows = ["id\tgold\tpred\ttweet"]
            for post, g, p in error_report(corpus, gold_map, pred_map):
                rows.append(f"{post.id}\t{g}\t{p}\t{post.text}")
            err_path = out / f"errors.{split_name}.tsv"
            err_path.write_text("\n".join(rows) + "\n", encoding="utf-8")
            artifacts.error_files.append(err_path)

    return artifacts


def ablation_table(cfgs: Sequence[ExperimentConfig]) -> list[tuple[str, float]]:
    """One (description, fake-class F1 in percent, 2 decimals) row per config,
    measured on each config's validation split."""
    rows = []
    for cfg in cfgs:
        artifacts = run_experiment(cfg)
        if artifacts.val_report is None:
            raise ValueError(
                f"config {cfg.description or cfg.out.name!r} has no validation "
                "split to evaluate on"
            )
        rows.append((cfg.description or cfg.out.name,
                     round(100.0 * artifacts.val_report.fake.f1, 2)))
    return rows


# ---------------------------------------------------------------- commands


def _cmd_preprocess(args) -> int:
    pp = PreprocessConfig(
        url_mode=args.url_mode,
        mention_mode=args.mention_mode,
        hashtag_mode=args.hashtag_mode,
        emoji_mode=args.emoji_mode,
        lowercase=args.lowercase,
    )
    with _stage("load"):
        corpus = load_dataset(args.infile, expect_labels=False)
    with _stage("preprocess"):
        rewritten = with_texts(corpus, (apply_pipeline(t, pp) for t in corpus.texts()))
        save_corpus(rewritten, args.out)
    print(f"wrote {len(rewritten)} posts to {args.out}")
    return 0


def _cmd_train_baseline(args) -> int:
    cfg = parse_config(args.config)
    if cfg.model != "baseline_svc":
        raise StageError("train", ValueError("config does not describe a baseline run"))
    seed = args.seed if args.seed is not None else cfg.seeds[0]
    out = Path(args.out) if args.out else cfg.out / f"model-seed{seed}"
    out.mkdir(parents=True, exist_ok=True)

    with _stage("load"):
        train_c = load_dataset(cfg.train, expect_labels=True)
    with _stage("merge"):
        for aux_path, source in ((cfg.aux_coaid, Source.COAID),
                                 (cfg.aux_fakecovid, Source.FAKECOVID)):
            if aux_path:
                train_c = merge_auxiliary(
                    train_c, load_dataset(aux_path, expect_labels=True, source=source)
                )
    with _stage("preprocess"):
        pp = cfg.preprocess_config()
        train_c = with_texts(train_c, (apply_pipeline(t, pp) for t in train_c.texts()))
    with _stage("train"):
        vec = BowVectorizer(max_features=cfg.max_features).fit(train_c.texts())
        x_train = vec.transform(train_c.texts())
        model = train_svc(
            x_train,
            train_c.labels(),
            Hyper(c=cfg.svc_c, tol=cfg.svc_tol, max_iter=cfg.svc_max_iter, seed=seed),
        )
        save_model(model, out / "model.txt")
        save_vocabulary(vec.vocabulary_, out / "vocabulary.txt")
        pipeline = replace(cfg, seeds=(seed,), ensemble_k=1, out=out)
        (out / "pipeline.txt").write_text(format_config(pipeline), encoding="utf-8")
    print(f"trained seed {seed} on {len(train_c)} posts -> {out}")
    return 0


def _cmd_predict(args) -> int:
    model_dir = Path(args.model_dir)
    with _stage("load"):
        cfg = parse_config(model_dir / "pipeline.txt")
        model = load_model(model_dir / "model.txt")
        vocab = load_vocabulary(model_dir / "vocabulary.txt", cfg.max_features)
        corpus = load_dataset(args.infile, expect_labels=False)
    with _stage("preprocess"):
        pp = cfg.preprocess_config()
        corpus = with_texts(corpus, (apply_pipeline(t, pp) for t in corpus.texts()))
    with _stage("predict"):
        stopwords = load_stopwords()
        vectors = [vectorize(normalize_baseline(t, stopwords), vocab) for t in corpus.texts()]
        pset = _predictions_for(corpus, model, vectors, model_dir.name)
        save_predictions(pset, args.out)
    print(f"wrote {len(pset.records)} predictions to {args.out}")
    return 0


def _cmd_ensemble(args) -> int:
    with _stage("ensemble"):
        members = tuple(load_predictions(p) for p in args.members)
        result = combine(EnsembleConfig(members, TieRule(args.tie_rule)))
        save_predictions(result, args.out)
    print(f"combined {len(members)} members over {len(result.records)} posts -> {args.out}")
    return 0


def _cmd_evaluate(args) -> int:
    with _stage("evaluate"):
        pset = load_predictions(args.pred)
        gold_c = load_dataset(args.gold, expect_labels=True)
        gold = gold_c.labels()
        ids = gold_c.ids()
        missing = [i for i in ids if i not in pset.records]
        if missing:
            raise ValueError(f"predictions lack ids {missing[:5]}")
        report = evaluate(gold, pset.labels_in_order(ids))
    sys.stdout.write(report.to_text())
    if args.out:
        Path(args.out).write_text(report.to_json(), encoding="utf-8")
    return 0


def _cmd_report(args) -> int:
    with _stage("report"):
        pset = load_predictions(args.pred)
        gold_c = load_dataset(args.gold, expect_labels=True)
        gold_map = gold_labels(gold_c)
        pred_map = {pid: rec.label for pid, rec in pset.records.items()}
        rows = ["id\tgold\tpred\ttweet"]
        for post, g, p in error_report(gold_c, gold_map, pred_map):
            rows.append(f"{post.id}\t{g}\t{p}\t{post.text}")
        Path(args.out).write_text("\n".join(rows) + "\n", encoding="utf-8")
    print(f"wrote {len(rows) - 1} misclassifications to {args.out}")
    return 0


def _cmd_run(args) -> int:
    cfg = parse_config(args.config)
    if args.out:
        cfg = replace(cfg, out=Path(args.out).resolve())
    artifacts = run_experiment(cfg)
    if artifacts.val_report:
        print(f"val fake-class F1: {100.0 * artifacts.val_report.fake.f1:.2f}")
        print(f"val weighted F1:   {100.0 * artifacts.val_report.weighted_f1:.2f}")
    if artifacts.test_report:
        print(f"test fake-class F1: {100.0 * artifacts.test_report.fake.f1:.2f}")
        print(f"test weighted F1:   {100.0 * artifacts.test_report.weighted_f1:.2f}")
    print(f"artifacts in {artifacts.out_dir}")
    return 0


def _cmd_ablation(args) -> int:
    cfgs = [parse_config(p) for p in args.configs]
    rows = ablation_table(cfgs)
    width = max((len(d) for d, _ in rows), default=10)
    for desc, f1 in rows:
        print(f"{desc:<{width}}  {f1:.2f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="infodemic",
        description="Fake-news classification experiments: preprocessing, "
        "baseline SVC, ensembles, evaluation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("preprocess", help="rewrite post texts per span modes")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--url-mode", default="keep")
    p.add_argument("--mention-mode", default="keep")
    p.add_argument("--hashtag-mode", default="keep")
    p.add_argument("--emoji-mode", default="keep")
    p.add_argument("--lowercase", action="store_true")
    p.set_defaults(func=_cmd_preprocess)

    p = sub.add_parser("train-baseline", help="train one seeded baseline model")
    p.add_argument("--config", required=True)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_train_baseline)

    p = sub.add_parser("predict", help="score a dataset with a trained model")
    p.add_argument("--model-dir", required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_predict)

    p = sub.add_parser("ensemble", help="hard-vote prediction files together")
    p.add_argument("members", nargs="+")
    p.add_argument("--out", required=True)
    p.add_argument("--tie-rule", default="prefer_real",
                   choices=[t.value for t in TieRule])
    p.set_defaults(func=_cmd_ensemble)

    p = sub.add_parser("evaluate", help="score predictions against gold labels")
    p.add_argument("--pred", required=True)
    p.add_argument("--gold", required=True)
    p.add_argument("--out", default=None, help="also write the JSON report here")
    p.set_defaults(func=_cmd_evaluate)

    p = sub.add_parser("report", help="list misclassified posts")
    p.add_argument("--pred", required=True)
    p.add_argument("--gold", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_report)

    p = sub.add_parser("run", help="run a full experiment from a config file")
    p.add_argument("--config", required=True)
    p.add_argument("--out", default=None, help="override the config's output directory")
    p.set_defaults(func=_cmd_run)

    p = sub.add_parser("ablation", help="fake-class F1 table for several configs")
    p.add_argument("configs", nargs="+")
    p.set_defaults(func=_cmd_ablation)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except StageError as e:
        print(f"error {e}", file=sys.stderr)
        return 2
    except Exception as e:  # config and file errors arrive untagged
        print(f"error [cli] {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
