"""Deterministic harness for COVID-19 fake-news classification experiments:
tweet-aware preprocessing, a bag-of-words linear SVC baseline, hard-voting
ensembles over prediction files, and weighted-F1 evaluation."""

from .corpus import (
    Corpus,
    Label,
    Post,
    Source,
    SplitMode,
    SplitSpec,
    load_dataset,
    merge_auxiliary,
    save_corpus,
    split_holdout,
)
from .ensemble import (
    EnsembleConfig,
    PredictionRecord,
    PredictionSet,
    TieRule,
    combine,
    hard_vote,
    load_predictions,
    save_predictions,
)
from .features import (
    BowVectorizer,
    SparseVector,
    Vocabulary,
    build_vocabulary,
    load_vocabulary,
    save_vocabulary,
    vectorize,
)
from .linear_model import (
    Hyper,
    LinearModel,
    LinearSVC,
    decision_value,
    load_model,
    predict,
    save_model,
    train_svc,
)
from .metrics import (
    ConfusionMatrix,
    EvalReport,
    confusion,
    error_report,
    evaluate,
    gold_labels,
)
from .preprocess import (
    PreprocessConfig,
    Span,
    SpanKind,
    TweetPreprocessor,
    apply_pipeline,
    load_stopwords,
    normalize_baseline,
    segment,
)

__version__ = "0.1.0"

__all__ = [
    "BowVectorizer",
    "ConfusionMatrix",
    "Corpus",
    "EnsembleConfig",
    "EvalReport",
    "Hyper",
    "Label",
    "LinearModel",
    "LinearSVC",
    "Post",
    "PredictionRecord",
    "PredictionSet",
    "PreprocessConfig",
    "Source",
    "Span",
    "SpanKind",
    "SparseVector",
    "SplitMode",
    "SplitSpec",
    "TieRule",
    "TweetPreprocessor",
    "Vocabulary",
    "apply_pipeline",
    "build_vocabulary",
    "combine",
    "confusion",
    "decision_value",
    "error_report",
    "evaluate",
    "gold_labels",
    "hard_vote",
    "load_dataset",
    "load_model",
    "load_predictions",
    "load_stopwords",
    "load_vocabulary",
    "merge_auxiliary",
    "normalize_baseline",
    "predict",
    "save_corpus",
    "save_model",
    "save_predictions",
    "save_vocabulary",
    "segment",
    "split_holdout",
    "train_svc",
    "vectorize",
]
