"""Command line: ``transformer-adapter finetune`` and ``transformer-adapter score``."""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .config import DEFAULT_PRETRAINED_MODEL, FineTuneConfig
from .finetune import fine_tune
from .scoring import score


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="transformer-adapter",
        description="Fine-tune a pretrained transformer on fake/real post TSVs "
        "and emit prediction exchange files.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("finetune", help="fine-tune and save a classifier artifact")
    p.add_argument("--train", required=True, help="labeled corpus TSV (already preprocessed)")
    p.add_argument("--out", required=True, help="artifact directory to create")
    p.add_argument("--model", default=DEFAULT_PRETRAINED_MODEL)
    p.add_argument("--learning-rate", type=float, default=2e-5)
    p.add_argument("--epsilon", type=float, default=1e-8)
    p.add_argument("--max-seq-length", type=int, default=128)
    p.add_argument("--batch-size", type=int, default=8)
    p.add_argument("--epochs", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-steps", type=int, default=None)

    p = sub.add_parser("score", help="score a corpus TSV with a saved artifact")
    p.add_argument("--model-dir", required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--batch-size", type=int, default=32)
    p.add_argument("--max-seq-length", type=int, default=128)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "finetune":
            cfg = FineTuneConfig(
                model=args.model,
                learning_rate=args.learning_rate,
                epsilon=args.epsilon,
                max_seq_length=args.max_seq_length,
                batch_size=args.batch_size,
                epochs=args.epochs,
                seed=args.seed,
                max_steps=args.max_steps,
            )
            out = fine_tune(args.train, cfg, args.out)
            print(f"artifact saved to {out}")
        else:
            out = score(
                args.model_dir,
                args.infile,
                args.out,
                batch_size=args.batch_size,
                max_seq_length=args.max_seq_length,
            )
            print(f"predictions written to {out}")
        return 0
    except Exception as e:
        print(f"error [{args.command}] {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
