#!/usr/bin/env python3
"""Convert the shared-task CSV files to the dataset TSV format.

The public files ship as comma-separated values with quoted fields that may
contain commas, quotes and line breaks. This flattens internal whitespace
runs in each tweet to single spaces (tabs and newlines cannot be represented
in the TSV format) and writes ``id<TAB>tweet<TAB>label`` rows.

Usage:
    python3 tools/convert_constraint_csv.py Constraint_Train.csv data/constraint/train.tsv
    python3 tools/convert_constraint_csv.py Constraint_Val.csv data/constraint/val.tsv
"""

from __future__ import annotations

import argparse
import csv
from pathlib import Path


def convert(src: Path, dst: Path) -> int:
    with src.open(encoding="utf-8", newline="") as handle:
        reader = csv.DictReader(handle)
        if reader.fieldnames is None:
            raise SystemExit(f"{src}: empty file")
        columns = {name.strip().lower(): name for name in reader.fieldnames}
        id_col = columns.get("id")
        tweet_col = columns.get("tweet")
        label_col = columns.get("label")
        if id_col is None or tweet_col is None:
            raise SystemExit(f"{src}: expected 'id' and 'tweet' columns, got {reader.fieldnames}")
        rows = []
        for record in reader:
            tweet = " ".join(record[tweet_col].split())
            fields = [record[id_col].strip(), tweet]
            if label_col is not None:
                fields.append(record[label_col].strip().lower())
            rows.append("\t".join(fields))
    header = "id\ttweet\tlabel" if label_col is not None else "id\ttweet"
    dst.parent.mkdir(parents=True, exist_ok=True)
    dst.write_text("\n".join([header] + rows) + "\n", encoding="utf-8")
    return len(rows)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("src", type=Path)
    parser.add_argument("dst", type=Path)
    args = parser.parse_args()
    count = convert(args.src, args.dst)
    print(f"wrote {count} rows to {args.dst}")


if __name__ == "__main__":
    main()
