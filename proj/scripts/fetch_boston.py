#!/usr/bin/env python3
"""Download the Boston housing dataset and write data/boston.csv.

The output is a 506-row CSV with 13 feature columns followed by the target
(MEDV) as the last column, matching the loader convention used by `pog run`
and the acceptance suite. Sources are tried in order:

  1. CMU StatLib: http://lib.stat.cmu.edu/datasets/boston
     (22 header lines, then each record wrapped across two lines)
  2. scikit-learn's historical copy on GitHub (plain CSV with two header rows)

Usage: python3 scripts/fetch_boston.py [output_path]
"""

import sys
import urllib.request
from pathlib import Path

STATLIB_URL = "http://lib.stat.cmu.edu/datasets/boston"
SKLEARN_URL = (
    "https://raw.githubusercontent.com/scikit-learn/scikit-learn/"
    "1.1.3/sklearn/datasets/data/boston_house_prices.csv"
)

N_ROWS = 506
N_COLS = 14  # 13 features + MEDV


def fetch(url: str) -> str:
    with urllib.request.urlopen(url, timeout=60) as resp:
        return resp.read().decode("utf-8", errors="replace")


def parse_statlib(text: str) -> list[list[float]]:
    lines = text.splitlines()
    tokens: list[str] = []
    for line in lines[22:]:  # documented 22-line preamble
        tokens.extend(line.split())
    values = [float(t) for t in tokens]
    if len(values) != N_ROWS * N_COLS:
        raise ValueError(f"expected {N_ROWS * N_COLS} values, got {len(values)}")
    return [values[i * N_COLS : (i + 1) * N_COLS] for i in range(N_ROWS)]


def parse_sklearn(text: str) -> list[list[float]]:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    rows = [[float(c) for c in ln.split(",")] for ln in lines[2:]]  # 2 header rows
    if len(rows) != N_ROWS or any(len(r) != N_COLS for r in rows):
        raise ValueError("unexpected sklearn csv shape")
    return rows


def main() -> int:
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("data/boston.csv")
    rows = None
    for url, parse in ((STATLIB_URL, parse_statlib), (SKLEARN_URL, parse_sklearn)):
        try:
            print(f"fetching {url} ...")
            rows = parse(fetch(url))
            break
        except Exception as exc:  # noqa: BLE001 - report and try the next source
            print(f"  failed: {exc}")
    if rows is None:
        print("could not fetch the Boston housing data from any source")
        return 1

    out.parent.mkdir(parents=True, exist_ok=True)
    with out.open("w") as fh:
        for row in rows:
            fh.write(",".join(repr(v) for v in row) + "\n")
    print(f"wrote {len(rows)} rows to {out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
