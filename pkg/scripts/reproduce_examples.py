"""Replay the worked-example corpus and print one line per example."""

import argparse
import sys
from itertools import groupby

from harmonic_index.corpus import run_corpus


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--filter", default=None)
    args = ap.parse_args()
    rows = run_corpus(args.filter)
    ok = True
    for name, group in groupby(rows, key=lambda r: r.example):
        group = list(group)
        bad = [r for r in group if not r.match]
        ok &= not bad
        fields = ", ".join(f"{r.field}={r.actual}" for r in group if r.field not in ("oracle_r", "plucker"))
        print(f"{'ok ' if not bad else 'BAD'} {name:<12} {fields}")
        for r in bad:
            print(f"      {r.field}: expected {r.expected}, got {r.actual}  ({r.source})")
    return 0 if ok else 5


if __name__ == "__main__":
    sys.exit(main())
