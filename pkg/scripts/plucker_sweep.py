"""Random sweep: Plücker residuals, chart independence and the point oracle
on random full integer curves.  Prints a summary histogram of total
ramification."""

import argparse
import random
import time
from collections import Counter

from harmonic_index.curve import chart_flip, is_full, make_curve
from harmonic_index.sequence import invariants, ramification_by_points, verify_plucker


def random_curve(rng, max_n, max_degree, coeff):
    n = rng.randint(1, max_n)
    rows = [[rng.randint(-coeff, coeff) for _ in range(rng.randint(1, max_degree + 1))] for _ in range(n + 1)]
    if not any(any(r) for r in rows):
        return None
    c = make_curve(n, rows)
    return c if is_full(c) else None


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--max-degree", type=int, default=6)
    ap.add_argument("--coeff", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    hist, failures, done = Counter(), 0, 0
    t0 = time.perf_counter()
    while done < args.count:
        c = random_curve(rng, args.max_n, args.max_degree, args.coeff)
        if c is None:
            continue
        inv = invariants(c)
        good = (
            verify_plucker(inv).passed
            and invariants(chart_flip(c)).r == inv.r
            and ramification_by_points(c) == list(inv.r)
        )
        if not good:
            failures += 1
            print(f"FAIL {c}: {inv}")
        hist[(c.n, sum(inv.r))] += 1
        done += 1
    elapsed = time.perf_counter() - t0
    print(f"{done} curves, {failures} failures, {elapsed:.1f}s")
    for (n, total), count in sorted(hist.items()):
        print(f"  n={n} total ramification {total:>3}: {count}")


if __name__ == "__main__":
    main()
