#!/usr/bin/env python3
"""Compare how much each reduction method shrinks random recognizers.

Generates a seeded corpus per lattice, runs every method, and prints the
mean quotient size and how often each method achieved the best reduction
in its row.  Non-convergent runs (possible on the product lattice only)
are counted separately.
"""

import argparse
import random
from collections import defaultdict

from fuzzaut import FuzzyRecognizer, FuzzyVector, FuzzyAutomaton, Lattice, greatest_invariant
from fuzzaut.relation import FuzzyMatrix

METHODS = ("ri", "li", "cri", "sri", "sli", "wri", "wli")

POOLS = {
    "boolean": ["0", "0", "1"],
    "godel": ["0", "0", "1/10", "3/10", "1/2", "7/10", "1"],
    "chain": ["0", "0", "1/4", "1/2", "3/4", "1"],
}


def random_recognizer(rng, lat, n, letters):
    pool = [lat.parse(v) for v in POOLS[lat.kind]]
    delta = {
        x: FuzzyMatrix(lat, n, n, tuple(rng.choice(pool) for _ in range(n * n)))
        for x in letters
    }
    return FuzzyRecognizer(
        FuzzyAutomaton(lat, tuple(str(i) for i in range(n)), letters, delta),
        FuzzyVector(lat, tuple(rng.choice(pool) for _ in range(n))),
        FuzzyVector(lat, tuple(rng.choice(pool) for _ in range(n))),
    )


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=50, help="recognizers per lattice")
    parser.add_argument("--states", type=int, default=5)
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()

    lattices = [Lattice.boolean(), Lattice.godel(), Lattice.chain(4)]
    letters = ("x", "y")

    for lat in lattices:
        rng = random.Random(args.seed)
        sizes = defaultdict(list)
        wins = defaultdict(int)
        skipped = defaultdict(int)
        for _ in range(args.count):
            rec = random_recognizer(rng, lat, args.states, letters)
            row = {}
            for method in METHODS:
                report = greatest_invariant(rec, method)
                if not report.converged:
                    skipped[method] += 1
                    continue
                row[method] = report.state_trace[1]
                sizes[method].append(report.state_trace[1])
            best = min(row.values())
            for method, size in row.items():
                if size == best:
                    wins[method] += 1
        print(f"lattice {lat.describe()}: {args.count} recognizers, {args.states} states")
        for method in METHODS:
            if not sizes[method]:
                continue
            mean = sum(sizes[method]) / len(sizes[method])
            note = f", {skipped[method]} skipped" if skipped[method] else ""
            print(f"  {method:>4}: mean quotient {mean:4.2f}, best in {wins[method]:>3}{note}")
        print()


if __name__ == "__main__":
    main()
