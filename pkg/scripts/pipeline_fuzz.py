"""generate → solve → verify over many seeds; a YES that fails verification is a bug."""

import argparse
import random
import sys
import time
from collections import Counter

from delaybetter.generate import KINDS, random_instance
from delaybetter.reach import verify
from delaybetter.solvers import SolverError, solve


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--runs", type=int, default=10_000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    tally = Counter()
    start = time.perf_counter()
    for seed in range(args.runs):
        kind = rng.choice(KINDS)
        n = rng.randint(2, 7)
        m = rng.randint(1, min(8, n * (n - 1) // 2))
        inst = random_instance(kind, n=n, m=m, demands=rng.randint(1, 3), tmax=rng.randint(1, 8),
                               seed=seed, directed=rng.random() < 0.5,
                               delta=rng.choice([None, None, 0, 1, 2]), rho=rng.randint(0, 2))
        try:
            res = solve(inst)
        except SolverError as exc:
            tally[f"error {exc.code}"] += 1
            continue
        tally[f"{res.answer.value} via {res.algorithm}"] += 1
        if res.yes and not verify(inst, res.witness).accepted:
            tally["UNVERIFIED YES"] += 1
            print("unverified yes at seed", seed, file=sys.stderr)
    for k, v in sorted(tally.items()):
        print(f"{k:24s} {v}")
    print(f"{args.runs} runs in {time.perf_counter() - start:.1f}s")
    return 1 if tally["UNVERIFIED YES"] else 0


if __name__ == "__main__":
    sys.exit(main())
