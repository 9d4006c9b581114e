"""Compare every engine against the brute-force oracle on random instances."""

import argparse
import random
import sys
import time
from collections import Counter

from delaybetter.generate import random_instance
from delaybetter.reach import verify
from delaybetter.solvers import (
    SolverError,
    compute_fes,
    solve_brute_force,
    solve_db_fes,
    solve_db_single_source,
    solve_db_tree,
)

ENGINES = {"tree": solve_db_tree, "single-source": solve_db_single_source, "fes": solve_db_fes}


def case(engine, seed, rng):
    directed = rng.random() < 0.5
    if engine == "tree":
        return random_instance("tree", n=rng.randint(2, 8), demands=rng.randint(1, 3),
                               tmax=6, seed=seed, directed=directed)
    return random_instance("low-fes", n=rng.randint(3, 5), rho=rng.randint(0, 2),
                           demands=rng.randint(1, 3), tmax=6, seed=seed, directed=directed,
                           single_source=engine == "single-source")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    failures = 0
    for name, fn in ENGINES.items():
        rng = random.Random(args.seed)
        tally = Counter()
        branches = []
        start = time.perf_counter()
        for seed in range(args.count):
            inst = case(name, seed, rng)
            truth = solve_brute_force(inst)
            try:
                got = fn(inst)
            except SolverError as exc:
                tally[f"error {exc.code}"] += 1
                continue
            tally[truth.answer.value] += 1
            if got.answer != truth.answer or (got.yes and not verify(inst, got.witness).accepted):
                tally["mismatch"] += 1
            if name == "fes":
                branches.append((got.stats["branches"], got.stats["bound"], compute_fes(inst.graph).rho))
        failures += tally["mismatch"]
        line = f"{name:14s} {dict(tally)}  {time.perf_counter() - start:.1f}s"
        if branches:
            worst = max(b / max(bd, 1) for b, bd, _ in branches)
            line += f"  max branches/bound {worst:.3f}"
        print(line)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
