"""Dual-oracle check of the δ-DB → DB and NAE-3SAT → DB reductions."""

import argparse
import itertools
import random
import sys
import time

from delaybetter.model import make_instance
from delaybetter.reductions import (
    NaeFormula,
    first_half_labels,
    lifetime_bound,
    random_nae,
    reduce_delta_to_db_directed,
    reduce_delta_to_db_undirected,
    reduce_nae_to_db_directed,
    reduce_nae_to_db_undirected,
    solve_nae3sat_brute,
)
from delaybetter.solvers import solve_brute_force


def delta_instances(max_label):
    for directed in (False, True):
        for shape in ([("a", "b")], [("a", "b"), ("b", "c")]):
            names = sorted({x for e in shape for x in e})
            flips = itertools.product((0, 1), repeat=len(shape)) if directed else [(0,) * len(shape)]
            for bits in flips:
                arcs = [(v, u) if b else (u, v) for (u, v), b in zip(shape, bits)]
                for labs in itertools.product(range(1, max_label + 1), repeat=len(shape)):
                    for s, z in itertools.permutations(names, 2):
                        for d in range(1, 5):
                            for delta in (0, 1, 2):
                                yield make_instance(directed, [a + (t,) for a, t in zip(arcs, labs)],
                                                    [(s, z, d)], delta=delta, vertices=names)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-label", type=int, default=5)
    ap.add_argument("--nae-samples", type=int, default=24)
    args = ap.parse_args()

    start = time.perf_counter()
    n = bad = over = window = 0
    for inst in delta_instances(args.max_label):
        red = reduce_delta_to_db_directed if inst.graph.directed else reduce_delta_to_db_undirected
        out = red(inst)
        tgt = solve_brute_force(out.instance)
        n += 1
        bad += solve_brute_force(inst).answer != tgt.answer
        over += out.instance.t_max > lifetime_bound(inst)
        if inst.graph.directed and tgt.yes:
            for k, (first, _, _) in first_half_labels(out, tgt.witness).items():
                window += first > 2 * inst.graph.edges[k].time + inst.delta
    print(f"delta-db: {n} instances, {bad} mismatches, {over} over lifetime bound, "
          f"{window} first-half labels above 2t+δ  ({time.perf_counter() - start:.1f}s)")

    start = time.perf_counter()
    rng = random.Random(0)
    formulas = [NaeFormula(3, (c,)) for c in itertools.product(range(3), repeat=3)]
    formulas += [random_nae(rng.choice((3, 4)), 2, seed=s, distinct=rng.random() < 0.7)
                 for s in range(args.nae_samples)]
    nae_bad = 0
    for f in formulas:
        want = solve_nae3sat_brute(f)[0]
        for red in (reduce_nae_to_db_undirected, reduce_nae_to_db_directed):
            nae_bad += solve_brute_force(red(f).instance, label_cap=2).yes != want
    print(f"nae3sat: {len(formulas)} formulas x 2 encodings, {nae_bad} mismatches "
          f"({time.perf_counter() - start:.1f}s)")
    return 1 if bad or over or nae_bad else 0


if __name__ == "__main__":
    sys.exit(main())
