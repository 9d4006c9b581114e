"""Command-line front end.

Exit codes: 0 for YES (or accepted), 1 for NO (or rejected), 2 for errors and
exhausted budgets. Every run prints a key=value report on standard error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Optional

from .generate import KINDS, random_instance
from .model import (
    DelayBetterError,
    parse_instance,
    parse_solution,
    serialize_instance,
    serialize_solution,
)
from .reach import compress_lifetime, verify
from .reductions import (
    parse_cubic,
    parse_nae,
    reduce_cbpepe_to_delta_db,
    reduce_db_to_delta,
    reduce_delta_to_db_directed,
    reduce_delta_to_db_undirected,
    reduce_nae_to_db_directed,
    reduce_nae_to_db_undirected,
    solve_cbp_epe_brute,
    solve_nae3sat_brute,
)
from .solvers import ENGINES, SolverConfig, solve, solve_brute_force

EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2


class Report:
    """Line-oriented key=value run report."""

    def __init__(self, argv: list[str]):
        self.fields: dict[str, object] = {"command": " ".join(argv)}
        self.start = time.perf_counter()

    def set(self, **kv):
        self.fields.update(kv)

    def emit(self, stream):
        self.fields["wall_ms"] = round((time.perf_counter() - self.start) * 1000, 3)
        for k, v in self.fields.items():
            print(f"{k}={v}", file=stream)


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise DelayBetterError(f"cannot read {path}: {exc.strerror}", "IO_ERROR") from exc


def _write(path: Optional[str], text: str):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def cmd_solve(args, rep: Report) -> int:
    inst = parse_instance(_read(args.instance))
    config = SolverConfig(args.branch_budget, args.state_budget, args.jobs)
    res = solve(inst, args.algo, config)
    rep.set(algorithm=res.algorithm, answer=res.answer.value, kind=inst.kind.value)
    for k, v in res.stats.items():
        rep.set(**{k: v})
    if res.reason is not None:
        rep.set(reason=res.reason.value)
    _write(args.output, serialize_solution(res))
    if args.output and args.output != "-":
        rep.set(witness=args.output)
    return EXIT_YES if res.yes else EXIT_NO


def cmd_verify(args, rep: Report) -> int:
    inst = parse_instance(_read(args.instance))
    sol = parse_solution(_read(args.solution), inst.graph)
    if sol.witness is None:
        raise DelayBetterError("solution carries no labels to verify", "NO_WITNESS")
    verdict = verify(inst, sol.witness)
    for r in verdict.demands:
        status = "ok" if r.ok else "late"
        print(f"demand {r.index}: arrival={r.arrival} deadline={r.deadline} {status}")
    rep.set(accepted=verdict.accepted)
    if not verdict.accepted:
        rep.set(condition=verdict.condition, message=verdict.message)
    return EXIT_YES if verdict.accepted else EXIT_NO


def cmd_reduce(args, rep: Report) -> int:
    raw = _read(args.input)
    back_map = None
    if args.source == "db":
        inst = parse_instance(raw)
        out_inst = reduce_db_to_delta(inst)
    elif args.source == "delta-db":
        inst = parse_instance(raw)
        directed = inst.graph.directed if args.orientation == "auto" else args.orientation == "directed"
        red = reduce_delta_to_db_directed if directed else reduce_delta_to_db_undirected
        out = red(inst)
        out_inst, back_map = out.instance, out.back_map
    elif args.source == "nae3sat":
        f = parse_nae(raw)
        red = reduce_nae_to_db_directed if args.orientation == "directed" else reduce_nae_to_db_undirected
        out = red(f)
        out_inst, back_map = out.instance, out.back_map
    else:
        g = parse_cubic(raw)
        out = reduce_cbpepe_to_delta_db(g, bounded=not args.delta_free,
                                        directed=args.orientation == "directed")
        out_inst, back_map = out.instance, out.back_map
    _write(args.output, serialize_instance(out_inst))
    if args.back_map and back_map is not None:
        Path(args.back_map).write_text(json.dumps(back_map, indent=1, default=list) + "\n")
    rep.set(kind=out_inst.kind.value, vertices=len(out_inst.graph.vertices),
            edges=len(out_inst.graph.edges), demands=len(out_inst.demands),
            t_max=out_inst.t_max)
    return EXIT_YES


def cmd_compress(args, rep: Report) -> int:
    inst = parse_instance(_read(args.instance))
    small, remap = compress_lifetime(inst)
    _write(args.output, serialize_instance(small))
    if args.remap:
        doc = {"anchors": [list(a) for a in remap.anchors], "dropped_edges": list(remap.dropped)}
        Path(args.remap).write_text(json.dumps(doc) + "\n")
    rep.set(t_max_before=inst.t_max, t_max_after=small.t_max, dropped=len(remap.dropped))
    return EXIT_YES


def cmd_generate(args, rep: Report) -> int:
    inst = random_instance(
        args.kind, n=args.n, m=args.m, demands=args.demands, tmax=args.tmax, seed=args.seed,
        directed=args.directed, delta=args.delta, rho=args.rho, single_source=args.single_source,
    )
    _write(args.output, serialize_instance(inst))
    rep.set(kind=inst.kind.value, edges=len(inst.graph.edges))
    return EXIT_YES


def cmd_oracle(args, rep: Report) -> int:
    raw = _read(args.input)
    if args.source == "nae3sat":
        ok, witness = solve_nae3sat_brute(parse_nae(raw))
        doc = {"answer": "yes" if ok else "no", "assignment": list(witness) if ok else None}
    elif args.source == "cbp-epe":
        ok, coloring = solve_cbp_epe_brute(parse_cubic(raw))
        doc = {"answer": "yes" if ok else "no"}
        if ok:
            doc["coloring"] = {"-".join(sorted(e)): c for e, c in coloring.items()}
    else:
        inst = parse_instance(raw)
        res = solve_brute_force(inst, state_budget=args.state_budget)
        rep.set(algorithm=res.algorithm, **dict(res.stats))
        _write(args.output, serialize_solution(res))
        rep.set(answer=res.answer.value)
        return EXIT_YES if res.yes else EXIT_NO
    _write(args.output, json.dumps(doc, indent=1) + "\n")
    rep.set(answer=doc["answer"])
    return EXIT_YES if doc["answer"] == "yes" else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="delaybetter", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="decide an instance and write a solution")
    s.add_argument("instance")
    s.add_argument("--algo", choices=ENGINES, default="auto")
    s.add_argument("--branch-budget", type=int, default=10**7)
    s.add_argument("--state-budget", type=int, default=10**8)
    s.add_argument("--seed", type=int, default=0, help="recorded; every engine is deterministic")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("-o", "--output")
    s.set_defaults(run=cmd_solve)

    v = sub.add_parser("verify", help="check a solution against an instance")
    v.add_argument("instance")
    v.add_argument("solution")
    v.set_defaults(run=cmd_verify)

    r = sub.add_parser("reduce", help="translate a source problem into an instance")
    r.add_argument("input")
    r.add_argument("--from", dest="source", required=True,
                   choices=("delta-db", "db", "nae3sat", "cbp-epe"))
    r.add_argument("--orientation", choices=("auto", "directed", "undirected"), default="auto",
                   help="gadget orientation; auto follows the input (undirected for formulas and graphs)")
    r.add_argument("--delta-free", action="store_true",
                   help="cbp-epe: unbounded DB variant with all initial labels 1")
    r.add_argument("-o", "--output")
    r.add_argument("--back-map")
    r.set_defaults(run=cmd_reduce)

    c = sub.add_parser("compress", help="shrink the lifetime of an instance")
    c.add_argument("instance")
    c.add_argument("-o", "--output")
    c.add_argument("--remap")
    c.set_defaults(run=cmd_compress)

    g = sub.add_parser("generate", help="write a seeded random instance")
    g.add_argument("--kind", choices=KINDS, default="random")
    g.add_argument("--n", type=int, default=6)
    g.add_argument("--m", type=int, default=7)
    g.add_argument("--demands", type=int, default=2)
    g.add_argument("--tmax", type=int, default=6)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--rho", type=int, default=2)
    g.add_argument("--delta", type=int)
    g.add_argument("--directed", action="store_true")
    g.add_argument("--single-source", action="store_true")
    g.add_argument("-o", "--output")
    g.set_defaults(run=cmd_generate)

    o = sub.add_parser("oracle", help="exhaustive answer for an instance or source problem")
    o.add_argument("input")
    o.add_argument("--from", dest="source", default="instance",
                   choices=("instance", "nae3sat", "cbp-epe"))
    o.add_argument("--state-budget", type=int, default=10**8)
    o.add_argument("-o", "--output")
    o.set_defaults(run=cmd_oracle)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    rep = Report(["delaybetter", *argv])
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = EXIT_YES if exc.code == 0 else EXIT_ERROR
        rep.set(exit=code)
        if code:
            rep.set(error="USAGE")
        rep.emit(sys.stderr)
        return code
    try:
        code = args.run(args, rep)
    except DelayBetterError as exc:
        rep.set(error=exc.code, message=str(exc))
        code = EXIT_ERROR
    rep.set(exit=code)
    rep.emit(sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
