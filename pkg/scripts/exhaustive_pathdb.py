"""Exhaustive Path-DB sweep: fixed-point engine vs brute force vs delaying table."""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from support import pathdb_sweep  # noqa: E402


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-edges", type=int, default=4)
    ap.add_argument("--max-deadline", type=int, default=5)
    ap.add_argument("--max-demands", type=int, choices=(1, 2), default=2)
    args = ap.parse_args()
    start = time.perf_counter()
    s = pathdb_sweep(args.max_edges, (1, 2, 3), args.max_deadline, args.max_demands)
    print(f"labelled footprints: {s['configs']}")
    print(f"instances:           {s['instances']}")
    print(f"yes:                 {s['yes']}")
    print(f"mismatches:          {len(s['mismatches'])}")
    print(f"non-integral:        {s['not_integral']}")
    print(f"non-minimal:         {len(s['not_minimal'])}")
    print(f"seconds:             {time.perf_counter() - start:.1f}")
    for g, combo, *rest in s["mismatches"][:5]:
        print("mismatch:", g, combo, rest)
    return 1 if s["mismatches"] or s["not_minimal"] else 0


if __name__ == "__main__":
    sys.exit(main())
