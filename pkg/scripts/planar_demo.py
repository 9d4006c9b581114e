"""Build the planar bounded-delay instance for the 3-cube and check the yes-direction labelling."""

import argparse
import sys

from delaybetter.model import serialize_instance
from delaybetter.reach import verify
from delaybetter.reductions import (
    cube_graph,
    planar_forward_solution,
    reduce_cbpepe_to_delta_db,
    solve_cbp_epe_brute,
    structure_report,
)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--delta-free", action="store_true")
    ap.add_argument("-o", "--output", help="write the generated instance here")
    args = ap.parse_args()
    g = cube_graph()
    ok, colouring = solve_cbp_epe_brute(g)
    print("extendable:", ok)
    for e, c in sorted(colouring.items(), key=lambda kv: sorted(kv[0])):
        print("  ", "-".join(sorted(e)), c)
    out = reduce_cbpepe_to_delta_db(g, bounded=not args.delta_free)
    print("structure:", structure_report(out))
    check = verify(out.instance, planar_forward_solution(g, out, colouring))
    for role in ("bold", "hermit", "traveler"):
        ks = out.demands_of(role)
        met = sum(check.demands[k].ok for k in ks)
        print(f"{role:9s} {met}/{len(ks)} met")
    print("accepted:", check.accepted)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(serialize_instance(out.instance))
    return 0 if check.accepted else 1


if __name__ == "__main__":
    sys.exit(main())
