"""Cross-check every exponential equation against its family on a box."""

import argparse
import time

from numtasks.dioph import Equation, cross_verify


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--x-max", type=int, default=300)
    ap.add_argument("--y-max", type=int, default=300)
    ap.add_argument("--z-max", type=int, default=8)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--show", type=int, default=6, help="solutions listed per equation")
    args = ap.parse_args()

    for eq in Equation:
        start = time.perf_counter()
        r = cross_verify(eq, args.x_max, args.y_max, args.z_max, jobs=args.jobs)
        took = time.perf_counter() - start
        print(f"{eq.value:>4}  {eq.spec.relation:<28s} {r.status:<15s} {len(r.search):>4d} found  {took:6.2f}s")
        if r.search:
            print(f"      e.g. {r.search[: args.show]}")
        if r.missed_by_family:
            print(f"      not in family: {r.missed_by_family[: args.show]}")
        if r.extra_in_family:
            print(f"      family only: {r.extra_in_family[: args.show]}")


if __name__ == "__main__":
    main()
