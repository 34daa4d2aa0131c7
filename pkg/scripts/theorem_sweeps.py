"""Run the four repunit divisor sweeps and print one line per (p, q)."""

import argparse
import time

from numtasks.config import FULL
from numtasks.repunit import VERIFIERS


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--theorem", type=int, choices=sorted(VERIFIERS), action="append")
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    bounds = {1: FULL.t1_q_max, 2: FULL.t2_bound, 3: FULL.t3_q_max, 4: FULL.t4_q_max}
    for t in args.theorem or sorted(VERIFIERS):
        start = time.perf_counter()
        reports = VERIFIERS[t](bounds[t], jobs=args.jobs)
        print(f"# T{t}: {len(reports)} pairs in {time.perf_counter() - start:.2f}s")
        for r in reports:
            print(f"q={r.q:<3d} p={r.p:<3d} {r.verdict.value:<13s} below={r.below_p} A={r.factorization}")


if __name__ == "__main__":
    main()
