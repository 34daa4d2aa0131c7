"""Dominant characteristic roots, real roots and closed-form error by order k."""

import argparse

from numtasks.pseudofib import characteristic_roots, compare_closed_form


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k-max", type=int, default=12)
    ap.add_argument("--n", type=int, default=40, help="terms compared against the closed form")
    args = ap.parse_args()

    print(f"{'k':>3}  {'dominant':<18}  {'negative root':<20}  {'residual':<9}  closed-form rel. error")
    for k in range(2, args.k_max + 1):
        r = characteristic_roots(k)
        neg = [x for x in r.real_roots if x < 0]
        err = compare_closed_form(k, args.n).max_rel_error if k <= 12 else float("nan")
        print(f"{k:>3}  {r.dominant:<18.15f}  {(f'{neg[0]:.12f}' if neg else '-'):<20}  {r.max_scaled_residual:<9.2e}  {err:.2e}")


if __name__ == "__main__":
    main()
