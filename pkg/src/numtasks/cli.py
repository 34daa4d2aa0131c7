"""Command-line entry point.

Exit codes: 0 every check consistent, 1 a violation was found, 2 usage error,
3 indeterminate (a factorization ran out of effort budget).
"""

from __future__ import annotations

import argparse
import sys

from . import dioph, loeschian, power_eq, pseudofib, suite
from .arith import DEFAULT_EFFORT, DEFAULT_SEED, DomainError, IncompleteFactorizationError
from .config import FORMATS, FULL, QUICK, RunConfig
from .emit import Section, Status, emit, worst
from .repunit import TheoremCase, classify_divisors


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", dest="fmt", choices=FORMATS, default="json")
    p.add_argument("--out", help="write output to this file instead of stdout")
    p.add_argument("--budget", type=_positive, default=DEFAULT_EFFORT,
                   help="factorization effort budget in modular multiplications")
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="numtasks", description="Verify number-theoretic claims by computation.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("repunit", parents=[common], help="prime divisors of (p^q - 1)/(p - 1)")
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--claim", choices=[c.value for c in TheoremCase if c is not TheoremCase.NONE])
    p.add_argument("--theorem", type=int, choices=[1, 2, 3, 4], help="run a whole sweep instead of one pair")
    p.add_argument("--bound", type=_positive, help="sweep bound (defaults from the config table)")

    p = sub.add_parser("power-eq", parents=[common], help="N^x = (y^z - 1)/(y - 1) with y prime")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--x-max", type=_positive, default=FULL.power_x_max)
    p.add_argument("--y-max", type=_positive, default=FULL.power_y_max)
    p.add_argument("--z-max", type=_positive, default=FULL.power_z_max)
    p.add_argument("--mode", choices=["search", "cross"], default="cross")

    p = sub.add_parser("dioph", parents=[common], help="exponential equations I-X")
    p.add_argument("--equation", choices=[e.value for e in dioph.Equation])
    p.add_argument("--mode", choices=["search", "cross", "eval", "lemma1"], default="cross")
    p.add_argument("--x-max", type=_positive, default=FULL.dioph_x_max)
    p.add_argument("--y-max", type=_positive, default=FULL.dioph_y_max)
    p.add_argument("--z-max", type=_positive, default=FULL.dioph_z_max)
    p.add_argument("--vars", type=int, nargs="+", help="values for --mode eval")
    p.add_argument("--ab-max", type=_positive, default=FULL.lemma1_ab_max)
    p.add_argument("--n-max", type=_positive, default=FULL.lemma1_n_max)

    p = sub.add_parser("loeschian", help="the form a^2 + ab + b^2")
    lsub = p.add_subparsers(dest="action", required=True)
    lp = lsub.add_parser("repr", parents=[common])
    lp.add_argument("n", type=_positive)
    lp = lsub.add_parser("solvable", parents=[common])
    lp.add_argument("n", type=_positive)
    lp.add_argument("--allow-zero", action="store_true")
    lp = lsub.add_parser("closure", parents=[common])
    lp.add_argument("--max", dest="n_max", type=_positive, default=FULL.loeschian_n_max)
    lp = lsub.add_parser("classify", parents=[common])
    lp.add_argument("p", type=_positive)
    lp = lsub.add_parser("powers", parents=[common])
    lp.add_argument("a", type=_positive)
    lp.add_argument("b", type=_positive)
    lp.add_argument("--max-exp", type=_positive, default=5)

    p = sub.add_parser("pseudofib", help="order-k pseudo-Fibonacci sequences")
    psub = p.add_subparsers(dest="action", required=True)
    pp = psub.add_parser("terms", parents=[common])
    pp.add_argument("-k", type=int, default=3)
    pp.add_argument("-n", type=_positive, default=20)
    pp = psub.add_parser("roots", parents=[common])
    pp.add_argument("-k", type=int, default=3)
    pp = psub.add_parser("closedform", parents=[common])
    pp.add_argument("-k", type=int, default=3)
    pp.add_argument("-n", type=_positive, default=30)
    pp.add_argument("--compare", action="store_true", help="list every n against the exact term")
    pp = psub.add_parser("identities", parents=[common])
    pp.add_argument("-k", type=int, default=3)
    pp.add_argument("-n", type=_positive, default=60)
    pp.add_argument("--depth", type=_positive, default=FULL.pseudofib_depth)
    psub.add_parser("cardano", parents=[common])

    p = sub.add_parser("verify-all", parents=[common], help="run every module at the default bounds")
    p.add_argument("--quick", action="store_true", help="use the reduced bounds table")
    return parser


def _repunit(args, cfg: RunConfig) -> list[Section]:
    if args.theorem is not None:
        defaults = {1: FULL.t1_q_max, 2: FULL.t2_bound, 3: FULL.t3_q_max, 4: FULL.t4_q_max}
        return [suite.repunit_sweep(args.theorem, args.bound or defaults[args.theorem], cfg)]
    if args.p is None or args.q is None:
        raise DomainError("give --p and --q, or --theorem")
    report = classify_divisors(args.p, args.q, claim=args.claim, effort=cfg.budget, seed=cfg.seed)
    return [suite.repunit_section("repunit", [report])]


def _power_eq(args, cfg: RunConfig) -> list[Section]:
    if args.mode == "search":
        sols = power_eq.search_power_eq(args.base, args.x_max, args.y_max, args.z_max)
        return [Section("power_eq_search", [s.to_record() for s in sols])]
    bounds = FULL.__class__(power_bases=(args.base,), power_x_max=args.x_max, power_y_max=args.y_max, power_z_max=args.z_max)
    return suite.power_eq_sections(bounds)


def _dioph(args, cfg: RunConfig) -> list[Section]:
    if args.mode == "lemma1":
        bounds = FULL.__class__(lemma1_ab_max=args.ab_max, lemma1_n_max=args.n_max)
        return [suite.lemma1_section(bounds)]
    if args.equation is None:
        if args.mode != "cross":
            raise DomainError(f"--mode {args.mode} needs --equation")
        equations = None
    else:
        equations = [dioph.Equation(args.equation)]
    if args.mode == "eval":
        if not args.vars:
            raise DomainError("--mode eval needs --vars")
        lhs, rhs = dioph.evaluate(args.equation, args.vars)
        rec = {"equation": args.equation, "vars": args.vars, "lhs": lhs, "rhs": rhs, "holds": lhs == rhs}
        return [Section("dioph_eval", [rec])]
    if args.mode == "search":
        res = dioph.search(args.equation, args.x_max, args.y_max, args.z_max, jobs=cfg.jobs)
        return [Section("dioph_search", [s.to_record() for s in res.solutions], Status.CONSISTENT, {
            "bounds": list(res.bounds), "skipped": [list(v) for v in res.skipped],
        })]
    bounds = FULL.__class__(dioph_x_max=args.x_max, dioph_y_max=args.y_max, dioph_z_max=args.z_max)
    return [suite.dioph_section(bounds, cfg.jobs, equations)]


def _loeschian(args, cfg: RunConfig) -> list[Section]:
    if args.action == "repr":
        reps = loeschian.representations(args.n)
        recs = [{"a": r.a, "b": r.b, "value": r.value, "primitive": r.primitive} for r in reps]
        return [Section("loeschian_repr", recs, Status.CONSISTENT, {"n": args.n})]
    if args.action == "solvable":
        try:
            ok = loeschian.solvable(args.n, allow_zero=args.allow_zero, effort=cfg.budget)
        except IncompleteFactorizationError as exc:
            return [Section("loeschian_solvable", [{"n": args.n, "solvable": None, "detail": str(exc)}], Status.INDETERMINATE)]
        rec = {"n": args.n, "allow_zero": args.allow_zero, "solvable": ok}
        return [Section("loeschian_solvable", [rec])]
    if args.action == "closure":
        rep = loeschian.verify_divisor_closure(args.n_max)
        return [Section("loeschian_closure", [rep.to_record()], Status.CONSISTENT if rep.ok else Status.VIOLATION)]
    if args.action == "classify":
        cls = loeschian.classify_prime(args.p)
        reps = loeschian.representations(args.p)
        rec = {"p": args.p, "class": cls.value, "representations": [list(r.as_tuple()) for r in reps]}
        return [Section("loeschian_classify", [rec])]
    rep = loeschian.power_identities_check(args.a, args.b, args.max_exp)
    return [Section("loeschian_powers", [rep.to_record()], Status.CONSISTENT if rep.ok else Status.VIOLATION)]


def _pseudofib(args, cfg: RunConfig) -> list[Section]:
    if args.action == "terms":
        vals = pseudofib.terms(pseudofib.RecurrenceSpec(args.k), args.n)
        return [Section("pseudofib_terms", [{"n": i, "u": u} for i, u in enumerate(vals, 1)], Status.CONSISTENT, {"k": args.k})]
    if args.action == "roots":
        roots = pseudofib.characteristic_roots(args.k)
        recs = [{"index": i, "real": r.real, "imag": r.imag, "abs": abs(r)} for i, r in enumerate(roots.roots)]
        return [Section("pseudofib_roots", recs, Status.CONSISTENT, {
            "k": args.k, "dominant": roots.dominant, "max_residual": roots.max_residual,
            "fixed_point_residual": roots.fixed_point_residual,
        })]
    if args.action == "closedform":
        cmp = pseudofib.compare_closed_form(args.k, args.n)
        recs = cmp.to_records() if args.compare else cmp.to_records()[-1:]
        status = Status.CONSISTENT if cmp.max_rel_error < 1e-6 else Status.VIOLATION
        return [Section("pseudofib_closed_form", recs, status, {"k": args.k, "max_rel_error": cmp.max_rel_error})]
    if args.action == "identities":
        shift = pseudofib.verify_shift_identity(args.k, args.n)
        sums = pseudofib.verify_sum_identity(args.k, args.n, args.depth)
        recs = [{"sequence": "u", **shift.levels[0].to_record()}]
        recs += [{"sequence": "S" + "'" * (lv.level - 1), **lv.to_record()} for lv in sums.levels]
        status = Status.CONSISTENT if shift.holds and sums.holds else Status.VIOLATION
        return [Section("pseudofib_identities", recs, status, {"k": args.k, "n_max": args.n})]
    rep = pseudofib.cardano_root_check()
    ok = max(rep.residuals) < 1e-9 and rep.dominant_error < 1e-9
    return [Section("pseudofib_cardano", [rep.to_record()], Status.CONSISTENT if ok else Status.VIOLATION)]


_HANDLERS = {
    "repunit": _repunit,
    "power-eq": _power_eq,
    "dioph": _dioph,
    "loeschian": _loeschian,
    "pseudofib": _pseudofib,
}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig(
        args.command,
        fmt=args.fmt,
        out=args.out,
        budget=args.budget,
        jobs=args.jobs,
        seed=args.seed,
        bounds=QUICK if getattr(args, "quick", False) else FULL,
    )
    try:
        if args.command == "verify-all":
            sections = suite.verify_all(cfg)
        else:
            sections = _HANDLERS[args.command](args, cfg)
    except DomainError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2

    text = emit(sections, cfg.fmt)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        sys.stdout.flush()
    return int(worst(s.status for s in sections))


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
