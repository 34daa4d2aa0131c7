"""Verification runs packaged as emit sections with a pass/fail status."""

from __future__ import annotations

from . import dioph, loeschian, power_eq, pseudofib, repunit
from .config import Bounds, RunConfig
from .emit import Section, Status, worst
from .repunit import Verdict

_VERDICT_STATUS = {
    Verdict.CONSISTENT: Status.CONSISTENT,
    Verdict.VIOLATION: Status.VIOLATION,
    Verdict.INDETERMINATE: Status.INDETERMINATE,
}

_CROSS_STATUS = {"match": Status.CONSISTENT, "family_unknown": Status.CONSISTENT, "mismatch": Status.VIOLATION}


def _ok(flag: bool) -> Status:
    return Status.CONSISTENT if flag else Status.VIOLATION


def repunit_section(name: str, reports: list[repunit.RepunitReport]) -> Section:
    status = worst(_VERDICT_STATUS[r.verdict] for r in reports)
    counts = {v.value: sum(r.verdict is v for r in reports) for v in Verdict}
    return Section(name, [r.to_record() for r in reports], status, counts)


def repunit_sweep(theorem: int, bound: int, cfg: RunConfig) -> Section:
    reports = repunit.VERIFIERS[theorem](bound, effort=cfg.budget, seed=cfg.seed, jobs=cfg.jobs)
    return repunit_section(f"repunit_t{theorem}", reports)


def power_eq_sections(bounds: Bounds) -> list[Section]:
    out = []
    for base in bounds.power_bases:
        cross = power_eq.cross_check(base, bounds.power_x_max, bounds.power_y_max, bounds.power_z_max)
        out.append(Section(f"power_eq_base{base}", [s.to_record() for s in cross.search], _CROSS_STATUS[cross.status], {
            "bounds": list(cross.bounds),
            "cross": cross.status,
            "missed_by_family": [list(t) for t in cross.missed],
            "extra_in_family": [list(t) for t in cross.extra],
        }))
    return out


def dioph_section(bounds: Bounds, jobs: int = 1, equations=None) -> Section:
    reports = [
        dioph.cross_verify(eq, bounds.dioph_x_max, bounds.dioph_y_max, bounds.dioph_z_max, jobs=jobs)
        for eq in (equations or list(dioph.Equation))
    ]
    status = worst(_CROSS_STATUS[r.status] for r in reports)
    return Section("dioph_cross", [r.to_record() for r in reports], status, {
        "statuses": {r.equation.value: r.status for r in reports},
    })


def lemma1_section(bounds: Bounds) -> Section:
    sweep = dioph.lemma1_sweep(bounds.lemma1_ab_max, bounds.lemma1_n_max)
    return Section("lemma1", [sweep.to_record()], _ok(sweep.ok))


def loeschian_sections(bounds: Bounds) -> list[Section]:
    grids = [
        loeschian.identity_grid_check(bounds.loeschian_grid),
        loeschian.solvability_check(bounds.loeschian_n_max),
        loeschian.prime_classification_check(bounds.loeschian_n_max),
    ]
    closure = loeschian.verify_divisor_closure(bounds.loeschian_n_max)
    a, b, e = bounds.loeschian_power
    powers = loeschian.power_identities_check(a, b, e)
    return [
        Section("loeschian_grids", [g.to_record() for g in grids], worst(_ok(g.ok) for g in grids)),
        Section("loeschian_closure", [closure.to_record()], _ok(closure.ok)),
        Section("loeschian_powers", [powers.to_record()], _ok(powers.ok)),
    ]


def pseudofib_sections(bounds: Bounds, seed: int) -> list[Section]:
    ks = range(2, bounds.pseudofib_k_max + 1)
    n = bounds.pseudofib_n_max

    identities = []
    for k in ks:
        shift = pseudofib.verify_shift_identity(k, n)
        # Iterated sums are only claimed for k = 3; other orders get level 1.
        sums = pseudofib.verify_sum_identity(k, n, bounds.pseudofib_depth if k == 3 else 1)
        identities.append({"k": k, "shift": shift.to_record()["levels"][0], "sums": [lv.to_record() for lv in sums.levels],
                           "holds": shift.holds and sums.holds})

    roots = [pseudofib.characteristic_roots(k) for k in ks]
    increasing = all(x.dominant < y.dominant for x, y in zip(roots, roots[1:]))
    roots_ok = increasing and all(r.max_residual < 1e-8 and r.fixed_point_residual < 1e-9 for r in roots)

    comps = [pseudofib.compare_closed_form(k, bounds.closed_form_n_max) for k in range(2, bounds.closed_form_k_max + 1)]
    comp_records = [{"k": c.order, "n_max": bounds.closed_form_n_max, "max_rel_error": c.max_rel_error} for c in comps]

    cardano = pseudofib.cardano_root_check()
    cardano_ok = max(cardano.residuals) < 1e-9 and cardano.dominant_error < 1e-9 and cardano.coefficient_error < 1e-9

    space = [pseudofib.solution_space_check(k, bounds.solution_space_trials, seed) for k in ks]

    return [
        Section("pseudofib_identities", identities, _ok(all(r["holds"] for r in identities)),
                {"n_max": n, "depth": bounds.pseudofib_depth}),
        Section("pseudofib_roots", [r.to_record() for r in roots], _ok(roots_ok), {"increasing": increasing}),
        Section("pseudofib_closed_form", comp_records, _ok(all(c.max_rel_error < 1e-6 for c in comps))),
        # The product flag is informational and never fails the section.
        Section("pseudofib_cardano", [cardano.to_record()], _ok(cardano_ok)),
        Section("pseudofib_solution_space", [s.to_record() for s in space], _ok(all(s.ok for s in space))),
    ]


def verify_all(cfg: RunConfig) -> list[Section]:
    b = cfg.bounds
    sections = [
        repunit_sweep(1, b.t1_q_max, cfg),
        repunit_sweep(2, b.t2_bound, cfg),
        repunit_sweep(3, b.t3_q_max, cfg),
        repunit_sweep(4, b.t4_q_max, cfg),
    ]
    sections += power_eq_sections(b)
    sections.append(dioph_section(b, cfg.jobs))
    sections.append(lemma1_section(b))
    sections += loeschian_sections(b)
    sections += pseudofib_sections(b, cfg.seed)
    return sections
