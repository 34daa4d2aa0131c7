"""Acceptance criteria at their stated bounds and tolerances.

Each check reports through the ``criterion`` fixture, so the session ends
with one PASS/FAIL line per criterion (see the "acceptance criteria" section
of the pytest summary).
"""

import time

import pytest

from numtasks.arith import factorize, is_prime
from numtasks.config import FULL
from numtasks.dioph import Equation, closed_form, cross_verify, holds, lemma1_sweep
from numtasks.loeschian import (
    LoeschianRep,
    compose,
    form,
    identity_grid_check,
    power_identities_check,
    prime_classification_check,
    representations,
    solvability_check,
    verify_divisor_closure,
)
from numtasks.power_eq import mersenne_solutions, search_power_eq
from numtasks.pseudofib import (
    cardano_root_check,
    characteristic_roots,
    compare_closed_form,
    partial_sums,
    terms,
    verify_shift_identity,
    verify_sum_identity,
)
from numtasks.repunit import (
    Verdict,
    repunit_value,
    verify_theorem_1,
    verify_theorem_2,
    verify_theorem_3,
    verify_theorem_4,
)


def timed(fn, *args, **kwargs):
    start = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, time.perf_counter() - start


def keys(sols):
    return {s.key[1:] for s in sols}


# -- 1 ---------------------------------------------------------------------

def test_criterion_01_theorem1_sweep(criterion):
    with criterion(1, "sweep q<=31, one small divisor equal to q, >= 2 divisors, < 30 s"):
        reports, elapsed = timed(verify_theorem_1, FULL.t1_q_max)
        assert [r.q for r in reports] == [3, 5, 11, 23, 29]
        for r in reports:
            assert r.verdict is Verdict.CONSISTENT, r.details
            assert r.below_p == [r.q]
            assert len(r.factorization.primes) >= 2
        assert elapsed < 30
    with criterion(1, "A(7,3) = 57 = 3*19"):
        assert repunit_value(7, 3) == 57
        assert factorize(57).as_dict() == {3: 1, 19: 1}


# -- 2 ---------------------------------------------------------------------

def test_criterion_02_theorem2_sweep(criterion):
    with criterion(2, "odd primes p < 2q+1, p,q <= 31, all divisors above p, < 60 s"):
        reports, elapsed = timed(verify_theorem_2, FULL.t2_bound)
        assert reports
        for r in reports:
            assert r.verdict is Verdict.CONSISTENT, r.details
            assert r.below_p == [] and not r.equal_p
        assert elapsed < 60
    with criterion(2, "A(7,5) = 2801 prime"):
        assert repunit_value(7, 5) == 2801 and is_prime(2801)


# -- 3 ---------------------------------------------------------------------

def test_criterion_03_theorem3_sweep(criterion):
    with criterion(3, "q in {3,5,7,11}, all divisors above p, both readings reported"):
        reports = verify_theorem_3(FULL.t3_q_max)
        assert sorted({r.q for r in reports}) == [3, 5, 7, 11]
        for r in reports:
            assert r.verdict is Verdict.CONSISTENT, r.details
            assert set(r.readings) == {"all_above_p", "exactly_one_above_p"}
            assert r.readings["all_above_p"]
            assert "readings" in r.to_record()
    with criterion(3, "A(4,5) = 341 = 11*31 and A(8,3) = 73"):
        assert repunit_value(4, 5) == 341
        assert factorize(341).as_dict() == {11: 1, 31: 1}
        assert repunit_value(8, 3) == 73 and is_prime(73)


# -- 4 ---------------------------------------------------------------------

def test_criterion_04_theorem4_sweep(criterion):
    with criterion(4, "q <= 13, p in {q+1, 2q+1}, one small divisor equal to q"):
        reports = verify_theorem_4(FULL.t4_q_max)
        assert len(reports) == 10
        for r in reports:
            assert r.verdict is Verdict.CONSISTENT, r.details
            assert r.below_p == [r.q]
            assert len(r.factorization.primes) >= 2
    with criterion(4, "A(6,5) = 1555 = 5*311"):
        assert repunit_value(6, 5) == 1555
        assert factorize(1555).as_dict() == {5: 1, 311: 1}


# -- 5, 6, 7 ---------------------------------------------------------------

POWER_BOX = (FULL.power_x_max, FULL.power_y_max, FULL.power_z_max)


def test_criterion_05_mersenne(criterion):
    with criterion(5, "base 2 oracle equals the Mersenne set, z = 2, < 60 s"):
        sols, elapsed = timed(search_power_eq, 2, *POWER_BOX)
        expected = {(2, 3, 2), (3, 7, 2), (5, 31, 2), (7, 127, 2), (13, 8191, 2)}
        assert keys(sols) == expected
        assert keys(mersenne_solutions(15)) == expected
        assert all(s.z == 2 for s in sols)
        assert elapsed < 60


def test_criterion_06_base_three(criterion):
    with criterion(6, "base 3 oracle equals {(1,2,2)}"):
        assert keys(search_power_eq(3, *POWER_BOX)) == {(1, 2, 2)}


def test_criterion_07_bases_five_and_seven(criterion):
    with criterion(7, "base 7 oracle equals {(1,2,3)}"):
        assert keys(search_power_eq(7, *POWER_BOX)) == {(1, 2, 3)}
    with criterion(7, "base 5 oracle is empty"):
        assert keys(search_power_eq(5, *POWER_BOX)) == set()


# -- 8 ---------------------------------------------------------------------

DIOPH_BOX = (FULL.dioph_x_max, FULL.dioph_y_max, FULL.dioph_z_max)
_cross_cache: dict = {}


def cross(eq: Equation):
    if eq not in _cross_cache:
        _cross_cache[eq] = timed(cross_verify, eq, *DIOPH_BOX)
    return _cross_cache[eq]


@pytest.mark.parametrize("eq", [e for e in Equation if e is not Equation.X], ids=lambda e: e.value)
def test_criterion_08_search_matches_family(criterion, eq):
    with criterion(8, f"{eq.value}: search equals closed form on the box"):
        report, _ = cross(eq)
        assert report.missed_by_family == [] and report.extra_in_family == []
        assert report.status == "match"


@pytest.mark.parametrize("eq", [Equation.III, Equation.V, Equation.IX], ids=lambda e: e.value)
def test_criterion_08_empty_equations(criterion, eq):
    with criterion(8, f"{eq.value}: verified empty"):
        report, _ = cross(eq)
        assert report.search == []


def test_criterion_08_equation_x(criterion):
    with criterion(8, "X: oracle contains (6,2), family unknown"):
        report, _ = cross(Equation.X)
        assert (6, 2) in report.search
        assert report.status == "family_unknown"
        assert closed_form(Equation.X, [1]) is None


def test_criterion_08_spot_checks_and_runtime(criterion):
    with criterion(8, "spot checks (5,3,2) I, (2t,3t,2) II, (6,3) VII+VIII, (20,12) VIII"):
        assert holds("I", (5, 3, 2))
        assert all(holds("II", (2 * t, 3 * t, 2)) for t in range(1, 200))
        assert holds("VII", (6, 3)) and holds("VIII", (6, 3))
        assert holds("VIII", (20, 12))
        family_99 = [s for s in closed_form("VIII", [1]) if s.vars == (20, 12)]
        assert family_99 and "4n^2" in family_99[0].param
    with criterion(8, "all ten cross-checks < 5 min"):
        total = sum(cross(eq)[1] for eq in Equation)
        assert total < 300


# -- 9 ---------------------------------------------------------------------

def test_criterion_09_lemma1(criterion):
    with criterion(9, "coprime a != b <= 200, n <= 6, zero counterexamples"):
        sweep = lemma1_sweep(FULL.lemma1_ab_max, FULL.lemma1_n_max)
        assert sweep.checked > 100_000
        assert sweep.counterexamples == []


# -- 10 --------------------------------------------------------------------

def test_criterion_10_loeschian(criterion):
    start = time.perf_counter()
    n_max = FULL.loeschian_n_max
    with criterion(10, "composition and cross-term identities on a,b,c,d <= 30"):
        grid = identity_grid_check(FULL.loeschian_grid)
        assert grid.checked == 30**4 and grid.ok
    with criterion(10, "7^5 = 7^2 + 7*126 + 126^2"):
        assert form(7, 126) == 7**5
        product = compose(LoeschianRep(1, 18), LoeschianRep(3, 5))
        assert product.value == 7**5
        assert all(f.value == 7**5 for f in product.forms)
        assert LoeschianRep(7, 126) in representations(7**5)
        assert LoeschianRep(7, 126) in power_identities_check(1, 2, 5).powers[5]
    with criterion(10, "divisor closure for primitive values <= 10^5"):
        closure = verify_divisor_closure(n_max)
        assert closure.primitive_values > 0 and closure.violations == []
    with criterion(10, "solvable(n) iff enumeration nonempty, n <= 10^5"):
        assert solvability_check(n_max).ok
    with criterion(10, "prime classification matches the residue rule, p <= 10^5"):
        assert prime_classification_check(n_max).ok
    with criterion(10, "runtime < 2 min"):
        assert time.perf_counter() - start < 120


# -- 11 --------------------------------------------------------------------

PRINTED_ROOTS = {2: "1.6180", 3: "1.83929", 4: "1.9276", 5: "1.96595", 6: "1.98358", 7: "1.99196", 8: "1.99603", 9: "1.99803"}


def test_criterion_11_terms_and_sums(criterion):
    with criterion(11, "k=3 terms through u11 = 193, S8 = 68"):
        assert terms(3, 11) == [1, 1, 1, 3, 5, 9, 17, 31, 57, 105, 193]
        assert partial_sums(terms(3, 8))[-1] == 68


def test_criterion_11_shift_identities(criterion):
    with criterion(11, "u and S relations exact for n <= 60"):
        assert verify_shift_identity(3, 60).holds
        assert verify_sum_identity(3, 60, depth=1).holds


def test_criterion_11_iterated_sum_depth_3(criterion):
    with criterion(11, "iterated sums, depth 3"):
        report = verify_sum_identity(3, 60, depth=3)
        assert report.holds, [lv.to_record() for lv in report.levels]


def test_criterion_11_root_table(criterion):
    with criterion(11, "dominant roots k=2..9 match the printed digits"):
        for k, printed in PRINTED_ROOTS.items():
            digits = len(printed.split(".")[1])
            assert f"{characteristic_roots(k).dominant:.{digits}f}" == printed, k


def test_criterion_11_closed_form(criterion):
    with criterion(11, "closed form within 1e-6 relative, k <= 5, n <= 40"):
        for k in range(2, 6):
            assert compare_closed_form(k, 40).max_rel_error < 1e-6


def test_criterion_11_cardano(criterion):
    rep = cardano_root_check()
    with criterion(11, "radicals give the dominant root to 1e-9"):
        assert rep.dominant_error < 1e-9
        assert max(rep.residuals) < 1e-9
    with criterion(11, "q1*q2*q3 reported and flagged against -1"):
        assert abs(rep.product - 1) < 1e-9
        assert rep.flags and not rep.matches_stated
        assert rep.to_record()["stated_product"] == -1


# -- 12 --------------------------------------------------------------------

def test_criterion_12_determinism(criterion, run_cli):
    with criterion(12, "verify-all --quick --seed 42 twice is byte-identical"):
        first = run_cli("verify-all", "--quick", "--seed", "42", "--format", "json")
        second = run_cli("verify-all", "--quick", "--seed", "42", "--format", "json")
        assert first.stdout and first.stdout == second.stdout
        assert first.returncode == second.returncode
