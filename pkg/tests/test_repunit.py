import pytest
from hypothesis import given, strategies as st

from numtasks.arith import DomainError, is_prime, multiplicative_order
from numtasks.repunit import (
    TheoremCase,
    Verdict,
    classify_divisors,
    repunit_value,
    theorem_1_instances,
    theorem_case,
    verify_theorem_1,
    verify_theorem_4,
)


@given(st.integers(min_value=2, max_value=50), st.integers(min_value=1, max_value=40))
def test_repunit_value_matches_closed_form(p, q):
    assert repunit_value(p, q) == (p**q - 1) // (p - 1)


@pytest.mark.parametrize(
    "p, q, case",
    [(7, 3, TheoremCase.T1), (23, 11, TheoremCase.T1), (4, 3, TheoremCase.T4), (9, 4, TheoremCase.NONE),
     (7, 5, TheoremCase.T2), (4, 5, TheoremCase.T3), (8, 3, TheoremCase.NONE), (6, 5, TheoremCase.T4),
     (9, 3, TheoremCase.NONE), (15, 7, TheoremCase.T4)],
)
def test_theorem_case(p, q, case):
    assert theorem_case(p, q) is case


def test_seven_three_report():
    r = classify_divisors(7, 3)
    assert r.A == 57
    assert r.below_p == [3] and r.above_p == [19]
    assert r.verdict is Verdict.CONSISTENT


def test_wrong_claim_is_a_violation():
    # A(4, 5) = 11 * 31 has no divisor below 4, so the T1/T4 claim must fail.
    r = classify_divisors(4, 5, claim=TheoremCase.T4)
    assert r.verdict is Verdict.VIOLATION
    assert any("below p" in d for d in r.details)


def test_out_of_range_pair_can_have_small_divisors():
    # p = 9, q = 3 lies outside every case; 91 = 7 * 13 has 7 below 9.
    r = classify_divisors(9, 3)
    assert r.theorem_case is TheoremCase.NONE
    assert r.below_p == [7]
    assert r.verdict is Verdict.CONSISTENT


def test_tiny_budget_gives_indeterminate():
    r = classify_divisors(29, 31, effort=1000)
    assert r.verdict is Verdict.INDETERMINATE
    assert r.factorization.cofactors


def test_t3_readings_reported():
    r = classify_divisors(4, 5)
    assert r.readings == {"all_above_p": True, "exactly_one_above_p": False}
    assert r.to_record()["readings"] == r.readings


@given(st.integers(min_value=2, max_value=40), st.sampled_from([3, 5, 7, 11, 13]))
def test_prime_divisors_have_order_q(p, q):
    r = classify_divisors(p, q)
    assert r.A % p == 1 % p
    for prime in r.factorization.primes:
        if prime != q:
            assert prime % q == 1
            assert multiplicative_order(p, prime) == q


def test_instances_and_sweeps():
    assert theorem_1_instances(31) == [(7, 3), (11, 5), (23, 11), (47, 23), (59, 29)]
    reports = verify_theorem_4(7)
    assert [(r.p, r.q) for r in reports] == [(4, 3), (7, 3), (6, 5), (11, 5), (8, 7), (15, 7)]
    assert all(r.verdict is Verdict.CONSISTENT for r in reports)


def test_parallel_sweep_matches_serial():
    serial = [r.to_record() for r in verify_theorem_1(11)]
    parallel = [r.to_record() for r in verify_theorem_1(11, jobs=2)]
    assert serial == parallel


def test_bad_input():
    with pytest.raises(DomainError):
        classify_divisors(1, 3)
    with pytest.raises(DomainError):
        repunit_value(1, 3)
    assert is_prime(repunit_value(7, 5))
