import pytest
from hypothesis import given, strategies as st

from numtasks.arith import DomainError, is_prime
from numtasks.power_eq import (
    PowerEqSolution,
    closed_form_solutions,
    cross_check,
    divisibility_lemma_check,
    exact_log,
    mersenne_exponents,
    power_of_two_product_decomposition,
    search_power_eq,
)


def keys(sols):
    return {s.key[1:] for s in sols}


def test_mersenne_exponents():
    assert mersenne_exponents(31) == [2, 3, 5, 7, 13, 17, 19, 31]


@pytest.mark.parametrize(
    "base, expected",
    [(3, {(1, 2, 2)}), (5, set()), (7, {(1, 2, 3)}), (11, {(2, 3, 5)}), (13, {(1, 3, 3)})],
)
def test_small_bases(base, expected):
    assert keys(search_power_eq(base, 15, 10**4, 16)) == expected


def test_base_two_cross_check_matches():
    cross = cross_check(2, 13, 10**4, 16)
    assert cross.status == "match"
    assert keys(cross.search) == {(2, 3, 2), (3, 7, 2), (5, 31, 2), (7, 127, 2), (13, 8191, 2)}


def test_unknown_base_is_reported():
    assert closed_form_solutions(11, 15, 100, 16) is None
    assert cross_check(11, 5, 100, 8).status == "family_unknown"


def test_odd_prime_z_forces_base_one_mod_z():
    for base in (3, 7, 11, 13, 31):
        for s in search_power_eq(base, 6, 2000, 12):
            if s.z > 2 and is_prime(s.z):
                assert base % s.z == 1


def test_solution_rejects_false_equation():
    with pytest.raises(ValueError):
        PowerEqSolution(2, 3, 5, 2)


@pytest.mark.parametrize("n, parts", [(1, None), (2, [2]), (4, None), (5, [2, 3]), (10, [2, 3, 5]), (13, [13])])
def test_power_of_two_decomposition(n, parts):
    assert power_of_two_product_decomposition(n) == parts


@given(st.integers(min_value=2, max_value=12), st.integers(min_value=1, max_value=12), st.integers(min_value=1, max_value=24))
def test_divisibility_lemma(y, m, n):
    assert divisibility_lemma_check(y, m, n) == (n % m == 0)


@given(st.integers(min_value=2, max_value=30), st.integers(min_value=1, max_value=20))
def test_exact_log_round_trip(base, x):
    assert exact_log(base**x, base, 20) == x
    assert exact_log(base**x + 1, base, 20) is None


def test_bounds_are_checked():
    with pytest.raises(DomainError):
        search_power_eq(1, 5, 5, 5)
    with pytest.raises(DomainError):
        search_power_eq(2, 0, 5, 5)
