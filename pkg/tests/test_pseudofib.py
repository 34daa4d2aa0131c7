import pytest
from hypothesis import given, strategies as st

from numtasks.arith import DomainError
from numtasks.pseudofib import (
    RecurrenceSpec,
    binet,
    cardano_root_check,
    characteristic_roots,
    closed_form,
    closed_form_eval,
    compare_closed_form,
    partial_sums,
    solution_space_check,
    terms,
    verify_shift_identity,
    verify_sum_identity,
)


def test_terms():
    assert terms(2, 7) == [1, 1, 2, 3, 5, 8, 13]
    assert terms(3, 11)[-3:] == [57, 105, 193]
    assert terms(4, 8) == [1, 1, 1, 1, 4, 7, 13, 25]
    assert terms(RecurrenceSpec(3, (2, 0, 1)), 5) == [2, 0, 1, 3, 4]


def test_spec_validation():
    with pytest.raises(DomainError):
        RecurrenceSpec(1)
    with pytest.raises(DomainError):
        RecurrenceSpec(3, (1, 1))


@given(st.integers(2, 8), st.lists(st.integers(0, 20), min_size=8, max_size=8))
def test_shift_identity_any_seed(k, seed):
    spec = RecurrenceSpec(k, tuple(seed[:k]))
    assert verify_shift_identity(spec, 60).holds


def test_partial_sums():
    s = partial_sums(terms(3, 8))
    assert s[3:] == [6, 11, 20, 37, 68]


def test_sum_identity_levels():
    rep = verify_sum_identity(3, 60, depth=2)
    assert rep.holds
    # Order 2 breaks at the second level: S' = 1, 3, 7, 14 and 14 != 2*7 - 1.
    rep = verify_sum_identity(2, 30, depth=2)
    assert [lv.holds for lv in rep.levels] == [True, False]
    assert rep.levels[1].first_failure == 4


def test_solution_space():
    assert solution_space_check(3, 10, seed=7).ok
    assert solution_space_check(5, 5, seed=1).ok


@pytest.mark.parametrize("k", range(2, 20))
def test_roots_satisfy_polynomial(k):
    r = characteristic_roots(k)
    assert len(r.roots) == k
    assert r.max_residual < 1e-8
    assert r.max_scaled_residual < 1e-12
    assert r.fixed_point_residual < 1e-9
    assert 1 <= r.dominant < 2


def test_dominant_roots_increase_towards_two():
    doms = [characteristic_roots(k).dominant for k in range(2, 40)]
    assert doms == sorted(doms)
    assert 2 - doms[-1] < 1e-10


def test_roots_range():
    with pytest.raises(DomainError):
        characteristic_roots(1)
    with pytest.raises(DomainError):
        characteristic_roots(65)
    assert characteristic_roots(64).max_scaled_residual < 1e-8


def test_even_orders_have_one_negative_root():
    assert characteristic_roots(4).real_roots[0] == pytest.approx(-0.7748, abs=5e-5)
    assert len(characteristic_roots(5).real_roots) == 1


def test_closed_form_values():
    cf = closed_form(3)
    assert closed_form_eval(cf, 10) == pytest.approx(105, abs=1e-6)
    assert [closed_form_eval(cf, n) for n in (1, 2, 3)] == pytest.approx([1, 1, 1], abs=1e-9)
    assert closed_form_eval(closed_form(2), 7) == pytest.approx(13, abs=1e-9)
    assert binet(7) == pytest.approx(13, abs=1e-9)


@pytest.mark.parametrize("k", range(2, 13))
def test_closed_form_accuracy(k):
    assert compare_closed_form(k, 30).max_rel_error < 1e-6


def test_closed_form_range():
    with pytest.raises(DomainError):
        closed_form(13)


def test_cardano():
    rep = cardano_root_check()
    assert max(rep.residuals) < 1e-9
    assert rep.matches_vieta and not rep.matches_stated
    assert rep.flags and "stated" in rep.flags[0]
