import math

import pytest
from hypothesis import given, strategies as st

from numtasks.arith import DomainError
from numtasks.loeschian import (
    LoeschianRep,
    PrimeClass,
    classify_prime,
    compose,
    cross_term_identities,
    cube_form,
    form,
    normalize,
    power_identities_check,
    representable_set,
    representations,
    solvable,
    square_forms,
    verify_divisor_closure,
)

naturals = st.integers(min_value=1, max_value=30)


def pairs(reps):
    return [r.as_tuple() for r in reps]


@pytest.mark.parametrize("n, expected", [(49, [(3, 5)]), (3, [(1, 1)]), (343, [(1, 18), (7, 14)]), (5, []), (1, [])])
def test_representations(n, expected):
    assert pairs(representations(n)) == expected


def test_representations_match_bulk_set():
    flags = representable_set(3000)
    assert [n for n in range(1, 3001) if flags[n]] == [n for n in range(1, 3001) if representations(n)]


@given(st.integers(-60, 60), st.integers(-60, 60))
def test_normalize_preserves_value(s, t):
    a, b = normalize(s, t)
    assert 0 <= a <= b
    assert form(a, b) == form(s, t)


def test_normalize_rule():
    assert normalize(-19, 18) == (1, 18)
    assert normalize(-3, 8) == (3, 5)
    assert normalize(-4, 4) == (0, 4)


def test_compose_examples():
    c = compose(LoeschianRep(1, 2), LoeschianRep(1, 2))
    assert c.value == 49 and pairs(c.forms) == [(3, 5)] and c.degenerate
    c = compose(LoeschianRep(1, 1), LoeschianRep(1, 1))
    assert c.value == 9 and c.forms == [] and c.degenerate


def test_square_and_cube_forms():
    assert pairs(cube_form(LoeschianRep(1, 2)).forms) == [(1, 18)]
    assert pairs(square_forms(LoeschianRep(2, 3)).forms) == [(5, 16)]
    assert LoeschianRep(5, 16) in representations(361)


@given(naturals, naturals, naturals, naturals)
def test_composition_law(a, b, c, d):
    comp = compose(LoeschianRep(a, b), LoeschianRep(c, d))
    assert all(f.value == form(a, b) * form(c, d) for f in comp.forms)
    assert all(cross_term_identities(a, b, c, d))


def test_power_identities():
    rep = power_identities_check(1, 2, 5)
    assert rep.ok
    assert LoeschianRep(7, 126) in rep.powers[5]
    assert power_identities_check(1, 1, 3).ok
    with pytest.raises(DomainError):
        power_identities_check(2, 4, 3)


@pytest.mark.parametrize("p, cls", [(7, PrimeClass.LOESCHIAN), (5, PrimeClass.NON_LOESCHIAN), (3, PrimeClass.LOESCHIAN), (2, PrimeClass.NON_LOESCHIAN)])
def test_classify_prime(p, cls):
    assert classify_prime(p) is cls


def test_classify_rejects_composite():
    with pytest.raises(DomainError):
        classify_prime(9)


def test_divisor_closure_small():
    rep = verify_divisor_closure(2000)
    assert rep.ok and rep.primitive_values > 0


@pytest.mark.parametrize("n, expected", [(49, True), (10, False), (12, True), (4, False), (9, False), (91, True)])
def test_solvable(n, expected):
    assert solvable(n) is expected


def test_solvable_allow_zero_is_the_classical_rule():
    assert solvable(4, allow_zero=True)
    assert solvable(1, allow_zero=True)
    assert not solvable(1)


@given(st.integers(1, 2000), st.integers(1, 2000))
def test_products_of_values_are_values(m, n):
    # Closure under multiplication, checked on representable inputs.
    if representations(m) and representations(n) and math.gcd(m, n) == 1:
        assert solvable(m * n)
