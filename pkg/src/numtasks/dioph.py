"""Ten exponential Diophantine equations in natural x, y (and z for I-III).

Each equation has an exact evaluator, an exhaustive box search and, where one
is known, a parametric solution family.  ``cross_verify`` compares the two
inside a box and lists disagreements in both directions.

Equations IV-X compare two pure powers a**m and b**n.  The search prunes
those by comparing m*log2(a) with n*log2(b) before any big-integer work, and
families with astronomically large members are checked through
:func:`powers_equal`, which decides a**m == b**n without expanding either side.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable

from .arith import DomainError, integer_nth_root

log = logging.getLogger(__name__)

DEFAULT_BIT_BUDGET = 10**6


class BitBudgetExceeded(ArithmeticError):
    pass


class Equation(str, Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"
    V = "V"
    VI = "VI"
    VII = "VII"
    VIII = "VIII"
    IX = "IX"
    X = "X"

    @property
    def spec(self) -> "_EquationSpec":
        return _SPECS[self]

    @property
    def has_z(self) -> bool:
        return self.spec.has_z


# A side is a signed sum of powers: [(sign, base, exponent), ...].
Side = list[tuple[int, int, int]]


@dataclass(frozen=True)
class _EquationSpec:
    relation: str
    has_z: bool
    side_condition: str
    domain: Callable[[int, int], bool]
    sides: Callable[..., tuple[Side, Side]]


def _eq_i(x, y, z):
    return [(1, (x + y) // 2, z)], [(1, x, z), (-1, y, z)]


_SPECS: dict[Equation, _EquationSpec] = {
    Equation.I: _EquationSpec("((x+y)/2)^z = x^z - y^z", True, "x+y even", lambda x, y: (x + y) % 2 == 0, _eq_i),
    Equation.II: _EquationSpec(
        "(x+y)^z = (2x)^z + y^z", True, "", lambda x, y: True,
        lambda x, y, z: ([(1, x + y, z)], [(1, 2 * x, z), (1, y, z)]),
    ),
    Equation.III: _EquationSpec(
        "(x+y)^z = (3x)^z + y^z", True, "", lambda x, y: True,
        lambda x, y, z: ([(1, x + y, z)], [(1, 3 * x, z), (1, y, z)]),
    ),
    Equation.IV: _EquationSpec(
        "(y-x)^(x+y) = x^y", False, "y>x", lambda x, y: y > x,
        lambda x, y: ([(1, y - x, x + y)], [(1, x, y)]),
    ),
    Equation.V: _EquationSpec(
        "(y-x)^(x+y) = y^x", False, "y>x", lambda x, y: y > x,
        lambda x, y: ([(1, y - x, x + y)], [(1, y, x)]),
    ),
    Equation.VI: _EquationSpec(
        "(x+y)^(x-y) = x^y", False, "x>=y", lambda x, y: x >= y,
        lambda x, y: ([(1, x + y, x - y)], [(1, x, y)]),
    ),
    Equation.VII: _EquationSpec(
        "(x+y)^(x-y) = y^x", False, "x>=y", lambda x, y: x >= y,
        lambda x, y: ([(1, x + y, x - y)], [(1, y, x)]),
    ),
    Equation.VIII: _EquationSpec(
        "(x+y)^y = (x-y)^x", False, "x>y", lambda x, y: x > y,
        lambda x, y: ([(1, x + y, y)], [(1, x - y, x)]),
    ),
    Equation.IX: _EquationSpec(
        "(x-y)^(x+y) = x^(x-y)", False, "x>y", lambda x, y: x > y,
        lambda x, y: ([(1, x - y, x + y)], [(1, x, x - y)]),
    ),
    Equation.X: _EquationSpec(
        "(x+y)^(x-y) = (x-y)^x", False, "x>y", lambda x, y: x > y,
        lambda x, y: ([(1, x + y, x - y)], [(1, x - y, x)]),
    ),
}


@dataclass(frozen=True)
class DiophSolution:
    equation: Equation
    vars: tuple[int, ...]
    provenance: str = "search"
    param: str | None = None

    def to_record(self) -> dict:
        rec = {"equation": self.equation.value, "vars": list(self.vars), "provenance": self.provenance}
        if self.param is not None:
            rec["param"] = self.param
        return rec


def _check_vars(eq: Equation, vars: tuple[int, ...]) -> None:
    expected = 3 if eq.has_z else 2
    if len(vars) != expected:
        raise DomainError(f"equation {eq.value} takes {expected} variables, got {vars}")
    if any(v < 1 for v in vars):
        raise DomainError(f"variables must be natural, got {vars}")
    if not eq.spec.domain(vars[0], vars[1]):
        raise DomainError(f"equation {eq.value} requires {eq.spec.side_condition}, got {vars}")


def _log2_power(base: int, exp: int) -> float:
    if exp == 0 or base == 1:
        return 0.0
    return exp * math.log2(base)


def _side_bits(side: Side) -> float:
    return max(_log2_power(b, e) for _, b, e in side)


def _side_value(side: Side) -> int:
    return sum(s * b**e for s, b, e in side)


def evaluate(eq: Equation | str, vars: Iterable[int], bit_budget: int = DEFAULT_BIT_BUDGET) -> tuple[int, int]:
    """Exact (lhs, rhs) for a candidate tuple."""
    eq = Equation(eq)
    vars = tuple(vars)
    _check_vars(eq, vars)
    lhs, rhs = eq.spec.sides(*vars)
    bits = max(_side_bits(lhs), _side_bits(rhs))
    if bits > bit_budget:
        raise BitBudgetExceeded(f"equation {eq.value} at {vars}: ~{bits:.0f} bits exceeds budget {bit_budget}")
    return _side_value(lhs), _side_value(rhs)


def powers_equal(a: int, m: int, b: int, n: int) -> bool:
    """Decide a**m == b**n for a, b >= 1 and m, n >= 0 without expanding."""
    if m == 0 or a == 1:
        return n == 0 or b == 1
    if n == 0 or b == 1:
        return False
    g = math.gcd(m, n)
    m, n = m // g, n // g
    # With m, n coprime, a**m == b**n iff a = c**n and b = c**m for some c.
    c, exact = integer_nth_root(a, n)
    if not exact:
        return False
    if m * (c.bit_length() - 1) > b.bit_length():
        return False
    return c**m == b


def holds(eq: Equation | str, vars: Iterable[int], bit_budget: int = DEFAULT_BIT_BUDGET) -> bool:
    """Exact truth of the equation at ``vars``; pure-power sides never hit the budget."""
    eq = Equation(eq)
    vars = tuple(vars)
    _check_vars(eq, vars)
    lhs, rhs = eq.spec.sides(*vars)
    if len(lhs) == 1 and len(rhs) == 1:
        (_, a, m), (_, b, n) = lhs[0], rhs[0]
        return powers_equal(a, m, b, n)
    left, right = evaluate(eq, vars, bit_budget)
    return left == right


@dataclass
class SearchResult:
    equation: Equation
    bounds: tuple[int, int, int | None]
    solutions: list[DiophSolution]
    skipped: list[tuple[int, ...]] = field(default_factory=list)


def _scan_rows(eq: Equation, xs: list[int], y_max: int, z_max: int, bit_budget: int):
    spec = eq.spec
    found, skipped = [], []
    for x in xs:
        for y in range(1, y_max + 1):
            if not spec.domain(x, y):
                continue
            for z in range(1, z_max + 1) if spec.has_z else (None,):
                vars = (x, y, z) if spec.has_z else (x, y)
                lhs, rhs = spec.sides(*vars)
                if len(lhs) == 1 and len(rhs) == 1:
                    # Equal powers have equal logs; float error here is far below 0.5 bit.
                    if abs(_log2_power(*lhs[0][1:]) - _log2_power(*rhs[0][1:])) > 0.5:
                        continue
                try:
                    left, right = evaluate(eq, vars, bit_budget)
                except BitBudgetExceeded as exc:
                    log.warning("skipped: %s", exc)
                    skipped.append(vars)
                    continue
                if left == right:
                    found.append(vars)
    return found, skipped


def search(
    eq: Equation | str,
    x_max: int,
    y_max: int,
    z_max: int = 8,
    *,
    x_values: Iterable[int] | None = None,
    bit_budget: int = DEFAULT_BIT_BUDGET,
    jobs: int = 1,
) -> SearchResult:
    """Every solution in the box, canonically sorted.

    ``x_values`` overrides the scan order of x (results do not depend on it).
    """
    eq = Equation(eq)
    if min(x_max, y_max, z_max) < 1:
        raise DomainError("bounds must be >= 1")
    xs = list(range(1, x_max + 1)) if x_values is None else list(x_values)
    if jobs > 1:
        chunks = [xs[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_scan_rows, [eq] * jobs, chunks, [y_max] * jobs, [z_max] * jobs, [bit_budget] * jobs))
    else:
        parts = [_scan_rows(eq, xs, y_max, z_max, bit_budget)]
    found = sorted(v for f, _ in parts for v in f)
    skipped = sorted(v for _, s in parts for v in s)
    return SearchResult(
        eq,
        (x_max, y_max, z_max if eq.has_z else None),
        [DiophSolution(eq, v) for v in found],
        skipped,
    )


# --------------------------------------------------------------------------
# parametric families


def _family_i(k):
    yield (3 * k, k, 1), f"x=3k,y=k,z=1; k={k}"
    yield (5 * k, 3 * k, 2), f"x=5k,y=3k,z=2; k={k}"


def _family_ii(t):
    yield (2 * t, 3 * t, 2), f"x=2t,y=3t,z=2; t={t}"


def _family_vii(t):
    s = (t + 1) ** (t - 1)
    yield (t * s, s), f"x=t(t+1)^(t-1),y=(t+1)^(t-1); t={t}"


def _family_viii(n):
    x1 = n + 1  # first family starts at x1 = 2
    d = (2 * x1 - 1) ** (x1 - 1)
    yield (x1 * d, (x1 - 1) * d), f"x=x1(2x1-1)^(x1-1),y=(x1-1)(2x1-1)^(x1-1); x1={x1}"
    half = (2 * n) ** (4 * n * n - 1) // 2
    yield ((4 * n * n + 1) * half, (4 * n * n - 1) * half), f"x=(4n^2+1)(2n)^(4n^2-1)/2,y=(4n^2-1)(2n)^(4n^2-1)/2; n={n}"


def _single(vars, label):
    def fam(k):
        if k == 1:
            yield vars, label
    return fam


def _empty(k):
    return iter(())


# Families take a parameter k >= 1 and yield (vars, label); members grow with k.
_FAMILIES: dict[Equation, Callable | None] = {
    Equation.I: _family_i,
    Equation.II: _family_ii,
    Equation.III: _empty,
    Equation.IV: _single((1, 2), "x=1,y=2"),
    Equation.V: _empty,
    Equation.VI: _single((1, 1), "x=1,y=1"),
    Equation.VII: _family_vii,
    Equation.VIII: _family_viii,
    Equation.IX: _empty,
    Equation.X: None,
}


def family_known(eq: Equation | str) -> bool:
    return _FAMILIES[Equation(eq)] is not None


def closed_form(eq: Equation | str, params: Iterable[int]) -> list[DiophSolution] | None:
    """Family members for each parameter value; None when no family is known.

    Every member is verified exactly before it is returned.
    """
    eq = Equation(eq)
    fam = _FAMILIES[eq]
    if fam is None:
        return None
    out = []
    for k in params:
        for vars, label in fam(k):
            if not holds(eq, vars):
                raise AssertionError(f"family member {vars} of equation {eq.value} fails ({label})")
            out.append(DiophSolution(eq, vars, "closed_form", label))
    return out


def family_in_box(eq: Equation | str, x_max: int, y_max: int, z_max: int = 8) -> list[DiophSolution] | None:
    """Family members whose variables fit in the box."""
    eq = Equation(eq)
    if _FAMILIES[eq] is None:
        return None
    limits = (x_max, y_max, z_max)
    out = []
    k = 1
    while True:
        members = closed_form(eq, [k])
        if not members:
            break
        inside = [m for m in members if all(v <= lim for v, lim in zip(m.vars, limits))]
        # Smallest coordinates of every family grow with k.
        if not inside and all(min(m.vars[:2]) > max(x_max, y_max) for m in members):
            break
        out += inside
        k += 1
    return sorted(out, key=lambda s: s.vars)


@dataclass
class CrossReport:
    equation: Equation
    bounds: tuple
    search: list[tuple[int, ...]]
    family: list[tuple[int, ...]] | None
    skipped: list[tuple[int, ...]]

    @property
    def missed_by_family(self) -> list[tuple[int, ...]]:
        if self.family is None:
            return []
        fam = set(self.family)
        return [v for v in self.search if v not in fam]

    @property
    def extra_in_family(self) -> list[tuple[int, ...]]:
        if self.family is None:
            return []
        found = set(self.search)
        return [v for v in self.family if v not in found]

    @property
    def status(self) -> str:
        if self.family is None:
            return "family_unknown"
        if self.missed_by_family or self.extra_in_family:
            return "mismatch"
        return "match"

    def to_record(self) -> dict:
        return {
            "equation": self.equation.value,
            "relation": self.equation.spec.relation,
            "bounds": list(self.bounds),
            "status": self.status,
            "search": [list(v) for v in self.search],
            "family": None if self.family is None else [list(v) for v in self.family],
            "missed_by_family": [list(v) for v in self.missed_by_family],
            "extra_in_family": [list(v) for v in self.extra_in_family],
            "skipped": [list(v) for v in self.skipped],
        }


def cross_verify(eq: Equation | str, x_max: int, y_max: int, z_max: int = 8, jobs: int = 1) -> CrossReport:
    eq = Equation(eq)
    res = search(eq, x_max, y_max, z_max, jobs=jobs)
    fam = family_in_box(eq, x_max, y_max, z_max)
    return CrossReport(
        eq,
        res.bounds,
        [s.vars for s in res.solutions],
        None if fam is None else sorted({s.vars for s in fam}),
        res.skipped,
    )


def lemma1_holds(a: int, b: int, n: int) -> bool:
    """Whether |a - b| divides a**n, for coprime a != b.

    A True answer always comes with |a - b| = 1.
    """
    if a < 1 or b < 1 or n < 1:
        raise DomainError("a, b, n must be natural")
    if a == b:
        raise DomainError("a and b must differ")
    if math.gcd(a, b) != 1:
        raise DomainError(f"gcd({a}, {b}) != 1")
    d = abs(a - b)
    divides = pow(a, n, d) == 0 if d > 1 else True
    if divides and d != 1:
        raise AssertionError(f"|a-b| = {d} divides {a}^{n} although gcd(a, b) = 1")
    return divides


@dataclass
class Lemma1Sweep:
    ab_max: int
    n_max: int
    checked: int
    counterexamples: list[tuple[int, int, int]]

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_record(self) -> dict:
        return {
            "ab_max": self.ab_max,
            "n_max": self.n_max,
            "checked": self.checked,
            "counterexamples": [list(c) for c in self.counterexamples],
            "ok": self.ok,
        }


def lemma1_sweep(ab_max: int, n_max: int) -> Lemma1Sweep:
    """Run :func:`lemma1_holds` over coprime a != b <= ab_max and n <= n_max."""
    checked, bad = 0, []
    for a in range(1, ab_max + 1):
        for b in range(1, ab_max + 1):
            if a == b or math.gcd(a, b) != 1:
                continue
            for n in range(1, n_max + 1):
                checked += 1
                try:
                    lemma1_holds(a, b, n)
                except AssertionError:
                    bad.append((a, b, n))
    return Lemma1Sweep(ab_max, n_max, checked, bad)
