"""The form a^2 + ab + b^2 over natural a, b.

Covers exhaustive representation, the two product (composition) identities,
the square and cube forms, classification of primes, the divisor-closure
property of primitive values and a factorization-based solvability test.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

from .arith import (
    DomainError,
    IncompleteFactorizationError,
    factorize,
    integer_nth_root,
    is_prime,
    primes_up_to,
)


def form(a: int, b: int) -> int:
    return a * a + a * b + b * b


@dataclass(frozen=True, order=True)
class LoeschianRep:
    a: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise DomainError(f"components must be natural, got ({self.a}, {self.b})")

    @property
    def value(self) -> int:
        return form(self.a, self.b)

    @property
    def primitive(self) -> bool:
        return math.gcd(self.a, self.b) == 1

    def canonical(self) -> "LoeschianRep":
        return self if self.a <= self.b else LoeschianRep(self.b, self.a)

    def as_tuple(self) -> tuple[int, int]:
        return (self.a, self.b)


def normalize(s: int, t: int) -> tuple[int, int]:
    """Map an integer pair to a canonical non-negative pair of equal form value.

    Uses s^2 + st + t^2 = (s+t)^2 - (s+t)t + t^2, so (-u, v) with 0 < u < v
    becomes (v - u, u).  The result may contain a zero (degenerate).
    """
    if s < 0 and t < 0:
        s, t = -s, -t
    elif t < 0 <= s:
        s, t = t, s
    if s < 0:
        u, v = -s, t
        # u^2 - uv + v^2 is symmetric in u, v.
        s, t = (v - u, u) if u <= v else (u - v, v)
    pair = (min(s, t), max(s, t))
    assert form(*pair) == form(s, t)
    return pair


def representations(n: int) -> list[LoeschianRep]:
    """All 1 <= a <= b with a^2 + ab + b^2 = n."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    out = []
    a_max = integer_nth_root(n // 3, 2)[0]
    for a in range(1, a_max + 1):
        # b^2 + ab + a^2 - n = 0  =>  b = (-a + sqrt(4n - 3a^2)) / 2
        disc = 4 * n - 3 * a * a
        r, exact = integer_nth_root(disc, 2)
        if exact and (r - a) % 2 == 0:
            b = (r - a) // 2
            if b >= a:
                out.append(LoeschianRep(a, b))
    return out


def representable_set(n_max: int) -> bytearray:
    """flags[n] == 1 iff n <= n_max has a representation with natural a <= b."""
    flags = bytearray(n_max + 1)
    a = 1
    while form(a, a) <= n_max:
        b = a
        while (v := form(a, b)) <= n_max:
            flags[v] = 1
            b += 1
        a += 1
    return flags


@dataclass
class Composition:
    value: int
    raw: list[tuple[int, int]]
    forms: list[LoeschianRep]
    degenerate: bool

    def to_record(self) -> dict:
        return {
            "value": self.value,
            "raw": [list(p) for p in self.raw],
            "forms": [list(f.as_tuple()) for f in self.forms],
            "degenerate": self.degenerate,
        }


def _collect(value: int, raw: list[tuple[int, int]]) -> Composition:
    forms, degenerate = [], False
    for s, t in raw:
        if form(s, t) != value:
            raise AssertionError(f"identity fails: ({s}, {t}) does not give {value}")
        pair = normalize(s, t)
        if pair[0] == 0:
            degenerate = True
            continue
        rep = LoeschianRep(*pair)
        if rep not in forms:
            forms.append(rep)
    return Composition(value, raw, forms, degenerate)


def compose(r1: LoeschianRep, r2: LoeschianRep) -> Composition:
    """Both product representations of r1.value * r2.value.

    Form A is (ac - bd, ad + bc + bd), form B is (ad - bc, ac + bd + bc).
    Forms that collapse to a zero component are dropped and flagged.
    """
    a, b, c, d = r1.a, r1.b, r2.a, r2.b
    raw = [(a * c - b * d, a * d + b * c + b * d), (a * d - b * c, a * c + b * d + b * c)]
    return _collect(r1.value * r2.value, raw)


def square_forms(r: LoeschianRep) -> Composition:
    a, b = r.a, r.b
    raw = [(a * a - b * b, b * b + 2 * a * b), (b * b - a * a, a * a + 2 * a * b)]
    return _collect(r.value**2, raw)


def cube_form(r: LoeschianRep) -> Composition:
    a, b = r.a, r.b
    raw = [(a**3 - 3 * b * b * a - b**3, 3 * a * b * (a + b))]
    return _collect(r.value**3, raw)


def cross_term_identities(a: int, b: int, c: int, d: int) -> tuple[bool, bool]:
    """The two cross-term relations between the product forms and the factors."""
    left = form(a, b)
    right = form(c, d)
    first = (a * c - b * d) * (a * c + b * d + b * c) == c * c * left - b * b * right
    second = (a * d - b * c) * (a * d + b * c + b * d) == d * d * left - b * b * right
    return first, second


@dataclass
class PowerIdentityReport:
    base: LoeschianRep
    max_exp: int
    square: Composition
    cube: Composition
    # powers[e] = representations of value**e reached by repeated composition with base
    powers: dict[int, list[LoeschianRep]] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_record(self) -> dict:
        return {
            "a": self.base.a,
            "b": self.base.b,
            "value": self.base.value,
            "max_exp": self.max_exp,
            "square": self.square.to_record(),
            "cube": self.cube.to_record(),
            "powers": {str(e): [list(r.as_tuple()) for r in reps] for e, reps in self.powers.items()},
            "failures": self.failures,
            "ok": self.ok,
        }


def power_identities_check(a: int, b: int, max_exp: int = 5) -> PowerIdentityReport:
    """Check the square and cube forms and build powers by repeated composition.

    Every representation reached for value**e must appear in the exhaustive
    enumeration of value**e.  Intermediate degenerate forms are skipped.
    """
    if math.gcd(a, b) != 1:
        raise DomainError(f"gcd({a}, {b}) != 1")
    base = LoeschianRep(a, b)
    sq = square_forms(base)
    cu = cube_form(base)
    failures = []
    for comp, e in ((sq, 2), (cu, 3)):
        if comp.value != base.value**e:
            failures.append(f"power {e}: value {comp.value} != {base.value ** e}")
        known = set(representations(comp.value)) if comp.value <= 10**14 else None
        for f in comp.forms:
            if known is not None and f.canonical() not in known:
                failures.append(f"power {e}: form {f.as_tuple()} not among enumerated representations")

    powers = {1: [base]}
    for e in range(2, max_exp + 1):
        reached: set[LoeschianRep] = set()
        for prev in powers[e - 1]:
            for f in compose(prev, base).forms:
                reached.add(f.canonical())
        powers[e] = sorted(reached)
        for r in powers[e]:
            if r.value != base.value**e:
                failures.append(f"power {e}: composed form {r.as_tuple()} has value {r.value}")
    return PowerIdentityReport(base, max_exp, sq, cu, powers, failures)


class PrimeClass(str, Enum):
    LOESCHIAN = "loeschian"
    NON_LOESCHIAN = "non_loeschian"


def residue_criterion(p: int) -> bool:
    return p == 3 or p % 3 == 1


def classify_prime(p: int) -> PrimeClass:
    """Classify by exhaustive search, then cross-check the mod-3 residue rule."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    found = bool(representations(p))
    if found != residue_criterion(p):
        raise AssertionError(f"enumeration and residue rule disagree at p={p}")
    return PrimeClass.LOESCHIAN if found else PrimeClass.NON_LOESCHIAN


@dataclass
class ClosureReport:
    n_max: int
    primitive_values: int
    divisors_checked: int
    violations: list[tuple[int, int]]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_record(self) -> dict:
        return {
            "n_max": self.n_max,
            "primitive_values": self.primitive_values,
            "divisors_checked": self.divisors_checked,
            "violations": [list(v) for v in self.violations],
            "ok": self.ok,
        }


def _smallest_prime_factors(n_max: int) -> list[int]:
    spf = list(range(n_max + 1))
    for p in primes_up_to(math.isqrt(n_max)):
        for m in range(p * p, n_max + 1, p):
            if spf[m] == m:
                spf[m] = p
    return spf


def _divisors(n: int, spf: list[int]) -> list[int]:
    divs = [1]
    while n > 1:
        p, e = spf[n], 0
        while n % p == 0:
            n //= p
            e += 1
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return divs


def verify_divisor_closure(n_max: int) -> ClosureReport:
    """Every divisor d >= 2 of a primitive value <= n_max is itself a value."""
    if n_max < 1:
        raise DomainError("n_max must be >= 1")
    rep = representable_set(n_max)
    spf = _smallest_prime_factors(n_max)
    primitive = set()
    a = 1
    while form(a, a) <= n_max:
        b = a
        while (v := form(a, b)) <= n_max:
            if math.gcd(a, b) == 1:
                primitive.add(v)
            b += 1
        a += 1
    checked, violations = 0, []
    for n in sorted(primitive):
        for d in _divisors(n, spf):
            if d < 2:
                continue
            checked += 1
            if not rep[d]:
                violations.append((n, d))
    return ClosureReport(n_max, len(primitive), checked, sorted(violations))


def solvable(n: int, allow_zero: bool = False, effort: int | None = None) -> bool:
    """Whether x^2 + xy + y^2 = n has a solution, decided from the factorization.

    With ``allow_zero`` the classical rule applies: every prime with an odd
    exponent must be 3 or 1 mod 3.  For natural x, y a perfect square also
    needs a prime factor that is 1 mod 3, since m^2 = m^2 + m*0 + 0^2 is the
    only way to write it otherwise.
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if n == 1:
        return allow_zero
    fact = factorize(n, effort=effort)
    if not fact.complete:
        raise IncompleteFactorizationError(fact)
    if any(f.exponent % 2 and not residue_criterion(f.prime) for f in fact.factors):
        return False
    if allow_zero:
        return True
    if all(f.exponent % 2 == 0 for f in fact.factors):
        return any(f.prime % 3 == 1 for f in fact.factors)
    return True


@dataclass
class GridReport:
    name: str
    bound: int
    checked: int
    failures: list

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_record(self) -> dict:
        return {"check": self.name, "bound": self.bound, "checked": self.checked, "failures": [list(f) for f in self.failures], "ok": self.ok}


def identity_grid_check(m: int) -> GridReport:
    """Both product forms and both cross-term relations for all a, b, c, d <= m."""
    failures, checked = [], 0
    for a in range(1, m + 1):
        for b in range(1, m + 1):
            left = form(a, b)
            for c in range(1, m + 1):
                for d in range(1, m + 1):
                    checked += 1
                    right = form(c, d)
                    fa = (a * c - b * d, a * d + b * c + b * d)
                    fb = (a * d - b * c, a * c + b * d + b * c)
                    ok = form(*fa) == left * right and form(*fb) == left * right
                    ok = ok and all(cross_term_identities(a, b, c, d))
                    ok = ok and form(*normalize(*fa)) == left * right
                    if not ok:
                        failures.append((a, b, c, d))
    return GridReport("composition_and_cross_terms", m, checked, failures)


def solvability_check(n_max: int) -> GridReport:
    """solvable(n) against exhaustive enumeration for every n <= n_max."""
    flags = representable_set(n_max)
    failures = [(n,) for n in range(1, n_max + 1) if solvable(n) != bool(flags[n])]
    return GridReport("solvable_vs_enumeration", n_max, n_max, failures)


def prime_classification_check(n_max: int) -> GridReport:
    failures, primes = [], primes_up_to(n_max)
    for p in primes:
        try:
            classify_prime(p)
        except AssertionError:
            failures.append((p,))
    return GridReport("prime_classification", n_max, len(primes), failures)
