"""Prime-power repunits: N**x = (y**z - 1)/(y - 1) with y prime.

The exhaustive oracle here is cross-checked against the known answers:
base 2 gives exactly the Mersenne primes y = 2**P - 1 (z = 2), base 3 gives
only 3 = 2 + 1, base 5 has no solution and base 7 only 7 = 1 + 2 + 4.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .arith import DomainError, integer_nth_root, is_prime, primes_up_to
from .repunit import repunit_value


class Provenance(str, Enum):
    CLOSED_FORM = "closed_form"
    SEARCH = "search"


@dataclass(frozen=True)
class PowerEqSolution:
    base: int
    x: int
    y: int
    z: int
    provenance: Provenance = Provenance.SEARCH

    def __post_init__(self):
        if self.base**self.x != repunit_value(self.y, self.z):
            raise ValueError(f"{self.base}^{self.x} != R({self.y}, {self.z})")

    @property
    def key(self) -> tuple[int, int, int, int]:
        return (self.base, self.x, self.y, self.z)

    def to_record(self) -> dict:
        return {"base": self.base, "x": self.x, "y": self.y, "z": self.z, "provenance": self.provenance.value}


def exact_log(value: int, base: int, x_max: int) -> int | None:
    """The x <= x_max with base**x == value, found by exact integer roots."""
    if value < base or value % base:
        return None
    for x in range(1, x_max + 1):
        root, exact = integer_nth_root(value, x)
        if exact and root == base:
            return x
        if root < base:
            return None
    return None


def search_power_eq(base: int, x_max: int, y_max: int, z_max: int) -> list[PowerEqSolution]:
    if base < 2:
        raise DomainError(f"base must be >= 2, got {base}")
    if min(x_max, y_max, z_max) < 1:
        raise DomainError("bounds must be >= 1")
    ceiling = base**x_max
    hits = []
    for y in primes_up_to(y_max):
        value = 1 + y
        for z in range(2, z_max + 1):
            if value > ceiling:
                break
            x = exact_log(value, base, x_max)
            if x is not None:
                hits.append(PowerEqSolution(base, x, y, z))
            value = value * y + 1
    return sorted(hits, key=lambda s: s.key)


def mersenne_exponents(limit: int) -> list[int]:
    return [p for p in primes_up_to(limit) if is_prime(2**p - 1)]


def mersenne_solutions(x_max: int) -> list[PowerEqSolution]:
    """(x, y, z) = (P, 2**P - 1, 2) for each Mersenne exponent P <= x_max."""
    return [PowerEqSolution(2, p, 2**p - 1, 2, Provenance.CLOSED_FORM) for p in mersenne_exponents(x_max)]


def closed_form_solutions(base: int, x_max: int, y_max: int, z_max: int) -> list[PowerEqSolution] | None:
    """Known complete solution sets restricted to a box; None when unknown."""
    if base == 2:
        sols = mersenne_solutions(x_max)
    elif base == 3:
        sols = [PowerEqSolution(3, 1, 2, 2, Provenance.CLOSED_FORM)]
    elif base == 5:
        sols = []
    elif base == 7:
        sols = [PowerEqSolution(7, 1, 2, 3, Provenance.CLOSED_FORM)]
    else:
        return None
    return [s for s in sols if s.x <= x_max and s.y <= y_max and s.z <= z_max]


@dataclass
class PowerEqCross:
    base: int
    bounds: tuple[int, int, int]
    search: list[PowerEqSolution]
    closed_form: list[PowerEqSolution] | None

    @property
    def status(self) -> str:
        if self.closed_form is None:
            return "family_unknown"
        return "match" if self.missed == [] and self.extra == [] else "mismatch"

    @property
    def missed(self) -> list[tuple]:
        if self.closed_form is None:
            return []
        known = {s.key for s in self.closed_form}
        return [s.key[1:] for s in self.search if s.key not in known]

    @property
    def extra(self) -> list[tuple]:
        if self.closed_form is None:
            return []
        found = {s.key for s in self.search}
        return [s.key[1:] for s in self.closed_form if s.key not in found]

    def to_record(self) -> dict:
        return {
            "base": self.base,
            "bounds": list(self.bounds),
            "status": self.status,
            "search": [list(s.key[1:]) for s in self.search],
            "closed_form": None if self.closed_form is None else [list(s.key[1:]) for s in self.closed_form],
            "missed_by_family": [list(t) for t in self.missed],
            "extra_in_family": [list(t) for t in self.extra],
        }


def cross_check(base: int, x_max: int, y_max: int, z_max: int) -> PowerEqCross:
    return PowerEqCross(
        base,
        (x_max, y_max, z_max),
        search_power_eq(base, x_max, y_max, z_max),
        closed_form_solutions(base, x_max, y_max, z_max),
    )


def power_of_two_product_decomposition(n: int) -> list[int] | None:
    """Distinct Mersenne exponents p_i with sum n, so 2**n = prod(2**p_i - 1 + 1).

    Among all such subsets the lexicographically smallest sorted one is
    returned; None when no subset sums to n.
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    exps = mersenne_exponents(n)
    # best[s] = lexicographically smallest sorted subset summing to s
    best: dict[int, tuple[int, ...]] = {0: ()}
    for e in exps:
        for s, subset in sorted(best.items(), reverse=True):
            t = s + e
            if t > n:
                continue
            cand = subset + (e,)
            if t not in best or cand < best[t]:
                best[t] = cand
    if n not in best:
        return None
    parts = list(best[n])
    prod = 1
    for p in parts:
        prod *= repunit_value(2**p - 1, 2)
    assert prod == 2**n
    return parts


def divisibility_lemma_check(y: int, m: int, n: int) -> bool:
    """Whether (y**m - 1) divides (y**n - 1); always agrees with m | n."""
    if y < 2:
        raise DomainError(f"y must be >= 2, got {y}")
    if m < 1 or n < 1:
        raise DomainError("m and n must be >= 1")
    divides = (y**n - 1) % (y**m - 1) == 0
    if divides != (n % m == 0):
        raise AssertionError(f"(y^m-1)|(y^n-1) disagrees with m|n at y={y}, m={m}, n={n}")
    return divides
