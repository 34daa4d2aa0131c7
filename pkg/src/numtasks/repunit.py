"""Prime divisors of A = (p**q - 1)/(p - 1) measured against the base p.

Four divisor-structure claims are checked here, keyed by how p sits relative
to an odd prime q:

* ``T1``: p = 2q + 1 with p prime.  Exactly one prime divisor of A lies
  below p, it is q, and A has at least two distinct prime divisors.
* ``T2``: p, q odd primes with p < 2q + 1.  Every prime divisor exceeds p.
* ``T3``: p in 2..q or q+2..2q.  Every prime divisor exceeds p.
* ``T4``: p in {q + 1, 2q + 1}.  Same conclusion as T1; p may be composite.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum

from .arith import (
    DEFAULT_SEED,
    DomainError,
    Factorization,
    factorize,
    is_prime,
    multiplicative_order,
    primes_up_to,
)


class TheoremCase(str, Enum):
    T1 = "T1"
    T2 = "T2"
    T3 = "T3"
    T4 = "T4"
    NONE = "none"


class Verdict(str, Enum):
    CONSISTENT = "consistent"
    VIOLATION = "violation"
    INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class RepunitInput:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 2 or self.q < 2:
            raise DomainError(f"need p >= 2 and q >= 2, got p={self.p}, q={self.q}")


@dataclass
class RepunitReport:
    input: RepunitInput
    A: int
    factorization: Factorization
    below_p: list[int]
    above_p: list[int]
    equal_p: bool
    theorem_case: TheoremCase
    claim: TheoremCase
    verdict: Verdict
    details: list[str] = field(default_factory=list)
    # Only for the T3 claim: which of the two stated readings the instance meets.
    readings: dict[str, bool] | None = None

    @property
    def p(self) -> int:
        return self.input.p

    @property
    def q(self) -> int:
        return self.input.q

    def to_record(self) -> dict:
        """One flat record; the leading keys double as the CSV columns."""
        rec = {
            "p": self.p,
            "q": self.q,
            "A": self.A,
            "factors": str(self.factorization),
            "below_p": self.below_p,
            "above_p": self.above_p,
            "case": self.theorem_case.value,
            "verdict": self.verdict.value,
            "claim": self.claim.value,
            "equal_p": self.equal_p,
            "factorization": [[f.prime, f.exponent, f.certainty.value] for f in self.factorization.factors],
            "cofactors": list(self.factorization.cofactors),
            "details": self.details,
        }
        if self.readings is not None:
            rec["readings"] = self.readings
        return rec


def repunit_value(p: int, q: int) -> int:
    """1 + p + ... + p**(q-1), summed Horner-style."""
    if p < 2:
        raise DomainError(f"base must be >= 2, got {p}")
    if q < 1:
        raise DomainError(f"length must be >= 1, got {q}")
    a = 0
    for _ in range(q):
        a = a * p + 1
    assert a * (p - 1) == p**q - 1
    return a


def theorem_case(p: int, q: int) -> TheoremCase:
    if q < 3 or not is_prime(q):
        return TheoremCase.NONE
    if p == 2 * q + 1 and is_prime(p):
        return TheoremCase.T1
    if p in (q + 1, 2 * q + 1):
        return TheoremCase.T4
    if p >= 3 and p < 2 * q + 1 and is_prime(p):
        return TheoremCase.T2
    if 2 <= p <= q or q + 2 <= p <= 2 * q:
        return TheoremCase.T3
    return TheoremCase.NONE


def _claim_violations(claim: TheoremCase, p: int, q: int, primes: list[int], below: list[int], complete: bool) -> list[str]:
    out = []
    if claim in (TheoremCase.T1, TheoremCase.T4):
        if below != [q]:
            if len(below) > 1 or (below and below[0] != q) or complete:
                out.append(f"{claim.value}: primes below p={p} are {below}, expected exactly [{q}]")
        if complete and len(primes) < 2:
            out.append(f"{claim.value}: A has {len(primes)} distinct prime divisor(s), expected >= 2")
    elif claim in (TheoremCase.T2, TheoremCase.T3):
        for r in below:
            out.append(f"{claim.value}: prime divisor {r} is below p={p}")
    return out


def _invariant_violations(p: int, q: int, a: int, fact: Factorization) -> list[str]:
    out = []
    if a % p != 1 % p:
        out.append(f"A mod p = {a % p}, expected 1")
    if math.gcd(a, p - 1) != math.gcd(p - 1, q):
        out.append(f"gcd(A, p-1) = {math.gcd(a, p - 1)} != gcd(p-1, q) = {math.gcd(p - 1, q)}")
    if is_prime(q):
        for r in fact.primes:
            if r == q:
                continue
            if r % q != 1:
                out.append(f"prime divisor {r} is not 1 mod q={q}")
            try:
                order = multiplicative_order(p, r, multiple=q)
            except DomainError as exc:
                out.append(f"order of p={p} mod {r}: {exc}")
                continue
            if order != q:
                out.append(f"order of p={p} mod {r} is {order}, expected q={q}")
    return out


def classify_divisors(
    p: int,
    q: int,
    claim: TheoremCase | None = None,
    effort: int | None = None,
    seed: int = DEFAULT_SEED,
) -> RepunitReport:
    """Factor A(p, q), split its primes around p and check ``claim``.

    ``claim`` defaults to the case derived from (p, q).  An incomplete
    factorization yields an indeterminate verdict unless the primes already
    found are enough to show a violation.
    """
    inp = RepunitInput(p, q)
    a = repunit_value(p, q)
    case = theorem_case(p, q)
    claim = case if claim is None else TheoremCase(claim)
    fact = factorize(a, effort=effort, seed=seed) if a > 1 else Factorization(a, ())
    primes = fact.primes
    below = [r for r in primes if r < p]
    above = [r for r in primes if r > p]
    equal_p = p in primes

    details = _claim_violations(claim, p, q, primes, below, fact.complete)
    details += _invariant_violations(p, q, a, fact)
    if equal_p:
        details.append(f"p={p} divides A")
    if details:
        verdict = Verdict.VIOLATION
    elif not fact.complete:
        verdict = Verdict.INDETERMINATE
        details.append(f"unfactored cofactors: {list(fact.cofactors)}")
    else:
        verdict = Verdict.CONSISTENT

    readings = None
    if claim is TheoremCase.T3:
        readings = {
            "all_above_p": not below and fact.complete,
            "exactly_one_above_p": len(above) == 1 and fact.complete,
        }
    return RepunitReport(inp, a, fact, below, above, equal_p, case, claim, verdict, details, readings)


def _run(instances: list[tuple[int, int, TheoremCase]], effort, seed, jobs: int) -> list[RepunitReport]:
    args = [(p, q, c, effort, seed) for p, q, c in instances]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_classify_star, args))
    else:
        reports = [_classify_star(a) for a in args]
    return sorted(reports, key=lambda r: (r.q, r.p))


def _classify_star(args) -> RepunitReport:
    return classify_divisors(*args)


def _odd_primes(limit: int) -> list[int]:
    return [q for q in primes_up_to(limit) if q > 2]


def theorem_1_instances(q_max: int) -> list[tuple[int, int]]:
    return [(2 * q + 1, q) for q in _odd_primes(q_max) if is_prime(2 * q + 1)]


def theorem_2_instances(bound: int) -> list[tuple[int, int]]:
    odd = _odd_primes(bound)
    return [(p, q) for q in odd for p in odd if p < 2 * q + 1]


def theorem_3_instances(q_max: int) -> list[tuple[int, int]]:
    return [
        (p, q)
        for q in _odd_primes(q_max)
        for p in [*range(2, q + 1), *range(q + 2, 2 * q + 1)]
    ]


def theorem_4_instances(q_max: int) -> list[tuple[int, int]]:
    return [(p, q) for q in _odd_primes(q_max) for p in (q + 1, 2 * q + 1)]


def verify_theorem_1(q_max: int = 31, effort=None, seed=DEFAULT_SEED, jobs: int = 1) -> list[RepunitReport]:
    inst = [(p, q, TheoremCase.T1) for p, q in theorem_1_instances(q_max)]
    return _run(inst, effort, seed, jobs)


def verify_theorem_2(bound: int = 31, effort=None, seed=DEFAULT_SEED, jobs: int = 1) -> list[RepunitReport]:
    inst = [(p, q, TheoremCase.T2) for p, q in theorem_2_instances(bound)]
    return _run(inst, effort, seed, jobs)


def verify_theorem_3(q_max: int = 11, effort=None, seed=DEFAULT_SEED, jobs: int = 1) -> list[RepunitReport]:
    inst = [(p, q, TheoremCase.T3) for p, q in theorem_3_instances(q_max)]
    return _run(inst, effort, seed, jobs)


def verify_theorem_4(q_max: int = 13, effort=None, seed=DEFAULT_SEED, jobs: int = 1) -> list[RepunitReport]:
    inst = [(p, q, TheoremCase.T4) for p, q in theorem_4_instances(q_max)]
    return _run(inst, effort, seed, jobs)


VERIFIERS = {
    1: verify_theorem_1,
    2: verify_theorem_2,
    3: verify_theorem_3,
    4: verify_theorem_4,
}
