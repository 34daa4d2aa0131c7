"""Exact integer primitives: modular powers, primality, factorization, orders.

Everything here works on Python ints, so sizes are limited only by memory.
Factorization runs trial division, Pollard-Brent rho, Pollard p-1 and then
Montgomery-curve ECM, all driven by a fixed seed sequence so repeated calls
give identical results.  Work is metered against an effort budget; when it
runs out the caller gets a :class:`Factorization` whose ``cofactors`` hold the
composite parts that could not be split.
"""

from __future__ import annotations

import math
import os
import random
from dataclasses import dataclass
from enum import Enum

__all__ = [
    "Certainty",
    "DomainError",
    "Factorization",
    "IncompleteFactorizationError",
    "PrimeFactor",
    "DEFAULT_EFFORT",
    "euler_phi",
    "factorize",
    "gcd",
    "integer_nth_root",
    "is_prime",
    "mod_pow",
    "multiplicative_order",
    "primality",
    "primes_up_to",
]

PROVEN_LIMIT = 1 << 64
# Deterministic Miller-Rabin witnesses for every n < 3.3 * 10**24.
_FIXED_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
# Extra seeded rounds above 2**64: error <= 4**-64 = 2**-128.
_RANDOM_ROUNDS = 64
_TRIAL_LIMIT = 1 << 12

DEFAULT_EFFORT = int(os.environ.get("NUMTASKS_EFFORT_BUDGET", 200_000_000))
DEFAULT_SEED = 0x5EED


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class IncompleteFactorizationError(ArithmeticError):
    """Raised by callers that need a complete factorization and did not get one."""

    def __init__(self, factorization: "Factorization"):
        self.factorization = factorization
        super().__init__(
            f"factorization of {factorization.n} incomplete; "
            f"unfactored cofactors {list(factorization.cofactors)}"
        )


class Certainty(str, Enum):
    PROVEN = "proven"
    PROBABLE = "probable"


@dataclass(frozen=True)
class PrimeFactor:
    prime: int
    exponent: int
    certainty: Certainty = Certainty.PROVEN


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: tuple[PrimeFactor, ...]
    cofactors: tuple[int, ...] = ()

    @property
    def complete(self) -> bool:
        return not self.cofactors

    @property
    def primes(self) -> list[int]:
        return [f.prime for f in self.factors]

    def value(self) -> int:
        out = 1
        for f in self.factors:
            out *= f.prime**f.exponent
        for c in self.cofactors:
            out *= c
        return out

    def as_dict(self) -> dict[int, int]:
        return {f.prime: f.exponent for f in self.factors}

    def require_complete(self) -> "Factorization":
        if not self.complete:
            raise IncompleteFactorizationError(self)
        return self

    def __str__(self) -> str:
        parts = [f"{f.prime}^{f.exponent}" if f.exponent > 1 else str(f.prime) for f in self.factors]
        parts += [f"({c})" for c in self.cofactors]
        return "*".join(parts) if parts else "1"


def gcd(a: int, b: int) -> int:
    if a == 0 and b == 0:
        raise DomainError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def mod_pow(base: int, exp: int, modulus: int) -> int:
    if modulus < 2:
        raise DomainError(f"modulus must be >= 2, got {modulus}")
    if exp < 0:
        raise DomainError("negative exponent")
    return pow(base, exp, modulus)


def integer_nth_root(n: int, k: int) -> tuple[int, bool]:
    """Return ``(floor(n ** (1/k)), exact)`` using integer Newton iteration."""
    if k < 1:
        raise DomainError(f"root index must be >= 1, got {k}")
    if n < 0:
        raise DomainError("negative radicand")
    if n < 2 or k == 1:
        return n, True
    if k == 2:
        r = math.isqrt(n)
        return r, r * r == n
    # Start above the root; Newton then decreases monotonically to the floor.
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    return x, x**k == n


def primes_up_to(limit: int) -> list[int]:
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytes(len(range(i * i, limit + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


_SMALL_PRIMES = primes_up_to(_TRIAL_LIMIT)


def _strong_probable_prime(n: int, a: int, d: int, s: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def primality(n: int) -> tuple[bool, Certainty]:
    """Miller-Rabin test returning the verdict and how certain it is.

    Below 2**64 the fixed witness set makes the answer exact.  Above, a
    composite verdict is still exact (a witness was found) while a prime
    verdict is probable with error at most 2**-128.
    """
    if n < 2:
        return False, Certainty.PROVEN
    for p in _SMALL_PRIMES[:25]:
        if n == p:
            return True, Certainty.PROVEN
        if n % p == 0:
            return False, Certainty.PROVEN
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _FIXED_WITNESSES:
        if not _strong_probable_prime(n, a, d, s):
            return False, Certainty.PROVEN
    if n < PROVEN_LIMIT:
        return True, Certainty.PROVEN
    rng = random.Random(n ^ DEFAULT_SEED)
    for _ in range(_RANDOM_ROUNDS):
        if not _strong_probable_prime(n, rng.randrange(2, n - 1), d, s):
            return False, Certainty.PROVEN
    return True, Certainty.PROBABLE


def is_prime(n: int) -> bool:
    return primality(n)[0]


# --------------------------------------------------------------------------
# factorization


class _BudgetExhausted(Exception):
    pass


@dataclass
class _Effort:
    """Counts modular multiplications (roughly) against a limit."""

    limit: int
    spent: int = 0

    def charge(self, units: int) -> None:
        self.spent += units
        if self.spent > self.limit:
            raise _BudgetExhausted


def _perfect_power(n: int) -> tuple[int, int] | None:
    for k in primes_up_to(n.bit_length()):
        r, exact = integer_nth_root(n, k)
        if exact:
            return r, k
    return None


def _pollard_brent(n: int, c: int, effort: _Effort, max_iter: int) -> int | None:
    y, r, q, g = 2, 1, 1, 1
    m = 128
    x = ys = y
    done = 0
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            steps = min(m, r - k)
            for _ in range(steps):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            effort.charge(2 * steps)
            g = math.gcd(q, n)
            k += m
        done += r
        r *= 2
        if g == 1 and done > max_iter:
            return None
    if g == n:
        while True:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
            if g > 1:
                break
    return g if g != n else None


def _pollard_pm1(n: int, bound: int, effort: _Effort) -> int | None:
    a = 2
    for p in primes_up_to(bound):
        pk = p
        while pk * p <= bound:
            pk *= p
        a = pow(a, pk, n)
        effort.charge(pk.bit_length())
    g = math.gcd(a - 1, n)
    return g if 1 < g < n else None


class _FoundFactor(Exception):
    def __init__(self, g: int):
        self.g = g


def _inverse(a: int, n: int) -> int:
    g = math.gcd(a, n)
    if g != 1:
        raise _FoundFactor(g)
    return pow(a, -1, n)


def _ecm_curve(n: int, sigma: int, b1: int, b2: int, effort: _Effort) -> int | None:
    """One ECM curve (Suyama parametrization, Montgomery x-only arithmetic)."""
    try:
        u = (sigma * sigma - 5) % n
        v = 4 * sigma % n
        x0 = pow(u, 3, n)
        z0 = pow(v, 3, n)
        a24 = pow(v - u, 3, n) * (3 * u + v) * _inverse(16 * x0 * v % n, n) % n
    except _FoundFactor as exc:
        return exc.g if exc.g != n else None

    def dbl(x, z):
        s = (x + z) * (x + z) % n
        d = (x - z) * (x - z) % n
        t = s - d
        return s * d % n, t * (d + a24 * t) % n

    def add(xp, zp, xq, zq, xd, zd):
        u_ = (xp - zp) * (xq + zq) % n
        v_ = (xp + zp) * (xq - zq) % n
        return zd * (u_ + v_) ** 2 % n, xd * (u_ - v_) ** 2 % n

    def mul(k, x, z):
        x0_, z0_ = x, z
        x1, z1 = dbl(x, z)
        for bit in bin(k)[3:]:
            if bit == "1":
                x0_, z0_ = add(x1, z1, x0_, z0_, x, z)
                x1, z1 = dbl(x1, z1)
            else:
                x1, z1 = add(x0_, z0_, x1, z1, x, z)
                x0_, z0_ = dbl(x0_, z0_)
        return x0_, z0_

    x, z = x0, z0
    for p in primes_up_to(b1):
        pk = p
        while pk * p <= b1:
            pk *= p
        x, z = mul(pk, x, z)
        effort.charge(11 * pk.bit_length())
    g = math.gcd(z, n)
    if g == n:
        return None
    if g > 1:
        return g

    # Stage 2: baby steps j*Q (odd j < D/2, coprime to D) and giant steps
    # m*D*Q; a prime m*D +- j in (B1, B2] shows up as a zero cross product.
    wheel = 210
    baby = []
    x2, z2 = dbl(x, z)
    before, cur = (x, z), (x, z)
    for j in range(1, wheel // 2, 2):
        if math.gcd(j, wheel) == 1:
            baby.append(cur)
        diff = (x, z) if j == 1 else before
        before, cur = cur, add(cur[0], cur[1], x2, z2, *diff)
    xd, zd = mul(wheel, x, z)
    m = max(2, b1 // wheel)
    px, pz = mul((m - 1) * wheel, x, z)
    gx, gz = mul(m * wheel, x, z)
    acc = 1
    while m * wheel - wheel // 2 <= b2:
        for bx, bz in baby:
            acc = acc * (gx * bz - bx * gz) % n
        effort.charge(2 * len(baby) + 6)
        (gx, gz), (px, pz) = add(gx, gz, xd, zd, px, pz), (gx, gz)
        m += 1
    g = math.gcd(acc, n)
    return g if 1 < g < n else None


# (B1, curves) schedule, roughly optimal for factors up to ~25 digits.
_ECM_SCHEDULE = ((2_000, 25), (11_000, 90), (50_000, 300), (250_000, 700), (1_000_000, 1800))


def _split(n: int, effort: _Effort, rng: random.Random) -> int:
    """Return a nontrivial divisor of the odd composite ``n``."""
    for c in (1, 3, 5):
        g = _pollard_brent(n, c, effort, max_iter=1 << 15)
        if g:
            return g
    g = _pollard_pm1(n, 100_000, effort)
    if g:
        return g
    for b1, curves in _ECM_SCHEDULE:
        for _ in range(curves):
            g = _ecm_curve(n, rng.randrange(6, n - 1), b1, 100 * b1, effort)
            if g:
                return g
    while True:
        g = _pollard_brent(n, rng.randrange(1, n - 1), effort, max_iter=1 << 40)
        if g:
            return g


def factorize(n: int, effort: int | None = None, seed: int = DEFAULT_SEED) -> Factorization:
    """Factor ``n >= 2`` into primes.

    ``effort`` caps the work (in approximate modular multiplications).  When
    it runs out, the composites still unsplit are returned in ``cofactors``
    instead of being reported as primes.
    """
    if n < 2:
        raise DomainError(f"factorize needs n >= 2, got {n}")
    budget = _Effort(DEFAULT_EFFORT if effort is None else effort)
    rng = random.Random(seed)
    found: dict[int, list] = {}
    leftovers: list[int] = []

    def record(p: int, e: int, cert: Certainty) -> None:
        if p in found:
            found[p][0] += e
        else:
            found[p] = [e, cert]

    m = n
    for p in _SMALL_PRIMES:
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            record(p, e, Certainty.PROVEN)
    if 1 < m < _TRIAL_LIMIT**2:
        record(m, 1, Certainty.PROVEN)
        m = 1

    stack = [(m, 1)] if m > 1 else []
    while stack:
        c, mult = stack.pop()
        ok, cert = primality(c)
        if ok:
            record(c, mult, cert)
            continue
        pp = _perfect_power(c)
        if pp:
            stack.append((pp[0], mult * pp[1]))
            continue
        try:
            d = _split(c, budget, rng)
        except _BudgetExhausted:
            leftovers.append(c**mult)
            budget.spent = budget.limit  # remaining composites are not attempted
            continue
        e = c // d
        g = math.gcd(d, e)
        if g > 1:
            # Keep pieces coprime so exponents add up correctly.
            parts = _coprime_base([d, e])
            for base, k in parts:
                stack.append((base, mult * k))
        else:
            stack += [(d, mult), (e, mult)]

    factors = tuple(PrimeFactor(p, e, cert) for p, (e, cert) in sorted(found.items()))
    result = Factorization(n, factors, tuple(sorted(leftovers)))
    assert result.value() == n
    return result


def _coprime_base(values: list[int]) -> list[tuple[int, int]]:
    """Rewrite a product of integers as a product of pairwise coprime powers."""
    counts: dict[int, int] = {}
    work = list(values)
    while work:
        v = work.pop()
        if v == 1:
            continue
        for b in list(counts):
            g = math.gcd(b, v)
            if g > 1:
                k = counts.pop(b)
                work += [g] * k + [b // g] * k + [g, v // g]
                break
        else:
            counts[v] = counts.get(v, 0) + 1
    return list(counts.items())


def euler_phi(n: int, effort: int | None = None) -> int:
    if n < 1:
        raise DomainError("phi needs n >= 1")
    if n == 1:
        return 1
    fact = factorize(n, effort).require_complete()
    out = 1
    for f in fact.factors:
        out *= (f.prime - 1) * f.prime ** (f.exponent - 1)
    return out


def multiplicative_order(a: int, m: int, multiple: int | None = None, effort: int | None = None) -> int:
    """Least ``e >= 1`` with ``a**e == 1 (mod m)``.

    The search descends through the divisors of a known multiple of the
    order: ``phi(m)`` by default, or ``multiple`` when the caller already has
    one (it is checked, not trusted).
    """
    if m < 2:
        raise DomainError(f"modulus must be >= 2, got {m}")
    if math.gcd(a, m) != 1:
        raise DomainError(f"gcd({a}, {m}) != 1; order undefined")
    e = euler_phi(m, effort) if multiple is None else multiple
    if pow(a, e, m) != 1:
        raise DomainError(f"{a}^{e} is not 1 mod {m}; {e} is not a multiple of the order")
    if e == 1:
        return 1
    for f in factorize(e, effort).require_complete().factors:
        for _ in range(f.exponent):
            if pow(a, e // f.prime, m) == 1:
                e //= f.prime
            else:
                break
    return e
