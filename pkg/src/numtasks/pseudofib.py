"""Order-k pseudo-Fibonacci sequences: u_1 = ... = u_k = 1, u_n = u_{n-1} + ... + u_{n-k}.

Exact integer work (terms, the two-term shift relation, partial sums) lives
next to the floating-point side: characteristic roots of
x^k - x^{k-1} - ... - 1 and Binet-style closed forms built on them.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .arith import DomainError

# Absolute residuals near x = 2 grow like k 2^(k-1) times rounding error, so the
# acceptance check is on the scaled residual; small k also meet 1e-8 absolutely.
ROOT_RESIDUAL_TOL = 1e-8
IMAG_TOL = 1e-6


class DegenerateRootsError(ArithmeticError):
    pass


@dataclass(frozen=True)
class RecurrenceSpec:
    order: int
    initial_terms: tuple = ()

    def __post_init__(self):
        if self.order < 2:
            raise DomainError(f"order must be >= 2, got {self.order}")
        if not self.initial_terms:
            object.__setattr__(self, "initial_terms", (1,) * self.order)
        if len(self.initial_terms) != self.order:
            raise DomainError(f"need {self.order} initial terms, got {len(self.initial_terms)}")


def terms(spec: RecurrenceSpec | int, n: int) -> list:
    """u_1 .. u_n exactly."""
    if isinstance(spec, int):
        spec = RecurrenceSpec(spec)
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    k = spec.order
    u = list(spec.initial_terms[:n])
    while len(u) < n:
        u.append(sum(u[-k:]))
    return u


def partial_sums(seq: list) -> list:
    out, total = [], 0
    for x in seq:
        total += x
        out.append(total)
    return out


@dataclass
class IdentityLevel:
    level: int
    checked: int
    first_failure: int | None

    @property
    def holds(self) -> bool:
        return self.first_failure is None

    def to_record(self) -> dict:
        return {"level": self.level, "checked": self.checked, "holds": self.holds, "first_failure": self.first_failure}


def _shift_failure(seq: list, k: int) -> tuple[int, int | None]:
    """Check s_n = 2 s_{n-1} - s_{n-k-1} for k+2 <= n <= len(seq) (1-based)."""
    checked = 0
    for n in range(k + 2, len(seq) + 1):
        checked += 1
        if seq[n - 1] != 2 * seq[n - 2] - seq[n - k - 2]:
            return checked, n
    return checked, None


@dataclass
class IdentityReport:
    order: int
    n_max: int
    levels: list[IdentityLevel]

    @property
    def holds(self) -> bool:
        return all(lv.holds for lv in self.levels)

    def to_record(self) -> dict:
        return {
            "order": self.order,
            "n_max": self.n_max,
            "holds": self.holds,
            "levels": [lv.to_record() for lv in self.levels],
        }


def verify_shift_identity(spec: RecurrenceSpec | int, n_max: int) -> IdentityReport:
    """u_n = 2u_{n-1} - u_{n-k-1} for every n with all indices past the seed."""
    if isinstance(spec, int):
        spec = RecurrenceSpec(spec)
    if n_max < spec.order + 2:
        raise DomainError(f"n_max must be >= k + 2 = {spec.order + 2}")
    checked, fail = _shift_failure(terms(spec, n_max), spec.order)
    return IdentityReport(spec.order, n_max, [IdentityLevel(0, checked, fail)])


def verify_sum_identity(spec: RecurrenceSpec | int, n_max: int, depth: int = 1) -> IdentityReport:
    """The same shift relation for S = partial sums of u, S' = partial sums of S, ...

    Level 1 is S; every level up to ``depth`` is checked and reported, so a
    failure at one level does not hide the others.
    """
    if isinstance(spec, int):
        spec = RecurrenceSpec(spec)
    if depth < 1:
        raise DomainError(f"depth must be >= 1, got {depth}")
    if n_max < spec.order + 2:
        raise DomainError(f"n_max must be >= k + 2 = {spec.order + 2}")
    seq = terms(spec, n_max)
    levels = []
    for level in range(1, depth + 1):
        seq = partial_sums(seq)
        checked, fail = _shift_failure(seq, spec.order)
        levels.append(IdentityLevel(level, checked, fail))
    return IdentityReport(spec.order, n_max, levels)


def _shift_sequence(seed: list[Fraction], k: int, n: int) -> list[Fraction]:
    u = list(seed)
    while len(u) < n:
        u.append(2 * u[-1] - u[-k - 1])
    return u


def _satisfies_shift(seq: list[Fraction], k: int) -> bool:
    return all(seq[i] == 2 * seq[i - 1] - seq[i - k - 1] for i in range(k + 1, len(seq)))


@dataclass
class SolutionSpaceReport:
    order: int
    trials: int
    seed: int
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_record(self) -> dict:
        return {"order": self.order, "trials": self.trials, "seed": self.seed, "ok": self.ok, "failures": self.failures}


def solution_space_check(k: int, trials: int = 20, seed: int = 0, n: int = 50) -> SolutionSpaceReport:
    """Scaled and summed solutions of u_n = 2u_{n-1} - u_{n-k-1} stay solutions.

    Seeds and scale factors are random rationals; arithmetic is exact.
    """
    if k < 2:
        raise DomainError(f"order must be >= 2, got {k}")
    if trials < 1:
        raise DomainError(f"trials must be >= 1, got {trials}")
    rng = random.Random(seed)

    def rational():
        return Fraction(rng.randint(-50, 50), rng.randint(1, 20))

    report = SolutionSpaceReport(k, trials, seed)
    for t in range(trials):
        sols = [_shift_sequence([rational() for _ in range(k + 1)], k, n) for _ in range(3)]
        c = Fraction(0) if t == 0 else rational()
        scaled = [c * x for x in sols[0]]
        total = [x + y + z for x, y, z in zip(*sols)]
        doubled = [x + x for x in sols[0]]
        for name, seq in (("scaled", scaled), ("sum", total), ("doubled", doubled)):
            if not _satisfies_shift(seq, k):
                report.failures.append(f"trial {t}: {name} sequence breaks the relation")
    return report


# --------------------------------------------------------------------------
# characteristic roots and closed forms


def char_poly(k: int) -> list[int]:
    """Coefficients of x^k - x^{k-1} - ... - 1, highest degree first."""
    return [1] + [-1] * k


def _poly_residual(r: complex, k: int) -> complex:
    return r**k - sum(r**j for j in range(k))


def dominant_root(k: int) -> float:
    """The real root in (1, 2), by bisection to full double precision."""
    lo, hi = 1.0, 2.0  # p(1) = 1 - k < 0, p(2) = 1 > 0
    for _ in range(200):
        mid = (lo + hi) / 2
        if mid in (lo, hi):
            break
        if _poly_residual(mid, k).real < 0:
            lo = mid
        else:
            hi = mid
    return lo if abs(_poly_residual(lo, k)) <= abs(_poly_residual(hi, k)) else hi


@dataclass(frozen=True)
class CharacteristicRoots:
    order: int
    roots: tuple[complex, ...]
    dominant: float

    @property
    def max_residual(self) -> float:
        return max(abs(_poly_residual(r, self.order)) for r in self.roots)

    @property
    def max_scaled_residual(self) -> float:
        """Residual relative to the size of the terms summed; meaningful for large k."""
        k = self.order
        return max(abs(_poly_residual(r, k)) / sum(abs(r) ** j for j in range(k + 1)) for r in self.roots)

    @property
    def fixed_point_residual(self) -> float:
        d = self.dominant
        return abs(d**self.order * (2 - d) - 1)

    @property
    def real_roots(self) -> list[float]:
        return sorted(r.real for r in self.roots if abs(r.imag) < 1e-12)

    def to_record(self) -> dict:
        return {
            "order": self.order,
            "dominant": self.dominant,
            "roots": [[r.real, r.imag] for r in self.roots],
            "max_residual": self.max_residual,
            "max_scaled_residual": self.max_scaled_residual,
            "fixed_point_residual": self.fixed_point_residual,
        }


def _polish(r: complex, k: int) -> complex:
    coeffs = np.array(char_poly(k), dtype=complex)
    deriv = np.polyder(coeffs)
    for _ in range(3):
        d = np.polyval(deriv, r)
        if d == 0:
            break
        step = np.polyval(coeffs, r) / d
        r = r - step
        if abs(step) < 1e-17 * max(1.0, abs(r)):
            break
    return complex(r)


def characteristic_roots(k: int) -> CharacteristicRoots:
    """All k roots; the dominant one by bisection, the rest from companion eigenvalues."""
    if not 2 <= k <= 64:
        raise DomainError(f"order must be in 2..64, got {k}")
    dom = dominant_root(k)
    eig = np.roots(char_poly(k))
    # Drop the eigenvalue closest to the dominant root and keep the bisected value.
    idx = int(np.argmin(np.abs(eig - dom)))
    others = [_polish(complex(z), k) for i, z in enumerate(eig) if i != idx]
    # Real roots come back with tiny imaginary noise; snap them.
    others = [complex(z.real, 0.0) if abs(z.imag) < 1e-12 else z for z in others]
    roots = [complex(dom, 0.0)] + sorted(others, key=lambda z: (-abs(z), z.real, z.imag))
    out = CharacteristicRoots(k, tuple(roots), dom)
    if out.max_scaled_residual > ROOT_RESIDUAL_TOL:
        raise ArithmeticError(f"root residual {out.max_scaled_residual:.3g} too large for order {k}")
    return out


@dataclass(frozen=True)
class ClosedForm:
    order: int
    coefficients: tuple[complex, ...]
    roots: CharacteristicRoots

    def to_record(self) -> dict:
        return {
            "order": self.order,
            "coefficients": [[c.real, c.imag] for c in self.coefficients],
            "roots": [[r.real, r.imag] for r in self.roots.roots],
        }


def closed_form(k: int) -> ClosedForm:
    """Coefficients c_i with u_n = sum c_i q_i^(n-1), from the Vandermonde system."""
    if not 2 <= k <= 12:
        raise DomainError(f"order must be in 2..12, got {k}")
    roots = characteristic_roots(k)
    q = np.array(roots.roots)
    vander = np.vander(q, k, increasing=True).T  # row j holds q_i^j
    if abs(np.linalg.det(vander)) < 1e-12:
        raise DegenerateRootsError(f"Vandermonde matrix is singular for order {k}")
    coeffs = np.linalg.solve(vander, np.ones(k, dtype=complex))
    return ClosedForm(k, tuple(complex(c) for c in coeffs), roots)


def closed_form_eval(cf: ClosedForm, n: int) -> float:
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    total = sum(c * r ** (n - 1) for c, r in zip(cf.coefficients, cf.roots.roots))
    if abs(total.imag) >= IMAG_TOL * max(1.0, abs(total.real)):
        raise ArithmeticError(f"closed form has imaginary part {total.imag:.3g} at n={n}")
    return total.real


@dataclass
class ClosedFormComparison:
    order: int
    rows: list[tuple[int, int, float, float]]  # n, exact, closed form, relative error

    @property
    def max_rel_error(self) -> float:
        return max((r[3] for r in self.rows), default=0.0)

    def to_records(self) -> list[dict]:
        return [{"n": n, "exact": u, "closed_form": v, "rel_error": e} for n, u, v, e in self.rows]


def compare_closed_form(k: int, n_max: int) -> ClosedFormComparison:
    cf = closed_form(k)
    rows = []
    for n, u in enumerate(terms(k, n_max), start=1):
        v = closed_form_eval(cf, n)
        rows.append((n, u, v, abs(v - u) / u))
    return ClosedFormComparison(k, rows)


@dataclass
class CardanoReport:
    q: tuple[complex, complex, complex]
    residuals: tuple[float, float, float]
    dominant_error: float
    product: complex
    vieta_product: int
    stated_product: int
    coefficient_error: float

    @property
    def matches_vieta(self) -> bool:
        return abs(self.product - self.vieta_product) < 1e-9

    @property
    def matches_stated(self) -> bool:
        return abs(self.product - self.stated_product) < 1e-9

    @property
    def flags(self) -> list[str]:
        out = []
        if not self.matches_stated:
            out.append(f"product q1*q2*q3 = {self.product.real:.12g} disagrees with the stated value {self.stated_product}")
        if not self.matches_vieta:
            out.append(f"product q1*q2*q3 = {self.product.real:.12g} disagrees with Vieta ({self.vieta_product})")
        return out

    def to_record(self) -> dict:
        return {
            "q": [[z.real, z.imag] for z in self.q],
            "residuals": list(self.residuals),
            "dominant_error": self.dominant_error,
            "product": [self.product.real, self.product.imag],
            "vieta_product": self.vieta_product,
            "stated_product": self.stated_product,
            "matches_vieta": self.matches_vieta,
            "matches_stated": self.matches_stated,
            "coefficient_error": self.coefficient_error,
            "flags": self.flags,
        }


def cardano_roots() -> tuple[complex, complex, complex]:
    """Radical expressions for the three roots of q^3 = q^2 + q + 1."""
    a = (19 + 3 * math.sqrt(33)) ** (1 / 3)
    b = (19 - 3 * math.sqrt(33)) ** (1 / 3)
    q1 = (a + b + 1) / 3
    re = -(a + b - 2) / 6
    im = math.sqrt(3) * (a - b) / 6
    return complex(q1, 0.0), complex(re, im), complex(re, -im)


def lagrange_coefficients(q: tuple[complex, ...]) -> list[complex]:
    """c_j = prod_{i != j} (1 - q_i) / (q_j - q_i), the Cramer solution for all-ones seeds."""
    out = []
    for j, qj in enumerate(q):
        c = complex(1)
        for i, qi in enumerate(q):
            if i != j:
                c *= (1 - qi) / (qj - qi)
        out.append(c)
    return out


def cardano_root_check(stated_product: int = -1) -> CardanoReport:
    q = cardano_roots()
    residuals = tuple(abs(1 + z + z * z - z**3) for z in q)
    dom_err = abs(q[0].real - characteristic_roots(3).dominant)
    product = q[0] * q[1] * q[2]
    # Match radical roots to the numeric ones, then compare coefficients.
    cf = closed_form(3)
    numeric = dict(zip(cf.roots.roots, cf.coefficients))
    coeff_err = 0.0
    for z, c in zip(q, lagrange_coefficients(q)):
        nearest = min(numeric, key=lambda r: abs(r - z))
        coeff_err = max(coeff_err, abs(numeric[nearest] - c))
    return CardanoReport(q, residuals, dom_err, complex(product), 1, stated_product, coeff_err)


def binet(n: int) -> float:
    """Fibonacci via the golden-ratio formula, as an independent check of order 2."""
    s5 = math.sqrt(5)
    return (((1 + s5) / 2) ** n - ((1 - s5) / 2) ** n) / s5


__all__ = [
    "CardanoReport",
    "CharacteristicRoots",
    "ClosedForm",
    "ClosedFormComparison",
    "DegenerateRootsError",
    "IdentityReport",
    "RecurrenceSpec",
    "SolutionSpaceReport",
    "binet",
    "cardano_root_check",
    "characteristic_roots",
    "closed_form",
    "closed_form_eval",
    "compare_closed_form",
    "dominant_root",
    "partial_sums",
    "solution_space_check",
    "terms",
    "verify_shift_identity",
    "verify_sum_identity",
]
