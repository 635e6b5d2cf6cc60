"""Exponential-type series whose smallest positive root gives a growth rate.

Three kinds are supported:

``monotone_g``
    ``sum z^{mi}/(mi)! - sum z^{mi+1}/(mi+1)!``; its smallest root is the
    reciprocal growth rate of the monotone pattern.
``monotone_majorant_f``
    ``1 - z + z^m/m! - z^{m+1}/(m+1)! + z^{2m}/(2m)!``, which dominates
    ``monotone_g`` on ``[0, 2]`` so its root is not smaller.
``nakamura_f``
    ``1 - z + z^m/m! - m z^{2m+1}/(2m-1)!`` for the pattern
    ``12...(m-2) m (m-1)``.  The last term's coefficient, exponent and
    factorial are configurable because its printed form may pair the
    exponent and factorial inconsistently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

KINDS = ("monotone_g", "monotone_majorant_f", "nakamura_f")
DOMAIN = (0.0, 4.0)
TRUNCATION_TOL = 1e-30
SCAN_STEP = 0.01
BISECT_TOL = 1e-13


class NoRootError(ValueError):
    """No sign change of the series inside the search bracket."""


def _inv_factorial(j: int) -> float:
    return float(Fraction(1, math.factorial(j)))


@dataclass(frozen=True)
class SeriesSpec:
    kind: str
    m: int
    tail: tuple[int, int, int] | None = None  # nakamura_f: (coefficient, exponent, factorial)
    terms: tuple[tuple[int, float], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown series kind {self.kind!r}; expected one of {KINDS}")
        if self.m < 2:
            raise ValueError("series need m >= 2")
        if self.tail is not None and self.kind != "nakamura_f":
            raise ValueError("only nakamura_f takes a configurable tail term")
        object.__setattr__(self, "terms", tuple(_build_terms(self)))

    @property
    def truncation_terms(self) -> int:
        return len(self.terms)

    def truncation_error(self, z: float) -> float:
        """Bound on the omitted tail at ``z`` (zero for the polynomial kinds)."""
        if self.kind != "monotone_g":
            return 0.0
        j = self.terms[-1][0] + 1
        return 2 * abs(z) ** j * _inv_factorial(j)


def _build_terms(spec: SeriesSpec) -> list[tuple[int, float]]:
    m = spec.m
    if spec.kind == "monotone_g":
        terms = []
        j = 0
        zmax = DOMAIN[1]
        # stop once every omitted exponent contributes < tol on the whole domain
        while True:
            if j > 2 * zmax and zmax ** j * _inv_factorial(j) < TRUNCATION_TOL:
                break
            if j % m == 0:
                terms.append((j, _inv_factorial(j)))
            elif j % m == 1:
                terms.append((j, -_inv_factorial(j)))
            j += 1
        return terms
    if spec.kind == "monotone_majorant_f":
        return [(0, 1.0), (1, -1.0), (m, _inv_factorial(m)),
                (m + 1, -_inv_factorial(m + 1)), (2 * m, _inv_factorial(2 * m))]
    coef, exponent, fact = spec.tail or (m, 2 * m + 1, 2 * m - 1)
    return [(0, 1.0), (1, -1.0), (m, _inv_factorial(m)),
            (exponent, -float(Fraction(coef, math.factorial(fact))))]


def eval_series(spec: SeriesSpec, z: float) -> float:
    if not DOMAIN[0] <= z <= DOMAIN[1]:
        raise ValueError(f"z={z} outside the evaluation domain {DOMAIN}")
    return math.fsum(c * z ** j for j, c in spec.terms)


@dataclass(frozen=True)
class RootResult:
    z0: float
    rho: float
    bracket: tuple[float, float]
    residual: float
    widths: tuple[float, ...] = ()

    def to_dict(self, spec: SeriesSpec) -> dict:
        return {"kind": spec.kind, "m": spec.m, "z0": self.z0, "rho": self.rho,
                "residual": self.residual, "truncation_terms": spec.truncation_terms}


def smallest_root(spec: SeriesSpec, lo: float = 1.0, hi: float = 2.0) -> RootResult:
    """Scan ``[lo, hi]`` in steps of 0.01 for the first sign change, then bisect."""
    steps = int(round((hi - lo) / SCAN_STEP))
    a = lo
    fa = eval_series(spec, a)
    if fa == 0.0:
        return RootResult(a, 1 / a, (a, a), 0.0)
    for i in range(1, steps + 1):
        b = lo + i * SCAN_STEP
        fb = eval_series(spec, b)
        if (fa < 0) != (fb < 0) or fb == 0.0:
            break
        a, fa = b, fb
    else:
        raise NoRootError(f"{spec.kind} (m={spec.m}) has no sign change in [{lo}, {hi}]")
    widths = [b - a]
    while b - a > BISECT_TOL:
        mid = 0.5 * (a + b)
        if mid <= a or mid >= b:
            break
        fm = eval_series(spec, mid)
        if fm == 0.0:
            a = b = mid
            break
        if (fm < 0) == (fa < 0):
            a, fa = mid, fm
        else:
            b = mid
        widths.append(b - a)
    # endpoint with the smaller residual
    fa_abs, fb_abs = abs(eval_series(spec, a)), abs(eval_series(spec, b))
    z0 = a if fa_abs <= fb_abs else b
    return RootResult(z0=z0, rho=1 / z0, bracket=(a, b),
                      residual=min(fa_abs, fb_abs), widths=tuple(widths))


@dataclass(frozen=True)
class QuadraticBound:
    m: int
    epsilon_prime: float
    rho_lower: float
    approx_epsilon: float
    valid: bool
    a: float
    b: float
    c: float


def monotone_lb_quadratic(m: int) -> QuadraticBound:
    """Lower bound ``1 - eps'`` on the monotone growth rate from a quadratic in ``eps``.

    ``eps'`` is the smallest positive root of ``a e^2 - b e + c = 0`` with
    ``a = 2m-1 + (m-1)(m^2+1)/(m+1)!``, ``b = 1 + (m^2+1)/(m+1)!`` and
    ``c = m/(m+1)! + 1/(2m)!``; ``approx_epsilon = c/b + a c^2/b^3``.
    The discriminant is negative at ``m = 3``; the result is then flagged
    invalid with NaN root and bound.
    """
    if m < 3:
        raise ValueError("need m >= 3")
    f1 = math.factorial(m + 1)
    a = Fraction(2 * m - 1) + Fraction((m - 1) * (m * m + 1), f1)
    b = 1 + Fraction(m * m + 1, f1)
    c = Fraction(m, f1) + Fraction(1, math.factorial(2 * m))
    disc = b * b - 4 * a * c
    af, bf, cf = float(a), float(b), float(c)
    approx = float(c / b + a * c * c / b ** 3)
    if disc < 0:
        return QuadraticBound(m=m, epsilon_prime=math.nan, rho_lower=math.nan,
                              approx_epsilon=approx, valid=False, a=af, b=bf, c=cf)
    # stable form of (b - sqrt(disc)) / (2a)
    eps = 2 * cf / (bf + math.sqrt(float(disc)))
    return QuadraticBound(m=m, epsilon_prime=eps, rho_lower=1 - eps,
                          approx_epsilon=approx, valid=True, a=af, b=bf, c=cf)
