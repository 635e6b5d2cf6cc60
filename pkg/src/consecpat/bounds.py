"""Explicit bounds on the growth rate of pattern-avoiding permutations.

Events are ``A_i`` = "the window at offset ``i`` is an occurrence", for
``0 <= i <= n - m``, with the circulant dependency graph joining offsets at
distance ``< m``.  Every bound is evaluated with its finite-``m`` constants
and carries a validity flag instead of an implicit "``m`` large enough".
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .overlap import joint_count, overlap_profile
from .perm import Pattern, format_pattern


@dataclass(frozen=True)
class SuenParameters:
    n: int
    m: int
    mu: Fraction
    delta: Fraction
    Delta_exact: Fraction
    Delta_bound: float


@dataclass(frozen=True)
class RhoBound:
    value: float
    valid: bool
    ratio: float = math.nan  # the Delta/mu-type ratio times e^{2 delta}


@dataclass(frozen=True)
class SuenCheck:
    """Suen's bound on ``Pr(X = 0)`` at a fixed ``n``."""

    bound: float
    coefficient: float
    valid: bool


@dataclass
class BoundReport:
    m: int
    k: int | None = None
    pattern: Pattern | None = None
    lower_lll: float = math.nan
    upper_block: float = math.nan
    upper_suen: float = math.nan
    upper_mk: float | None = None
    flags: dict[str, bool] = field(default_factory=dict)
    n_used: int | None = None
    finite_suen: float | None = None

    def to_dict(self) -> dict:
        out = {"m": self.m, "k": self.k}
        if self.pattern is not None:
            out["pattern"] = format_pattern(self.pattern)
        out.update(lower_lll=self.lower_lll, upper_block=self.upper_block,
                   upper_suen=self.upper_suen, upper_mk=self.upper_mk,
                   flags=dict(self.flags), n_used=self.n_used)
        if self.finite_suen is not None:
            out["finite_suen"] = self.finite_suen
        return out


def _as_pattern(sigma) -> Pattern:
    return sigma if isinstance(sigma, Pattern) else Pattern(tuple(sigma))


def local_dependence(m: int) -> Fraction:
    """``delta``: ``2(m-1)`` neighbours, each an occurrence with probability ``1/m!``."""
    return Fraction(2 * (m - 1), math.factorial(m))


def joint_probabilities(sigma: Pattern) -> dict[int, Fraction]:
    """``Pr(A_i and A_{i+m-k})`` for every ``k`` in ``1..m-1`` (zero off the profile)."""
    sigma = _as_pattern(sigma)
    m = sigma.m
    profile = overlap_profile(sigma).overlaps
    out = {}
    for k in range(1, m):
        if k in profile:
            jc = joint_count(sigma, k)
            out[k] = Fraction(jc.count, math.factorial(jc.length))
        else:
            out[k] = Fraction(0)
    return out


def _lemma_pair_bound(m: int, k: int) -> float:
    return 4.0 ** (m - k) / (math.sqrt(math.pi * (m - k)) * math.factorial(2 * m - k))


def suen_parameters(sigma: Pattern, n: int) -> SuenParameters:
    sigma = _as_pattern(sigma)
    m = sigma.m
    if n < m:
        raise ValueError(f"need n >= m, got n={n}, m={m}")
    windows = n - m + 1
    mu = Fraction(windows, math.factorial(m))
    joint = joint_probabilities(sigma)
    Delta = Fraction(0)
    for k, p in joint.items():
        pairs = max(0, windows - (m - k))
        Delta += pairs * p
    profile = overlap_profile(sigma).overlaps
    Delta_bound = n * sum(_lemma_pair_bound(m, k) for k in profile)
    return SuenParameters(n=n, m=m, mu=mu, delta=local_dependence(m),
                          Delta_exact=Delta, Delta_bound=Delta_bound)


def suen_finite(sigma: Pattern, n: int) -> SuenCheck:
    """``exp(-(1 - Delta e^{2 delta} / mu) mu)``, an upper bound on ``alpha_n / n!``."""
    sp = suen_parameters(sigma, n)
    penalty = float(sp.Delta_exact) * math.exp(2 * float(sp.delta))
    coefficient = 1 - penalty / float(sp.mu)
    return SuenCheck(bound=math.exp(-float(sp.mu) + penalty),
                     coefficient=coefficient, valid=coefficient > 0)


def _suen_rho(m: int, r: float) -> RhoBound:
    factor = r * math.exp(2 * float(local_dependence(m)))
    if factor < 1:
        return RhoBound(math.exp(-(1 - factor) / math.factorial(m)), True, factor)
    return RhoBound(1.0, False, factor)


def suen_upper(sigma: Pattern) -> RhoBound:
    """Per-position Suen bound on ``rho_sigma`` from the exact pair probabilities.

    With ``Delta / n -> sum_k Pr(A_0 and A_{m-k})`` and ``mu / n -> 1/m!`` the
    bound is ``exp(-(1 - r e^{2 delta}) / m!)``, ``r = m! * sum_k p_k``;
    vacuous (1.0, invalid) when ``r e^{2 delta} >= 1``.
    """
    sigma = _as_pattern(sigma)
    m = sigma.m
    r = math.factorial(m) * float(sum(joint_probabilities(sigma).values()))
    return _suen_rho(m, r)


def suen_upper_nonmonotone(m: int) -> RhoBound:
    """The same bound for every non-monotone pattern, pairs bounded by the binomial lemma."""
    if m < 3:
        raise ValueError("non-monotone patterns need m >= 3")
    r = math.factorial(m) * sum(_lemma_pair_bound(m, k) for k in range(1, m - 1))
    return _suen_rho(m, r)


def block_upper(m: int) -> float:
    """``(1 - 1/m!)^{1/m}``: disjoint windows at offsets ``0, m, 2m, ...``."""
    if m < 2:
        raise ValueError("need m >= 2")
    return (1 - 1 / math.factorial(m)) ** (1 / m)


def lll_weight(m: int) -> float:
    return math.exp((m - 1) / math.factorial(m)) / math.factorial(m)


def lll_lower(m: int) -> float:
    """``1 - e^{(m-1)/m!} / m!`` from the one-sided local lemma with constant weight."""
    if m < 2:
        raise ValueError("need m >= 2")
    x = lll_weight(m)
    if x >= 1:
        raise ValueError(f"local lemma weight {x} is not below 1")
    return 1 - x


def mk_upper(m: int, k: int) -> RhoBound:
    """Suen bound for every pattern in ``M_k``, with ``Delta/mu <= 4^{m-k} m! / (2m-k)!``."""
    if not 1 <= k <= m - 1:
        raise ValueError(f"need 1 <= k <= m-1, got k={k}, m={m}")
    r = float(Fraction(4 ** (m - k) * math.factorial(m), math.factorial(2 * m - k)))
    return _suen_rho(m, r)


def gap_corollary(m: int, rho_mono: float, rho_sigma: float) -> bool:
    """Whether ``1 - rho_sigma >= (1 + 1/m)(1 - rho_mono)``."""
    return 1 - rho_sigma >= (1 + 1 / m) * (1 - rho_mono)


def bound_report(m: int, k: int | None = None, sigma: Pattern | None = None,
                 n: int | None = None, alpha_n: int | None = None) -> BoundReport:
    """Evaluate every bound for length ``m``.

    With ``sigma`` the Suen bound uses its exact pair probabilities, else the
    non-monotone bound.  With ``sigma`` and ``n`` the finite Suen bound on
    ``alpha_n / n!`` is added, checked against ``alpha_n`` when given.
    """
    if sigma is not None:
        sigma = _as_pattern(sigma)
        if sigma.m != m:
            raise ValueError(f"pattern length {sigma.m} does not match m={m}")
    rep = BoundReport(m=m, k=k, pattern=sigma)
    rep.lower_lll = lll_lower(m)
    rep.upper_block = block_upper(m)
    rep.flags["lower_lll"] = True
    rep.flags["upper_block"] = True
    if sigma is not None:
        su = suen_upper(sigma)
    elif m >= 3:
        su = suen_upper_nonmonotone(m)
    else:
        su = RhoBound(1.0, False)
    rep.upper_suen = su.value
    rep.flags["upper_suen"] = su.valid
    if k is not None:
        mk = mk_upper(m, k)
        rep.upper_mk = mk.value
        rep.flags["upper_mk"] = mk.valid
        if sigma is not None:
            rep.flags["pattern_in_M_k"] = overlap_profile(sigma).max_overlap <= k
    if sigma is not None and n is not None:
        chk = suen_finite(sigma, n)
        rep.n_used = n
        rep.finite_suen = chk.bound
        rep.flags["finite_suen"] = chk.valid
        if alpha_n is not None:
            exact = Fraction(alpha_n, math.factorial(n))
            rep.flags["finite_suen_holds"] = chk.bound + 1e-12 >= float(exact)
    return rep
