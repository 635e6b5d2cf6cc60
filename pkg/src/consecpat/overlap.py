"""Overlap structure of consecutive patterns.

A pattern of length ``m`` overlaps at ``k`` (``1 <= k <= m - 1``) when its
length-``k`` prefix and suffix have the same order type; two occurrences of
the pattern at distance ``m - k`` can coexist only then.  ``N_k`` is the set
of patterns overlapping at ``k`` and ``M_k`` the set with no overlap larger
than ``k`` (``M_1`` are the non-overlapping patterns).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from math import comb, factorial

from . import kernels
from .perm import Pattern, all_patterns, standardize

EXHAUSTIVE_M = 8
ENUMERATION_LENGTH = 11


class ImpossibleEventPair(ValueError):
    """Two occurrences at distance ``m - k`` cannot coexist (no overlap at ``k``)."""


@dataclass(frozen=True)
class OverlapProfile:
    m: int
    overlaps: frozenset[int]
    max_overlap: int

    def in_M(self, j: int) -> bool:
        return self.max_overlap <= j

    def in_N(self, k: int) -> bool:
        return k in self.overlaps


@dataclass(frozen=True)
class OverlapClass:
    max_overlap: int
    is_non_overlapping: bool
    is_monotone: bool


@dataclass(frozen=True)
class JointCount:
    """Words of length ``2m - k`` holding occurrences at offsets 0 and ``m - k``."""

    k: int
    count: int
    bound: int
    length: int
    method: str

    @property
    def probability(self) -> float:
        return self.count / factorial(self.length)


@dataclass(frozen=True)
class MonotoneLemmaResult:
    m: int
    patterns_with_overlap_at_m_minus_1: list[Pattern]

    @property
    def holds(self) -> bool:
        m = self.m
        return sorted(p.entries for p in self.patterns_with_overlap_at_m_minus_1) == [
            tuple(range(1, m + 1)), tuple(range(m, 0, -1))]


@dataclass
class OverlapSets:
    m: int
    total: int
    n_sizes: dict[int, int] = field(default_factory=dict)
    m_sizes: dict[int, int] = field(default_factory=dict)
    max_overlap_sizes: dict[int, int] = field(default_factory=dict)

    def n_fraction(self, k: int) -> float:
        return self.n_sizes[k] / self.total

    @property
    def non_overlapping_fraction(self) -> float:
        return self.m_sizes[1] / self.total


def _as_pattern(sigma) -> Pattern:
    return sigma if isinstance(sigma, Pattern) else Pattern(tuple(sigma))


def overlap_profile(sigma: Pattern) -> OverlapProfile:
    sigma = _as_pattern(sigma)
    m = sigma.m
    if m < 2:
        raise ValueError("overlap profile needs m >= 2")
    mask = kernels.overlap_mask(sigma.entries)
    overlaps = frozenset(k for k in range(1, m) if mask >> k & 1)
    return OverlapProfile(m, overlaps, max(overlaps))


def classify(sigma: Pattern) -> OverlapClass:
    prof = overlap_profile(sigma)
    return OverlapClass(
        max_overlap=prof.max_overlap,
        is_non_overlapping=prof.max_overlap == 1,
        is_monotone=prof.max_overlap == prof.m - 1,
    )


def _check_exhaustive(m: int, low: int) -> None:
    if not low <= m <= EXHAUSTIVE_M:
        raise ValueError(f"exhaustive scans need {low} <= m <= {EXHAUSTIVE_M}, got m={m}")


def verify_monotone_lemma(m: int) -> MonotoneLemmaResult:
    """Collect every pattern of length ``m`` that overlaps at ``m - 1``."""
    _check_exhaustive(m, 3)
    found = [p for p in all_patterns(m) if (m - 1) in overlap_profile(p).overlaps]
    return MonotoneLemmaResult(m, found)


def _check_k(m: int, k: int) -> None:
    if not 1 <= k <= m - 1:
        raise ValueError(f"overlap position must satisfy 1 <= k <= m-1, got k={k}, m={m}")


def forced_suffix(sigma: Pattern, k: int) -> dict[int, int]:
    """Values forced at positions ``m - i`` (1-based, ``0 <= i < k``) of a double occurrence.

    Returns ``{position: value}`` for the ``k`` shared positions of any
    word of length ``2m - k`` with occurrences of ``sigma`` at offsets 0
    and ``m - k``.
    """
    sigma = _as_pattern(sigma)
    m = sigma.m
    _check_k(m, k)
    if k not in overlap_profile(sigma).overlaps:
        raise ImpossibleEventPair(
            f"impossible event pair: {sigma} has no overlap at k={k}")
    s = sigma.entries
    tail = standardize(s[m - k:]).entries
    # 1-based indices: tau_{m-i} = s_{k-i} + s_{m-i} - tail_{k-i}
    return {m - i: s[k - i - 1] + s[m - i - 1] - tail[k - i - 1] for i in range(k)}


def _place(sigma: tuple[int, ...], values) -> list[int]:
    ordered = sorted(values)
    return [ordered[v - 1] for v in sigma]


def double_occurrence_words(sigma: Pattern, k: int) -> list[tuple[int, ...]]:
    """Every word of ``S_{2m-k}`` with occurrences at offsets 0 and ``m - k``.

    Exhaustive over the words satisfying the first occurrence: choose its
    value set, arrange it by ``sigma``, then try every order of the rest.
    """
    sigma = _as_pattern(sigma)
    m = sigma.m
    _check_k(m, k)
    s = sigma.entries
    length = 2 * m - k
    inv = [0] * m
    for pos, v in enumerate(s):
        inv[v - 1] = pos
    universe = range(1, length + 1)
    words = []
    for first in combinations(universe, m):
        head = _place(s, first)
        taken = set(first)
        rest = [v for v in universe if v not in taken]
        for tail in permutations(rest):
            tau = tuple(head) + tail
            window = tau[m - k:]
            if all(window[inv[t - 1]] < window[inv[t]] for t in range(1, m)):
                words.append(tau)
    return words


def _constructive_count(sigma: Pattern, k: int) -> int:
    """Count double occurrences by choosing the free prefix values.

    The ``k`` shared positions carry forced values; the first ``m - k``
    positions take some ``(m - k)``-subset of the remaining ``2(m - k)``
    values, after which both windows are determined and only need checking.
    """
    m = sigma.m
    if k not in overlap_profile(sigma).overlaps:
        return 0
    s = sigma.entries
    length = 2 * m - k
    forced = forced_suffix(sigma, k)
    shared = [forced[p] for p in range(m - k + 1, m + 1)]
    free = sorted(set(range(1, length + 1)) - set(shared))
    count = 0
    for chosen in combinations(free, m - k):
        left = _place(s, list(chosen) + shared)
        if left[m - k:] != shared:
            continue
        picked = set(chosen)
        others = [v for v in free if v not in picked]
        right = _place(s, shared + others)
        if right[:k] == shared:
            count += 1
    return count


def joint_count(sigma: Pattern, k: int, method: str | None = None) -> JointCount:
    """Exact number of words of length ``2m - k`` with both occurrences.

    ``method`` is ``"enumerate"`` (exhaustive, default while ``2m - k <= 11``)
    or ``"constructive"`` (forced shared values, one check per free subset).
    """
    sigma = _as_pattern(sigma)
    m = sigma.m
    _check_k(m, k)
    length = 2 * m - k
    if method is None:
        method = "enumerate" if length <= ENUMERATION_LENGTH else "constructive"
    if method == "enumerate":
        count = len(double_occurrence_words(sigma, k))
    elif method == "constructive":
        count = _constructive_count(sigma, k)
    else:
        raise ValueError(f"unknown method {method!r}")
    return JointCount(k=k, count=count, bound=comb(2 * (m - k), m - k),
                      length=length, method=method)


def enumerate_overlap_sets(m: int) -> OverlapSets:
    """Exact sizes of ``N_k`` and ``M_k`` over all patterns of length ``m``."""
    _check_exhaustive(m, 2)
    out = OverlapSets(m=m, total=factorial(m))
    n_sizes = {k: 0 for k in range(1, m)}
    by_max = {k: 0 for k in range(1, m)}
    for p in all_patterns(m):
        prof = overlap_profile(p)
        for k in prof.overlaps:
            n_sizes[k] += 1
        by_max[prof.max_overlap] += 1
    running = 0
    for k in range(1, m):
        running += by_max[k]
        out.m_sizes[k] = running
    out.n_sizes = n_sizes
    out.max_overlap_sizes = by_max
    return out


def joint_rows(sigma: Pattern) -> list[dict]:
    """Report rows ``{m, k, count, bound, fraction}`` for every ``k``."""
    sigma = _as_pattern(sigma)
    rows = []
    for k in range(1, sigma.m):
        jc = joint_count(sigma, k)
        rows.append({"m": sigma.m, "k": k, "count": jc.count, "bound": jc.bound,
                     "fraction": jc.probability})
    return rows


def overlap_set_rows(m: int) -> list[dict]:
    """Report rows ``{m, k, count, bound, fraction}`` with ``count = |N_k|``.

    ``bound`` is the size predicted for ``N_k``: exactly ``m!/k!`` when
    ``2k <= m``, ``2`` at ``k = m - 1``, else ``floor(m! * 2**(1 - m/2))``.
    """
    sets = enumerate_overlap_sets(m)
    rows = []
    for k in range(1, m):
        if 2 * k <= m:
            bound = sets.total // factorial(k)
        elif k == m - 1:
            bound = 2
        else:
            bound = int(sets.total * 2.0 ** (1 - m / 2))
        rows.append({"m": m, "k": k, "count": sets.n_sizes[k], "bound": bound,
                     "fraction": sets.n_fraction(k)})
    return rows

