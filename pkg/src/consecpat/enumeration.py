"""Exact and sampled counts of permutations avoiding a consecutive pattern.

``alpha_n(sigma)`` is the number of permutations of length ``n`` with no
window order-isomorphic to ``sigma``.  Two exact routes are provided: a
brute-force scan over all ``n!`` permutations (the oracle) and a layered
dynamic program that is polynomial in ``n`` for fixed ``m``.
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .overlap import classify
from .perm import Pattern, all_patterns, complement, random_permutation, reverse

BRUTE_FORCE_MAX_N = 10
DEFAULT_MAX_STATES = 20_000_000
MC_CHUNK = 10_000


class CapacityError(RuntimeError):
    """The requested DP would exceed the configured state budget."""


@dataclass(frozen=True)
class CountTable:
    sigma: Pattern
    counts: tuple[int, ...]

    @property
    def N(self) -> int:
        return len(self.counts) - 1

    def __getitem__(self, n: int) -> int:
        return self.counts[n]

    def probability(self, n: int) -> Fraction:
        """Exact probability that a uniform permutation of length ``n`` avoids ``sigma``."""
        return Fraction(self.counts[n], math.factorial(n))


@dataclass(frozen=True)
class RhoEstimate:
    """Finite-``n`` estimates of the growth rate.

    ``ratio_sequence[n] = alpha_{n+1} / ((n+1) alpha_n)`` for ``n = 0..N-1``
    converges geometrically and is the one to use; ``root_sequence[n - 1] =
    (alpha_n / n!)**(1/n)`` for ``n = 1..N`` carries an ``O(log(c)/n)`` bias.
    """

    ratio_sequence: tuple[float, ...]
    root_sequence: tuple[float, ...]

    @property
    def ratio(self) -> float:
        return self.ratio_sequence[-1]


@dataclass(frozen=True)
class MonteCarloEstimate:
    p_hat: float
    std_err: float
    samples: int
    hits: int


@dataclass(frozen=True)
class ScanRow:
    pattern: Pattern
    alpha_n: int
    class_rep: Pattern
    is_monotone: bool
    max_overlap: int


@dataclass(frozen=True)
class ScanResult:
    m: int
    n: int
    rows: tuple[ScanRow, ...]

    @property
    def classes(self) -> list[Pattern]:
        return sorted({r.class_rep for r in self.rows})

    @property
    def argmax(self) -> list[Pattern]:
        best = max(r.alpha_n for r in self.rows)
        return [r.pattern for r in self.rows if r.alpha_n == best]

    @property
    def argmin(self) -> list[Pattern]:
        low = min(r.alpha_n for r in self.rows)
        return [r.pattern for r in self.rows if r.alpha_n == low]


def _as_pattern(sigma) -> Pattern:
    return sigma if isinstance(sigma, Pattern) else Pattern(tuple(sigma))


def count_bruteforce(sigma: Pattern, n: int, backend: str | None = None) -> int:
    sigma = _as_pattern(sigma)
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > BRUTE_FORCE_MAX_N:
        raise ValueError(f"brute force is limited to n <= {BRUTE_FORCE_MAX_N}; use count_dp")
    return kernels.brute_count(sigma.entries, n, backend=backend)


def dp_state_count(m: int, n_max: int) -> int:
    """Number of DP states in the widest layer (prefix length ``n_max - 1``)."""
    length = n_max - 1
    if length < m - 1:
        return math.factorial(max(m - 1, 0))
    return math.perm(length, m - 1)


def count_dp(sigma: Pattern, n_max: int, *, backend: str | None = None,
             max_states: int = DEFAULT_MAX_STATES) -> CountTable:
    """Exact table ``alpha_0..alpha_{n_max}`` by the rank-tuple dynamic program."""
    sigma = _as_pattern(sigma)
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    states = dp_state_count(sigma.m, n_max)
    if states > max_states:
        raise CapacityError(
            f"DP for m={sigma.m}, n_max={n_max} needs {states} states "
            f"(budget {max_states})")
    counts = kernels.dp_counts(sigma.entries, n_max, backend=backend)
    return CountTable(sigma, tuple(counts))


def rho_estimates(table: CountTable) -> RhoEstimate:
    m, N = table.sigma.m, table.N
    if N < m + 1:
        raise ValueError(f"need counts up to n >= m + 1 = {m + 1}, table stops at {N}")
    c = table.counts
    if any(v == 0 for v in c):
        raise ValueError("growth rate undefined: some alpha_n vanish")
    ratio = tuple(float(Fraction(c[n + 1], (n + 1) * c[n])) for n in range(N))
    root = tuple(_nth_root_probability(c[n], n) for n in range(1, N + 1))
    return RhoEstimate(ratio, root)


def _nth_root_probability(count: int, n: int) -> float:
    p = float(Fraction(count, math.factorial(n)))
    if p > 0.0:
        return p ** (1 / n)
    return math.exp((math.log(count) - math.lgamma(n + 1)) / n)


def _mc_chunk(args) -> int:
    entries, n, size, seed, index = args
    rng = random.Random(f"{seed}/{index}")
    hits = 0
    for _ in range(size):
        if not kernels.has_occurrence(random_permutation(n, rng), entries):
            hits += 1
    return hits


def mc_avoidance(sigma: Pattern, n: int, samples: int, seed: int = 0,
                 workers: int | None = None) -> MonteCarloEstimate:
    """Estimate ``alpha_n / n!`` from uniform random permutations.

    Samples are split into fixed chunks of ``MC_CHUNK`` with per-chunk seeds
    derived from ``seed``, so the result does not depend on ``workers``.
    """
    sigma = _as_pattern(sigma)
    if samples < 1:
        raise ValueError("samples must be >= 1")
    jobs = []
    done = 0
    index = 0
    while done < samples:
        size = min(MC_CHUNK, samples - done)
        jobs.append((sigma.entries, n, size, seed, index))
        done += size
        index += 1
    if workers and workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            hits = sum(pool.map(_mc_chunk, jobs))
    else:
        hits = sum(map(_mc_chunk, jobs))
    p = hits / samples
    return MonteCarloEstimate(p_hat=p, std_err=math.sqrt(p * (1 - p) / samples),
                              samples=samples, hits=hits)


def symmetry_class(sigma: Pattern) -> list[Pattern]:
    """The orbit of ``sigma`` under reverse and complement."""
    sigma = _as_pattern(sigma)
    rc = reverse(complement(sigma))
    return sorted({sigma, reverse(sigma), complement(sigma), rc})


def class_rep(sigma: Pattern) -> Pattern:
    return symmetry_class(sigma)[0]


def _alpha(args) -> int:
    entries, n = args
    return kernels.dp_counts(entries, n)[n]


def scan_patterns(m: int, n: int, workers: int | None = None,
                  max_states: int = DEFAULT_MAX_STATES) -> ScanResult:
    """``alpha_n`` for every pattern of length ``m``, one DP per symmetry class."""
    if not 2 <= m <= 5:
        raise ValueError(f"pattern scans support 2 <= m <= 5, got m={m}")
    states = dp_state_count(m, n)
    if states > max_states:
        raise CapacityError(f"DP for m={m}, n={n} needs {states} states (budget {max_states})")
    patterns = list(all_patterns(m))
    reps = sorted({class_rep(p) for p in patterns})
    jobs = [(r.entries, n) for r in reps]
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            values = list(pool.map(_alpha, jobs))
    else:
        values = [_alpha(j) for j in jobs]
    by_rep = dict(zip(reps, values))
    rows = []
    for p in patterns:
        rep = class_rep(p)
        cls = classify(p)
        rows.append(ScanRow(p, by_rep[rep], rep, cls.is_monotone, cls.max_overlap))
    return ScanResult(m, n, tuple(rows))
