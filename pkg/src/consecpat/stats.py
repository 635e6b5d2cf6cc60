"""Overlap statistics of uniformly random patterns: sampling and exact census."""

from __future__ import annotations

import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import kernels
from .overlap import EXHAUSTIVE_M, enumerate_overlap_sets
from .perm import random_permutation

SAMPLE_CHUNK = 10_000
BONA_INTERVAL = (0.364098149, 0.3640992743)


@dataclass(frozen=True)
class SampleReport:
    m: int
    k: int
    samples: int
    hits: int
    fraction: float
    target: float
    std_err: float
    within_3sigma: bool
    kind: str  # "exact": target is the exact probability; "upper": an upper bound

    def row(self) -> dict:
        return {"m": self.m, "k": self.k, "exact_or_sampled": "sampled",
                "fraction": self.fraction, "target": self.target,
                "std_err": self.std_err, "flag": self.within_3sigma}


def overlap_target(m: int, k: int) -> tuple[float, str]:
    """Probability that a random pattern overlaps at ``k``, or an upper bound on it.

    Exact ``1/k!`` when ``2k <= m``; exact ``2/m!`` at ``k = m - 1`` (only the
    monotone patterns); otherwise the bound ``2^{1 - m/2}``.
    """
    if 2 * k <= m:
        return 1 / math.factorial(k), "exact"
    if k == m - 1:
        return 2 / math.factorial(m), "exact"
    return 2.0 ** (1 - m / 2), "upper"


def _sample_chunk(args) -> list[int]:
    m, size, seed, index = args
    rng = random.Random(f"{seed}/{index}")
    hits = [0] * m
    for _ in range(size):
        mask = kernels.overlap_mask(random_permutation(m, rng))
        for k in range(1, m):
            if mask >> k & 1:
                hits[k] += 1
    return hits


def sample_overlap_distribution(m: int, samples: int, seed: int = 0,
                                workers: int | None = None) -> list[SampleReport]:
    """Empirical ``Pr(sigma in N_k)`` for every ``k``, one report per ``k``.

    The budget is cut into fixed chunks with seeds derived from ``seed``;
    results are independent of ``workers``.
    """
    if m < 4:
        raise ValueError("sampling needs m >= 4")
    if samples < 1000:
        raise ValueError("sampling needs at least 1000 samples")
    jobs = []
    done = index = 0
    while done < samples:
        size = min(SAMPLE_CHUNK, samples - done)
        jobs.append((m, size, seed, index))
        done += size
        index += 1
    if workers and workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_sample_chunk, jobs))
    else:
        parts = [_sample_chunk(j) for j in jobs]
    totals = [sum(col) for col in zip(*parts)]
    reports = []
    for k in range(1, m):
        target, kind = overlap_target(m, k)
        frac = totals[k] / samples
        err = math.sqrt(target * (1 - target) / samples)
        if kind == "exact":
            ok = abs(frac - target) <= 3 * err
        else:
            ok = frac <= target + 3 * err
        reports.append(SampleReport(m, k, samples, totals[k], frac, target, err, ok, kind))
    return reports


@dataclass
class MkCensus:
    m: int
    m_fractions: dict[int, float]
    n_fractions: dict[int, float]
    non_overlapping_fraction: float
    lemma_rows: list[dict] = field(default_factory=list)
    bona_inside: bool = False
    above_three_minus_e: bool = False

    def rows(self) -> list[dict]:
        out = []
        for k, frac in self.n_fractions.items():
            target, kind = overlap_target(self.m, k)
            if kind == "exact":
                flag = math.isclose(frac, target, rel_tol=1e-12)
            else:
                flag = frac <= target
            out.append({"m": self.m, "k": k, "exact_or_sampled": "exact",
                        "fraction": frac, "target": target, "std_err": 0.0, "flag": flag})
        return out


def mk_census(m: int) -> MkCensus:
    """Exact ``N_k`` and ``M_k`` fractions, compared with the lower bound on ``|M_k|``."""
    if m > EXHAUSTIVE_M:
        raise ValueError(f"census is exhaustive up to m={EXHAUSTIVE_M}; "
                         "use sample_overlap_distribution for larger m")
    sets = enumerate_overlap_sets(m)
    total = sets.total
    m_frac = {k: sets.m_sizes[k] / total for k in range(1, m)}
    n_frac = {k: sets.n_sizes[k] / total for k in range(1, m)}
    rows = []
    for k in range(1, m // 2 + 1):
        lower = 1 - 2 / math.factorial(k + 1) - m * 2.0 ** (-m / 2)
        rows.append({"k": k, "fraction": m_frac[k], "lemma_lower": lower,
                     "vacuous": lower <= 0, "holds": m_frac[k] >= lower})
    non_ov = m_frac[1]
    return MkCensus(
        m=m, m_fractions=m_frac, n_fractions=n_frac, non_overlapping_fraction=non_ov,
        lemma_rows=rows,
        bona_inside=BONA_INTERVAL[0] <= non_ov <= BONA_INTERVAL[1],
        above_three_minus_e=non_ov >= 3 - math.e,
    )
