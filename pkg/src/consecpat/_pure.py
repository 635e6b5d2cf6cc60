"""Pure-Python kernels. Same signatures and results as ``_kernels.pyx``.

Patterns and permutations here are plain tuples of 1-based ints.
"""

from collections import defaultdict
from itertools import permutations
from math import factorial

NAME = "python"


def _ranks0(values):
    order = sorted(range(len(values)), key=values.__getitem__)
    ranks = [0] * len(values)
    for r, i in enumerate(order):
        ranks[i] = r
    return tuple(ranks)


def _inverse0(sigma):
    inv = [0] * len(sigma)
    for pos, v in enumerate(sigma):
        inv[v - 1] = pos
    return inv


def has_occurrence(perm, sigma):
    """True if some window of ``perm`` is order-isomorphic to ``sigma``."""
    m = len(sigma)
    inv = _inverse0(sigma)
    for i in range(len(perm) - m + 1):
        prev = perm[i + inv[0]]
        for t in range(1, m):
            cur = perm[i + inv[t]]
            if cur < prev:
                break
            prev = cur
        else:
            return True
    return False


def brute_count(sigma, n):
    """Number of permutations of length ``n`` avoiding ``sigma``, by enumeration."""
    return sum(1 for p in permutations(range(n)) if not has_occurrence(p, sigma))


def dp_counts(sigma, n_max):
    """Exact avoider counts for lengths ``0..n_max``.

    A state is the tuple of ranks (0-based, within the current prefix) of the
    last ``m - 1`` entries.  Appending a new entry of relative rank ``r``
    shifts every rank ``>= r`` up by one.  The new length-``m`` window
    matches ``sigma`` exactly when the old state has the order type of
    ``sigma[:-1]`` and ``r`` lands in gap ``sigma[-1] - 1`` of it.
    """
    m = len(sigma)
    q = m - 1
    if q == 0:
        return [1] + [0] * n_max
    counts = [factorial(length) for length in range(min(n_max, q) + 1)]
    if n_max <= q:
        return counts
    head = _ranks0(sigma[:q])
    gap = sigma[-1] - 1
    layer = {p: 1 for p in permutations(range(q))}
    for length in range(q, n_max):
        nxt = defaultdict(int)
        for state, c in layer.items():
            kill = _ranks0(state) == head
            tail = state[1:]
            for r in range(length + 1):
                if kill and sum(1 for x in state if x < r) == gap:
                    continue
                new = tuple(x + 1 if x >= r else x for x in tail) + (r,)
                nxt[new] += c
        layer = nxt
        counts.append(sum(layer.values()))
    return counts


def overlap_mask(sigma):
    """Bit ``k`` set iff the length-``k`` prefix and suffix have the same order type."""
    m = len(sigma)
    mask = 0
    for k in range(1, m):
        if _ranks0(sigma[:k]) == _ranks0(sigma[m - k:]):
            mask |= 1 << k
    return mask
