"""Permutations, consecutive patterns and the symmetry maps acting on them.

Values are 1-based (a pattern of length ``m`` is a permutation of ``1..m``);
occurrence offsets are 0-based, so an occurrence at ``i`` covers
``pi[i:i + m]``.

>>> standardize((10, 2, 7))
Pattern((3, 1, 2))
>>> occurrences(Permutation((1, 5, 3, 2, 4)), Pattern((1, 3, 2)))
[0]
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Pattern", "Permutation", "standardize", "occurrences", "contains",
    "reverse", "complement", "random_pattern", "random_permutation",
    "parse_pattern", "format_pattern", "all_patterns", "is_monotone",
]


def _check_perm(entries: tuple[int, ...], what: str) -> None:
    if sorted(entries) != list(range(1, len(entries) + 1)):
        raise ValueError(f"{what} {entries!r} is not a permutation of 1..{len(entries)}")


@dataclass(frozen=True, order=True)
class Pattern:
    """A permutation of ``1..m`` used as a consecutive pattern."""

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(v) for v in self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise ValueError("a pattern needs at least one entry")
        _check_perm(entries, "pattern")

    @property
    def m(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __repr__(self) -> str:
        return f"Pattern({self.entries!r})"

    def __str__(self) -> str:
        return format_pattern(self)


@dataclass(frozen=True)
class Permutation:
    """A permutation of ``1..n``; ``n = 0`` is allowed."""

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(v) for v in self.entries)
        object.__setattr__(self, "entries", entries)
        _check_perm(entries, "permutation")

    @property
    def n(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]


def _ranks(values: Sequence[int]) -> tuple[int, ...]:
    order = sorted(range(len(values)), key=values.__getitem__)
    ranks = [0] * len(values)
    for r, i in enumerate(order, start=1):
        ranks[i] = r
    return tuple(ranks)


def standardize(values: Sequence[int]) -> Pattern:
    """Relabel distinct values onto ``1..k`` keeping their relative order."""
    values = tuple(values)
    if not values:
        raise ValueError("cannot standardize an empty sequence")
    if len(set(values)) != len(values):
        raise ValueError(f"values must be distinct, got {values!r}")
    return Pattern(_ranks(values))


def occurrences(pi: Permutation | Sequence[int], sigma: Pattern) -> list[int]:
    """All offsets ``i`` where ``pi[i:i+m]`` standardizes to ``sigma``."""
    entries = tuple(pi)
    m = sigma.m
    target = sigma.entries
    return [i for i in range(len(entries) - m + 1)
            if _ranks(entries[i:i + m]) == target]


def contains(pi: Permutation | Sequence[int], sigma: Pattern) -> bool:
    entries = tuple(pi)
    m = sigma.m
    target = sigma.entries
    return any(_ranks(entries[i:i + m]) == target
               for i in range(len(entries) - m + 1))


def reverse(p: Pattern) -> Pattern:
    return Pattern(p.entries[::-1])


def complement(p: Pattern) -> Pattern:
    m = p.m
    return Pattern(tuple(m + 1 - v for v in p.entries))


def is_monotone(p: Pattern) -> bool:
    e = p.entries
    return e == tuple(range(1, p.m + 1)) or e == tuple(range(p.m, 0, -1))


def random_permutation(n: int, rng: random.Random) -> tuple[int, ...]:
    """Fisher-Yates shuffle of ``1..n`` driven by ``rng.randrange``."""
    a = list(range(1, n + 1))
    for i in range(n - 1, 0, -1):
        j = rng.randrange(i + 1)
        a[i], a[j] = a[j], a[i]
    return tuple(a)


def random_pattern(m: int, seed: int) -> Pattern:
    """Uniform pattern of length ``m``, deterministic in ``(m, seed)``.

    The generator is CPython's Mersenne Twister seeded with the integer
    ``seed``, feeding a descending Fisher-Yates shuffle.
    """
    if m < 1:
        raise ValueError("pattern length must be at least 1")
    return Pattern(random_permutation(m, random.Random(seed)))


def parse_pattern(text: str) -> Pattern:
    """Parse ``"132"`` or ``"1,10,2,..."``; rejects non-permutations."""
    text = text.strip()
    if not text:
        raise ValueError("empty pattern string")
    if "," in text:
        parts = [t.strip() for t in text.split(",")]
    else:
        parts = list(text)
    try:
        values = tuple(int(t) for t in parts)
    except ValueError:
        raise ValueError(f"cannot parse pattern {text!r}") from None
    if "," not in text and len(values) > 9:
        raise ValueError("patterns longer than 9 must be comma-separated")
    return Pattern(values)


def format_pattern(p: Pattern | Iterable[int]) -> str:
    entries = tuple(p)
    if len(entries) <= 9:
        return "".join(str(v) for v in entries)
    return ",".join(str(v) for v in entries)


def all_patterns(m: int) -> Iterator[Pattern]:
    """Every pattern of length ``m`` in lexicographic order."""
    from itertools import permutations
    for p in permutations(range(1, m + 1)):
        yield Pattern(p)
