"""Time the pure-Python kernels against the compiled ones.

    python benchmarks/bench_kernels.py [--repeat 3] [--quick]

Each case is checked to give identical results on both backends before it
is timed; the best of ``--repeat`` runs is reported.
"""

from __future__ import annotations

import argparse
import random
import time
from dataclasses import dataclass
from typing import Callable

from consecpat import kernels
from consecpat.perm import all_patterns, random_permutation


@dataclass
class Case:
    name: str
    run: Callable[[str], object]


def _perms(count: int, n: int, seed: int = 0) -> list[tuple[int, ...]]:
    rng = random.Random(seed)
    return [random_permutation(n, rng) for _ in range(count)]


def build_cases(quick: bool) -> list[Case]:
    dp_n = 11 if quick else 13
    brute_n = 8 if quick else 9
    perms = _perms(2_000 if quick else 20_000, 30)
    s6 = list(all_patterns(6))
    return [
        Case(f"dp_counts 1324, n={dp_n}",
             lambda b: kernels.dp_counts((1, 3, 2, 4), dp_n, backend=b)),
        Case(f"dp_counts 13254, n={dp_n - 1}",
             lambda b: kernels.dp_counts((1, 3, 2, 5, 4), dp_n - 1, backend=b)),
        Case(f"brute_count 1243, n={brute_n}",
             lambda b: kernels.brute_count((1, 2, 4, 3), brute_n, backend=b)),
        Case(f"has_occurrence x{len(perms)}, n=30, m=5",
             lambda b: sum(kernels.has_occurrence(p, (2, 4, 1, 5, 3), backend=b) for p in perms)),
        Case("overlap_mask over S_6",
             lambda b: [kernels.overlap_mask(p.entries, backend=b) for p in s6]),
    ]


def best_time(fn: Callable[[], object], repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None) -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--quick", action="store_true", help="smaller inputs")
    args = parser.parse_args(argv)

    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled kernels not built; timing the Python fallback only")
    header = f"{'case':<36}" + "".join(f"{b:>12}" for b in backends)
    if len(backends) > 1:
        header += f"{'speedup':>10}"
    print(header)
    for case in build_cases(args.quick):
        results = {b: case.run(b) for b in backends}
        if len({repr(r) for r in results.values()}) != 1:
            raise SystemExit(f"backends disagree on {case.name}")
        times = {b: best_time(lambda b=b: case.run(b), args.repeat) for b in backends}
        line = f"{case.name:<36}" + "".join(f"{times[b]:>11.4f}s" for b in backends)
        if len(backends) > 1:
            line += f"{times['python'] / times['cython']:>9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
