"""On-disk cache of exact count tables, one plain-text file per (pattern, n_max)."""

from __future__ import annotations

import os
import tempfile
from pathlib import Path

from .enumeration import CountTable, count_dp
from .perm import Pattern, format_pattern, parse_pattern

ENV_VAR = "CONSECPAT_CACHE_DIR"
HEADER = "# consecpat count table v1"


def cache_dir(flag: str | os.PathLike | None = None) -> Path:
    """Flag beats environment beats the default under ``~/.cache``."""
    if flag:
        return Path(flag)
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "consecpat"


def entry_path(root: Path, sigma: Pattern, n_max: int) -> Path:
    return root / f"counts-{'-'.join(map(str, sigma.entries))}-n{n_max}.txt"


def dumps(table: CountTable) -> str:
    lines = [HEADER, f"pattern {format_pattern(table.sigma)}", f"n_max {table.N}"]
    lines.extend(str(c) for c in table.counts)
    return "\n".join(lines) + "\n"


def loads(text: str) -> CountTable:
    lines = text.splitlines()
    if len(lines) < 3 or lines[0] != HEADER:
        raise ValueError("not a count-table cache file")
    key, _, value = lines[1].partition(" ")
    if key != "pattern":
        raise ValueError("missing pattern line")
    sigma = parse_pattern(value)
    key, _, value = lines[2].partition(" ")
    if key != "n_max":
        raise ValueError("missing n_max line")
    n_max = int(value)
    counts = tuple(int(v) for v in lines[3:])
    if len(counts) != n_max + 1:
        raise ValueError("truncated count table")
    return CountTable(sigma, counts)


def load(root: Path, sigma: Pattern, n_max: int) -> CountTable | None:
    path = entry_path(root, sigma, n_max)
    try:
        table = loads(path.read_text())
    except (OSError, ValueError):
        return None
    if table.sigma != sigma or table.N != n_max:
        return None
    return table


def store(root: Path, table: CountTable) -> Path:
    """Write atomically: temp file in the same directory, then rename."""
    root.mkdir(parents=True, exist_ok=True)
    path = entry_path(root, table.sigma, table.N)
    fd, tmp = tempfile.mkstemp(dir=root, prefix=".tmp-", suffix=".txt")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(dumps(table))
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise
    return path


def cached_count_dp(sigma: Pattern, n_max: int, root: Path | None,
                    warn=None) -> CountTable:
    """``count_dp`` through the cache; write failures are reported via ``warn`` only."""
    if root is not None:
        hit = load(root, sigma, n_max)
        if hit is not None:
            return hit
    table = count_dp(sigma, n_max)
    if root is not None:
        try:
            store(root, table)
        except OSError as exc:
            if warn is not None:
                warn(f"cache write failed: {exc}")
    return table
