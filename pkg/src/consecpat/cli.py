"""Command-line interface.

    consecpat count   --pattern 132 --n 5
    consecpat count   --pattern 132 --n-max 12
    consecpat scan    --m 4 --n 10
    consecpat overlap --pattern 1324 | --m 6
    consecpat bounds  --m 6 [--k 2] [--pattern P [--n N]]
    consecpat rho     --pattern 123 --n-max 15 | --m 5
    consecpat sample  --m 8 --samples 100000 --seed 0
    consecpat census  --m 8

Every command accepts ``--output json|csv|text`` (JSON is canonical; the
other two are rendered from it), ``--seed`` (default 0) and
``--cache-dir`` (overrides ``$CONSECPAT_CACHE_DIR``).  Exit codes: 0 ok,
2 invalid input, 3 capacity exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path

from . import bounds, cache, enumeration, overlap, series, stats
from .perm import Pattern, format_pattern, parse_pattern

COMMANDS = ("count", "scan", "overlap", "bounds", "rho", "sample", "census")
EXIT_OK, EXIT_INVALID, EXIT_CAPACITY = 0, 2, 3


@dataclass
class RunConfig:
    command: str
    pattern: Pattern | None = None
    m: int | None = None
    n: int | None = None
    n_max: int | None = None
    k: int | None = None
    samples: int | None = None
    seed: int = 0
    output: str = "json"
    cache_dir: Path | None = None


def _need(cfg: RunConfig, *names: str) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(cfg, n) is None]
    if missing:
        raise ValueError(f"{cfg.command} requires {', '.join(missing)}")


def _table(cfg: RunConfig, sigma: Pattern, n_max: int) -> enumeration.CountTable:
    return cache.cached_count_dp(sigma, n_max, cfg.cache_dir, warn=_warn)


def _warn(msg: str) -> None:
    print(f"consecpat: warning: {msg}", file=sys.stderr)


def run_count(cfg: RunConfig) -> dict:
    _need(cfg, "pattern")
    name = format_pattern(cfg.pattern)
    if cfg.n is not None:
        table = _table(cfg, cfg.pattern, cfg.n)
        return {"pattern": name, "n": cfg.n, "alpha": table[cfg.n]}
    _need(cfg, "n_max")
    table = _table(cfg, cfg.pattern, cfg.n_max)
    return {"pattern": name, "n_max": cfg.n_max, "counts": list(table.counts),
            "rows": [{"pattern": name, "n": n, "alpha": a} for n, a in enumerate(table.counts)]}


def run_scan(cfg: RunConfig) -> dict:
    _need(cfg, "m", "n")
    res = enumeration.scan_patterns(cfg.m, cfg.n)
    rows = [{"pattern": format_pattern(r.pattern), "m": cfg.m, "n": cfg.n,
             "alpha_n": r.alpha_n, "class_rep": format_pattern(r.class_rep),
             "is_monotone": r.is_monotone, "max_overlap": r.max_overlap}
            for r in res.rows]
    return {"m": cfg.m, "n": cfg.n,
            "classes": [format_pattern(c) for c in res.classes],
            "argmax": [format_pattern(p) for p in res.argmax],
            "argmin": [format_pattern(p) for p in res.argmin],
            "rows": rows}


def run_overlap(cfg: RunConfig) -> dict:
    if cfg.pattern is not None:
        prof = overlap.overlap_profile(cfg.pattern)
        cls = overlap.classify(cfg.pattern)
        return {"pattern": format_pattern(cfg.pattern), "m": prof.m,
                "overlaps": sorted(prof.overlaps), "max_overlap": prof.max_overlap,
                "is_non_overlapping": cls.is_non_overlapping,
                "is_monotone": cls.is_monotone,
                "rows": overlap.joint_rows(cfg.pattern)}
    _need(cfg, "m")
    sets = overlap.enumerate_overlap_sets(cfg.m)
    out = {"m": cfg.m,
           "m_sizes": {str(k): v for k, v in sets.m_sizes.items()},
           "non_overlapping_fraction": sets.non_overlapping_fraction,
           "rows": overlap.overlap_set_rows(cfg.m)}
    if cfg.m >= 3:
        out["monotone_lemma_holds"] = overlap.verify_monotone_lemma(cfg.m).holds
    return out


def run_bounds(cfg: RunConfig) -> dict:
    m = cfg.m if cfg.m is not None else (cfg.pattern.m if cfg.pattern else None)
    if m is None:
        raise ValueError("bounds requires --m or --pattern")
    alpha = None
    if cfg.pattern is not None and cfg.n is not None:
        alpha = _table(cfg, cfg.pattern, cfg.n)[cfg.n]
    rep = bounds.bound_report(m, k=cfg.k, sigma=cfg.pattern, n=cfg.n, alpha_n=alpha)
    return rep.to_dict()


def run_rho(cfg: RunConfig) -> dict:
    if cfg.pattern is not None:
        _need(cfg, "n_max")
        table = _table(cfg, cfg.pattern, cfg.n_max)
        est = enumeration.rho_estimates(table)
        rows = [{"n": n, "ratio": r, "root": est.root_sequence[n - 1] if n else None}
                for n, r in enumerate(est.ratio_sequence)]
        return {"pattern": format_pattern(cfg.pattern), "n_max": cfg.n_max,
                "rho_ratio": est.ratio, "rho_root": est.root_sequence[-1], "rows": rows}
    _need(cfg, "m")
    rows = []
    for kind in series.KINDS:
        spec = series.SeriesSpec(kind, cfg.m)
        try:
            rows.append(series.smallest_root(spec).to_dict(spec))
        except series.NoRootError:
            rows.append({"kind": kind, "m": cfg.m, "z0": None, "rho": None,
                         "residual": None, "truncation_terms": spec.truncation_terms})
    out = {"m": cfg.m, "rows": rows}
    if cfg.m >= 3:
        q = series.monotone_lb_quadratic(cfg.m)
        out["quadratic"] = {"epsilon_prime": q.epsilon_prime, "rho_lower": q.rho_lower,
                            "approx_epsilon": q.approx_epsilon, "valid": q.valid}
    return out


def run_sample(cfg: RunConfig) -> dict:
    _need(cfg, "m")
    samples = cfg.samples if cfg.samples is not None else 100_000
    reps = stats.sample_overlap_distribution(cfg.m, samples, cfg.seed)
    return {"m": cfg.m, "samples": samples, "seed": cfg.seed,
            "rows": [r.row() for r in reps]}


def run_census(cfg: RunConfig) -> dict:
    _need(cfg, "m")
    c = stats.mk_census(cfg.m)
    return {"m": cfg.m,
            "m_fractions": {str(k): v for k, v in c.m_fractions.items()},
            "non_overlapping_fraction": c.non_overlapping_fraction,
            "bona_inside": c.bona_inside,
            "above_three_minus_e": c.above_three_minus_e,
            "lemma_rows": c.lemma_rows,
            "rows": c.rows()}


HANDLERS = {
    "count": run_count, "scan": run_scan, "overlap": run_overlap,
    "bounds": run_bounds, "rho": run_rho, "sample": run_sample, "census": run_census,
}


def dispatch(cfg: RunConfig) -> dict:
    return HANDLERS[cfg.command](cfg)


def _clean(obj):
    if isinstance(obj, float) and not math.isfinite(obj):
        return None
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    return obj


def render(report: dict, output: str) -> str:
    report = _clean(report)
    if output == "json":
        return json.dumps(report, separators=(",", ":")) + "\n"
    rows = report.get("rows")
    if rows is None:
        flat = {}
        for key, value in report.items():
            if isinstance(value, dict):
                flat.update({f"{key}_{k}": v for k, v in value.items()})
            else:
                flat[key] = value
        rows = [flat]
    if output == "csv":
        buf = io.StringIO()
        fields = list(dict.fromkeys(k for r in rows for k in r))
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue()
    lines = [f"{k}: {v}" for k, v in report.items() if k != "rows"]
    if "rows" in report:
        fields = list(dict.fromkeys(k for r in rows for k in r))
        lines.append("  ".join(fields))
        lines.extend("  ".join(str(r.get(f, "")) for f in fields) for r in rows)
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="consecpat",
        description="Consecutive pattern avoidance: counts, overlaps, growth-rate bounds.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--pattern", type=str)
        p.add_argument("--m", type=int)
        p.add_argument("--n", type=int)
        p.add_argument("--n-max", dest="n_max", type=int)
        p.add_argument("--k", type=int)
        p.add_argument("--samples", type=int)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--output", choices=("json", "csv", "text"), default="json")
        p.add_argument("--cache-dir", dest="cache_dir", type=str)
    return parser


def parse_config(argv=None) -> RunConfig:
    args = build_parser().parse_args(argv)
    return RunConfig(
        command=args.command,
        pattern=parse_pattern(args.pattern) if args.pattern is not None else None,
        m=args.m, n=args.n, n_max=args.n_max, k=args.k, samples=args.samples,
        seed=args.seed, output=args.output,
        cache_dir=cache.cache_dir(args.cache_dir),
    )


def main(argv=None) -> int:
    try:
        cfg = parse_config(argv)
        for name in ("m", "n", "n_max", "k", "samples"):
            value = getattr(cfg, name)
            if value is not None and value < 0:
                raise ValueError(f"--{name.replace('_', '-')} must be nonnegative")
        report = dispatch(cfg)
    except enumeration.CapacityError as exc:
        print(f"consecpat: capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except ValueError as exc:
        print(f"consecpat: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    sys.stdout.write(render(report, cfg.output))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
