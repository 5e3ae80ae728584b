"""Command-line frontend.

One binary, one subcommand per library operation. The data stream
(stdout) carries only the requested artifact; everything else goes to
stderr. Exit codes are the machine-readable outcome: 0 success, 1 check
failures, 2 usage errors, 3 I/O or cache errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from pathlib import Path

from .bernoulli import (
    SQUARE_FREE_ESCALATION,
    bernoulli_record,
    find_square_factor,
    numerator,
    numerator_is_prime,
)
from . import cache as cachemod
from . import gcdlab
from . import powersum as ps
from . import sweeps
from ._version import __version__

FORMATS = ("plain", "json", "csv")

REPORT_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "moser-ladder verification report",
    "description": "Emitted by `verify --format json`. schema_version "
                   "identifies this layout; integers too large for common "
                   "JSON consumers are carried as decimal strings.",
    "type": "object",
    "required": ["schema_version", "tool_version", "profile", "checks",
                 "totals", "wall_time_s"],
    "properties": {
        "schema_version": {"const": sweeps.SCHEMA_VERSION},
        "tool_version": {"type": "string"},
        "profile": {"type": ["string", "null"]},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "grid", "rows", "pass", "fail",
                             "inapplicable", "counterexamples", "hits"],
                "properties": {
                    "name": {"enum": list(sweeps.CHECK_ORDER)},
                    "grid": {
                        "type": "object",
                        "required": ["k_min", "k_max", "m_min", "m_max"],
                        "additionalProperties": {"type": "integer"},
                    },
                    "rows": {"type": "integer"},
                    "pass": {"type": "integer"},
                    "fail": {"type": "integer"},
                    "inapplicable": {"type": "integer"},
                    "counterexamples": {"type": "array",
                                        "items": {"type": "object"}},
                    "hits": {"type": "array", "items": {"type": "object"}},
                },
            },
        },
        "totals": {
            "type": "object",
            "required": ["pass", "fail", "inapplicable"],
            "additionalProperties": {"type": "integer"},
        },
        "wall_time_s": {"type": "number"},
    },
}


def default_cache_path() -> str:
    base = os.environ.get("XDG_DATA_HOME") or str(Path.home() / ".local" / "share")
    return str(Path(base) / "moser-ladder" / "bernoulli.cache")


def _emit_json(obj) -> None:
    print(json.dumps(obj, sort_keys=True, indent=2))


def _emit_csv(header: list[str], rows: list[list]) -> None:
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)


def _cache_path(args) -> str | None:
    if args.seedless:
        return None
    return args.cache or default_cache_path()


def _warm(args) -> None:
    path = _cache_path(args)
    if path is not None and os.path.exists(path):
        cachemod.warm_bernoulli(cachemod.cache_load(path))


def _store(args, k_max: int) -> None:
    path = _cache_path(args)
    if path is None or k_max < 2:
        return
    base = cachemod.cache_load(path) if os.path.exists(path) else None
    cachemod.cache_store(cachemod.snapshot_bernoulli(k_max, base), path)


def _even_floor(k: int) -> int:
    return k if k % 2 == 0 else k - 1


def cmd_bern(args) -> int:
    _warm(args)
    rec = bernoulli_record(args.k)
    if args.format == "plain":
        print(rec.value)
    elif args.format == "json":
        _emit_json({"k": rec.k, "numerator": str(rec.numerator),
                    "denominator": str(rec.denominator),
                    "value": str(rec.value)})
    else:
        _emit_csv(["k", "numerator", "denominator"],
                  [[rec.k, rec.numerator, rec.denominator]])
    _store(args, _even_floor(args.k))
    return 0


def cmd_powersum(args) -> int:
    if args.naive:
        value = ps.power_sum_naive(args.k, args.m)
    else:
        _warm(args)
        value = ps.power_sum(args.k, args.m)
        _store(args, _even_floor(args.k))
    if args.format == "plain":
        print(value)
    elif args.format == "json":
        _emit_json({"k": args.k, "m": args.m, "value": str(value),
                    "method": "naive" if args.naive else "closed-form"})
    else:
        _emit_csv(["k", "m", "value"], [[args.k, args.m, value]])
    return 0


def cmd_gk(args) -> int:
    _warm(args)
    g = gcdlab.gcd_ratio(args.k, args.m)
    if args.format == "plain":
        print(g)
    elif args.format == "json":
        _emit_json({"k": args.k, "m": args.m, "value": str(g)})
    else:
        _emit_csv(["k", "m", "value"], [[args.k, args.m, g]])
    _store(args, args.k)
    return 0


def cmd_ladder(args) -> int:
    _warm(args)
    lad = gcdlab.gcd_ladder(args.k, args.m)
    rungs = [
        ("m", lad.observed_m1, str(lad.predicted_m1)),
        ("m^2", lad.observed_m2, str(lad.predicted_m2)),
        ("m^3", lad.observed_m3, str(lad.predicted_m3)),
        ("m^4", lad.observed_m4, "no formula"),
        ("m^k", lad.observed_mk, "see residual"),
    ]
    flags = [
        ("residual", lad.residual),
        ("residual_primes_divide_numerator",
         lad.residual_primes_divide_numerator),
        ("consecutive_matches", lad.consecutive_matches),
        ("monotone", lad.monotone),
        ("ok", lad.ok),
    ]
    if args.format == "plain":
        print(f"k={lad.k} m={lad.m}")
        wid = max(len(str(obs)) for _, obs, _ in rungs)
        for rung, obs, pred in rungs:
            print(f"{rung:<4} observed {obs!s:<{wid}} predicted {pred}")
        for name, value in flags:
            value = str(value).lower() if isinstance(value, bool) else value
            print(f"{name} {value}")
    elif args.format == "json":
        _emit_json({
            "k": lad.k, "m": lad.m,
            "observed": {r: str(o) for r, o, _ in rungs},
            "predicted": {r: p for r, _, p in rungs},
            **{name: str(v) if isinstance(v, int) and not isinstance(v, bool)
               else v for name, v in flags},
        })
    else:
        _emit_csv(["rung", "observed", "predicted"],
                  [[r, o, p] for r, o, p in rungs])
    _store(args, args.k)
    return 0


def cmd_search(args) -> int:
    _warm(args)
    if args.mode == "ratio":
        hits = [{"k": h.k, "m": h.m, "quotient": str(h.quotient)}
                for h in ps.search_ratio(args.kmax, args.mmax)]
        header = ["k", "m", "quotient"]
    else:
        hits = [{"k": k, "m": m} for k, m in ps.em_scan(args.kmax, args.mmax)]
        header = ["k", "m"]
    if args.format == "plain":
        for h in hits:
            print(" ".join(f"{name}={h[name]}" for name in header))
    elif args.format == "json":
        _emit_json({"mode": args.mode, "kmax": args.kmax, "mmax": args.mmax,
                    "hits": hits})
    else:
        _emit_csv(header, [[h[name] for name in header] for h in hits])
    _store(args, _even_floor(args.kmax))
    return 0


def cmd_scan(args) -> int:
    _warm(args)
    bounds = tuple(
        b for b in SQUARE_FREE_ESCALATION if b <= args.trial_bound
    ) or (args.trial_bound,)
    rows = []
    for k in range(2, args.kmax + 1, 2):
        n_abs = abs(numerator(k))
        found = find_square_factor(k, bounds)
        rows.append({
            "k": k,
            "digits": len(str(n_abs)),
            "prime": numerator_is_prime(k),
            "square_factor": str(found[0]) if found else None,
            "flagged_at_bound": found[1] if found else None,
            "clear_below": None if found else bounds[-1],
        })
    if args.format == "plain":
        for r in rows:
            if r["square_factor"] is not None:
                sq = f"{r['square_factor']}^2 (bound {r['flagged_at_bound']})"
            else:
                sq = f"none below {r['clear_below']}"
            print(f"k={r['k']} digits={r['digits']} "
                  f"prime={'yes' if r['prime'] else 'no'} square-factor={sq}")
    elif args.format == "json":
        _emit_json({"kmax": args.kmax, "trial_bound": args.trial_bound,
                    "numerators": rows})
    else:
        _emit_csv(
            ["k", "digits", "prime", "square_factor", "flagged_at_bound",
             "clear_below"],
            [[r["k"], r["digits"], r["prime"],
              r["square_factor"] or "", r["flagged_at_bound"] or "",
              r["clear_below"] or ""] for r in rows],
        )
    _store(args, args.kmax)
    return 0


def _parse_span(text: str, what: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("-")
    try:
        if sep:
            return int(lo), int(hi)
        return 1, int(text)
    except ValueError:
        raise ValueError(
            f"bad {what} span {text!r}, want MAX or MIN-MAX"
        ) from None


def cmd_verify(args) -> int:
    if (args.profile is None) == (args.grid is None):
        raise ValueError("verify needs a profile or --grid, not both")
    cache_path = _cache_path(args)
    if args.profile is not None:
        report = sweeps.verify_all(
            args.profile, jobs=args.jobs,
            cache_path=cache_path, seedless=args.seedless,
        )
    else:
        kspec, sep, mspec = args.grid.partition(":")
        if not sep:
            raise ValueError(
                f"bad --grid {args.grid!r}, want KSPAN:MSPAN (e.g. 2-12:100)"
            )
        k_min, k_max = _parse_span(kspec, "k")
        m_min, m_max = _parse_span(mspec, "m")
        checks = tuple(args.checks.split(",")) if args.checks else sweeps.CHECK_ORDER
        spec = sweeps.GridSpec(
            k_min=k_min, k_max=k_max, m_min=m_min, m_max=m_max,
            checks=checks, jobs=args.jobs, cache_path=cache_path,
            trial_bound=args.trial_bound, prefix_limit=args.prefix_limit,
        )
        report = sweeps.run_sweep(spec)
    d = report.as_dict()
    if args.format == "json":
        _emit_json(d)
    elif args.format == "csv":
        _emit_csv(
            ["check", "k_min", "k_max", "m_min", "m_max", "rows", "pass",
             "fail", "inapplicable", "counterexamples", "hits"],
            [[c["name"], c["grid"]["k_min"], c["grid"]["k_max"],
              c["grid"]["m_min"], c["grid"]["m_max"], c["rows"], c["pass"],
              c["fail"], c["inapplicable"], len(c["counterexamples"]),
              len(c["hits"])] for c in d["checks"]],
        )
    else:
        for c in d["checks"]:
            line = (f"{c['name']:<26} pass {c['pass']:<8} fail {c['fail']:<4} "
                    f"inapplicable {c['inapplicable']:<6} hits {len(c['hits'])}")
            print(line.rstrip())
        t = d["totals"]
        print(f"{'total':<26} pass {t['pass']:<8} fail {t['fail']:<4} "
              f"inapplicable {t['inapplicable']}")
        print("result: " + ("OK" if t["fail"] == 0 else "FAIL"))
    for c in d["checks"]:
        for cex in c["counterexamples"]:
            print(f"counterexample: {cex}", file=sys.stderr)
    return 0 if d["totals"]["fail"] == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="plain",
                        help="output format (default plain)")
    common.add_argument("--jobs", type=int, default=1, metavar="N",
                        help="worker processes for verification sweeps")
    common.add_argument("--cache", metavar="PATH", default=None,
                        help="Bernoulli cache file "
                             "(default: per-user data directory)")
    common.add_argument("--seedless", action="store_true",
                        help="ignore the cache entirely, compute from scratch")

    parser = argparse.ArgumentParser(
        prog="moser-ladder",
        description="Exact Bernoulli numbers, power sums, and the gcd "
                    "structure of consecutive power sums, with verification "
                    "sweeps over (k, m) grids.",
        epilog="run with --help-schema for the JSON report schema",
    )
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    parser.add_argument("--help-schema", action="store_true",
                        help="print the versioned JSON report schema and exit")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    p = sub.add_parser("bern", parents=[common],
                       help="Bernoulli number B_k in lowest terms")
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_bern)

    p = sub.add_parser("powersum", parents=[common],
                       help="power sum S_k(m) = 1^k + ... + (m-1)^k")
    p.add_argument("k", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--naive", action="store_true",
                   help="sum term by term instead of the closed form")
    p.set_defaults(func=cmd_powersum)

    p = sub.add_parser("gk", parents=[common],
                       help="gcd(S_k(m), S_k(m+1)) / m as an exact fraction")
    p.add_argument("k", type=int)
    p.add_argument("m", type=int)
    p.set_defaults(func=cmd_gk)

    p = sub.add_parser("ladder", parents=[common],
                       help="gcds of S_k(m) with m, m^2, m^3, m^4, m^k, "
                            "observed next to the closed forms")
    p.add_argument("k", type=int)
    p.add_argument("m", type=int)
    p.set_defaults(func=cmd_ladder)

    p = sub.add_parser("search", parents=[common],
                       help="scan for integral consecutive-sum ratios or "
                            "S_k(m) = m^k solutions")
    p.add_argument("mode", choices=("ratio", "em"))
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--mmax", type=int, required=True)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("scan", parents=[common],
                       help="numerator survey: digits, primality, "
                            "bounded square-factor hunt")
    p.add_argument("what", choices=("numerators",))
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--trial-bound", type=int, default=10_000,
                   help="largest square-factor trial bound (default 10000)")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify", parents=[common],
                       help="run a verification sweep and report")
    p.add_argument("profile", nargs="?",
                   choices=tuple(sorted(sweeps.PROFILES)),
                   help="named preset grid collection")
    p.add_argument("--grid", metavar="KSPAN:MSPAN",
                   help="custom grid, spans as MAX or MIN-MAX (e.g. 2-12:100)")
    p.add_argument("--checks", metavar="LIST",
                   help="comma-separated check names for --grid "
                        f"(default: all; known: {', '.join(sweeps.CHECK_ORDER)})")
    p.add_argument("--trial-bound", type=int, default=10_000)
    p.add_argument("--prefix-limit", type=int, default=2048)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if "--help-schema" in argv:
        _emit_json(REPORT_SCHEMA)
        return 0
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "command", None) is None:
        parser.print_usage(sys.stderr)
        return 2
    try:
        return args.func(args)
    except (cachemod.CacheError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
