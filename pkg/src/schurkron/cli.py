"""Command-line front end: expansions, verification sweeps, series, cache.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O or
cache-integrity error.  All data output is deterministic: partitions are
rendered in decreasing lexicographic order and payloads carry no
timestamps.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import plots
from .closed_forms import product_hook, product_two_row
from .errors import CacheFormatError, CacheIntegrityError
from .partitions import format_partition, make_partition, parse_partition, partitions_of
from .schur import default_cache, kron_oracle, load_cache, save_cache
from .series import g_k, l_kr
from .verify import SWEEPS

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3

#: Largest degree the oracle-backed commands accept without --force.
DESK_SCALE_LIMIT = 26


def _add_output_options(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--format", choices=("json", "csv"), default="json",
                     help="output format (default json)")
    sub.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")
    sub.add_argument("--plot", metavar="FILE",
                     help="also render a figure of the result to FILE")


def _add_oracle_options(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--cache", metavar="FILE",
                     help="character cache file (default: $KRONCACHE_PATH)")
    sub.add_argument("--force", action="store_true",
                     help=f"allow degrees above the desk-scale limit {DESK_SCALE_LIMIT}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schurkron",
        description="Exact Kronecker products of Schur functions with a two-row rectangle.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    kron = commands.add_parser("kron", help="expand a Kronecker product")
    kron.add_argument("kind", choices=("two-row", "hook", "oracle"))
    kron.add_argument("--d", type=int, help="rectangle parameter (two-row and hook kinds)")
    kron.add_argument("--k", type=int, help="column/shift parameter")
    kron.add_argument("--mu", help="first factor as a partition literal, e.g. [2,1]")
    kron.add_argument("--nu", help="second factor as a partition literal")
    _add_output_options(kron)
    _add_oracle_options(kron)
    kron.set_defaults(handler=cmd_kron)

    verify = commands.add_parser("verify", help="run a verification sweep")
    verify.add_argument("target", choices=sorted(SWEEPS))
    verify.add_argument("--max-d", type=int, default=5, help="largest rectangle parameter")
    verify.add_argument("--max-k", type=int, default=3, help="largest shift parameter")
    verify.add_argument("--max-n", type=int, default=8, help="largest degree (bounded target)")
    _add_output_options(verify)
    _add_oracle_options(verify)
    verify.set_defaults(handler=cmd_verify)

    gf = commands.add_parser("gf", help="print a generating function and its series")
    gf.add_argument("kind", choices=("g", "l"))
    gf.add_argument("--k", type=int, required=True)
    gf.add_argument("--r", type=int, help="coefficient value (l kind only)")
    gf.add_argument("--order", type=int, default=10, help="series order (default 10)")
    _add_output_options(gf)
    gf.set_defaults(handler=cmd_gf)

    cache = commands.add_parser("cache", help="manage the persistent character cache")
    cache.add_argument("action", choices=("warm", "inspect"))
    cache.add_argument("--path", required=True, metavar="FILE")
    cache.add_argument("--max-n", type=int, default=12,
                       help="warm all characters of degree up to this (warm action)")
    cache.add_argument("--force", action="store_true",
                       help=f"allow degrees above the desk-scale limit {DESK_SCALE_LIMIT}")
    cache.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")
    cache.set_defaults(handler=cmd_cache)

    return parser


def _ensure_desk_scale(n: int, force: bool, parser: argparse.ArgumentParser) -> None:
    if n > DESK_SCALE_LIMIT and not force:
        parser.error(
            f"degree {n} exceeds the desk-scale limit {DESK_SCALE_LIMIT}; "
            "pass --force to proceed anyway")


def _cache_path(args) -> str | None:
    path = getattr(args, "cache", None)
    return path or os.environ.get("KRONCACHE_PATH")


def _load_cache_if_any(path: str | None) -> None:
    if not path:
        return
    if not os.path.exists(path):
        print(f"warning: cache file {path} not found; starting with an empty cache",
              file=sys.stderr)
        return
    default_cache().absorb(load_cache(path).items())


def _save_cache_if_any(path: str | None) -> None:
    if path:
        save_cache(default_cache(), path)


def _emit(text: str, out_path: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _expansion_payload(mu, nu, vec) -> dict:
    return {
        "mu": list(mu),
        "nu": list(nu),
        "terms": [{"lambda": list(lam), "coeff": c} for lam, c in vec.items()],
    }


def _expansion_csv(mu, nu, vec) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["mu", "nu", "lambda", "coeff"])
    for lam, c in vec.items():
        writer.writerow([format_partition(mu), format_partition(nu),
                         format_partition(lam), c])
    return buffer.getvalue()


def cmd_kron(args, parser) -> int:
    if args.kind in ("two-row", "hook"):
        if args.d is None or args.k is None:
            parser.error(f"kron {args.kind} requires --d and --k")
        d, k = args.d, args.k
        if args.kind == "two-row":
            if d < 1 or not 0 <= k <= d:
                parser.error("two-row expansion needs d >= 1 and 0 <= k <= d")
            vec = product_two_row(d, k)
            mu, nu = (d, d), make_partition((d + k, d - k))
        else:
            if d < 1 or not 0 <= k <= 2 * d - 1:
                parser.error("hook expansion needs d >= 1 and 0 <= k <= 2d-1")
            vec = product_hook(d, k)
            mu, nu = (d, d), make_partition((2 * d - k,) + (1,) * k)
    else:
        if not args.mu or not args.nu:
            parser.error("kron oracle requires --mu and --nu")
        try:
            mu, nu = parse_partition(args.mu), parse_partition(args.nu)
        except ValueError as exc:
            parser.error(str(exc))
        if sum(mu) != sum(nu):
            parser.error(f"mu and nu must have equal degree, got {sum(mu)} and {sum(nu)}")
        _ensure_desk_scale(sum(mu), args.force, parser)
        path = _cache_path(args)
        _load_cache_if_any(path)
        vec = kron_oracle(mu, nu)
        _save_cache_if_any(path)
    if args.format == "json":
        _emit(json.dumps(_expansion_payload(mu, nu, vec), indent=2), args.out)
    else:
        _emit(_expansion_csv(mu, nu, vec), args.out)
    if args.plot:
        plots.plot_expansion(
            vec.items(),
            f"{format_partition(mu)} * {format_partition(nu)}",
            args.plot,
        )
    return EXIT_OK


def cmd_verify(args, parser) -> int:
    for name in ("max_d", "max_k", "max_n"):
        if getattr(args, name) < 0:
            parser.error(f"--{name.replace('_', '-')} must be non-negative")
    oracle_backed = args.target in ("cleanest", "hook", "rosas", "recurrence", "bounded")
    degree = args.max_n if args.target == "bounded" else 2 * args.max_d
    if oracle_backed:
        _ensure_desk_scale(degree, args.force, parser)
    path = _cache_path(args) if oracle_backed else None
    _load_cache_if_any(path)
    report = SWEEPS[args.target](vars(args))
    _save_cache_if_any(path)
    status = "PASS" if report.ok else "FAIL"
    if args.format == "json":
        payload = {
            "target": report.target,
            "checked": report.checked,
            "status": status,
            "failures": report.failures,
        }
        _emit(json.dumps(payload, indent=2), args.out)
    else:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["target", "checked", "status", "failure"])
        if report.failures:
            for failure in report.failures:
                writer.writerow([report.target, report.checked, status, failure])
        else:
            writer.writerow([report.target, report.checked, status, ""])
        _emit(buffer.getvalue(), args.out)
    if args.plot:
        plots.plot_report(report.target, report.checked, len(report.failures), args.plot)
    return EXIT_OK if report.ok else EXIT_VERIFY_FAILED


def cmd_gf(args, parser) -> int:
    if args.order < 0:
        parser.error("--order must be non-negative")
    if args.k < 0:
        parser.error("--k must be non-negative")
    if args.kind == "g":
        if args.r is not None:
            parser.error("--r only applies to the l kind")
        gf = g_k(args.k)
        name = f"G_{args.k}"
    else:
        if args.r is None or args.r < 1:
            parser.error("gf l requires --r >= 1")
        gf = l_kr(args.k, args.r)
        name = f"L_{args.k},{args.r}"
    series = gf.series(args.order)
    if args.format == "json":
        payload = {
            "kind": args.kind,
            "k": args.k,
            **({"r": args.r} if args.kind == "l" else {}),
            "numerator": list(gf.numer),
            "denominator": list(gf.denom),
            "series": series,
        }
        _emit(json.dumps(payload, indent=2), args.out)
    else:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["d", "coefficient"])
        for d, value in enumerate(series):
            writer.writerow([d, value])
        _emit(buffer.getvalue(), args.out)
    if args.plot:
        plots.plot_series(series, name, args.plot)
    return EXIT_OK


def cmd_cache(args, parser) -> int:
    if args.action == "warm":
        if args.max_n < 0:
            parser.error("--max-n must be non-negative")
        _ensure_desk_scale(args.max_n, args.force, parser)
        cache = default_cache()
        if os.path.exists(args.path):
            cache.absorb(load_cache(args.path).items())
        for n in range(args.max_n + 1):
            for lam in partitions_of(n):
                for rho in partitions_of(n):
                    cache.value(lam, rho)
        save_cache(cache, args.path)
        _emit(json.dumps({"path": args.path, "records": len(cache)}, indent=2), args.out)
        return EXIT_OK
    cache = load_cache(args.path)
    degrees: dict[str, int] = {}
    for (lam, _rho), _value in sorted(cache.items()):
        key = str(sum(lam))
        degrees[key] = degrees.get(key, 0) + 1
    payload = {"path": args.path, "records": len(cache), "records_by_degree": degrees}
    _emit(json.dumps(payload, indent=2), args.out)
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args, parser)
    except (CacheFormatError, CacheIntegrityError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
