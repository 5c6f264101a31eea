"""``comer`` command line: analyze, verify, search, bench.

Exit status: 0 on success, 1 for invalid parameters, 2 when an internal
check fails (oracle mismatch or a sumset overlap that is neither empty nor full).
"""
from __future__ import annotations

import argparse
import json
import sys

from . import _backend
from .analysis import FILTERS, analyze, search, verify_range
from .bench import ALGORITHMS, fit_slope, run_bench, write_csv
from .errors import ComerError, InvariantViolation

EXIT_OK, EXIT_INVALID, EXIT_INTERNAL = 0, 1, 2


def _dump(obj):
    return json.dumps(obj, separators=(", ", ": "))


def cmd_analyze(args) -> int:
    report = analyze(args.p, args.n, args.g, backend=args.backend)
    print(_dump(report.as_dict()) if args.format == "json" else report.to_text())
    return EXIT_OK


def cmd_verify(args) -> int:
    res = verify_range(args.p_min, args.p_max, args.n_max, backend=args.backend, jobs=args.jobs)
    if args.format == "json":
        print(_dump(res.as_dict()))
    else:
        print(f"instances: {len(res.instances)}")
        print(f"mismatches: {len(res.mismatches)}")
        for p, n, i, j in res.mismatches:
            print(f"  mismatch p={p} n={n} cycle=(0,{i},{j})")
        print(f"lemma2_violations: {len(res.lemma2_violations)}")
        for p, n, i, j in res.lemma2_violations:
            print(f"  overlap violation p={p} n={n} cycle=(0,{i},{j})")
    return EXIT_OK if res.ok else EXIT_INTERNAL


def cmd_search(args) -> int:
    reports = search(args.n, args.p_min, args.p_max, args.filter,
                     backend=args.backend, jobs=args.jobs)
    if args.format == "json":
        print(_dump([r.as_dict() for r in reports]))
    else:
        for r in reports:
            forb = " ".join(f"({a},{b},{c})" for a, b, c in r.forbidden) or "-"
            print(f"p={r.params.p} n={r.params.n} k={r.params.k} g={r.params.g} forbidden: {forb}")
    return EXIT_OK


def cmd_bench(args) -> int:
    algorithms = [a.strip() for a in args.algorithms.split(",") if a.strip()]
    unknown = [a for a in algorithms if a not in ALGORITHMS]
    if unknown:
        raise ComerError(f"unknown algorithm(s): {', '.join(unknown)}")
    if args.p_max < args.n + 2:
        raise ComerError(f"--p-max must be at least n+2={args.n + 2}")
    if args.out:
        try:
            dest = open(args.out, "w", newline="")
        except OSError as exc:
            raise ComerError(f"cannot write {args.out}: {exc.strerror}") from None
        slope_stream = sys.stdout
    else:
        dest, slope_stream = sys.stdout, sys.stderr
    try:
        records = run_bench(args.n, args.p_max, algorithms, args.repetitions, backend=args.backend)
        write_csv(records, dest)
    finally:
        if dest is not sys.stdout:
            dest.close()
    for alg in algorithms:
        rows = [r for r in records if r.algorithm == alg]
        try:
            slope = f"{fit_slope(rows, alg):.3f}"
        except ValueError:
            slope = "n/a"
        print(f"slope {alg}: {slope} ({len(rows)} primes)", file=slope_stream)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="comer", description=__doc__.splitlines()[0])
    parser.add_argument("--backend", choices=["auto", *sorted(_backend.BACKENDS)], default="auto",
                        help="kernel implementation (default: compiled when built)")
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(sp):
        sp.add_argument("--format", choices=["text", "json"], default="text")

    def jobs(sp):
        sp.add_argument("--jobs", type=int, default=1, help="worker processes")

    sp = sub.add_parser("analyze", help="cycle structure of one instance")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--g", type=int, default=None, help="primitive root (default: smallest)")
    fmt(sp)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("verify", help="cross-check fast classifiers against the sumset oracle")
    sp.add_argument("--p-min", type=int, required=True)
    sp.add_argument("--p-max", type=int, required=True)
    sp.add_argument("--n-max", type=int, required=True)
    fmt(sp)
    jobs(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("search", help="scan primes p = 1 (mod n) for a structural property")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p-min", type=int, required=True)
    sp.add_argument("--p-max", type=int, required=True)
    sp.add_argument("--filter", choices=sorted(FILTERS), default="none")
    fmt(sp)
    jobs(sp)
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("bench", help="time naive and fast classifiers, write CSV")
    sp.add_argument("--n", type=int, default=23)
    sp.add_argument("--p-max", type=int, default=15000)
    sp.add_argument("--algorithms", default="naive,fast")
    sp.add_argument("--repetitions", type=int, default=3)
    sp.add_argument("--out", default=None, help="CSV path (default: stdout)")
    sp.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ComerError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
