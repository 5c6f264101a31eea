"""Time the naive and fast classifiers on both kernel backends.

    python benchmarks/compare_backends.py --n 23 --p-max 10000
    python benchmarks/compare_backends.py --n 23 --p-min 10000 --p-max 80000 --stride 12 \
        --backends compiled

Prints log-log slopes per (backend, algorithm), the compiled/python speedup at
a few primes, and optionally writes every measurement to CSV.
"""
import argparse
import csv
import sys

from comer import _backend
from comer.bench import bench_primes, fit_slope, time_instance


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=23)
    ap.add_argument("--p-min", type=int, default=3)
    ap.add_argument("--p-max", type=int, default=10000)
    ap.add_argument("--stride", type=int, default=1, help="keep every stride-th prime")
    ap.add_argument("--repetitions", type=int, default=3)
    ap.add_argument("--backends", default=",".join(sorted(_backend.BACKENDS)))
    ap.add_argument("--algorithms", default="naive,fast")
    ap.add_argument("--out", help="CSV with a leading backend column")
    args = ap.parse_args(argv)

    backends = args.backends.split(",")
    algorithms = args.algorithms.split(",")
    primes = bench_primes(args.n, args.p_max, args.p_min)[:: args.stride]
    if len(primes) < 2:
        sys.exit("need at least two primes in range")

    records = {}
    for be in backends:
        for alg in algorithms:
            records[be, alg] = [time_instance(p, args.n, alg, args.repetitions, be) for p in primes]
            slope = fit_slope(records[be, alg], alg)
            last = records[be, alg][-1]
            print(f"{be:>9} {alg:>6}  slope {slope:6.3f}  "
                  f"t(p={last.p}) = {last.seconds * 1e3:10.3f} ms", flush=True)

    if {"python", "compiled"} <= set(backends):
        print("\ncompiled speedup over python")
        picks = sorted({primes[0], primes[len(primes) // 2], primes[-1]})
        for alg in algorithms:
            by_p = {be: {r.p: r.seconds for r in records[be, alg]} for be in ("python", "compiled")}
            cells = "  ".join(f"p={p}: {by_p['python'][p] / by_p['compiled'][p]:7.1f}x" for p in picks)
            print(f"{alg:>6}  {cells}")

    if args.out:
        with open(args.out, "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["backend", "p", "n", "k", "algorithm", "seconds", "tests"])
            for (be, _), recs in records.items():
                for r in recs:
                    w.writerow([be, r.p, r.n, r.k, r.algorithm, repr(r.seconds), r.tests])


if __name__ == "__main__":
    main()
