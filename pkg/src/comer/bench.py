"""Timing harness for the sumset oracle versus the fast sweep.

Each measurement covers coset construction plus classification for a fixed
``(p, n, g)``; the primitive-root search is excluded.  Calls are repeated in a
loop long enough to beat timer resolution and the best of ``repetitions``
loops is kept, as ``timeit`` does.
"""
from __future__ import annotations

import csv
import math
import os
import statistics
import timeit
from dataclasses import astuple, dataclass
from typing import Iterable, Sequence

from .cosets import build_coset_table, make_parameters
from .cycles import classify, classify_naive
from .numtheory import primes_between

__all__ = ["TimingRecord", "ALGORITHMS", "CSV_HEADER", "time_instance", "run_bench",
           "fit_slope", "write_csv", "read_csv"]

CSV_HEADER = ("p", "n", "k", "algorithm", "seconds", "tests")

ALGORITHMS = {"naive": classify_naive, "fast": classify}


@dataclass(frozen=True)
class TimingRecord:
    p: int
    n: int
    k: int
    algorithm: str
    seconds: float
    tests: int


def _best_of(fn, repetitions, min_loop_seconds):
    timer = timeit.Timer(fn)
    number = 1
    while True:
        elapsed = timer.timeit(number)
        if elapsed >= min_loop_seconds or number >= 1 << 20:
            break
        number *= 2 if elapsed <= 0 else min(10, max(2, math.ceil(min_loop_seconds / elapsed)))
    runs = [elapsed] + timer.repeat(repeat=max(repetitions - 1, 0), number=number)
    return min(runs) / number


def time_instance(p: int, n: int, algorithm: str, repetitions: int = 3,
                  backend: str | None = None, min_loop_seconds: float = 2e-3) -> TimingRecord:
    params = make_parameters(p, n)
    classifier = ALGORITHMS[algorithm]

    def run():
        return classifier(build_coset_table(params, backend), backend)

    tests = run().tests
    seconds = _best_of(run, repetitions, min_loop_seconds)
    return TimingRecord(p, n, params.k, algorithm, seconds, tests)


def bench_primes(n: int, p_max: int, p_min: int = 3) -> list[int]:
    return [q for q in primes_between(max(p_min, 3), p_max) if (q - 1) % n == 0]


def run_bench(n: int, p_max: int, algorithms: Sequence[str] = ("naive", "fast"),
              repetitions: int = 3, backend: str | None = None, p_min: int = 3,
              min_loop_seconds: float = 2e-3) -> list[TimingRecord]:
    """One record per (prime, algorithm), grouped by algorithm then ascending p."""
    for alg in algorithms:
        if alg not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {alg!r}")
    primes = bench_primes(n, p_max, p_min)
    return [
        time_instance(q, n, alg, repetitions, backend, min_loop_seconds)
        for alg in algorithms
        for q in primes
    ]


def fit_slope(records: Iterable[TimingRecord], algorithm: str) -> float:
    """Least-squares slope of log(seconds) against log(p)."""
    pts = [(math.log(r.p), math.log(r.seconds)) for r in records
           if r.algorithm == algorithm and r.seconds > 0]
    if len(pts) < 2:
        raise ValueError(f"need at least two {algorithm} timings to fit a slope")
    xs, ys = zip(*pts)
    return statistics.linear_regression(xs, ys).slope


def write_csv(records: Iterable[TimingRecord], dest) -> None:
    """Write ``records`` to a path or an open text stream."""
    if isinstance(dest, (str, os.PathLike)):
        with open(dest, "w", newline="") as fh:
            write_csv(records, fh)
        return
    w = csv.writer(dest, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in records:
        p, n, k, alg, sec, tests = astuple(r)
        w.writerow([p, n, k, alg, repr(sec), tests])


def read_csv(path) -> list[TimingRecord]:
    with open(path, newline="") as fh:
        rows = csv.DictReader(fh)
        return [TimingRecord(int(r["p"]), int(r["n"]), int(r["k"]), r["algorithm"],
                             float(r["seconds"]), int(r["tests"])) for r in rows]
