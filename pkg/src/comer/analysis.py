"""Whole-instance reports, oracle cross-checks over prime ranges, and searches."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .cosets import MAX_COSETS, Parameters, build_coset_table, make_parameters
from .cycles import CycleStructure, classify, classify_naive
from .equivalence import canonical_forbidden_set, is_all_flexible, is_ramsey
from .errors import Lemma2Violation
from .numtheory import divisors, primes_between

__all__ = [
    "AnalysisReport",
    "analyze",
    "report_from_structure",
    "VerifyResult",
    "verify_instance",
    "verify_range",
    "search",
    "FILTERS",
]

Cycle = tuple[int, int, int]


@dataclass(frozen=True)
class AnalysisReport:
    params: Parameters
    forbidden: list[Cycle]
    mandatory: list[Cycle]
    canonical_forbidden: list[Cycle]
    ramsey: bool
    all_flexible: bool

    @property
    def symmetric(self) -> bool:
        return self.params.symmetric

    def as_dict(self) -> dict:
        d = self.params.as_dict()
        d["forbidden"] = [list(c) for c in self.forbidden]
        d["mandatory"] = [list(c) for c in self.mandatory]
        d["canonical_forbidden"] = [list(c) for c in self.canonical_forbidden]
        d["ramsey"] = self.ramsey
        d["all_flexible"] = self.all_flexible
        return d

    def to_text(self) -> str:
        prm = self.params
        kind = "symmetric" if prm.symmetric else "asymmetric"
        fmt = lambda cs: ", ".join(f"({a},{b},{c})" for a, b, c in cs) or "-"  # noqa: E731
        return "\n".join([
            f"p={prm.p} n={prm.n} k={prm.k} g={prm.g} ({kind})",
            f"forbidden ({len(self.forbidden)}): {fmt(self.forbidden)}",
            f"mandatory ({len(self.mandatory)}): {fmt(self.mandatory)}",
            f"canonical forbidden ({len(self.canonical_forbidden)}): {fmt(self.canonical_forbidden)}",
            f"ramsey: {str(self.ramsey).lower()}",
            f"all_flexible: {str(self.all_flexible).lower()}",
        ])


def report_from_structure(structure: CycleStructure) -> AnalysisReport:
    return AnalysisReport(
        params=structure.params,
        forbidden=structure.forbidden(upper=True),
        mandatory=structure.mandatory(upper=True),
        canonical_forbidden=canonical_forbidden_set(structure),
        ramsey=is_ramsey(structure),
        all_flexible=is_all_flexible(structure),
    )


def analyze(p: int, n: int, g: int | None = None, backend: str | None = None) -> AnalysisReport:
    table = build_coset_table(make_parameters(p, n, g), backend)
    return report_from_structure(classify(table, backend))


@dataclass
class VerifyResult:
    instances: list[tuple[int, int]] = field(default_factory=list)
    mismatches: list[tuple[int, int, int, int]] = field(default_factory=list)
    lemma2_violations: list[tuple[int, int, int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.lemma2_violations

    def merge(self, other: VerifyResult) -> None:
        self.instances += other.instances
        self.mismatches += other.mismatches
        self.lemma2_violations += other.lemma2_violations

    def as_dict(self) -> dict:
        return {
            "instances": len(self.instances),
            "mismatches": [list(m) for m in self.mismatches],
            "lemma2_violations": [list(v) for v in self.lemma2_violations],
            "ok": self.ok,
        }


def verify_instance(p: int, n: int, backend: str | None = None) -> VerifyResult:
    """Compare the fast classifier against the sumset oracle on one instance."""
    res = VerifyResult(instances=[(p, n)])
    table = build_coset_table(make_parameters(p, n), backend)
    try:
        oracle = classify_naive(table, backend)
    except Lemma2Violation as exc:
        res.lemma2_violations.append((p, n, exc.i, exc.j))
        return res
    fast = classify(table, backend)
    res.mismatches += [(p, n, i, j) for i, j in fast.mismatches(oracle)]
    return res


def _verify_prime(args):
    p, n_max, backend = args
    res = VerifyResult()
    for n in divisors(p - 1):
        if n > min(n_max, MAX_COSETS):
            break
        res.merge(verify_instance(p, n, backend))
    return res


def _pool_map(fn, items, jobs):
    if jobs <= 1 or len(items) <= 1:
        return list(map(fn, items))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def verify_range(p_min: int, p_max: int, n_max: int, backend: str | None = None,
                 jobs: int = 1) -> VerifyResult:
    """Oracle cross-check for every odd prime in range and every divisor n <= n_max of p-1."""
    primes = [q for q in primes_between(max(p_min, 3), p_max)]
    total = VerifyResult()
    for res in _pool_map(_verify_prime, [(q, n_max, backend) for q in primes], jobs):
        total.merge(res)
    return total


FILTERS = {
    "ramsey": lambda r: r.ramsey,
    "flexible": lambda r: r.all_flexible,
    "none": lambda r: True,
}


def _search_one(args):
    p, n, backend = args
    return analyze(p, n, backend=backend)


def search(n: int, p_min: int, p_max: int, filter: str = "none",
           backend: str | None = None, jobs: int = 1) -> list[AnalysisReport]:
    """Reports for primes p = 1 (mod n) in range whose structure passes ``filter``."""
    if n < 1:
        raise ValueError("n must be positive")
    keep = FILTERS[filter]
    primes = [q for q in primes_between(max(p_min, 3), p_max) if (q - 1) % n == 0]
    reports = _pool_map(_search_one, [(q, n, backend) for q in primes], jobs)
    return [r for r in reports if keep(r)]
