"""Mandatory/forbidden classification of the diversity cycles (0, i, j).

The cycle (0, i, j) is forbidden when ``(X_0 + X_i) & X_j`` is empty.  Three
classifiers are provided: the quadratic sumset oracle, and the linear
difference-set sweeps for even and odd coset size.
"""
from __future__ import annotations

import enum
from array import array
from dataclasses import dataclass, field

from . import _backend
from .cosets import CosetTable, Parameters
from .errors import InvariantViolation, Lemma2Violation, NotAsymmetric, NotSymmetric

__all__ = [
    "Status",
    "CycleStructure",
    "sumset",
    "difference_sets",
    "fast_test",
    "classify_naive",
    "classify_fast_symmetric",
    "classify_fast_asymmetric",
    "classify",
]


class Status(enum.IntEnum):
    FORBIDDEN = 0
    MANDATORY = 1


@dataclass(eq=False, slots=True)
class CycleStructure:
    """Classification of every (0, i, j), stored row-major in ``status``.

    ``tests`` counts the (i, j) checks actually evaluated; the remaining
    entries were filled in from the known symmetries.
    """

    params: Parameters
    status: bytes = field(repr=False)
    method: str
    tests: int
    overlaps: array | None = field(default=None, repr=False)

    def __post_init__(self):
        n = self.params.n
        if len(self.status) != n * n or self.status.translate(None, b"\x00\x01"):
            raise InvariantViolation(f"{self.method}: incomplete status grid")

    def __getitem__(self, ij: tuple[int, int]) -> Status:
        i, j = ij
        return Status(self.status[i * self.params.n + j])

    def is_forbidden(self, i: int, j: int) -> bool:
        return self.status[i * self.params.n + j] == Status.FORBIDDEN

    def __eq__(self, other):
        if not isinstance(other, CycleStructure):
            return NotImplemented
        return self.params == other.params and self.status == other.status

    def grid(self) -> list[list[Status]]:
        n = self.params.n
        return [[Status(self.status[i * n + j]) for j in range(n)] for i in range(n)]

    def cycles(self, status: Status, upper: bool = True) -> list[tuple[int, int, int]]:
        """Sorted cycles ``(0, i, j)`` with the given status; ``upper`` keeps i <= j."""
        n = self.params.n
        return [
            (0, i, j)
            for i in range(n)
            for j in range(i if upper else 0, n)
            if self.status[i * n + j] == status
        ]

    def forbidden(self, upper: bool = True) -> list[tuple[int, int, int]]:
        return self.cycles(Status.FORBIDDEN, upper)

    def mandatory(self, upper: bool = True) -> list[tuple[int, int, int]]:
        return self.cycles(Status.MANDATORY, upper)

    def mismatches(self, other: CycleStructure) -> list[tuple[int, int]]:
        if self.params != other.params:
            raise ValueError("structures belong to different instances")
        n = self.params.n
        return [divmod(c, n) for c in range(n * n) if self.status[c] != other.status[c]]


def sumset(table: CosetTable, i: int, j: int, backend: str | None = None) -> bytearray:
    """Membership bitmap (length p) of ``X_i + X_j``."""
    prm = table.params
    return _backend.get(backend).sumset_bitmap(prm.p, prm.k, table.elements, i, j)


def difference_sets(table: CosetTable, backend: str | None = None) -> array:
    """``g**j - X_0`` for every j, flattened like ``table.elements``."""
    prm = table.params
    diffs = array("I", bytes(4 * prm.n * prm.k))
    _backend.get(backend).difference_sets(prm.p, prm.n, prm.k, table.elements, diffs)
    return diffs


def fast_test(table: CosetTable, i: int, j: int, diffs: array | None = None,
              backend: str | None = None) -> Status:
    """Classify (0, i, j) by probing ``g**j - X_0`` against ``X_i``; O(k)."""
    if diffs is None:
        diffs = difference_sets(table, backend)
    hit = _backend.get(backend).fast_test(table.class_index, diffs, table.params.k, i, j)
    return Status.MANDATORY if hit else Status.FORBIDDEN


def classify_naive(table: CosetTable, backend: str | None = None) -> CycleStructure:
    """Reference classifier: build every sumset ``X_0 + X_i`` and test each ``X_j``.

    Works for both parities and checks every (i, j) directly.  Each overlap
    must be empty or the whole coset; anything else raises ``Lemma2Violation``.
    """
    prm = table.params
    n, k = prm.n, prm.k
    overlaps = array("q", bytes(8 * n * n))
    status = bytearray(n * n)
    bad = _backend.get(backend).naive_overlaps(prm.p, n, k, table.elements, overlaps, status)
    if bad >= 0:
        raise Lemma2Violation(*divmod(bad, n), overlaps[bad], k)
    return CycleStructure(prm, bytes(status), "naive", n * n, overlaps)


def _sweep(table, backend, name):
    prm = table.params
    kern = _backend.get(backend)
    diffs = difference_sets(table, backend)
    status = bytearray([kern.UNSET]) * (prm.n * prm.n)
    tests = getattr(kern, name)(prm.n, prm.k, table.class_index, diffs, status)
    return bytes(status), tests


def classify_fast_symmetric(table: CosetTable, backend: str | None = None) -> CycleStructure:
    """Upper-triangle sweep for even k; the transpose is filled by symmetry."""
    if not table.params.symmetric:
        raise NotSymmetric(table.params.k)
    status, tests = _sweep(table, backend, "sweep_symmetric")
    return CycleStructure(table.params, status, "fast-symmetric", tests)


def classify_fast_asymmetric(table: CosetTable, backend: str | None = None) -> CycleStructure:
    """Sweep for odd k.

    Row i tests (0, i, (t + m) mod n) for t = i..n-1 with m = n/2; every
    other entry follows from (0, i, j) ~ (0, j + m, i + m).
    """
    if table.params.symmetric:
        raise NotAsymmetric(f"k={table.params.k}")
    status, tests = _sweep(table, backend, "sweep_asymmetric")
    return CycleStructure(table.params, status, "fast-asymmetric", tests)


def classify(table: CosetTable, backend: str | None = None) -> CycleStructure:
    if table.params.symmetric:
        return classify_fast_symmetric(table, backend)
    return classify_fast_asymmetric(table, backend)
