"""Status-preserving moves on cycles, orbits and canonical representatives.

A cycle ``(a, b, c)`` stands for the question "does X_a + X_b meet X_c?".
The moves used to close orbits:

* shift: add the same amount to all three indices (multiply by a power of g);
* commute: swap the two summands, since X_a + X_b = X_b + X_a;
* transpose: ``(a, b, c) -> (a + m, c, b)`` where ``-X_a = X_{a+m}``.  It
  comes from rewriting x + y = z as -x + z = y.  For even k (m = 0) this
  together with commute generates every permutation of the triple; for odd
  k it is the involution ``(0, i, j) -> (0, j + m, i + m)`` on normalised
  cycles.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .cosets import Parameters
from .cycles import CycleStructure
from .errors import NotAsymmetric

__all__ = [
    "CycleOrbit",
    "shift_cycle",
    "normalize",
    "involution_image",
    "orbit",
    "canonical_forbidden_set",
    "is_ramsey",
    "is_all_flexible",
]

Cycle = tuple[int, int, int]


@dataclass(frozen=True)
class CycleOrbit:
    members: frozenset[Cycle]
    canon: Cycle

    def __contains__(self, cycle):
        return cycle in self.members

    def __len__(self):
        return len(self.members)


def shift_cycle(n: int, cycle: Cycle, i: int) -> Cycle:
    a, b, c = cycle
    return ((a + i) % n, (b + i) % n, (c + i) % n)


def normalize(n: int, cycle: Cycle) -> Cycle:
    """Shift so the first summand is 0."""
    return shift_cycle(n, cycle, -cycle[0])


def involution_image(n: int, cycle: Cycle) -> Cycle:
    """``(0, i, j) -> (0, j + m, i + m)`` with m = n/2; only defined for even n."""
    if n % 2:
        raise NotAsymmetric(f"n={n}")
    m = n // 2
    _, i, j = cycle
    return (0, (j + m) % n, (i + m) % n)


def _moves(n, m, cycle):
    a, b, c = cycle
    yield (b, a, c)
    yield ((a + m) % n, c, b)


def orbit(params: Parameters, cycle: Cycle) -> CycleOrbit:
    """All normalised cycles reachable from ``cycle``, and the least of them."""
    n, m = params.n, params.m
    start = normalize(n, tuple(x % n for x in cycle))
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for nxt in _moves(n, m, cur):
            nxt = normalize(n, nxt)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return CycleOrbit(frozenset(seen), min(seen))


def canonical_forbidden_set(structure: CycleStructure,
                            cycles: Iterable[Cycle] | None = None) -> list[Cycle]:
    """Sorted orbit representatives of the forbidden cycles, one per orbit."""
    if cycles is None:
        cycles = structure.forbidden(upper=False)
    canon = set()
    covered = set()
    for cyc in cycles:
        if cyc in covered:
            continue
        orb = orbit(structure.params, cyc)
        covered |= orb.members
        canon.add(orb.canon)
    return sorted(canon)


def is_ramsey(structure: CycleStructure) -> bool:
    """Forbidden cycles are exactly the monochrome ones, all of which shift to (0, 0, 0)."""
    return structure.forbidden(upper=True) == [(0, 0, 0)]


def is_all_flexible(structure: CycleStructure) -> bool:
    return not any(v == 0 for v in structure.status)
