"""Comer instances: parameters, the cosets X_0..X_{n-1} and residue lookup."""
from __future__ import annotations

from array import array
from dataclasses import dataclass, field
from functools import cached_property

from . import _backend
from .errors import NotDivisor, NotPrime, NotPrimitiveRoot, TooManyCosets
from .numtheory import MAX_MODULUS, is_prime, is_primitive_root, smallest_primitive_root

__all__ = [
    "IDENTITY",
    "MAX_COSETS",
    "Parameters",
    "CosetTable",
    "make_parameters",
    "build_coset_table",
    "negate_class",
]

# class_index value stored for the residue 0
IDENTITY = 255
MAX_COSETS = 255


@dataclass(frozen=True)
class Parameters:
    p: int
    n: int
    k: int
    g: int

    @property
    def symmetric(self) -> bool:
        return self.k % 2 == 0

    @property
    def m(self) -> int:
        """Coset offset of negation: 0 when symmetric, n/2 otherwise."""
        return 0 if self.symmetric else self.n // 2

    def as_dict(self) -> dict:
        return {"p": self.p, "n": self.n, "k": self.k, "g": self.g, "symmetric": self.symmetric}


def make_parameters(p: int, n: int, g: int | None = None) -> Parameters:
    """Validate ``(p, n)`` and derive ``k`` and the primitive root.

    ``g`` defaults to the smallest primitive root modulo ``p``.

    >>> make_parameters(113, 7)
    Parameters(p=113, n=7, k=16, g=3)
    """
    if p < 3 or p > MAX_MODULUS or not is_prime(p):
        raise NotPrime(p)
    if n < 1 or (p - 1) % n:
        raise NotDivisor(n, p - 1)
    if n > MAX_COSETS:
        raise TooManyCosets(n, MAX_COSETS)
    if g is None:
        g = smallest_primitive_root(p)
    elif not is_primitive_root(g, p):
        raise NotPrimitiveRoot(g, p)
    k = (p - 1) // n
    assert k % 2 == 0 or n % 2 == 0
    return Parameters(p, n, k, g)


@dataclass(frozen=True, eq=False)
class CosetTable:
    """The cosets of one instance plus a dense residue -> coset map.

    ``elements`` holds the cosets back to back, ``X_i`` occupying
    ``elements[i*k:(i+1)*k]`` in the order ``g**i, g**(n+i), ...``.
    ``class_index[r]`` is the coset of ``r``, or ``IDENTITY`` for ``r == 0``.
    """

    params: Parameters
    class_index: bytearray = field(repr=False)
    elements: array = field(repr=False)

    def coset(self, i: int) -> array:
        k = self.params.k
        return self.elements[i * k:(i + 1) * k]

    @cached_property
    def classes(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(self.coset(i)) for i in range(self.params.n))

    def index_of(self, r: int) -> int:
        return self.class_index[r % self.params.p]


def build_coset_table(params: Parameters, backend: str | None = None) -> CosetTable:
    """One pass over the powers of ``g``; O(p) time and memory."""
    kern = _backend.get(backend)
    class_index = bytearray(params.p)
    class_index[0] = IDENTITY
    elements = array("I", bytes(4 * (params.p - 1)))
    kern.fill_cosets(params.p, params.n, params.g, class_index, elements)
    return CosetTable(params, class_index, elements)


def negate_class(table: CosetTable, i: int) -> int:
    """Index of the coset ``-X_i``."""
    p = table.params.p
    return table.class_index[p - table.elements[i * table.params.k]]
