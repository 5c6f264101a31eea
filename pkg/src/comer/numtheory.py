"""Small exact integer helpers: primality, factoring, modular powers, primitive roots.

Everything here works on plain Python ints and stays off the hot path.
"""
from __future__ import annotations

from math import isqrt

__all__ = [
    "MAX_MODULUS",
    "is_prime",
    "factorize",
    "pow_mod",
    "is_primitive_root",
    "smallest_primitive_root",
    "primes_between",
    "divisors",
]

# residues must fit in 32 bits so products fit in a signed 64-bit word
MAX_MODULUS = 2**31 - 1

_LIMIT = 2**63


# Miller-Rabin with these bases is exact for every m < 3.3e24
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_TRIAL_LIMIT = 1 << 20


def is_prime(m: int) -> bool:
    """Return True iff ``m`` is prime, exactly, for 0 <= m < 2**63.

    Trial division below 2**20, deterministic Miller-Rabin above.
    """
    if m < 0 or m >= _LIMIT:
        raise ValueError(f"is_prime expects 0 <= m < 2**63, got {m}")
    if m < 4:
        return m >= 2
    if m % 2 == 0 or m % 3 == 0:
        return False
    if m >= _TRIAL_LIMIT:
        return _miller_rabin(m)
    d = 5
    r = isqrt(m)
    while d <= r:
        if m % d == 0 or m % (d + 2) == 0:
            return False
        d += 6
    return True


def _miller_rabin(m):
    d, s = m - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def factorize(m: int) -> list[tuple[int, int]]:
    """Prime factorisation of ``m`` as ``[(prime, exponent), ...]`` with increasing primes.

    >>> factorize(112)
    [(2, 4), (7, 1)]
    """
    if m < 2 or m >= _LIMIT:
        raise ValueError(f"factorize expects 2 <= m < 2**63, got {m}")
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if m > 1:
        out.append((m, 1))
    return out


def pow_mod(base: int, exponent: int, p: int) -> int:
    """``base ** exponent mod p`` by left-to-right square and multiply."""
    if exponent < 0:
        raise ValueError("exponent must be non-negative")
    result = 1 % p
    b = base % p
    for bit in bin(exponent)[2:]:
        result = result * result % p
        if bit == "1":
            result = result * b % p
    return result


def is_primitive_root(g: int, p: int, _factors: list[tuple[int, int]] | None = None) -> bool:
    if not 0 < g < p:
        return False
    if p == 2:
        return g == 1
    phi = p - 1
    factors = _factors if _factors is not None else factorize(phi)
    return all(pow_mod(g, phi // q, p) != 1 for q, _ in factors)


def smallest_primitive_root(p: int) -> int:
    """Least generator of the multiplicative group modulo the odd prime ``p``."""
    if p < 3 or not is_prime(p):
        raise ValueError(f"expected an odd prime, got {p}")
    factors = factorize(p - 1)
    for g in range(2, p):
        if is_primitive_root(g, p, factors):
            return g
    raise AssertionError(f"no primitive root found modulo {p}")  # unreachable for prime p


def primes_between(lo: int, hi: int) -> list[int]:
    """All primes ``q`` with ``lo <= q <= hi`` in ascending order (sieve)."""
    lo = max(lo, 2)
    if hi < lo:
        return []
    sieve = bytearray([1]) * (hi + 1)
    sieve[0:2] = b"\x00\x00"
    for d in range(2, isqrt(hi) + 1):
        if sieve[d]:
            sieve[d * d :: d] = bytes(len(range(d * d, hi + 1, d)))
    return [q for q in range(lo, hi + 1) if sieve[q]]


def divisors(m: int) -> list[int]:
    """Positive divisors of ``m`` in ascending order."""
    small, large = [], []
    for d in range(1, isqrt(m) + 1):
        if m % d == 0:
            small.append(d)
            if d != m // d:
                large.append(m // d)
    return small + large[::-1]
