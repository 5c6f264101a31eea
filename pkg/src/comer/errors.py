class ComerError(ValueError):
    """Invalid parameters for a Comer instance."""


class NotPrime(ComerError):
    def __init__(self, p):
        super().__init__(f"p={p} is not an odd prime")
        self.p = p


class NotDivisor(ComerError):
    def __init__(self, n, m):
        super().__init__(f"n={n} does not divide p-1={m}")
        self.n = n
        self.m = m


class NotPrimitiveRoot(ComerError):
    def __init__(self, g, p):
        super().__init__(f"g={g} is not a primitive root modulo {p}")
        self.g = g
        self.p = p


class TooManyCosets(ComerError):
    def __init__(self, n, limit):
        super().__init__(f"n={n} exceeds the supported maximum of {limit} cosets")
        self.n = n


class NotSymmetric(ComerError):
    def __init__(self, k):
        super().__init__(f"coset size k={k} is odd; the instance is asymmetric")


class NotAsymmetric(ComerError):
    def __init__(self, detail):
        super().__init__(f"operation needs an asymmetric instance (odd k, even n); got {detail}")


class InvariantViolation(RuntimeError):
    """An internal consistency check failed. Always a bug, never bad input."""


class Lemma2Violation(InvariantViolation):
    def __init__(self, i, j, size, k):
        super().__init__(
            f"(X_0 + X_{i}) & X_{j} has {size} elements; expected 0 or {k}"
        )
        self.i = i
        self.j = j
        self.size = size
