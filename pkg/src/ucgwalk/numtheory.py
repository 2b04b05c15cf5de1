"""Exact integer number theory underpinning circulant spectra.

Everything here runs in plain integer arithmetic (trial division is ample at
the target scales, n up to ~10^4) so graph eigenvalues come out as exact
integers rather than floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class Factorization:
    """Prime factorization ``value == prod(p**e for p, e in factors)``."""

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.value < 1:
            raise ValueError("value must be a positive integer")
        prod = 1
        last = 1
        for p, e in self.factors:
            if p <= last:
                raise ValueError("primes must be strictly increasing")
            if e < 1:
                raise ValueError("exponents must be >= 1")
            last = p
            prod *= p**e
        if prod != self.value:
            raise ValueError(f"factors do not multiply back to {self.value}")


def factorize(n: int) -> Factorization:
    """Trial-division factorization of a positive integer."""
    if n < 1:
        raise ValueError("n must be >= 1")
    m = n
    factors: list[tuple[int, int]] = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        factors.append((m, 1))
    return Factorization(n, tuple(factors))


def euler_phi(n: int) -> int:
    """Number of integers in [1, n] coprime to n; euler_phi(1) == 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    result = n
    for p, _ in factorize(n).factors:
        result -= result // p
    return result


def mobius(m: int) -> int:
    """+1/-1 for squarefree m by parity of its prime count, 0 otherwise.

    mobius(1) == 1: an empty factorization counts as an even number of primes.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    factors = factorize(m).factors
    if any(e >= 2 for _, e in factors):
        return 0
    return -1 if len(factors) % 2 else 1


def is_squarefree(n: int) -> bool:
    """True iff no prime divides n more than once."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return all(e == 1 for _, e in factorize(n).factors)


def units_mod(n: int) -> tuple[int, ...]:
    """All u in [1, n-1] with gcd(u, n) == 1, ascending."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return tuple(u for u in range(1, n) if math.gcd(u, n) == 1)


def ramanujan_sum(d: int, n: int) -> int:
    """Sum of the d-th powers of the primitive n-th roots of unity.

    Evaluated through the closed form mu(t) * phi(n) / phi(t) with
    t = n / gcd(d, n); the division is exactly integral and asserted so.
    For d = 0 this is phi(n).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0 <= d < n:
        raise ValueError("d must satisfy 0 <= d < n")
    t = n // math.gcd(d, n)
    mu = mobius(t)
    if mu == 0:
        return 0
    quotient, remainder = divmod(euler_phi(n), euler_phi(t))
    if remainder:  # phi(t) | phi(n) whenever t | n
        raise ArithmeticError(f"phi({t}) does not divide phi({n})")
    return mu * quotient
