"""Exact integer arithmetic helpers shared across the package."""

from __future__ import annotations

import math

from .errors import NotCoprime, NotInteger


def ceil_div(a: int, b: int) -> int:
    """Exact ceil(a / b) for integers with b > 0, correct for negative a."""
    return -((-a) // b)


def exact_div(a: int, b: int, what: str = "value") -> int:
    """Divide a by b, raising NotInteger when the quotient is not exact."""
    quotient, remainder = divmod(a, b)
    if remainder:
        raise NotInteger(f"{what}: {a}/{b} is not an integer")
    return quotient


def smallest_prime_factor(n: int) -> int:
    """Smallest prime factor of n >= 2 by trial division."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if n % 2 == 0:
        return 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return d
        d += 2
    return n


def is_prime_power(n: int) -> bool:
    """True iff n = p^k for a prime p and k >= 1."""
    if n < 2:
        return False
    p = smallest_prime_factor(n)
    while n % p == 0:
        n //= p
    return n == 1


def bezout_pair(m: int, r: int) -> tuple[int, int]:
    """Return (a, b) with a*r + b*m == 1 for coprime m, r.

    When m divides r + 1 the pair is pinned to a = -1, b = (r + 1) // m,
    which is the convention used throughout for the quotient curves.
    Otherwise the solution with minimal |a| is returned, ties broken
    towards positive a.
    """
    if math.gcd(m, r) != 1:
        raise NotCoprime(f"gcd({m}, {r}) != 1")
    if (r + 1) % m == 0:
        return -1, (r + 1) // m
    a = pow(r, -1, m)
    if a > m - a:
        a -= m
    return a, (1 - a * r) // m
