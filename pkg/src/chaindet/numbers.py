"""Small exact number-theory helpers used by the counting formulas.

Everything here is plain arbitrary-precision integer arithmetic; inputs
stay at desk scale, so trial division is all the factoring we need.
"""

from __future__ import annotations

import math

from .errors import NotCoprimeError

binomial = math.comb


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization as {prime: multiplicity}; n must be >= 1."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power(n: int) -> tuple[int, int] | None:
    """Return (p, k) with n = p**k and p prime, or None."""
    if n < 2:
        return None
    facts = factorize(n)
    if len(facts) != 1:
        return None
    [(p, k)] = facts.items()
    return p, k


def divisors(n: int) -> list[int]:
    """All positive divisors of n, sorted ascending."""
    if n < 1:
        raise ValueError(f"divisors of {n} undefined")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def euler_phi(n: int) -> int:
    out = n
    for p in factorize(n):
        out -= out // p
    return out if n > 1 else 1


def multiplicative_order(q: int, d: int) -> int:
    """Least k >= 1 with q**k congruent to 1 mod d; requires gcd(q, d) = 1."""
    if d < 1:
        raise ValueError(f"modulus {d} must be positive")
    if math.gcd(q, d) != 1:
        raise NotCoprimeError(f"gcd({q}, {d}) != 1")
    if d == 1:
        return 1
    k, acc = 1, q % d
    while acc != 1:
        acc = (acc * q) % d
        k += 1
    return k
