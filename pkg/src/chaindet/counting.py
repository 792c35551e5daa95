"""Closed-form determinant counts over chain rings with residue field size q
and nilpotency index e.

Everything is exact arbitrary-precision integer arithmetic; each formula is
algebraically rearranged to be fraction-free before evaluation, so no
rational intermediate ever appears.  The counts depend only on (q, e), never
on the ring family realizing them.

Notation: an n x n count is classified by the determinant's valuation class
(unit / gamma^s for 1 <= s < e / zero).  ``diagonal_count`` covers every
class; ``circulant_count`` covers units when gcd(n, q) = 1 and non-units
when n | (q - 1), and reports anything else as an open problem rather than
guessing.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

from .errors import ConsistencyError, NotCoprimeError, NotPrimePowerError
from .numbers import binomial, divisors, euler_phi, multiplicative_order, prime_power


@dataclass(frozen=True, order=True)
class DeterminantClass:
    """Valuation class of a determinant: unit, gamma^s, or zero.

    Internally (kind, s) with kind 0/1/2 for unit/gamma/zero, which also
    gives the natural sort order unit < gamma^1 < ... < zero.
    """

    kind: int
    s: int = 0

    UNIT_KIND, GAMMA_KIND, ZERO_KIND = 0, 1, 2

    @classmethod
    def unit(cls) -> "DeterminantClass":
        return cls(cls.UNIT_KIND, 0)

    @classmethod
    def gamma_power(cls, s: int) -> "DeterminantClass":
        if s < 1:
            raise ValueError(f"gamma exponent {s} must be >= 1")
        return cls(cls.GAMMA_KIND, s)

    @classmethod
    def zero(cls) -> "DeterminantClass":
        return cls(cls.ZERO_KIND, 0)

    @classmethod
    def from_valuation(cls, s: int, e: int) -> "DeterminantClass":
        if s == 0:
            return cls.unit()
        if s == e:
            return cls.zero()
        return cls.gamma_power(s)

    @classmethod
    def parse(cls, text: str) -> "DeterminantClass":
        text = text.strip()
        if text == "unit":
            return cls.unit()
        if text == "zero":
            return cls.zero()
        if text.startswith("gamma^"):
            return cls.gamma_power(int(text[len("gamma^"):]))
        raise ValueError(f"unknown determinant class {text!r}")

    @property
    def is_unit(self) -> bool:
        return self.kind == self.UNIT_KIND

    @property
    def is_zero(self) -> bool:
        return self.kind == self.ZERO_KIND

    def __str__(self) -> str:
        if self.kind == self.UNIT_KIND:
            return "unit"
        if self.kind == self.ZERO_KIND:
            return "zero"
        return f"gamma^{self.s}"


@dataclass(frozen=True)
class CountQuery:
    """(q, e, n, determinant class) with validated parameters."""

    q: int
    e: int
    n: int
    det_class: DeterminantClass

    def __post_init__(self):
        if prime_power(self.q) is None:
            raise NotPrimePowerError(f"q = {self.q} is not a prime power")
        if self.e < 1:
            raise ValueError(f"e = {self.e} must be >= 1")
        if self.n < 1:
            raise ValueError(f"n = {self.n} must be >= 1")
        c = self.det_class
        if c.kind == DeterminantClass.GAMMA_KIND and not 1 <= c.s < self.e:
            raise ValueError(f"gamma exponent {c.s} not in [1, {self.e})")


@dataclass(frozen=True)
class CountResult:
    """Exact count, or a structured statement that no formula applies."""

    value: int | None
    method: str
    applicable: bool = True
    reason: str | None = None

    @classmethod
    def open_problem(cls, reason: str) -> "CountResult":
        return cls(None, "formula", applicable=False, reason=reason)


def _diagonal_unit(q: int, e: int, n: int) -> int:
    return (q - 1) ** (n - 1) * q ** ((e - 1) * (n - 1))


def _diagonal_gamma(q: int, e: int, n: int, s: int) -> int:
    return q ** ((e - 1) * (n - 1)) * (q - 1) ** (n - 1) * binomial(n + s - 1, n - 1)


def _diagonal_zero(q: int, e: int, n: int) -> int:
    # fraction-free: each q^{-i} term is folded into q^{(e-1)n - i}, whose
    # exponent is >= 0 because i <= e-1 <= (e-1)n
    total = q ** (n * e)
    units = (q - 1) ** n
    acc = 0
    for i in range(e):
        acc += binomial(n + i - 1, n - 1) * q ** ((e - 1) * n - i)
    return total - units * acc


def diagonal_count(query: CountQuery) -> CountResult:
    """Number of n x n diagonal matrices with determinant in the class.

    Counts for a concrete element equal the count of its class: the class
    {b*gamma^s} is a single orbit under multiplication by diag(b,1,...,1).
    """
    q, e, n, c = query.q, query.e, query.n, query.det_class
    if c.is_unit:
        return CountResult(_diagonal_unit(q, e, n), "formula")
    if c.is_zero:
        return CountResult(_diagonal_zero(q, e, n), "formula")
    return CountResult(_diagonal_gamma(q, e, n, c.s), "formula")


@functools.lru_cache(maxsize=None)
def diagonal_zero_count_recursive(q: int, e: int, n: int) -> int:
    """Zero-determinant diagonal count by the recursion on (n, e).

    Splits on whether the first diagonal entry is a unit: the unit branch
    contributes (q-1)q^(e-1) copies of the (n-1)-dim count, the non-unit
    branch q^(n-1) copies of the count over the quotient of nilpotency
    e - 1.  Independent evaluation route for cross-checking the closed form.
    """
    if n == 1:
        return 1
    if e == 1:
        return q**n - (q - 1) ** n
    return (q - 1) * q ** (e - 1) * diagonal_zero_count_recursive(q, e, n - 1) \
        + q ** (n - 1) * diagonal_zero_count_recursive(q, e - 1, n)


def nonsingular_diagonal_count(q: int, e: int, n: int) -> int:
    """|{n x n diagonal matrices with unit determinant}| = (q-1)^n q^((e-1)n)."""
    return (q - 1) ** n * q ** ((e - 1) * n)


def nonsingular_circulant_count_field(q: int, n: int) -> int:
    """Invertible n x n circulants over F_q, for every n.

    Writes n = n' * p^k with p = char(F_q) and gcd(n', q) = 1; the count is
    q^(n - n') * prod over d | n' of (q^ord_d(q) - 1)^(phi(d) / ord_d(q)),
    which is the fraction-free form of the unit count of F_q[X]/(X^n - 1).
    """
    pk = prime_power(q)
    if pk is None:
        raise NotPrimePowerError(f"q = {q} is not a prime power")
    p = pk[0]
    n_prime = n
    while n_prime % p == 0:
        n_prime //= p
    acc = q ** (n - n_prime)
    for d in divisors(n_prime):
        o = multiplicative_order(q, d)
        phi = euler_phi(d)
        if phi % o:
            raise ConsistencyError(f"ord_{d}({q}) = {o} does not divide phi({d})")
        acc *= (q**o - 1) ** (phi // o)
    return acc


def nonsingular_circulant_count(q: int, e: int, n: int) -> int:
    """Invertible n x n circulants over a chain ring; needs gcd(n, q) = 1."""
    if math.gcd(n, q) != 1:
        raise NotCoprimeError(f"gcd({n}, {q}) != 1")
    return q ** ((e - 1) * n) * nonsingular_circulant_count_field(q, n)


def circulant_count(query: CountQuery) -> CountResult:
    """Number of n x n circulants with determinant in the class, when known.

    Units need gcd(n, q) = 1; non-unit classes need n | (q - 1), where the
    circulant and diagonal counts coincide.  Everything else is open.
    """
    q, e, n, c = query.q, query.e, query.n, query.det_class
    if c.is_unit:
        if math.gcd(n, q) != 1:
            return CountResult.open_problem(
                f"open problem: gcd(n, q) = gcd({n}, {q}) != 1"
            )
        total = nonsingular_circulant_count(q, e, n)
        units = (q - 1) * q ** (e - 1)
        value, rem = divmod(total, units)
        if rem:
            raise ConsistencyError(
                f"unit circulant count {total} not divisible by |U(R)| = {units}"
            )
        return CountResult(value, "formula")
    if (q - 1) % n != 0:
        return CountResult.open_problem(
            f"open problem: n = {n} does not divide q - 1 = {q - 1}"
        )
    if c.is_zero:
        return CountResult(_diagonal_zero(q, e, n), "formula")
    return CountResult(_diagonal_gamma(q, e, n, c.s), "formula")


def quotient_reduction_identity_holds(q: int, e: int, f: int, n: int, s: int) -> bool:
    """Consistency identity between formula instances: the gamma^s count at
    nilpotency e + f equals q^(f(n-1)) times the one at nilpotency e."""
    if e < 2 or f < 0 or not 1 <= s < e:
        raise ValueError(f"need e >= 2, f >= 0, 1 <= s < e; got {(q, e, f, n, s)}")
    lhs = _diagonal_gamma(q, e + f, n, s)
    rhs = q ** (f * (n - 1)) * _diagonal_gamma(q, e, n, s)
    return lhs == rhs
