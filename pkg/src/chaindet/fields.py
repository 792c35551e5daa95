"""Finite fields F_q in polynomial-basis representation.

An element of F_{p^r} is a vector of r residues mod p, the coefficients of
a polynomial of degree < r reduced modulo a fixed monic irreducible.  The
modulus is the lexicographically least monic irreducible of degree r, where
"least" orders polynomials x^r + c_{r-1}x^{r-1} + ... + c_0 by the integer
c_0 + c_1 p + ... + c_{r-1} p^{r-1}.  Elements are indexed by that same
integer encoding, so index 0 is zero and index 1 is one.

Multiplication runs on discrete-log tables built from a fixed primitive
element (the least index of multiplicative order q - 1), which keeps the
chain-ring layer on top of this one fast.
"""

from __future__ import annotations

import functools
from typing import Iterator, Sequence

from .errors import NotAUnitError, NotPrimeError, TooLargeError
from .limits import TABLE_SIZE_LIMIT, enumeration_cap
from .numbers import factorize, is_prime


def _digits(value: int, base: int, width: int) -> tuple[int, ...]:
    out = []
    for _ in range(width):
        value, d = divmod(value, base)
        out.append(d)
    return tuple(out)


def _undigits(coeffs: Sequence[int], base: int) -> int:
    value = 0
    for c in reversed(coeffs):
        value = value * base + c
    return value


def _poly_strip(a: Sequence[int]) -> tuple[int, ...]:
    n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return tuple(a[:n])


def _poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> tuple[int, ...]:
    """Remainder of a by the monic polynomial m, coefficients mod p."""
    a = list(a)
    deg_m = len(m) - 1
    for i in range(len(a) - 1, deg_m - 1, -1):
        c = a[i]
        if c:
            for k in range(deg_m + 1):
                a[i - deg_m + k] = (a[i - deg_m + k] - c * m[k]) % p
    return _poly_strip(a[:deg_m])


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _is_irreducible(m: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg(m)/2."""
    deg = len(m) - 1
    if deg == 1:
        return True
    if m[0] == 0:  # divisible by x
        return False
    for d in range(1, deg // 2 + 1):
        for v in range(p**d):
            div = list(_digits(v, p, d)) + [1]
            if not _poly_mod(m, div, p):
                return False
    return True


class FieldElement:
    """An element of a :class:`FiniteField`, identified by its index."""

    __slots__ = ("field", "index")

    def __init__(self, field: "FiniteField", index: int):
        self.field = field
        self.index = index

    @property
    def coefficients(self) -> tuple[int, ...]:
        """Polynomial-basis coefficients, constant term first."""
        return _digits(self.index, self.field.p, self.field.r)

    @property
    def is_zero(self) -> bool:
        return self.index == 0

    def __add__(self, other: "FieldElement") -> "FieldElement":
        f = self.field
        f._check(other)
        return FieldElement(f, f.add_index(self.index, other.index))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        f = self.field
        f._check(other)
        return FieldElement(f, f.add_index(self.index, f.neg_index(other.index)))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        f = self.field
        f._check(other)
        return FieldElement(f, f.mul_index(self.index, other.index))

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field, self.field.neg_index(self.index))

    def __pow__(self, k: int) -> "FieldElement":
        return FieldElement(self.field, self.field.pow_index(self.index, k))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv_index(self.index))

    def multiplicative_order(self) -> int:
        if self.index == 0:
            raise NotAUnitError("zero has no multiplicative order")
        k, acc = 1, self.index
        while acc != 1:
            acc = self.field.mul_index(acc, self.index)
            k += 1
        return k

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FieldElement)
            and other.field is self.field
            and other.index == self.index
        )

    def __hash__(self) -> int:
        return hash((self.field.p, self.field.r, self.index))

    def __repr__(self) -> str:
        return f"F{self.field.q}({self})"

    def __str__(self) -> str:
        coeffs = self.coefficients
        terms = []
        for i in range(self.field.r - 1, -1, -1):
            c = coeffs[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                head = "" if c == 1 else str(c)
                terms.append(f"{head}x" if i == 1 else f"{head}x^{i}")
        return "+".join(terms) if terms else "0"


class FiniteField:
    """F_{p^r} with dense index-level arithmetic tables.

    Instances are immutable after construction and safe to share; obtain
    them through :func:`finite_field`, which caches by (p, r).
    """

    def __init__(self, p: int, r: int = 1, _cap: int | None = None):
        if not is_prime(p):
            raise NotPrimeError(f"{p} is not prime")
        if r < 1:
            raise ValueError(f"extension degree {r} must be >= 1")
        q = p**r
        if q > enumeration_cap(_cap):
            raise TooLargeError(f"field size {q} exceeds the enumeration cap")
        self.p = p
        self.r = r
        self.q = q
        self.modulus = self._least_irreducible()
        self._tabled = q <= TABLE_SIZE_LIMIT
        if self._tabled:
            self._tables()
        self.generator = FieldElement(self, self._find_generator())
        if self._tabled:
            self._exp, self._log = self._log_tables()

    def _least_irreducible(self) -> tuple[int, ...]:
        p, r = self.p, self.r
        for v in range(p**r):
            coeffs = _digits(v, p, r)
            if _is_irreducible(list(coeffs) + [1], p):
                return coeffs
        raise AssertionError("no irreducible polynomial found")  # unreachable

    def _raw_mul(self, i: int, j: int) -> int:
        p = self.p
        prod = _poly_mul(_digits(i, p, self.r), _digits(j, p, self.r), p)
        return _undigits(_poly_mod(prod, list(self.modulus) + [1], p), p)

    def _tables(self) -> None:
        p, r, q = self.p, self.r, self.q
        add = [0] * (q * q)
        neg = [0] * q
        for i in range(q):
            di = _digits(i, p, r)
            neg[i] = _undigits([(-c) % p for c in di], p)
            for j in range(i, q):
                dj = _digits(j, p, r)
                s = _undigits([(a + b) % p for a, b in zip(di, dj)], p)
                add[i * q + j] = s
                add[j * q + i] = s
        self._add = add
        self._neg = neg

    def _find_generator(self) -> int:
        q = self.q
        if q == 2:
            return 1
        cofactors = [(q - 1) // ell for ell in factorize(q - 1)]
        for idx in range(2, q):
            if all(self._raw_pow(idx, c) != 1 for c in cofactors):
                return idx
        raise AssertionError("no primitive element found")  # unreachable

    def _raw_pow(self, base: int, k: int) -> int:
        acc = 1
        while k:
            if k & 1:
                acc = self._raw_mul(acc, base)
            base = self._raw_mul(base, base)
            k >>= 1
        return acc

    def _log_tables(self) -> tuple[list[int], list[int]]:
        q, g = self.q, self.generator.index
        exp = [1] * (q - 1)
        log = [-1] * q
        acc = 1
        for k in range(q - 1):
            exp[k] = acc
            log[acc] = k
            acc = self._raw_mul(acc, g)
        return exp, log

    # -- index-level arithmetic ------------------------------------------

    def add_index(self, i: int, j: int) -> int:
        if self._tabled:
            return self._add[i * self.q + j]
        p = self.p
        di, dj = _digits(i, p, self.r), _digits(j, p, self.r)
        return _undigits([(a + b) % p for a, b in zip(di, dj)], p)

    def neg_index(self, i: int) -> int:
        if self._tabled:
            return self._neg[i]
        p = self.p
        return _undigits([(-c) % p for c in _digits(i, p, self.r)], p)

    def mul_index(self, i: int, j: int) -> int:
        if i == 0 or j == 0:
            return 0
        if self._tabled:
            return self._exp[(self._log[i] + self._log[j]) % (self.q - 1)]
        return self._raw_mul(i, j)

    def inv_index(self, i: int) -> int:
        if i == 0:
            raise NotAUnitError("0 is not invertible")
        if self._tabled:
            return self._exp[(-self._log[i]) % (self.q - 1)]
        return self._raw_pow(i, self.q - 2)

    def pow_index(self, i: int, k: int) -> int:
        if i == 0:
            if k == 0:
                return 1
            if k < 0:
                raise NotAUnitError("0 is not invertible")
            return 0
        if self._tabled:
            return self._exp[(self._log[i] * k) % (self.q - 1)]
        return self._raw_pow(i, k % (self.q - 1))

    # -- element construction --------------------------------------------

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def element(self, value: int | Sequence[int] | FieldElement) -> FieldElement:
        """Element from an index, a coefficient vector, or a pass-through."""
        if isinstance(value, FieldElement):
            self._check(value)
            return value
        if isinstance(value, int):
            if not 0 <= value < self.q:
                raise ValueError(f"index {value} out of range for F_{self.q}")
            return FieldElement(self, value)
        coeffs = list(value)
        if len(coeffs) != self.r:
            raise ValueError(f"expected {self.r} coefficients, got {len(coeffs)}")
        if any(not 0 <= c < self.p for c in coeffs):
            raise ValueError("coefficients must lie in [0, p)")
        return FieldElement(self, _undigits(coeffs, self.p))

    def elements(self) -> Iterator[FieldElement]:
        for i in range(self.q):
            yield FieldElement(self, i)

    def _check(self, other: FieldElement) -> None:
        if other.field is not self:
            from .errors import RingMismatchError

            raise RingMismatchError(
                f"element of F_{other.field.q} used in F_{self.q}"
            )

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FiniteField)
            and other.p == self.p
            and other.r == self.r
        )

    def __hash__(self) -> int:
        return hash(("FiniteField", self.p, self.r))

    def __repr__(self) -> str:
        return f"FiniteField({self.p}, {self.r})"


@functools.lru_cache(maxsize=None)
def finite_field(p: int, r: int = 1) -> FiniteField:
    """Shared, cached field instance for (p, r)."""
    return FiniteField(p, r)
