"""Commutative finite chain rings and their elements.

Three families realize every (residue field size q, nilpotency index e)
pair the counting formulas depend on:

* ``Family.INTEGER_MOD`` -- Z/p^e, maximal ideal generated by p;
* ``Family.GALOIS`` -- GR(p^e, r), the unramified degree-r extension of
  Z/p^e, represented as Z/p^e[x] modulo the same monic irreducible the
  residue field uses;
* ``Family.POLY_U`` -- F_q[u]/(u^e), maximal ideal generated by u.

Every element has a unique expansion a_0 + a_1*g + ... + a_{e-1}*g^(e-1)
with digits a_i drawn from the representative set V (|V| = q) and g the
maximal-ideal generator.  Elements are addressed by the mixed-radix index
sum(v_i * q^i) over the digit positions v_i of their expansion, where v_i
is the residue-field index of a_i.  Consequences used throughout:

* index 0 is zero, index 1 is one, indices 0..q-1 are exactly V;
* an element is a unit iff index % q != 0;
* the valuation of an element is the number of leading zero digits, and
  dividing by g^s shifts digits down.

For Z/p^e the index coincides with the integer residue.  V is the digit
set {0..p-1} for Z/p^e, the constants for F_q[u]/(u^e), and the
Teichmueller set (the q-1st roots of unity plus 0) for Galois rings.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .errors import (
    BadIndexError,
    ConsistencyError,
    NoRootError,
    NotAUnitError,
    NotPrimeError,
    RingMismatchError,
    TooLargeError,
    UnsupportedCombinationError,
)
from .fields import FieldElement, FiniteField, _digits, _undigits, finite_field
from .limits import TABLE_SIZE_LIMIT, enumeration_cap
from .numbers import is_prime, prime_power


class Family(enum.Enum):
    INTEGER_MOD = "Z"
    GALOIS = "GR"
    POLY_U = "Fu"


# ---------------------------------------------------------------------------
# family kernels: raw representations and exact arithmetic on them
# ---------------------------------------------------------------------------


class _IntegerModKernel:
    """Raw representation: the integer residue in [0, p^e)."""

    def __init__(self, p: int, e: int):
        self.p = p
        self.e = e
        self.m = p**e

    def add(self, a, b):
        return (a + b) % self.m

    def mul(self, a, b):
        return (a * b) % self.m

    def neg(self, a):
        return (-a) % self.m

    # index digits base p are exactly the base-p digits of the residue
    def idx_to_raw(self, i):
        return i

    def raw_to_idx(self, a):
        return a

    def residue_of(self, a):
        return a % self.p


class _PolyUKernel:
    """Raw representation: tuple of e residue-field indices, u^0 first."""

    def __init__(self, field: FiniteField, e: int):
        self.field = field
        self.e = e
        self.q = field.q

    def add(self, a, b):
        fadd = self.field.add_index
        return tuple(fadd(x, y) for x, y in zip(a, b))

    def mul(self, a, b):
        fadd, fmul, e = self.field.add_index, self.field.mul_index, self.e
        out = [0] * e
        for i, ai in enumerate(a):
            if ai:
                for j in range(e - i):
                    if b[j]:
                        out[i + j] = fadd(out[i + j], fmul(ai, b[j]))
        return tuple(out)

    def neg(self, a):
        fneg = self.field.neg_index
        return tuple(fneg(x) for x in a)

    def idx_to_raw(self, i):
        return _digits(i, self.q, self.e)

    def raw_to_idx(self, a):
        return _undigits(a, self.q)

    def residue_of(self, a):
        return a[0]


class _GaloisKernel:
    """Raw representation: tuple of r coefficients in [0, p^e).

    The modulus is the residue field's irreducible with the same integer
    coefficients, so reduction mod p^i is a ring homomorphism onto the
    smaller Galois ring for every i.
    """

    def __init__(self, field: FiniteField, e: int):
        self.field = field
        self.p = field.p
        self.r = field.r
        self.e = e
        self.q = field.q
        self.pe = field.p**e
        self.modulus = field.modulus  # coefficients already in [0, p)
        self.teich = self._teichmueller_set()

    def add(self, a, b):
        pe = self.pe
        return tuple((x + y) % pe for x, y in zip(a, b))

    def neg(self, a):
        pe = self.pe
        return tuple((-x) % pe for x in a)

    def mul(self, a, b):
        pe, r = self.pe, self.r
        prod = [0] * (2 * r - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] = (prod[i + j] + ai * bj) % pe
        mod = self.modulus
        for i in range(2 * r - 2, r - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for k in range(r):
                    prod[i - r + k] = (prod[i - r + k] - c * mod[k]) % pe
        return tuple(prod[:r])

    def _pow(self, a, k):
        acc = (1,) + (0,) * (self.r - 1)
        while k:
            if k & 1:
                acc = self.mul(acc, a)
            a = self.mul(a, a)
            k >>= 1
        return acc

    def _teichmueller_set(self):
        """V[k] = the unique (q-1)st root of unity (or 0) congruent to the
        residue-field element of index k; computed by iterating z -> z^q
        from any lift until fixed (at most e-1 steps)."""
        out = []
        for k in range(self.q):
            z = tuple(_digits(k, self.p, self.r))  # lift: same digits mod p^e
            while True:
                z_next = self._pow(z, self.q)
                if z_next == z:
                    break
                z = z_next
            out.append(z)
        return out

    def residue_of(self, a):
        return _undigits([c % self.p for c in a], self.p)

    def idx_to_raw(self, i):
        pe = self.pe
        acc = [0] * self.r
        scale = 1
        for v in _digits(i, self.q, self.e):
            if v:
                t = self.teich[v]
                for k in range(self.r):
                    acc[k] = (acc[k] + t[k] * scale) % pe
            scale *= self.p
        return tuple(acc)

    def raw_to_idx(self, a):
        p = self.p
        digits = []
        x = list(a)
        for _ in range(self.e):
            v = self.residue_of(x)
            digits.append(v)
            t = self.teich[v]
            x = [(c - tc) % self.pe for c, tc in zip(x, t)]
            x = [c // p for c in x]  # exact: every coefficient is 0 mod p
        return _undigits(digits, self.q)


# ---------------------------------------------------------------------------
# elements
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ValUnitDecomposition:
    """x = gamma^s * unit_part; s = e and unit_part = None exactly for x = 0."""

    s: int
    unit_part: "RingElement | None"


class RingElement:
    """An element of a :class:`ChainRing`, identified by its index."""

    __slots__ = ("ring", "index")

    def __init__(self, ring: "ChainRing", index: int):
        self.ring = ring
        self.index = index

    @property
    def coords(self) -> tuple[int, ...]:
        """Digits of the gamma-adic expansion, as residue-field indices."""
        return _digits(self.index, self.ring.q, self.ring.e)

    @property
    def is_zero(self) -> bool:
        return self.index == 0

    @property
    def is_unit(self) -> bool:
        return self.index % self.ring.q != 0

    def __add__(self, other: "RingElement") -> "RingElement":
        r = self.ring
        r._check(other)
        return RingElement(r, r.add_index(self.index, other.index))

    def __sub__(self, other: "RingElement") -> "RingElement":
        r = self.ring
        r._check(other)
        return RingElement(r, r.add_index(self.index, r.neg_index(other.index)))

    def __mul__(self, other: "RingElement") -> "RingElement":
        r = self.ring
        r._check(other)
        return RingElement(r, r.mul_index(self.index, other.index))

    def __neg__(self) -> "RingElement":
        return RingElement(self.ring, self.ring.neg_index(self.index))

    def __pow__(self, k: int) -> "RingElement":
        if k < 0:
            return self.inverse() ** (-k)
        acc, base = self.ring.one, self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def inverse(self) -> "RingElement":
        return RingElement(self.ring, self.ring.inv_index(self.index))

    def valuation(self) -> ValUnitDecomposition:
        return self.ring.valuation(self)

    def residue(self) -> FieldElement:
        return self.ring.residue(self)

    def __int__(self) -> int:
        if self.ring.family is not Family.INTEGER_MOD:
            raise TypeError(f"{self.ring} elements have no canonical integer form")
        return self.index

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, RingElement)
            and other.ring is self.ring
            and other.index == self.index
        )

    def __hash__(self) -> int:
        return hash((self.ring.cache_key, self.index))

    def __repr__(self) -> str:
        return f"<{self} in {self.ring.spec_string()}>"

    def __str__(self) -> str:
        ring = self.ring
        if ring.family is Family.INTEGER_MOD:
            return str(self.index)
        if ring.family is Family.POLY_U:
            raw = ring._kernel.idx_to_raw(self.index)
            terms = []
            for i, c in enumerate(raw):
                if not c:
                    continue
                cs = str(FieldElement(ring.residue_field, c))
                if i == 0:
                    terms.append(cs)
                else:
                    head = "" if c == 1 else (cs if "+" not in cs else f"({cs})")
                    terms.append(f"{head}u" if i == 1 else f"{head}u^{i}")
            return "+".join(terms) if terms else "0"
        raw = ring._kernel.idx_to_raw(self.index)
        terms = []
        for i in range(ring.r - 1, -1, -1):
            c = raw[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                head = "" if c == 1 else str(c)
                terms.append(f"{head}x" if i == 1 else f"{head}x^{i}")
        return "+".join(terms) if terms else "0"


# ---------------------------------------------------------------------------
# the ring
# ---------------------------------------------------------------------------


class ChainRing:
    """A commutative finite chain ring from one of the three families.

    Immutable after construction; all operations are pure, so instances
    are safe to share across workers.  Obtain through :func:`chain_ring`
    (cached), so rings with equal parameters are identical objects.
    """

    def __init__(self, family: Family, p: int, e: int, r: int = 1,
                 _cap: int | None = None):
        if not is_prime(p):
            raise NotPrimeError(f"{p} is not prime")
        if e < 1:
            raise ValueError(f"nilpotency index {e} must be >= 1")
        if r < 1:
            raise ValueError(f"residue degree {r} must be >= 1")
        if family is Family.INTEGER_MOD and r != 1:
            raise UnsupportedCombinationError(
                "Z/p^e has residue degree 1; use a Galois ring for r > 1"
            )
        q = p**r
        size = q**e
        if size > enumeration_cap(_cap):
            raise TooLargeError(f"ring size {size} exceeds the enumeration cap")
        self.family = family
        self.p = p
        self.e = e
        self.r = r
        self.q = q
        self.size = size
        self.cache_key = (family, p, e, r)
        self.residue_field = finite_field(p, r)
        if family is Family.INTEGER_MOD:
            self._kernel = _IntegerModKernel(p, e)
        elif family is Family.POLY_U:
            self._kernel = _PolyUKernel(self.residue_field, e)
        else:
            self._kernel = _GaloisKernel(self.residue_field, e)
        self._raws: list | None = None
        self._raw_idx: dict | None = None
        if family is not Family.INTEGER_MOD and size <= TABLE_SIZE_LIMIT:
            self._raws = [self._kernel.idx_to_raw(i) for i in range(size)]
            self._raw_idx = {raw: i for i, raw in enumerate(self._raws)}
        self._np_tables = None

    # -- index-level arithmetic ------------------------------------------

    def add_index(self, i: int, j: int) -> int:
        k = self._kernel
        if self._raws is not None:
            return self._raw_idx[k.add(self._raws[i], self._raws[j])]
        return k.raw_to_idx(k.add(k.idx_to_raw(i), k.idx_to_raw(j)))

    def mul_index(self, i: int, j: int) -> int:
        k = self._kernel
        if self._raws is not None:
            return self._raw_idx[k.mul(self._raws[i], self._raws[j])]
        return k.raw_to_idx(k.mul(k.idx_to_raw(i), k.idx_to_raw(j)))

    def neg_index(self, i: int) -> int:
        k = self._kernel
        if self._raws is not None:
            return self._raw_idx[k.neg(self._raws[i])]
        return k.raw_to_idx(k.neg(k.idx_to_raw(i)))

    def inv_index(self, i: int) -> int:
        """Newton lift of the residue-field inverse: y <- y(2 - xy) doubles
        the gamma-adic precision each step."""
        if i % self.q == 0:
            raise NotAUnitError(f"element of index {i} is not a unit")
        v0 = i % self.q
        y = self.residue_field.inv_index(v0)  # V-lift: index < q
        two = self.add_index(1, 1)
        steps = max(self.e - 1, 0).bit_length()
        for _ in range(steps):
            t = self.add_index(two, self.neg_index(self.mul_index(i, y)))
            y = self.mul_index(y, t)
        if self.mul_index(i, y) != 1:
            raise ConsistencyError("Newton inversion failed to converge")
        return y

    # -- element construction --------------------------------------------

    @property
    def zero(self) -> RingElement:
        return RingElement(self, 0)

    @property
    def one(self) -> RingElement:
        return RingElement(self, 1)

    @property
    def gamma(self) -> RingElement:
        """The maximal-ideal generator; the zero element when e = 1."""
        return RingElement(self, self.q if self.e > 1 else 0)

    @property
    def representatives(self) -> tuple[RingElement, ...]:
        """V, ordered by residue-field index."""
        return tuple(RingElement(self, k) for k in range(self.q))

    def element(self, value: int | Sequence[int] | RingElement) -> RingElement:
        """Element from an index, a gamma-adic digit vector, or pass-through."""
        if isinstance(value, RingElement):
            self._check(value)
            return value
        if isinstance(value, int):
            if not 0 <= value < self.size:
                raise ValueError(f"index {value} out of range for {self}")
            return RingElement(self, value)
        coords = list(value)
        if len(coords) != self.e:
            raise ValueError(f"expected {self.e} digits, got {len(coords)}")
        if any(not 0 <= v < self.q for v in coords):
            raise ValueError("digits must lie in [0, q)")
        return RingElement(self, _undigits(coords, self.q))

    def from_int(self, value: int) -> RingElement:
        """Residue-class element of an integer; Z/p^e only."""
        if self.family is not Family.INTEGER_MOD:
            raise UnsupportedCombinationError(
                f"{self} elements are not integer residues"
            )
        return RingElement(self, value % self.size)

    def elements(self, cap: int | None = None) -> Iterator[RingElement]:
        """Every element exactly once, ascending index."""
        if self.size > enumeration_cap(cap):
            raise TooLargeError(f"|R| = {self.size} exceeds the enumeration cap")
        for i in range(self.size):
            yield RingElement(self, i)

    def units(self, cap: int | None = None) -> Iterator[RingElement]:
        """Every unit exactly once; there are (q-1)*q^(e-1) of them."""
        for x in self.elements(cap):
            if x.index % self.q != 0:
                yield x

    # -- structure maps ----------------------------------------------------

    def valuation(self, x: RingElement) -> ValUnitDecomposition:
        """Least s with x in gamma^s R, plus the unit cofactor (digit shift)."""
        self._check(x)
        if x.index == 0:
            return ValUnitDecomposition(self.e, None)
        q, idx, s = self.q, x.index, 0
        while idx % q == 0:
            idx //= q
            s += 1
        return ValUnitDecomposition(s, RingElement(self, idx))

    def residue(self, x: RingElement) -> FieldElement:
        """Image in R/(gamma) = F_q: the first gamma-adic digit."""
        self._check(x)
        return FieldElement(self.residue_field, x.index % self.q)

    def quotient(self, i: int) -> tuple["ChainRing", Callable[[RingElement], RingElement]]:
        """R/gamma^i R (same family and q, nilpotency i) and the projection,
        which truncates the gamma-adic expansion to i digits."""
        if not 1 <= i <= self.e:
            raise BadIndexError(f"quotient index {i} not in [1, {self.e}]")
        target = chain_ring(self.family, self.p, i, self.r)
        qi = self.q**i

        def project(x: RingElement) -> RingElement:
            self._check(x)
            return RingElement(target, x.index % qi)

        return target, project

    def teichmueller(self, residue_index: int) -> RingElement:
        """The unique root of unity (or 0) congruent to the residue-field
        element of the given index: iterate z -> z^q from a lift until fixed."""
        z = RingElement(self, residue_index % self.q)
        while True:
            z_next = z**self.q
            if z_next == z:
                return z
            z = z_next

    def root_of_unity(self, n: int) -> RingElement:
        """An element of multiplicative order exactly n; requires n | (q-1)."""
        if n < 1:
            raise ValueError(f"order {n} must be >= 1")
        if (self.q - 1) % n != 0:
            raise NoRootError(f"{n} does not divide q - 1 = {self.q - 1}")
        xi = self.teichmueller(self.residue_field.generator.index)
        omega = xi ** ((self.q - 1) // n)
        k, acc = 1, omega
        while not acc == self.one:
            acc = acc * omega
            k += 1
        if k != n:
            raise ConsistencyError(f"constructed root has order {k}, wanted {n}")
        return omega

    # -- misc ---------------------------------------------------------------

    def valuation_table(self) -> list[int]:
        """Valuation of every element by index (s = e for zero)."""
        q, e = self.q, self.e
        out = [0] * self.size
        out[0] = e
        for i in range(1, self.size):
            idx, s = i, 0
            while idx % q == 0:
                idx //= q
                s += 1
            out[i] = s
        return out

    def class_size(self, s: int) -> int:
        """Number of elements of valuation s: (q-1)q^(e-1-s), or 1 for s = e."""
        if not 0 <= s <= self.e:
            raise BadIndexError(f"valuation {s} not in [0, {self.e}]")
        if s == self.e:
            return 1
        return (self.q - 1) * self.q ** (self.e - 1 - s)

    def spec_string(self) -> str:
        if self.family is Family.INTEGER_MOD:
            return f"Z/{self.size}"
        if self.family is Family.GALOIS:
            return f"GR({self.p ** self.e},{self.r})"
        return f"F{self.q}[u]/u^{self.e}"

    def _check(self, x: RingElement) -> None:
        if x.ring is not self:
            raise RingMismatchError(
                f"element of {x.ring.spec_string()} used in {self.spec_string()}"
            )

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ChainRing) and other.cache_key == self.cache_key

    def __hash__(self) -> int:
        return hash(self.cache_key)

    def __repr__(self) -> str:
        return f"ChainRing({self.spec_string()!r})"


@functools.lru_cache(maxsize=None)
def _chain_ring_cached(family: Family, p: int, e: int, r: int) -> ChainRing:
    return ChainRing(family, p, e, r)


def chain_ring(family: Family, p: int, e: int, r: int = 1) -> ChainRing:
    """Shared, cached ring instance for (family, p, e, r)."""
    return _chain_ring_cached(family, p, e, r)


def zmod(m: int) -> ChainRing:
    """Z/m for a prime power m = p^e."""
    pk = prime_power(m)
    if pk is None:
        from .errors import NotPrimePowerError

        raise NotPrimePowerError(f"{m} is not a prime power")
    p, e = pk
    return chain_ring(Family.INTEGER_MOD, p, e)


def galois_ring(pe: int, r: int) -> ChainRing:
    """GR(p^e, r) for a prime power p^e."""
    pk = prime_power(pe)
    if pk is None:
        from .errors import NotPrimePowerError

        raise NotPrimePowerError(f"{pe} is not a prime power")
    p, e = pk
    return chain_ring(Family.GALOIS, p, e, r)


def truncated_poly_ring(q: int, e: int) -> ChainRing:
    """F_q[u]/(u^e) for a prime power q."""
    pk = prime_power(q)
    if pk is None:
        from .errors import NotPrimePowerError

        raise NotPrimePowerError(f"{q} is not a prime power")
    p, r = pk
    return chain_ring(Family.POLY_U, p, e, r)
