"""Matrices over chain rings.

The base ring has zero divisors, so determinants are computed without
division: Laplace expansion with memoization over column subsets,
O(n * 2^n) ring operations.  ``det_of_rows`` is generic over any element
type with ``+``, ``*``, unary ``-`` and a ``.ring.one`` (chain-ring
elements and product-ring elements both qualify).
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .errors import (
    BadRootError,
    ConsistencyError,
    NoRootError,
    NotInvertibleError,
    RingMismatchError,
    SizeMismatchError,
)
from .rings import ChainRing, RingElement


def det_of_rows(rows: Sequence[Sequence]) -> object:
    """Division-free determinant of a square array of ring elements."""
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise SizeMismatchError("determinant needs a nonempty square array")
    if n == 1:
        return rows[0][0]
    one = rows[0][0].ring.one
    # minors[cols] = det of the submatrix on the first len(cols) rows and
    # the given ascending column tuple
    minors = {(): one}
    for k in range(n):
        nxt = {}
        row = rows[k]
        for cols in combinations(range(n), k + 1):
            acc = None
            for t, j in enumerate(cols):
                term = row[j] * minors[cols[:t] + cols[t + 1:]]
                if (k + t) % 2:
                    term = -term
                acc = term if acc is None else acc + term
            nxt[cols] = acc
        minors = nxt
    return minors[tuple(range(n))]


class RingMatrix:
    """An immutable n x n matrix over a single chain ring."""

    __slots__ = ("ring", "n", "rows")

    def __init__(self, ring: ChainRing, rows: Sequence[Sequence[RingElement]]):
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise SizeMismatchError("matrix must be square and nonempty")
        for r in rows:
            for x in r:
                ring._check(x)
        self.ring = ring
        self.n = n
        self.rows = tuple(tuple(r) for r in rows)

    @classmethod
    def identity(cls, ring: ChainRing, n: int) -> "RingMatrix":
        one, zero = ring.one, ring.zero
        return cls(ring, [[one if i == j else zero for j in range(n)]
                          for i in range(n)])

    def entry(self, i: int, j: int) -> RingElement:
        return self.rows[i][j]

    def det(self) -> RingElement:
        return det_of_rows(self.rows)

    def __matmul__(self, other: "RingMatrix") -> "RingMatrix":
        if other.ring is not self.ring:
            raise RingMismatchError("matrix product across different rings")
        if other.n != self.n:
            raise SizeMismatchError(f"{self.n} x {self.n} @ {other.n} x {other.n}")
        n = self.n
        rows = []
        for i in range(n):
            out = []
            for j in range(n):
                acc = self.rows[i][0] * other.rows[0][j]
                for k in range(1, n):
                    acc = acc + self.rows[i][k] * other.rows[k][j]
                out.append(acc)
            rows.append(out)
        return RingMatrix(self.ring, rows)

    def scaled(self, c: RingElement) -> "RingMatrix":
        self.ring._check(c)
        return RingMatrix(self.ring, [[c * x for x in r] for r in self.rows])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, RingMatrix)
            and other.ring is self.ring
            and other.rows == self.rows
        )

    def __hash__(self) -> int:
        return hash((self.ring.cache_key, self.rows))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"RingMatrix[{body}]"


def adjugate(m: RingMatrix) -> RingMatrix:
    """Transpose of the cofactor matrix; m @ adjugate(m) = det(m) * I."""
    n, rows = m.n, m.rows
    if n == 1:
        return RingMatrix.identity(m.ring, 1)
    out = []
    for i in range(n):
        line = []
        for j in range(n):
            minor = [[rows[a][b] for b in range(n) if b != i]
                     for a in range(n) if a != j]
            c = det_of_rows(minor)
            line.append(-c if (i + j) % 2 else c)
        out.append(line)
    return RingMatrix(m.ring, out)


def inverse_of_unit_matrix(m: RingMatrix) -> RingMatrix:
    """Inverse via adjugate; requires det(m) to be a unit."""
    d = m.det()
    if not d.is_unit:
        raise NotInvertibleError("matrix determinant is not a unit")
    return adjugate(m).scaled(d.inverse())


def _common_ring(entries: Sequence[RingElement]) -> ChainRing:
    if not entries:
        raise SizeMismatchError("at least one entry required")
    ring = entries[0].ring
    for x in entries[1:]:
        if x.ring is not ring:
            raise RingMismatchError("entries come from different rings")
    return ring


def _primitive_powers(omega: RingElement, n: int) -> list[RingElement]:
    """[omega^0 .. omega^(n-1)] after checking the order is exactly n."""
    ring = omega.ring
    powers = [ring.one]
    for k in range(1, n):
        powers.append(powers[-1] * omega)
        if powers[-1] == ring.one:
            raise BadRootError(f"root of unity has order {k}, expected {n}")
    if powers[-1] * omega != ring.one:
        raise BadRootError(f"{omega} is not an {n}th root of unity")
    return powers


class Diagonal:
    """diag(a_1, ..., a_n); its determinant is the entry product."""

    __slots__ = ("ring", "entries")

    def __init__(self, entries: Sequence[RingElement]):
        self.entries = tuple(entries)
        self.ring = _common_ring(self.entries)

    @property
    def n(self) -> int:
        return len(self.entries)

    def det(self) -> RingElement:
        acc = self.entries[0]
        for x in self.entries[1:]:
            acc = acc * x
        return acc

    def to_matrix(self) -> RingMatrix:
        zero = self.ring.zero
        n = self.n
        return RingMatrix(
            self.ring,
            [[self.entries[i] if i == j else zero for j in range(n)]
             for i in range(n)],
        )

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Diagonal) and other.entries == self.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"diag({', '.join(str(x) for x in self.entries)})"


class Circulant:
    """cir(a_1, ..., a_n): each row is the cyclic right-shift of the previous."""

    __slots__ = ("ring", "row")

    def __init__(self, row: Sequence[RingElement]):
        self.row = tuple(row)
        self.ring = _common_ring(self.row)

    @property
    def n(self) -> int:
        return len(self.row)

    def to_matrix(self) -> RingMatrix:
        n = self.n
        return RingMatrix(
            self.ring,
            [[self.row[(j - i) % n] for j in range(n)] for i in range(n)],
        )

    def det(self) -> RingElement:
        return self.to_matrix().det()

    def eigenvalues(self, omega: RingElement) -> tuple[RingElement, ...]:
        """w_j = sum_i a_i omega^((i-1)j) for j = 0..n-1; omega must be a
        primitive n-th root of unity in the ring."""
        self.ring._check(omega)
        n = self.n
        powers = _primitive_powers(omega, n)
        out = []
        for j in range(n):
            acc = self.row[0]
            for i in range(1, n):
                acc = acc + self.row[i] * powers[(i * j) % n]
            out.append(acc)
        return tuple(out)

    def det_via_eigenvalues(self, omega: RingElement) -> RingElement:
        w = self.eigenvalues(omega)
        acc = w[0]
        for x in w[1:]:
            acc = acc * x
        return acc

    def poly_mul(self, other: "Circulant") -> "Circulant":
        """Product of the two circulants as polynomials mod X^n - 1."""
        if other.ring is not self.ring:
            raise RingMismatchError("circulant product across different rings")
        if other.n != self.n:
            raise SizeMismatchError(f"circulant sizes {self.n} != {other.n}")
        n, zero = self.n, self.ring.zero
        out = [zero] * n
        for i, a in enumerate(self.row):
            for j, b in enumerate(other.row):
                k = (i + j) % n
                out[k] = out[k] + a * b
        return Circulant(out)

    def diagonalize(self, omega: RingElement) -> tuple[RingMatrix, Diagonal]:
        """(P, D) with P A P^{-1} = D = diag(w_0, ..., w_{n-1}).

        P is the Vandermonde matrix P[j][i] = omega^{-ij}; it is invertible
        because det(P) is a product of differences of roots of unity that
        stay distinct in the residue field.  Requires n | (q - 1).
        """
        ring = self.ring
        if (ring.q - 1) % self.n != 0:
            raise NoRootError(
                f"n = {self.n} does not divide q - 1 = {ring.q - 1}"
            )
        n = self.n
        powers = _primitive_powers(omega, n)
        p_rows = [[powers[(-i * j) % n] for i in range(n)] for j in range(n)]
        pmat = RingMatrix(ring, p_rows)
        pinv = inverse_of_unit_matrix(pmat)
        diag = Diagonal(self.eigenvalues(omega))
        if (pmat @ self.to_matrix()) @ pinv != diag.to_matrix():
            raise ConsistencyError("diagonalization failed to verify")
        return pmat, diag

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Circulant) and other.row == self.row

    def __hash__(self) -> int:
        return hash(self.row)

    def __repr__(self) -> str:
        return f"cir({', '.join(str(x) for x in self.row)})"
