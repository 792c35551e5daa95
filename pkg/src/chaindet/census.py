"""Brute-force determinant census over all diagonal / circulant matrices.

The oracle enumerates every q^(en) candidate row (circulant) or diagonal,
computes each determinant exactly, and tallies by determinant.  Enumeration
runs in blocks over numpy index arrays: ring arithmetic becomes gathers
into precomputed exact index tables, so no float ever appears and counts
stay exact.  A pure-Python reference tally (`_tally_reference`) implements
the same census through the scalar matrix API and is used by the test
suite to cross-check the vectorized path.

Circulant determinants use the division-free subset expansion by default.
When n | (q - 1) an eigenvalue-product route is available; within a single
census run it is enabled only after both routes agree on the first block,
so the optimized path is never the sole witness.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Literal, Sequence

import numpy as np

from .counting import (
    CountQuery,
    CountResult,
    DeterminantClass,
    circulant_count,
    diagonal_count,
)
from .errors import ConsistencyError, TooLargeError
from .limits import TABLE_SIZE_LIMIT, enumeration_cap
from .matrices import Circulant, Diagonal, RingMatrix, inverse_of_unit_matrix
from .reports import CellResult, ConjectureCell, ConjectureReport, VerificationReport
from .rings import ChainRing, Family, RingElement

Shape = Literal["diagonal", "circulant"]
SHAPES: tuple[Shape, Shape] = ("diagonal", "circulant")

_BLOCK = 1 << 16


# ---------------------------------------------------------------------------
# exact index tables
# ---------------------------------------------------------------------------


def ring_tables(ring: ChainRing) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(add, mul, neg) index tables as int32 arrays; cached on the ring.

    add/mul are flat with entry i*size + j; int32 is safe because table
    construction is refused above TABLE_SIZE_LIMIT and size^2 stays far
    below 2^31.
    """
    if ring._np_tables is not None:
        return ring._np_tables
    size = ring.size
    if size > TABLE_SIZE_LIMIT:
        raise TooLargeError(
            f"|R| = {size} exceeds the dense-table limit {TABLE_SIZE_LIMIT}"
        )
    if ring.family is Family.INTEGER_MOD:
        i = np.arange(size, dtype=np.int64)
        add = ((i[:, None] + i[None, :]) % size).astype(np.int32).ravel()
        mul = ((i[:, None] * i[None, :]) % size).astype(np.int32).ravel()
        neg = ((-i) % size).astype(np.int32)
    else:
        kernel = ring._kernel
        raws = ring._raws
        raw_idx = ring._raw_idx
        add = np.empty(size * size, dtype=np.int32)
        mul = np.empty(size * size, dtype=np.int32)
        neg = np.empty(size, dtype=np.int32)
        for i in range(size):
            ri = raws[i]
            neg[i] = raw_idx[kernel.neg(ri)]
            base = i * size
            for j in range(i, size):
                s = raw_idx[kernel.add(ri, raws[j])]
                m = raw_idx[kernel.mul(ri, raws[j])]
                add[base + j] = s
                add[j * size + i] = s
                mul[base + j] = m
                mul[j * size + i] = m
    ring._np_tables = (add, mul, neg)
    return ring._np_tables


def _row_blocks(size: int, n: int, total: int) -> Iterable[np.ndarray]:
    """Blocks of candidate rows as (block, n) int32 digit arrays.

    Rows come out in ascending mixed-radix order with slot 0 most
    significant, so the space partitions cleanly by the first entry.
    """
    radix = np.array([size ** (n - 1 - k) for k in range(n)], dtype=np.int64)
    for start in range(0, total, _BLOCK):
        idx = np.arange(start, min(start + _BLOCK, total), dtype=np.int64)
        yield ((idx[:, None] // radix[None, :]) % size).astype(np.int32)


def _diag_det_block(cols: np.ndarray, mul: np.ndarray, size: int) -> np.ndarray:
    d = cols[:, 0]
    for k in range(1, cols.shape[1]):
        d = mul[d.astype(np.int64) * size + cols[:, k]]
    return d


def _circ_det_block_dp(cols: np.ndarray, tables, size: int) -> np.ndarray:
    """Division-free subset expansion, vectorized over the block."""
    add, mul, neg = tables
    n = cols.shape[1]
    if n == 1:
        return cols[:, 0]
    minors = {(j,): cols[:, j] for j in range(n)}
    for k in range(1, n):
        nxt = {}
        for colset in combinations(range(n), k + 1):
            acc = None
            for t, j in enumerate(colset):
                entry = cols[:, (j - k) % n]  # circulant: M[k][j] = row[(j-k) mod n]
                term = mul[entry.astype(np.int64) * size + minors[colset[:t] + colset[t + 1:]]]
                if (k + t) % 2:
                    term = neg[term]
                acc = term if acc is None else add[acc.astype(np.int64) * size + term]
            nxt[colset] = acc
        minors = nxt
    return minors[tuple(range(n))]


def _circ_det_block_eig(cols: np.ndarray, tables, size: int,
                        omega_powers: Sequence[int]) -> np.ndarray:
    """Product of the n eigenvalues w_j = sum_i a_i omega^(ij)."""
    add, mul, _ = tables
    n = cols.shape[1]
    det = None
    for j in range(n):
        w = cols[:, 0]
        for i in range(1, n):
            term = mul[cols[:, i].astype(np.int64) * size + omega_powers[(i * j) % n]]
            w = add[w.astype(np.int64) * size + term]
        det = w if det is None else mul[det.astype(np.int64) * size + w]
    return det


# ---------------------------------------------------------------------------
# tallies
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DetTally:
    """Exact determinant tally of one enumeration cell.

    counts[i] is the number of matrices whose determinant has element
    index i; the by-valuation view is the push-forward under valuation.
    """

    ring: ChainRing
    n: int
    shape: Shape
    counts: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.counts)

    def count_of(self, x: RingElement) -> int:
        self.ring._check(x)
        return self.counts[x.index]

    def by_valuation(self) -> tuple[int, ...]:
        out = [0] * (self.ring.e + 1)
        for idx, s in enumerate(self.ring.valuation_table()):
            out[s] += self.counts[idx]
        return tuple(out)

    def support(self) -> list[RingElement]:
        """Attained determinants, ascending element index."""
        return [RingElement(self.ring, i) for i, c in enumerate(self.counts) if c]

    def items(self) -> list[tuple[RingElement, int]]:
        return [(RingElement(self.ring, i), c) for i, c in enumerate(self.counts)]


def _guard(ring: ChainRing, n: int, cap: int | None) -> int:
    total = ring.size**n
    limit = enumeration_cap(cap)
    if total > limit:
        raise TooLargeError(
            f"{ring.spec_string()} n={n}: {total} candidates exceed cap {limit}"
        )
    return total


def tally_determinants(ring: ChainRing, n: int, shape: Shape,
                       cap: int | None = None) -> DetTally:
    """Enumerate all q^(en) diagonals / circulant first rows and tally the
    exact determinant of each."""
    if shape not in SHAPES:
        raise ValueError(f"unknown shape {shape!r}")
    total = _guard(ring, n, cap)
    size = ring.size
    if n == 1:  # det of [a] is a; no tables needed at any ring size
        return DetTally(ring, n, shape, (1,) * size)
    tables = ring_tables(ring)
    mul = tables[1]
    counts = np.zeros(size, dtype=np.int64)
    eig_powers = None
    if shape == "circulant" and (ring.q - 1) % n == 0:
        omega = ring.root_of_unity(n)
        eig_powers = [(omega**t).index for t in range(n)]
    eig_enabled = False
    for cols in _row_blocks(size, n, total):
        if shape == "diagonal":
            dets = _diag_det_block(cols, mul, size)
        elif eig_powers is None:
            dets = _circ_det_block_dp(cols, tables, size)
        elif not eig_enabled:
            # cross-oracle gate: the eigenvalue route may only take over
            # once it agrees with the division-free route in this run
            dets = _circ_det_block_dp(cols, tables, size)
            via_eig = _circ_det_block_eig(cols, tables, size, eig_powers)
            if not np.array_equal(dets, via_eig):
                raise ConsistencyError(
                    f"eigenvalue and division-free determinants disagree on "
                    f"{ring.spec_string()} n={n}"
                )
            eig_enabled = True
        else:
            dets = _circ_det_block_eig(cols, tables, size, eig_powers)
        counts += np.bincount(dets, minlength=size)
    return DetTally(ring, n, shape, tuple(int(c) for c in counts))


def _tally_reference(ring: ChainRing, n: int, shape: Shape,
                     cap: int | None = None) -> DetTally:
    """Scalar-API census; the slow second witness for the vectorized path."""
    _guard(ring, n, cap)
    counts = [0] * ring.size
    els = list(ring.elements())
    for combo in itertools.product(els, repeat=n):
        if shape == "diagonal":
            d = Diagonal(combo).det()
        else:
            d = Circulant(combo).det()
        counts[d.index] += 1
    return DetTally(ring, n, shape, tuple(counts))


# ---------------------------------------------------------------------------
# derived census operations
# ---------------------------------------------------------------------------


def determinant_image(ring: ChainRing, n: int, shape: Shape = "circulant",
                      cheap: bool = False, cap: int | None = None) -> list[RingElement]:
    """The set of attained determinants, sorted by digit vector.

    ``cheap`` restricts the circulant search to the two-parameter family
    cir(a, b, ..., b), whose determinant is (a-b)^(n-1) (a + (n-1)b); that
    family already attains every element when gcd(n, q) = 1, at q^(2e)
    instead of q^(en) candidates.
    """
    if not cheap:
        return tally_determinants(ring, n, shape, cap).support()
    if shape != "circulant":
        raise ValueError("cheap mode is defined for the circulant shape only")
    if ring.size**2 > enumeration_cap(cap):
        raise TooLargeError(f"|R|^2 = {ring.size ** 2} exceeds the cap")
    n_minus_1 = ring.zero
    for _ in range(n - 1):
        n_minus_1 = n_minus_1 + ring.one
    seen = set()
    for a in ring.elements():
        for b in ring.elements():
            d = (a - b) ** (n - 1) * (a + n_minus_1 * b)
            seen.add(d.index)
    return [RingElement(ring, i) for i in sorted(seen)]


def _orbit_violations(tally: DetTally) -> list[tuple[int, int, int, int, int]]:
    """(s, index_a, index_b, count_a, count_b) for each valuation class whose
    tally is not constant; only the first offending pair per class."""
    ring = tally.ring
    by_val: dict[int, list[int]] = {}
    for idx, s in enumerate(ring.valuation_table()):
        by_val.setdefault(s, []).append(idx)
    out = []
    for s, members in sorted(by_val.items()):
        first = members[0]
        for idx in members[1:]:
            if tally.counts[idx] != tally.counts[first]:
                out.append((s, first, idx, tally.counts[first], tally.counts[idx]))
                break
    return out


def unit_orbit_constant(ring: ChainRing, n: int, shape: Shape,
                        cap: int | None = None) -> bool:
    """True iff the tally is constant on every class {b*gamma^s : b unit};
    for circulants with gcd(n, q) = 1 the class counts must also be > 0."""
    tally = tally_determinants(ring, n, shape, cap)
    if _orbit_violations(tally):
        return False
    if shape == "circulant" and math.gcd(n, ring.q) == 1:
        reps = {s: ring.q**s for s in range(ring.e)}  # gamma^s has index q^s
        reps[ring.e] = 0
        if any(tally.counts[idx] == 0 for idx in reps.values()):
            return False
    return True


def eigenvalue_det_agreement(ring: ChainRing, n: int, cap: int | None = None) -> int:
    """Check the eigenvalue-product determinant against the division-free one
    on every circulant; returns how many matrices were compared."""
    total = _guard(ring, n, cap)
    if (ring.q - 1) % n != 0:
        raise ValueError(f"needs n | (q - 1); got n={n}, q={ring.q}")
    if n == 1:
        return total
    size = ring.size
    tables = ring_tables(ring)
    omega = ring.root_of_unity(n)
    powers = [(omega**t).index for t in range(n)]
    for cols in _row_blocks(size, n, total):
        dp = _circ_det_block_dp(cols, tables, size)
        eig = _circ_det_block_eig(cols, tables, size, powers)
        if not np.array_equal(dp, eig):
            bad = int(np.nonzero(dp != eig)[0][0])
            raise ConsistencyError(
                f"determinant routes disagree on {ring.spec_string()} n={n} "
                f"row #{bad}"
            )
    return total


def diagonalization_agreement(ring: ChainRing, n: int, cap: int | None = None) -> int:
    """Check P A P^{-1} = diag(eigenvalues) entry-wise for every circulant.

    P and P^{-1} are fixed per cell; conjugation is linear in the first row,
    so each entry of P A P^{-1} is sum_m row[m] * Q_m[s][t] with
    Q_m = P S^m P^{-1} computed honestly by matrix multiplication (S is the
    basic cyclic shift).  Vectorizing that sum checks every matrix.
    """
    total = _guard(ring, n, cap)
    if (ring.q - 1) % n != 0:
        raise ValueError(f"needs n | (q - 1); got n={n}, q={ring.q}")
    size = ring.size
    if n == 1:
        return total  # P = [1]; the claim is a = a
    tables = ring_tables(ring)
    add, mul, _ = tables
    omega = ring.root_of_unity(n)
    powers = [(omega**t).index for t in range(n)]
    pmat = RingMatrix(ring, [[RingElement(ring, powers[(-i * j) % n])
                              for i in range(n)] for j in range(n)])
    pinv = inverse_of_unit_matrix(pmat)
    shift = Circulant([ring.zero, ring.one] + [ring.zero] * (n - 2)).to_matrix()
    conj = []  # conj[m][s][t] = index of (P S^m P^-1)[s][t]
    power = RingMatrix.identity(ring, n)
    for _ in range(n):
        q_m = (pmat @ power) @ pinv
        conj.append([[q_m.entry(s, t).index for t in range(n)] for s in range(n)])
        power = power @ shift
    for cols in _row_blocks(size, n, total):
        idx64 = cols.astype(np.int64)
        for s in range(n):
            for t in range(n):
                acc = mul[idx64[:, 0] * size + conj[0][s][t]]
                for m in range(1, n):
                    term = mul[idx64[:, m] * size + conj[m][s][t]]
                    acc = add[acc.astype(np.int64) * size + term]
                if s == t:
                    w = cols[:, 0]
                    for i in range(1, n):
                        term = mul[idx64[:, i] * size + powers[(i * s) % n]]
                        w = add[w.astype(np.int64) * size + term]
                    expected = w
                else:
                    expected = np.zeros(len(cols), dtype=np.int32)
                if not np.array_equal(acc, expected):
                    raise ConsistencyError(
                        f"conjugation mismatch at entry ({s},{t}) on "
                        f"{ring.spec_string()} n={n}"
                    )
    return total


# ---------------------------------------------------------------------------
# verification grids and conjecture scans
# ---------------------------------------------------------------------------


def _classes_for(e: int) -> list[DeterminantClass]:
    return ([DeterminantClass.unit()]
            + [DeterminantClass.gamma_power(s) for s in range(1, e)]
            + [DeterminantClass.zero()])


def _class_members(ring: ChainRing, cls: DeterminantClass) -> list[int]:
    if cls.is_zero:
        return [0]
    want = 0 if cls.is_unit else cls.s
    return [i for i, s in enumerate(ring.valuation_table()) if s == want]


def _class_representative_index(ring: ChainRing, cls: DeterminantClass) -> int:
    if cls.is_zero:
        return 0
    if cls.is_unit:
        return 1
    return ring.q**cls.s  # gamma^s


def _formula_for(shape: Shape, query: CountQuery) -> CountResult:
    return diagonal_count(query) if shape == "diagonal" else circulant_count(query)


def _cell_results(ring: ChainRing, n: int, shape: Shape,
                  tally: DetTally | None) -> list[CellResult]:
    out = []
    for cls in _classes_for(ring.e):
        res = _formula_for(shape, CountQuery(ring.q, ring.e, n, cls))
        oracle = match = None
        if tally is not None:
            members = _class_members(ring, cls)
            oracle = tally.counts[_class_representative_index(ring, cls)]
            if res.applicable:
                match = all(tally.counts[i] == res.value for i in members)
                if cls.is_unit:
                    # the aggregate identity |U(R)| * count = unit total
                    match = match and res.value * len(members) == sum(
                        tally.counts[i] for i in members
                    )
        out.append(CellResult(
            ring=ring.spec_string(), q=ring.q, e=ring.e, n=n, shape=shape,
            det_class=str(cls), formula=res.value, oracle=oracle,
            applicable=res.applicable, match=match,
        ))
    return out


def verify_counts(rings: Sequence[ChainRing], n_max: int,
                  shapes: Sequence[Shape] = SHAPES,
                  cap: int | None = None,
                  ns: Sequence[int] | None = None) -> VerificationReport:
    """Compare every applicable closed-form count against the census over
    rings x n x shapes x determinant classes.  Cells over the cap keep their
    formula values but get no oracle column."""
    t0 = time.perf_counter()
    cells: list[CellResult] = []
    for ring in rings:
        for n in (ns if ns is not None else range(1, n_max + 1)):
            for shape in shapes:
                try:
                    tally = tally_determinants(ring, n, shape, cap)
                except TooLargeError:
                    tally = None
                cells.extend(_cell_results(ring, n, shape, tally))
    return VerificationReport(cells=cells, cap=enumeration_cap(cap),
                              elapsed_seconds=time.perf_counter() - t0)


CONJECTURES = ("orbit-without-gcd", "unit-coverage")


def scan_conjecture(name: str, cells: Sequence[tuple[ChainRing, int]],
                    cap: int | None = None) -> ConjectureReport:
    """Scan open-case circulant cells for counterexamples.

    ``orbit-without-gcd``: is the tally still constant on every class
    {b*gamma^s} when gcd(n, q) != 1 (where no theorem guarantees it)?
    ``unit-coverage``: is every unit attained as a circulant determinant?
    Cells over the cap are reported as skipped.  No formula values are
    produced here; these cells are exactly the ones the formulas do not
    cover.
    """
    if name not in CONJECTURES:
        raise ValueError(f"unknown conjecture {name!r}; options: {CONJECTURES}")
    t0 = time.perf_counter()
    out = []
    for ring, n in cells:
        spec = ring.spec_string()
        if name == "orbit-without-gcd" and math.gcd(n, ring.q) == 1:
            out.append(ConjectureCell(
                spec, n, "skipped", f"gcd(n, q) = 1: covered by theorem"))
            continue
        try:
            tally = tally_determinants(ring, n, "circulant", cap)
        except TooLargeError as exc:
            out.append(ConjectureCell(spec, n, "skipped", str(exc)))
            continue
        if name == "orbit-without-gcd":
            violations = _orbit_violations(tally)
            if violations:
                s, a, b, ca, cb = violations[0]
                detail = (f"class s={s}: count({RingElement(ring, a)}) = {ca} "
                          f"but count({RingElement(ring, b)}) = {cb}")
                out.append(ConjectureCell(spec, n, "counterexample", detail))
            else:
                out.append(ConjectureCell(
                    spec, n, "consistent",
                    "tally constant on every unit-association class"))
        else:
            missing = [RingElement(ring, i) for i in range(ring.size)
                       if i % ring.q != 0 and tally.counts[i] == 0]
            if missing:
                shown = ", ".join(str(x) for x in missing[:4])
                out.append(ConjectureCell(
                    spec, n, "counterexample",
                    f"units never attained as determinants: {shown}"))
            else:
                out.append(ConjectureCell(
                    spec, n, "consistent", "every unit is attained"))
    return ConjectureReport(conjecture=name, cells=out,
                            cap=enumeration_cap(cap),
                            elapsed_seconds=time.perf_counter() - t0)


# ---------------------------------------------------------------------------
# single-cell lookups (CLI `count`)
# ---------------------------------------------------------------------------


def count_cell(ring: ChainRing, n: int, shape: Shape,
               target: DeterminantClass | RingElement,
               method: str = "both", cap: int | None = None) -> CellResult:
    """Formula and/or oracle count for one determinant class or element."""
    if method not in ("formula", "oracle", "both"):
        raise ValueError(f"unknown method {method!r}")
    if isinstance(target, RingElement):
        ring._check(target)
        cls = DeterminantClass.from_valuation(target.valuation().s, ring.e)
        member_indices = [target.index]
        rep = target.index
    else:
        cls = target
        member_indices = None
        rep = None
    formula = _formula_for(shape, CountQuery(ring.q, ring.e, n, cls)) \
        if method in ("formula", "both") else None
    oracle = match = None
    if method in ("oracle", "both"):
        tally = tally_determinants(ring, n, shape, cap)
        if member_indices is None:
            member_indices = _class_members(ring, cls)
            rep = _class_representative_index(ring, cls)
        oracle = tally.counts[rep]
        if formula is not None and formula.applicable:
            match = all(tally.counts[i] == formula.value for i in member_indices)
    return CellResult(
        ring=ring.spec_string(), q=ring.q, e=ring.e, n=n, shape=shape,
        det_class=str(cls),
        formula=formula.value if formula is not None else None,
        oracle=oracle,
        applicable=formula.applicable if formula is not None else True,
        match=match,
    )
