"""Exact arithmetic and determinant censuses over commutative finite chain rings.

The package splits into:

* :mod:`chaindet.fields` / :mod:`chaindet.rings` -- F_q and the three chain
  ring families (Z/p^e, Galois rings, F_q[u]/(u^e));
* :mod:`chaindet.matrices` -- division-free determinants, circulant /
  diagonal constructors, eigenvalues and diagonalization;
* :mod:`chaindet.counting` -- the closed-form counting formulas, exact
  big-integer only;
* :mod:`chaindet.census` -- the brute-force enumeration oracle, verification
  grids and conjecture scans;
* :mod:`chaindet.products` -- products of chain rings;
* :mod:`chaindet.cli` -- the ``chaindet`` command.
"""

from .census import (
    DetTally,
    count_cell,
    determinant_image,
    diagonalization_agreement,
    eigenvalue_det_agreement,
    scan_conjecture,
    tally_determinants,
    unit_orbit_constant,
    verify_counts,
)
from .counting import (
    CountQuery,
    CountResult,
    DeterminantClass,
    circulant_count,
    diagonal_count,
    diagonal_zero_count_recursive,
    nonsingular_circulant_count,
    nonsingular_circulant_count_field,
    nonsingular_diagonal_count,
    quotient_reduction_identity_holds,
)
from .fields import FieldElement, FiniteField, finite_field
from .matrices import Circulant, Diagonal, RingMatrix, det_of_rows
from .products import (
    ProductElement,
    ProductRing,
    product_circulant_count,
    product_diagonal_count,
    product_tally,
    project,
    verify_product_counts,
)
from .reports import CellResult, ConjectureReport, VerificationReport
from .rings import (
    ChainRing,
    Family,
    RingElement,
    ValUnitDecomposition,
    chain_ring,
    galois_ring,
    truncated_poly_ring,
    zmod,
)
from .ringspec import parse_ring_list, parse_ring_spec

__version__ = "0.1.0"

__all__ = [
    "CellResult",
    "ChainRing",
    "Circulant",
    "ConjectureReport",
    "CountQuery",
    "CountResult",
    "DetTally",
    "DeterminantClass",
    "Diagonal",
    "Family",
    "FieldElement",
    "FiniteField",
    "ProductElement",
    "ProductRing",
    "RingElement",
    "RingMatrix",
    "ValUnitDecomposition",
    "VerificationReport",
    "chain_ring",
    "circulant_count",
    "count_cell",
    "det_of_rows",
    "determinant_image",
    "diagonal_count",
    "diagonal_zero_count_recursive",
    "diagonalization_agreement",
    "eigenvalue_det_agreement",
    "finite_field",
    "galois_ring",
    "nonsingular_circulant_count",
    "nonsingular_circulant_count_field",
    "nonsingular_diagonal_count",
    "parse_ring_list",
    "parse_ring_spec",
    "product_circulant_count",
    "product_diagonal_count",
    "product_tally",
    "project",
    "quotient_reduction_identity_holds",
    "scan_conjecture",
    "tally_determinants",
    "truncated_poly_ring",
    "unit_orbit_constant",
    "verify_counts",
    "verify_product_counts",
    "zmod",
]
