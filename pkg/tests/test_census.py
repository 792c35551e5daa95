import pytest

from chaindet import census
from chaindet.census import (
    _tally_reference,
    count_cell,
    determinant_image,
    diagonalization_agreement,
    eigenvalue_det_agreement,
    scan_conjecture,
    tally_determinants,
    unit_orbit_constant,
    verify_counts,
)
from chaindet.counting import DeterminantClass
from chaindet.errors import TooLargeError
from chaindet.reports import VerificationReport
from chaindet.rings import galois_ring, truncated_poly_ring, zmod

Z4 = zmod(4)
Z8 = zmod(8)
F3 = truncated_poly_ring(3, 1)
F2 = truncated_poly_ring(2, 1)


# -- tallies -------------------------------------------------------------------


def test_tally_spec_values_diagonal_z4():
    t = tally_determinants(Z4, 2, "diagonal")
    assert t.counts == (8, 2, 4, 2)
    assert t.count_of(Z4.from_int(0)) == 8
    assert t.count_of(Z4.from_int(2)) == 4


def test_tally_spec_values_circulant_f3():
    t = tally_determinants(F3, 2, "circulant")
    assert t.counts == (5, 2, 2)


@pytest.mark.parametrize("shape", census.SHAPES)
def test_tally_n1_counts_every_element_once(shape):
    for ring in (Z8, galois_ring(4, 2)):
        t = tally_determinants(ring, 1, shape)
        assert t.counts == (1,) * ring.size


@pytest.mark.parametrize("ring,n", [(Z4, 2), (Z4, 3), (Z8, 2), (F3, 3),
                                    (truncated_poly_ring(2, 2), 2),
                                    (truncated_poly_ring(3, 2), 2),
                                    (galois_ring(4, 2), 2)],
                         ids=lambda v: str(v))
@pytest.mark.parametrize("shape", census.SHAPES)
def test_vectorized_tally_matches_scalar_reference(ring, n, shape):
    fast = tally_determinants(ring, n, shape)
    slow = _tally_reference(ring, n, shape)
    assert fast.counts == slow.counts


@pytest.mark.parametrize("ring,n", [(Z8, 2), (zmod(9), 2), (Z4, 4),
                                    (galois_ring(4, 2), 2)],
                         ids=lambda v: str(v))
@pytest.mark.parametrize("shape", census.SHAPES)
def test_tally_total_is_full_space(ring, n, shape):
    t = tally_determinants(ring, n, shape)
    assert t.total == ring.size**n
    assert sum(t.by_valuation()) == ring.size**n


def test_by_valuation_is_pushforward():
    t = tally_determinants(Z8, 2, "diagonal")
    val = Z8.valuation_table()
    for s in range(Z8.e + 1):
        assert t.by_valuation()[s] == sum(
            c for i, c in enumerate(t.counts) if val[i] == s
        )


FAMILY_PAIRS = [
    (zmod(4), truncated_poly_ring(2, 2)),
    (zmod(8), truncated_poly_ring(2, 3)),
    (zmod(9), truncated_poly_ring(3, 2)),
    (galois_ring(4, 2), truncated_poly_ring(4, 2)),
    (galois_ring(9, 2), truncated_poly_ring(9, 2)),
]


@pytest.mark.parametrize("pair", FAMILY_PAIRS,
                         ids=lambda p: f"{p[0].spec_string()}~{p[1].spec_string()}")
def test_cross_family_invariance_diagonal(pair):
    # diagonal counts depend only on (q, e): valuation tallies must agree
    # between families for every n
    a, b = pair
    assert (a.q, a.e) == (b.q, b.e)
    for n in (1, 2, 3):
        ta = tally_determinants(a, n, "diagonal")
        tb = tally_determinants(b, n, "diagonal")
        assert ta.by_valuation() == tb.by_valuation()


@pytest.mark.parametrize("pair", FAMILY_PAIRS,
                         ids=lambda p: f"{p[0].spec_string()}~{p[1].spec_string()}")
def test_cross_family_invariance_circulant_covered_cells(pair):
    # circulant counts are forced equal across families exactly where the
    # closed forms exist: unit totals when gcd(n, q) = 1, everything when
    # n | (q - 1)
    import math

    a, b = pair
    for n in (1, 2, 3, 4):
        if a.size**n > 10**6:
            continue
        ta = tally_determinants(a, n, "circulant")
        tb = tally_determinants(b, n, "circulant")
        if (a.q - 1) % n == 0:
            assert ta.by_valuation() == tb.by_valuation()
        elif math.gcd(n, a.q) == 1:
            assert ta.by_valuation()[0] == tb.by_valuation()[0]


def test_open_circulant_cells_do_depend_on_the_family():
    # no theorem covers n = 2 over q = 2, e = 3, and the families genuinely
    # differ there: over F_2[u]/u^3 every det is the square (a+b)^2, so
    # valuation-2 dets are twice as common as over Z/8
    ta = tally_determinants(zmod(8), 2, "circulant")
    tb = tally_determinants(truncated_poly_ring(2, 3), 2, "circulant")
    assert ta.by_valuation() == (32, 0, 8, 24)
    assert tb.by_valuation() == (32, 0, 16, 16)


def test_tally_cap_enforced():
    with pytest.raises(TooLargeError):
        tally_determinants(Z8, 3, "diagonal", cap=100)


def test_tally_deterministic():
    a = tally_determinants(Z8, 3, "circulant")
    b = tally_determinants(Z8, 3, "circulant")
    assert a == b


def test_support_and_items_sorted_by_digits():
    t = tally_determinants(Z4, 2, "circulant")
    sup = t.support()
    assert [x.coords for x in sup] == sorted(x.coords for x in sup)
    assert sum(c for _, c in t.items()) == 16


# -- determinant image -----------------------------------------------------------


def test_det_image_z4_misses_the_zero_divisor():
    image = determinant_image(Z4, 2, "circulant")
    assert [int(x) for x in image] == [0, 1, 3]
    t = tally_determinants(Z4, 2, "circulant")
    assert t.count_of(Z4.from_int(2)) == 0


def test_det_image_cheap_mode():
    # gcd(3, 2) = 1: the two-parameter family already covers all of Z/4
    image = determinant_image(Z4, 3, "circulant", cheap=True)
    assert sorted(int(x) for x in image) == [0, 1, 2, 3]
    # gcd(3, 3) != 1, but empirically everything is still attained over F_3
    image = determinant_image(F3, 3, "circulant", cheap=True)
    assert len(image) == 3


def test_det_image_cheap_matches_family_subset_of_full():
    cheap = {x.index for x in determinant_image(Z8, 2, "circulant", cheap=True)}
    full = {x.index for x in determinant_image(Z8, 2, "circulant")}
    assert cheap <= full


def test_det_image_cheap_rejects_diagonal():
    with pytest.raises(ValueError):
        determinant_image(Z4, 2, "diagonal", cheap=True)


# -- orbit constancy ---------------------------------------------------------------


def test_unit_orbit_spec_cells():
    assert unit_orbit_constant(Z8, 2, "diagonal")
    assert unit_orbit_constant(Z4, 2, "circulant")
    assert unit_orbit_constant(F3, 2, "circulant")


def test_unit_orbit_positivity_checked_for_coprime_circulants():
    # contrived tally with a zero class count must fail the check; build one
    # by shrinking the cap so nothing breaks: instead verify the real cells
    # stay positive
    for ring, n in ((F3, 2), (Z4, 3), (zmod(5), 4)):
        assert unit_orbit_constant(ring, n, "circulant")


# -- dual-route agreement -----------------------------------------------------------


@pytest.mark.parametrize("ring,n", [(F3, 2), (zmod(9), 2), (zmod(5), 4),
                                    (truncated_poly_ring(4, 1), 3),
                                    (galois_ring(9, 2), 2)],
                         ids=lambda v: str(v))
def test_eigenvalue_route_agrees_exhaustively(ring, n):
    assert eigenvalue_det_agreement(ring, n) == ring.size**n
    assert diagonalization_agreement(ring, n) == ring.size**n


def test_eigenvalue_route_needs_dividing_n():
    with pytest.raises(ValueError):
        eigenvalue_det_agreement(Z4, 2)


# -- verification grids ---------------------------------------------------------------


def test_verify_grid_diagonal_all_match():
    report = verify_counts([Z4, truncated_poly_ring(2, 2)], 3,
                           shapes=("diagonal",))
    assert report.all_match
    assert all(c.match for c in report.cells if c.applicable)
    assert len(report.cells) == 2 * 3 * 3  # rings x n x classes


def test_verify_circulant_open_cell_still_reports_oracle():
    report = verify_counts([Z4], 2, shapes=("circulant",))
    cell = next(c for c in report.cells
                if c.n == 2 and c.det_class == "unit")
    assert not cell.applicable
    assert cell.formula is None
    assert cell.oracle == 4  # the census still counts
    assert cell.match is None
    assert report.all_match  # open cells are not mismatches


def test_verify_too_large_cell_reported_not_fatal():
    report = verify_counts([Z8], 2, shapes=("diagonal",), cap=10)
    # n = 1 fits under the cap of 10 candidates, n = 2 does not
    for cell in report.cells:
        assert cell.formula is not None
        if cell.n == 1:
            assert cell.oracle is not None and cell.match is True
        else:
            assert cell.oracle is None and cell.match is None


def test_verify_report_roundtrips():
    report = verify_counts([Z4, F3], 2)
    assert VerificationReport.from_json(report.to_json()) == report
    assert VerificationReport.from_csv(report.to_csv()) == report


def test_verify_emission_is_deterministic():
    a = verify_counts([Z4, F3], 2).to_json()
    b = verify_counts([Z4, F3], 2).to_json()
    assert a == b


# -- conjecture scans -----------------------------------------------------------------


def test_orbit_scan_consistent_on_z4():
    report = scan_conjecture("orbit-without-gcd", [(Z4, 2)])
    assert [c.status for c in report.cells] == ["consistent"]
    assert not report.has_counterexample


def test_scans_find_the_equal_characteristic_counterexample():
    # Over F_2[u]/u^2 every 2x2 circulant determinant is a^2 - b^2 = (a+b)^2,
    # and squaring collapses onto the prime subfield {0, 1}: the unit 1+u is
    # never attained.  Both conjectures fail at this cell, while Z/4 (with
    # the same q, e) passes: unequal characteristic rescues it since -1 != 1.
    r = truncated_poly_ring(2, 2)
    t = tally_determinants(r, 2, "circulant")
    assert t.counts == (8, 8, 0, 0)
    orbit = scan_conjecture("orbit-without-gcd", [(r, 2)])
    assert orbit.has_counterexample
    coverage = scan_conjecture("unit-coverage", [(r, 2)])
    assert coverage.has_counterexample
    assert "1+u" in coverage.cells[0].detail
    assert not scan_conjecture("unit-coverage", [(Z4, 2)]).has_counterexample


def test_orbit_scan_skips_coprime_cells():
    report = scan_conjecture("orbit-without-gcd", [(Z4, 3)])
    assert [c.status for c in report.cells] == ["skipped"]


def test_unit_coverage_scan_spec_cells():
    report = scan_conjecture("unit-coverage", [(Z4, 2), (F2, 2)])
    assert all(c.status == "consistent" for c in report.cells)


def test_scan_reports_too_large_as_skipped():
    report = scan_conjecture("unit-coverage", [(Z8, 4)], cap=100)
    assert [c.status for c in report.cells] == ["skipped"]


def test_scan_unknown_conjecture():
    with pytest.raises(ValueError):
        scan_conjecture("nope", [(Z4, 2)])


def test_conjecture_report_roundtrips():
    report = scan_conjecture("unit-coverage", [(Z4, 2), (Z4, 4)])
    from chaindet.reports import ConjectureReport

    assert ConjectureReport.from_json(report.to_json()) == report
    assert ConjectureReport.from_csv(report.to_csv()) == report


# -- single-cell lookups ----------------------------------------------------------------


def test_count_cell_formula_and_oracle_match():
    cell = count_cell(Z8, 2, "diagonal", DeterminantClass.gamma_power(1))
    assert (cell.formula, cell.oracle, cell.match) == (8, 8, True)


def test_count_cell_concrete_element():
    cell = count_cell(Z8, 2, "diagonal", Z8.from_int(6))
    assert cell.det_class == "gamma^1"
    assert (cell.formula, cell.oracle, cell.match) == (8, 8, True)


def test_count_cell_formula_only():
    cell = count_cell(Z8, 2, "diagonal", DeterminantClass.zero(),
                      method="formula")
    assert (cell.formula, cell.oracle, cell.match) == (20, None, None)


def test_count_cell_oracle_only_open_case():
    cell = count_cell(Z4, 2, "circulant", Z4.from_int(1), method="oracle")
    assert (cell.formula, cell.oracle) == (None, 4)
