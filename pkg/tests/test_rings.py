import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chaindet.errors import (
    BadIndexError,
    NoRootError,
    NotAUnitError,
    NotPrimeError,
    RingMismatchError,
    TooLargeError,
    UnsupportedCombinationError,
)
from chaindet.rings import (
    ChainRing,
    Family,
    galois_ring,
    truncated_poly_ring,
    zmod,
)

from conftest import small_rings

RINGS = small_rings()


# -- construction ------------------------------------------------------------


def test_zmod_basic():
    r = zmod(8)
    assert (r.family, r.p, r.e, r.q, r.size) == (Family.INTEGER_MOD, 2, 3, 2, 8)
    assert int(r.gamma) == 2
    assert [int(v) for v in r.representatives] == [0, 1]


def test_poly_ring_basic():
    r = truncated_poly_ring(3, 2)
    assert (r.q, r.e, r.size) == (3, 2, 9)
    assert str(r.gamma) == "u"


def test_galois_ring_basic():
    r = galois_ring(4, 2)
    assert (r.p, r.e, r.r, r.q, r.size) == (2, 2, 2, 4, 16)
    # V = {0, 1, xi, xi^2} with xi^3 = 1
    v = r.representatives
    assert len(v) == 4
    for x in v[1:]:
        assert x**3 == r.one
    assert v[2] * v[3] == r.one  # xi * xi^2


def test_construction_errors():
    with pytest.raises(NotPrimeError):
        ChainRing(Family.INTEGER_MOD, 4, 2)
    with pytest.raises(UnsupportedCombinationError):
        ChainRing(Family.INTEGER_MOD, 2, 2, r=2)
    with pytest.raises(TooLargeError):
        ChainRing(Family.INTEGER_MOD, 2, 40, _cap=10**6)


def test_rings_are_cached():
    assert zmod(8) is zmod(8)
    assert galois_ring(9, 2) is galois_ring(9, 2)


# -- canonical form ----------------------------------------------------------


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.spec_string())
def test_digit_expansion_reconstructs_every_element(ring):
    # digits really are the expansion: x = sum V[v_i] * gamma^i
    gamma = ring.gamma
    for x in ring.elements():
        acc = ring.zero
        power = ring.one
        for v in x.coords:
            acc = acc + ring.representatives[v] * power
            power = power * gamma
        assert acc == x
        assert ring.element(list(x.coords)) == x


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.spec_string())
def test_gamma_nilpotency(ring):
    assert ring.gamma**ring.e == ring.zero
    if ring.e > 1:
        assert ring.gamma ** (ring.e - 1) != ring.zero


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.spec_string())
def test_gamma_ideal_sizes(ring):
    # |gamma^j R| = q^(e-j)
    els = list(ring.elements())
    for j in range(ring.e + 1):
        gj = ring.gamma**j
        ideal = {(gj * x).index for x in els}
        assert len(ideal) == ring.q ** (ring.e - j)


# -- arithmetic --------------------------------------------------------------


def test_arithmetic_spec_values():
    z8 = zmod(8)
    assert int(z8.from_int(6) * z8.from_int(6)) == 4
    f3u = truncated_poly_ring(3, 2)
    assert f3u.element([1, 1]) * f3u.element([1, 2]) == f3u.one
    gr = galois_ring(4, 2)
    assert gr.representatives[2] * gr.representatives[3] == gr.one


@pytest.mark.parametrize("ring", [zmod(8), truncated_poly_ring(3, 2),
                                  galois_ring(4, 2)],
                         ids=lambda r: r.spec_string())
def test_ring_axioms_exhaustive(ring):
    els = list(ring.elements())
    for a, b in itertools.product(els, repeat=2):
        assert a + b == b + a
        assert a * b == b * a
        assert (a - b) + b == a
    one, zero = ring.one, ring.zero
    for a in els:
        assert a + zero == a
        assert a * one == a
        assert a * zero == zero
        assert a + (-a) == zero


@given(st.sampled_from(RINGS), st.data())
@settings(max_examples=150, deadline=None)
def test_ring_axioms_random_triples(ring, data):
    idx = st.integers(min_value=0, max_value=ring.size - 1)
    a = ring.element(data.draw(idx))
    b = ring.element(data.draw(idx))
    c = ring.element(data.draw(idx))
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


def test_cross_ring_arithmetic_rejected():
    with pytest.raises(RingMismatchError):
        zmod(4).one + zmod(8).one


# -- units and inversion -----------------------------------------------------


def test_unit_examples():
    z8 = zmod(8)
    assert not z8.from_int(6).is_unit
    assert int(z8.from_int(3).inverse()) == 3
    f2u3 = truncated_poly_ring(2, 3)
    assert f2u3.element([1, 1, 0]).inverse() == f2u3.element([1, 1, 1])


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.spec_string())
def test_units_against_exhaustive_search(ring):
    els = list(ring.elements())
    for x in els:
        brute = next((y for y in els if x * y == ring.one), None)
        if x.is_unit:
            assert brute is not None
            assert x.inverse() == brute  # inverses are unique
        else:
            assert brute is None
            with pytest.raises(NotAUnitError):
                x.inverse()


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.spec_string())
def test_unit_count_and_zero_divisor_partition(ring):
    els = list(ring.elements())
    units = [x for x in els if x.is_unit]
    assert len(units) == (ring.q - 1) * ring.q ** (ring.e - 1)
    assert len(list(ring.units())) == len(units)
    zero_divisors = [x for x in els if not x.is_unit and not x.is_zero]
    assert len(zero_divisors) == ring.q ** (ring.e - 1) - 1
    assert len(units) + len(zero_divisors) + 1 == ring.size


def test_enumeration_cap():
    with pytest.raises(TooLargeError):
        list(zmod(8).elements(cap=4))


# -- valuation ---------------------------------------------------------------


def test_valuation_spec_values():
    z8 = zmod(8)
    d = z8.from_int(6).valuation()
    assert (d.s, int(d.unit_part)) == (1, 3)
    assert z8.zero.valuation().s == 3
    assert z8.zero.valuation().unit_part is None
    f3u3 = truncated_poly_ring(3, 3)
    d = f3u3.element([0, 0, 2]).valuation()
    assert d.s == 2 and d.unit_part == f3u3.element([2, 0, 0])


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.spec_string())
def test_valuation_characterizes_gamma_ideals(ring):
    els = list(ring.elements())
    for j in range(ring.e + 1):
        gj = ring.gamma**j
        in_ideal = {(gj * x).index for x in els}
        for x in els:
            assert (x.valuation().s >= j) == (x.index in in_ideal)


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.spec_string())
def test_valuation_decomposition_reconstructs(ring):
    for x in ring.elements():
        d = x.valuation()
        if d.s == ring.e:
            assert x.is_zero
        else:
            assert d.unit_part.is_unit
            assert ring.gamma**d.s * d.unit_part == x


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.spec_string())
def test_valuation_class_sizes(ring):
    table = ring.valuation_table()
    for s in range(ring.e + 1):
        assert sum(1 for v in table if v == s) == ring.class_size(s)


# -- residue and quotients ---------------------------------------------------


def test_residue_spec_values():
    z8 = zmod(8)
    assert z8.from_int(5).residue().index == 1
    f3u = truncated_poly_ring(3, 2)
    assert f3u.element([2, 1]).residue().index == 2
    for ring in RINGS:
        assert ring.gamma.residue().is_zero


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.spec_string())
def test_residue_is_a_ring_homomorphism(ring):
    els = list(ring.elements())
    for a, b in itertools.product(els, repeat=2):
        assert (a + b).residue() == a.residue() + b.residue()
        assert (a * b).residue() == a.residue() * b.residue()
    assert {x.residue().index for x in els} == set(range(ring.q))


def test_quotient_spec_values():
    q1, proj1 = zmod(8).quotient(2)
    assert q1 is zmod(4)
    assert int(proj1(zmod(8).from_int(7))) == 3
    q2, proj2 = truncated_poly_ring(3, 3).quotient(1)
    assert q2.size == 3 and q2.e == 1
    q3, _ = galois_ring(4, 2).quotient(1)
    assert q3.size == 4 and q3.q == 4  # the residue field F_4


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.spec_string())
def test_quotient_projection_is_surjective_homomorphism(ring):
    for i in range(1, ring.e + 1):
        target, proj = ring.quotient(i)
        assert target.e == i and target.q == ring.q
        els = list(ring.elements())
        for a, b in itertools.product(els[: min(len(els), 16)], repeat=2):
            assert proj(a + b) == proj(a) + proj(b)
            assert proj(a * b) == proj(a) * proj(b)
        images = {proj(x).index for x in els}
        assert images == set(range(target.size))
        kernel = [x for x in els if proj(x).is_zero]
        assert len(kernel) == ring.q ** (ring.e - i)


def test_quotient_bad_index():
    with pytest.raises(BadIndexError):
        zmod(8).quotient(0)
    with pytest.raises(BadIndexError):
        zmod(8).quotient(4)


# -- roots of unity ----------------------------------------------------------


def test_root_of_unity_spec_values():
    assert int(zmod(9).root_of_unity(2)) == 8
    f4 = truncated_poly_ring(4, 1)
    assert f4.root_of_unity(3) == f4.element(f4.residue_field.generator.index)
    with pytest.raises(NoRootError):
        zmod(8).root_of_unity(3)


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.spec_string())
def test_root_of_unity_has_exact_order(ring):
    for n in range(1, ring.q):
        if (ring.q - 1) % n:
            continue
        w = ring.root_of_unity(n)
        powers = [w**k for k in range(1, n + 1)]
        assert powers[-1] == ring.one
        assert all(p != ring.one for p in powers[:-1])


@pytest.mark.parametrize("ring", [zmod(9), zmod(25), galois_ring(4, 2),
                                  galois_ring(9, 2)],
                         ids=lambda r: r.spec_string())
def test_teichmueller_lift_is_congruent_and_periodic(ring):
    for k in range(ring.q):
        t = ring.teichmueller(k)
        assert t.residue().index == k
        assert t**ring.q == t
