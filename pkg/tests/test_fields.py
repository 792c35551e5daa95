import itertools

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from chaindet.errors import NotAUnitError, NotPrimeError, RingMismatchError
from chaindet.fields import FiniteField, finite_field

FIELDS = [(2, 1), (3, 1), (5, 1), (2, 2), (3, 2), (2, 3), (5, 2), (2, 4)]


def test_prime_field_construction():
    f = finite_field(2, 1)
    assert f.q == 2
    assert f.modulus == (0,)  # the polynomial x
    assert f.generator == f.one


def test_f4_modulus_is_the_unique_irreducible_quadratic():
    f = finite_field(2, 2)
    assert f.modulus == (1, 1)  # x^2 + x + 1


def test_not_prime():
    with pytest.raises(NotPrimeError):
        FiniteField(4, 1)


@pytest.mark.parametrize("p,r", FIELDS)
def test_modulus_irreducible_per_sympy(p, r):
    f = finite_field(p, r)
    x = sympy.symbols("x")
    poly = sympy.Poly(x**r + sum(c * x**i for i, c in enumerate(f.modulus)),
                      x, modulus=p)
    assert poly.is_irreducible


@pytest.mark.parametrize("p,r", FIELDS)
def test_modulus_is_lexicographically_least(p, r):
    f = finite_field(p, r)
    x = sympy.symbols("x")
    own = sum(c * p**i for i, c in enumerate(f.modulus))
    for v in range(own):
        digits = []
        value = v
        for _ in range(r):
            value, d = divmod(value, p)
            digits.append(d)
        poly = sympy.Poly(x**r + sum(c * x**i for i, c in enumerate(digits)),
                          x, modulus=p)
        assert not poly.is_irreducible


@pytest.mark.parametrize("p,r", FIELDS)
def test_generator_has_full_order(p, r):
    f = finite_field(p, r)
    assert f.generator.multiplicative_order() == f.q - 1


@pytest.mark.parametrize("p,r", [(2, 2), (3, 1), (3, 2), (2, 3)])
def test_field_axioms_exhaustive(p, r):
    f = finite_field(p, r)
    els = list(f.elements())
    for a, b in itertools.product(els, repeat=2):
        assert a + b == b + a
        assert a * b == b * a
    for a, b, c in itertools.product(els, repeat=3):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
    for a in els:
        assert a + f.zero == a
        assert a * f.one == a
        assert a + (-a) == f.zero
        if not a.is_zero:
            assert a * a.inverse() == f.one


@given(st.sampled_from(FIELDS), st.data())
def test_subtraction_and_powers(field_key, data):
    f = finite_field(*field_key)
    i = data.draw(st.integers(min_value=0, max_value=f.q - 1))
    j = data.draw(st.integers(min_value=0, max_value=f.q - 1))
    a, b = f.element(i), f.element(j)
    assert (a - b) + b == a
    k = data.draw(st.integers(min_value=0, max_value=12))
    expected = f.one
    for _ in range(k):
        expected = expected * a
    assert a**k == expected


def test_coefficients_roundtrip():
    f = finite_field(3, 2)
    for el in f.elements():
        assert f.element(el.coefficients) == el
        assert all(0 <= c < 3 for c in el.coefficients)


def test_zero_has_no_inverse():
    f = finite_field(5, 1)
    with pytest.raises(NotAUnitError):
        f.zero.inverse()


def test_cross_field_arithmetic_rejected():
    with pytest.raises(RingMismatchError):
        finite_field(2, 1).one + finite_field(3, 1).one


def test_fields_are_cached():
    assert finite_field(3, 2) is finite_field(3, 2)
