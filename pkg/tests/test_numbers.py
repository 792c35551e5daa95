import math

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from chaindet.errors import NotCoprimeError
from chaindet.numbers import (
    binomial,
    divisors,
    euler_phi,
    factorize,
    is_prime,
    multiplicative_order,
    prime_power,
)


def test_is_prime_small():
    primes = [n for n in range(60) if is_prime(n)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]


@given(st.integers(min_value=2, max_value=5000))
def test_factorize_matches_sympy(n):
    assert factorize(n) == sympy.factorint(n)


def test_prime_power():
    assert prime_power(8) == (2, 3)
    assert prime_power(9) == (3, 2)
    assert prime_power(7) == (7, 1)
    assert prime_power(12) is None
    assert prime_power(1) is None


def test_divisors():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(1) == [1]
    assert divisors(49) == [1, 7, 49]


@given(st.integers(min_value=1, max_value=3000))
def test_euler_phi_matches_sympy(n):
    assert euler_phi(n) == sympy.totient(n)


def test_multiplicative_order_examples():
    assert multiplicative_order(3, 2) == 1
    assert multiplicative_order(2, 7) == 3
    assert multiplicative_order(5, 1) == 1


def test_multiplicative_order_not_coprime():
    with pytest.raises(NotCoprimeError):
        multiplicative_order(2, 4)


@given(st.integers(min_value=2, max_value=200), st.integers(min_value=1, max_value=200))
def test_multiplicative_order_is_least(q, d):
    if math.gcd(q, d) != 1:
        return
    k = multiplicative_order(q, d)
    assert pow(q, k, d) == 1 % d
    assert all(pow(q, j, d) != 1 % d for j in range(1, k))


def test_binomial_small():
    assert binomial(2, 1) == 2
    assert euler_phi(3) == 2
    assert binomial(10, 4) == 210
