import math

import pytest
from hypothesis import given, strategies as st

from gl2fix.numutil import (
    divisors,
    divisors_coprime_to,
    euler_phi,
    factorize,
    is_prime,
    moebius,
    prime_power,
)


@pytest.mark.parametrize("n, mu", [(1, 1), (4, 0), (6, 1), (2, -1), (30, -1), (12, 0)])
def test_moebius(n, mu):
    assert moebius(n) == mu


@pytest.mark.parametrize("n, phi", [(1, 1), (2, 1), (12, 4), (9, 6), (97, 96)])
def test_euler_phi(n, phi):
    assert euler_phi(n) == phi


@pytest.mark.parametrize("n, c, expected", [(6, 2, [1, 3]), (6, 1, [1, 2, 3, 6]), (9, 3, [1])])
def test_divisors_coprime_to(n, c, expected):
    assert divisors_coprime_to(n, c) == expected


def test_prime_power():
    assert prime_power(9) == (3, 2)
    assert prime_power(8) == (2, 3)
    assert prime_power(7) == (7, 1)
    assert prime_power(12) is None
    assert prime_power(1) is None


@pytest.mark.parametrize("bad", [0, -3])
def test_rejects_non_positive(bad):
    with pytest.raises(ValueError):
        moebius(bad)


@given(st.integers(1, 5000))
def test_factorization_recombines(n):
    assert math.prod(p**e for p, e in factorize(n)) == n
    assert all(is_prime(p) for p, _ in factorize(n))


@given(st.integers(1, 3000))
def test_moebius_sums_to_delta(n):
    # sum over d | n of mu(d) is 1 exactly when n = 1
    assert sum(moebius(d) for d in divisors(n)) == (n == 1)


@given(st.integers(1, 3000))
def test_phi_sums_to_n(n):
    assert sum(euler_phi(d) for d in divisors(n)) == n


@given(st.integers(1, 500), st.integers(1, 500))
def test_coprime_divisors_filter(n, c):
    assert divisors_coprime_to(n, c) == [d for d in divisors(n) if math.gcd(d, c) == 1]
