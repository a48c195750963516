"""Testing arith module against sympy and brute-force counts."""

import math

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from zorder.ring_order.src.arith import (
    Factorization,
    crt_combine,
    divisors,
    euler_phi,
    factorize,
    gcd,
    is_square_free,
    pow_mod,
    residue_decompose,
    valuation,
)
from zorder.ring_order.src.errors import InvalidModulusError, InvalidResidueError


def test_factorize_examples():
    """Small moduli factorize as expected, 1 has no factors."""
    assert factorize(12).factors == ((2, 2), (3, 1))
    assert factorize(9).factors == ((3, 2),)
    assert factorize(1).factors == ()
    assert factorize(2).k == 1
    assert factorize(360).prime_powers == (8, 9, 5)


@pytest.mark.parametrize("n", [0, -3, 10**13, True, 2.0])
def test_factorize_rejects(n):
    """Nonpositive, too large and non-integer moduli are rejected."""
    with pytest.raises(InvalidModulusError):
        factorize(n)


@pytest.mark.exhaustive
def test_factorize_matches_sympy():
    """Factorization agrees with sympy.factorint and multiplies back to n for n <= 10^4."""
    for n in range(1, 10_001):
        f = factorize(n)
        assert dict(f.factors) == sympy.factorint(n)
        assert math.prod(p**e for p, e in f.factors) == n


@given(st.integers(min_value=2, max_value=10**10))
def test_factorize_large(n):
    """Random large moduli agree with sympy."""
    assert dict(factorize(n).factors) == sympy.factorint(n)


def test_factorization_validation():
    """Non-canonical factor lists are rejected."""
    with pytest.raises(ValueError):
        Factorization(n=12, factors=((3, 1), (2, 2)))
    with pytest.raises(ValueError):
        Factorization(n=13, factors=((2, 2), (3, 1)))


def test_euler_phi_examples():
    """phi(12) = 4, phi(1) = 1, phi(9) = 6."""
    assert euler_phi(factorize(12)) == 4
    assert euler_phi(factorize(1)) == 1
    assert euler_phi(factorize(9)) == 6


@pytest.mark.exhaustive
def test_euler_phi_counts_units():
    """phi(n) is the number of a in [1, n] coprime to n, and matches sympy.totient (n <= 2000)."""
    for n in range(1, 2001):
        phi = euler_phi(factorize(n))
        assert phi == sum(1 for a in range(1, n + 1) if math.gcd(a, n) == 1)
        assert phi == sympy.totient(n)


def test_gcd_conventions():
    """gcd(8, 12) = 4, gcd(0, 9) = 9, gcd(0, 0) = 0."""
    assert gcd(8, 12) == 4
    assert gcd(0, 9) == 9
    assert gcd(7, 12) == 1
    assert gcd(0, 0) == 0


def test_pow_mod_examples():
    """Spot values, including x^0 = 0 in Z_1 and the totient exponent for the regular element 5."""
    assert pow_mod(4, 2, 12) == 4
    assert pow_mod(3, 2, 12) == 9
    assert pow_mod(5, euler_phi(factorize(12)) + 1, 12) == 5
    assert pow_mod(7, 0, 1) == 0
    assert pow_mod(7, 0, 10) == 1
    with pytest.raises(ValueError):
        pow_mod(2, -1, 7)


@given(
    st.integers(min_value=0, max_value=2**40),
    st.integers(min_value=0, max_value=500),
    st.integers(min_value=0, max_value=500),
    st.integers(min_value=1, max_value=2**32),
)
def test_pow_mod_exponent_sum(a, e1, e2, n):
    """a^(e1+e2) = a^e1 * a^e2 (mod n)."""
    assert pow_mod(a, e1 + e2, n) == pow_mod(a, e1, n) * pow_mod(a, e2, n) % n


def test_residue_decompose_examples():
    """8 in Z_12 is (0 mod 4, 2 mod 3)."""
    f12 = factorize(12)
    assert residue_decompose(8, f12).components == ((4, 0), (3, 2))
    assert residue_decompose(1, f12).components == ((4, 1), (3, 1))
    assert all(r == 0 for _, r in residue_decompose(0, factorize(360)).components)
    with pytest.raises(InvalidResidueError):
        residue_decompose(12, f12)


@pytest.mark.exhaustive
def test_residue_decompose_recombine():
    """Decomposing and recombining gives back every residue for n <= 1000."""
    for n in range(1, 1001):
        f = factorize(n)
        for a in range(n):
            v = residue_decompose(a, f)
            assert crt_combine(v) == a
            assert v.recombine() == a


def test_divisors():
    """Divisors in ascending order, as sympy lists them."""
    assert divisors(factorize(1)) == [1]
    assert divisors(factorize(12)) == [1, 2, 3, 4, 6, 12]
    for n in (36, 97, 360, 1001):
        assert divisors(factorize(n)) == sympy.divisors(n)


def test_is_square_free():
    assert is_square_free(factorize(1))
    assert is_square_free(factorize(30))
    assert not is_square_free(factorize(12))


def test_valuation():
    """Exponent of p in a, capped; 0 yields the cap."""
    assert valuation(24, 2, 5) == 3
    assert valuation(24, 2, 2) == 2
    assert valuation(7, 2, 3) == 0
    assert valuation(0, 3, 4) == 4
