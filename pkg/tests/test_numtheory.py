import cmath
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ucgwalk.numtheory import (
    Factorization,
    euler_phi,
    factorize,
    is_squarefree,
    mobius,
    ramanujan_sum,
    units_mod,
)


# ---- independent oracles ----------------------------------------------------

def phi_brute(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def mobius_brute(m: int) -> int:
    """Sum of the primitive m-th roots of unity, rounded from floats."""
    total = sum(
        cmath.exp(2j * math.pi * k / m) for k in range(1, m + 1) if math.gcd(k, m) == 1
    )
    assert abs(total.imag) < 1e-9
    return round(total.real)


def squarefree_brute(n: int) -> bool:
    return all(n % (k * k) for k in range(2, math.isqrt(n) + 1))


def ramanujan_brute(d: int, n: int) -> int:
    # sum over k in [1, n] coprime to n; for n >= 2 that is units_mod(n)
    total = sum(
        cmath.exp(2j * math.pi * d * k / n) for k in range(1, n + 1) if math.gcd(k, n) == 1
    )
    assert abs(total.imag) <= 1e-9
    return round(total.real)


# ---- euler_phi ---------------------------------------------------------------

def test_phi_examples():
    assert euler_phi(1) == 1
    assert euler_phi(6) == 2   # brute-force count: {1, 5}
    assert euler_phi(12) == 4  # brute-force count: {1, 5, 7, 11}


@pytest.mark.parametrize("n", range(1, 301))
def test_phi_matches_brute_force(n):
    assert euler_phi(n) == phi_brute(n)


def test_phi_equals_unit_count():
    for n in range(2, 1001):
        assert euler_phi(n) == len(units_mod(n))


def test_phi_rejects_zero():
    with pytest.raises(ValueError):
        euler_phi(0)


# ---- mobius -------------------------------------------------------------------

def test_mobius_examples():
    assert mobius(1) == 1
    assert mobius(4) == 0  # squared prime factor
    assert mobius(6) == 1  # primitive-root-sum oracle gives 1


@pytest.mark.parametrize("m", range(1, 201))
def test_mobius_matches_primitive_root_sum(m):
    assert mobius(m) == mobius_brute(m)


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=1, max_value=1000), st.integers(min_value=1, max_value=1000))
def test_mobius_multiplicative_on_coprimes(a, b):
    if math.gcd(a, b) == 1 and a * b <= 10**6:
        assert mobius(a * b) == mobius(a) * mobius(b)


def test_mobius_rejects_zero():
    with pytest.raises(ValueError):
        mobius(0)


# ---- is_squarefree -------------------------------------------------------------

def test_squarefree_examples():
    assert is_squarefree(6)
    assert not is_squarefree(4)
    assert is_squarefree(30)


def test_squarefree_agrees_with_mobius_and_brute():
    for n in range(1, 500):
        assert is_squarefree(n) == (mobius(n) != 0) == squarefree_brute(n)


def test_squarefree_rejects_zero():
    with pytest.raises(ValueError):
        is_squarefree(0)


# ---- units_mod -----------------------------------------------------------------

def test_units_examples():
    assert units_mod(4) == (1, 3)
    assert units_mod(6) == (1, 5)
    assert units_mod(12) == (1, 5, 7, 11)


def test_units_sorted_and_coprime():
    for n in range(2, 200):
        units = units_mod(n)
        assert list(units) == sorted(units)
        assert all(math.gcd(u, n) == 1 for u in units)


def test_units_rejects_zero():
    with pytest.raises(ValueError):
        units_mod(0)


# ---- ramanujan_sum --------------------------------------------------------------

def test_ramanujan_examples():
    assert ramanujan_sum(0, 6) == 2    # phi(6)
    assert ramanujan_sum(2, 4) == -2   # character-sum oracle
    assert ramanujan_sum(1, 6) == 1    # character-sum oracle


def test_ramanujan_matches_character_sum_everywhere():
    for n in range(1, 301):
        for d in range(n):
            assert ramanujan_sum(d, n) == ramanujan_brute(d, n), (d, n)


def test_ramanujan_character_sum_is_real():
    for n in range(2, 120):
        for d in range(n):
            total = sum(cmath.exp(2j * math.pi * d * s / n) for s in units_mod(n))
            assert abs(total.imag) <= 1e-9
            assert abs(total.real - ramanujan_sum(d, n)) <= 1e-9


def test_ramanujan_formula_is_exactly_integral():
    # phi(t) divides phi(n) whenever mu(t) != 0; no float rounding anywhere.
    for n in range(1, 301):
        for d in range(n):
            t = n // math.gcd(d, n)
            if mobius(t) != 0:
                assert euler_phi(n) % euler_phi(t) == 0


def test_ramanujan_rejects_bad_arguments():
    with pytest.raises(ValueError):
        ramanujan_sum(0, 0)
    with pytest.raises(ValueError):
        ramanujan_sum(6, 6)
    with pytest.raises(ValueError):
        ramanujan_sum(-1, 6)


# ---- Factorization ---------------------------------------------------------------

def test_factorize_round_trips():
    for n in (1, 2, 12, 360, 9973):
        fact = factorize(n)
        assert fact.value == n
        assert math.prod(p**e for p, e in fact.factors) == n
        primes = [p for p, _ in fact.factors]
        assert primes == sorted(primes)


def test_factorization_validates_invariants():
    with pytest.raises(ValueError):
        Factorization(12, ((2, 1), (3, 1)))  # product is 6, not 12
    with pytest.raises(ValueError):
        Factorization(12, ((3, 1), (2, 2)))  # primes out of order
    with pytest.raises(ValueError):
        Factorization(2, ((2, 0),))  # exponent below 1
