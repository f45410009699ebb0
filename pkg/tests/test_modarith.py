import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nodal_prime.modarith import (
    NotInvertible,
    gcd,
    is_square,
    jacobi,
    mod_inv,
    mod_pow,
    next_prime_1mod4,
    primorial_below,
    small_primes_below,
)

from .conftest import primes_below, sieve


def naive_pow(b, e, m):
    r = 1 % m
    for _ in range(e):
        r = r * b % m
    return r


def legendre_by_squares(a, p):
    a %= p
    if a == 0:
        return 0
    return 1 if a in {x * x % p for x in range(1, p)} else -1


def jacobi_by_factoring(a, m):
    # product of Legendre symbols over the prime factorisation of m
    result, d = 1, 3
    while m > 1:
        while m % d == 0:
            result *= legendre_by_squares(a, d)
            m //= d
        d += 2
    return result


@pytest.mark.parametrize(
    "b, e, m, expected",
    [(2, 10, 1000, 24), (7, 0, 13, 1), (123, 0, 2, 1), (2, 1023, 2047, 1)],
)
def test_mod_pow_examples(b, e, m, expected):
    assert mod_pow(b, e, m) == expected


def test_mod_pow_matches_repeated_multiplication():
    rng = random.Random(5)
    for _ in range(300):
        m = rng.randrange(2, 500)
        b, e = rng.randrange(0, 10**6), rng.randrange(0, 200)
        assert mod_pow(b, e, m) == naive_pow(b, e, m)


def test_mod_pow_rejects_small_modulus():
    with pytest.raises(ValueError):
        mod_pow(3, 4, 1)


def test_fermat_for_primes_below_10000():
    rng = random.Random(1)
    for p in primes_below(10_000):
        a = rng.randrange(1, p) if p > 2 else 1
        assert mod_pow(a, p - 1, p) == 1


@pytest.mark.parametrize("x, y, expected", [(5, 35, 5), (0, 7, 7), (2046, 1023, 1023), (0, 0, 0)])
def test_gcd(x, y, expected):
    assert gcd(x, y) == expected


@pytest.mark.parametrize("x, m, expected", [(2, 7, 4), (6, 7, 6)])
def test_mod_inv_examples(x, m, expected):
    assert mod_inv(x, m) == expected


def test_mod_inv_reports_shared_factor():
    with pytest.raises(NotInvertible) as info:
        mod_inv(5, 35)
    assert info.value.g == 5


def test_mod_inv_exhaustive_below_200():
    for m in range(2, 200):
        for x in range(m):
            brute = [y for y in range(m) if x * y % m == 1]
            if gcd(x, m) == 1:
                assert mod_inv(x, m) == brute[0]
            else:
                assert not brute
                with pytest.raises(NotInvertible) as info:
                    mod_inv(x, m)
                assert info.value.g == gcd(x, m)


@pytest.mark.parametrize("top, bottom, expected", [(1, 3, 1), (2, 5, -1), (7, 5, -1), (9, 5, 1), (10, 5, 0)])
def test_jacobi_examples(top, bottom, expected):
    assert jacobi(top, bottom) == expected


@pytest.mark.parametrize("bottom", [0, 1, 2, 4, 100])
def test_jacobi_domain(bottom):
    with pytest.raises(ValueError):
        jacobi(3, bottom)


def test_jacobi_is_euler_criterion_for_primes_below_500():
    for p in primes_below(500)[1:]:
        for a in range(p):
            e = mod_pow(a, (p - 1) // 2, p)
            expected = {0: 0, 1: 1, p - 1: -1}[e]
            assert jacobi(a, p) == expected


def test_jacobi_matches_factorisation_on_odd_composites():
    flags = sieve(400)
    for m in range(9, 400, 2):
        if flags[m]:
            continue
        for a in range(0, 2 * m, 7):
            assert jacobi(a, m) == jacobi_by_factoring(a, m)


@given(
    st.integers(min_value=0, max_value=10**30),
    st.integers(min_value=0, max_value=10**30),
    st.integers(min_value=1, max_value=10**20).map(lambda k: 2 * k + 1),
)
def test_jacobi_multiplicative_in_top(x, y, m):
    assert jacobi(x * y, m) == jacobi(x, m) * jacobi(y, m)


@pytest.mark.parametrize("bound, expected", [(3, 2), (10, 210)])
def test_primorial_small(bound, expected):
    assert primorial_below(bound) == expected


def test_primorial_below_100():
    primes = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97]
    product = 1
    for p in primes:
        product *= p
    assert primorial_below(100) == product
    assert len(str(product)) == 37
    assert small_primes_below(100) == primes


@pytest.mark.parametrize("after, expected", [(4, 5), (5, 13), (13, 17), (0, 5), (-3, 5), (97, 101)])
def test_next_prime_1mod4(after, expected):
    assert next_prime_1mod4(after) == expected


def test_next_prime_1mod4_against_scan():
    flags = sieve(3000)
    for after in range(0, 2500):
        expected = next(p for p in range(after + 1, 3000) if flags[p] and p % 4 == 1)
        assert next_prime_1mod4(after) == expected


def test_is_square():
    squares = {k * k for k in range(200)}
    assert [n for n in range(40_000) if is_square(n)] == sorted(squares)
    assert is_square((10**40 + 7) ** 2)
    assert not is_square((10**40 + 7) ** 2 + 1)
