import pytest

from nodal_prime.modarith import mod_pow
from nodal_prime.strongprp import OddDecomposition, decompose, is_spsp2, strong_probable_prime

from .conftest import sieve


@pytest.mark.parametrize("n, e, m", [(2047, 1, 1023), (7, 1, 3), (17, 4, 1), (3, 1, 1), (97, 5, 3)])
def test_decompose(n, e, m):
    d = decompose(n)
    assert d == OddDecomposition(e, m)
    assert n - 1 == 2**d.e * d.m and d.m % 2 == 1


@pytest.mark.parametrize("n", [1, 2, 8, 100])
def test_decompose_rejects(n):
    with pytest.raises(ValueError):
        decompose(n)


@pytest.mark.parametrize(
    "n, base, expected",
    [
        (2047, 2, True),  # 2^11 = 2048 = 1 mod 2047
        (341, 2, False),  # 2^85 = 32, 2^170 = 1: Fermat passes, strong test does not
        (15, 2, False),  # 2^7 = 8
        (7, 2, True),
        (25, 7, True),  # 7^3 = 343 = -7 mod 25, 7^6 = 49 = -1
        (25, 2, False),
    ],
)
def test_strong_probable_prime(n, base, expected):
    assert strong_probable_prime(n, base) is expected


def test_base_sharing_factor_fails():
    assert strong_probable_prime(21, 3) is False
    assert strong_probable_prime(21, 7) is False


def test_base_range_checked():
    with pytest.raises(ValueError):
        strong_probable_prime(11, 10)
    with pytest.raises(ValueError):
        strong_probable_prime(11, 1)


@pytest.mark.parametrize("n, expected", [(2047, True), (341, False), (25, False), (3, True), (5, True)])
def test_is_spsp2(n, expected):
    assert is_spsp2(n) is expected


def test_every_odd_prime_below_100000_passes():
    flags = sieve(100_001)
    assert all(is_spsp2(p) for p in range(3, 100_001, 2) if flags[p])


def test_smallest_spsp2_composite_is_2047():
    flags = sieve(100_000)
    composites = [n for n in range(9, 100_000, 2) if not flags[n] and is_spsp2(n)]
    assert composites[0] == 2047
    assert composites[:5] == [2047, 3277, 4033, 4681, 8321]


def test_strong_implies_fermat():
    for n in range(5, 20_000, 2):
        for base in (2, 3, 5):
            if base <= n - 2 and strong_probable_prime(n, base):
                assert mod_pow(base, n - 1, n) == 1
