"""Rabin's strong probable prime test."""

from dataclasses import dataclass

from .modarith import gcd, mod_pow

__all__ = ["OddDecomposition", "decompose", "strong_probable_prime", "is_spsp2"]


@dataclass(frozen=True)
class OddDecomposition:
    """``n - 1 == 2**e * m`` with ``m`` odd."""

    e: int
    m: int


def _check_odd(n):
    if n < 3 or n % 2 == 0:
        raise ValueError(f"n must be odd and >= 3, got {n}")


def decompose(n):
    _check_odd(n)
    m = n - 1
    e = (m & -m).bit_length() - 1
    return OddDecomposition(e, m >> e)


def strong_probable_prime(n, base, decomposition=None):
    """True iff odd ``n`` is a strong probable prime to ``base``.

    Accepts when ``base**m == 1`` or ``base**(2**i * m) == -1`` for some
    ``0 <= i < e``. A base sharing a factor with ``n`` always fails.
    """
    _check_odd(n)
    if not 2 <= base <= n - 2:
        raise ValueError(f"base must lie in [2, n-2], got {base} for n={n}")
    if gcd(base, n) > 1:
        return False
    d = decomposition or decompose(n)
    e, m = d.e, d.m
    minus_one = n - 1
    c = mod_pow(base, m, n)
    if c == 1 or c == minus_one:
        return True
    for _ in range(e - 1):
        c = c * c % n
        if c == minus_one:
            return True
        if c == 1:
            # nontrivial square root of 1
            return False
    return False


def is_spsp2(n):
    """Strong probable prime test to base 2."""
    if n == 3:
        return True
    return strong_probable_prime(n, 2)
