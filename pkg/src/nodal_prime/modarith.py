"""Modular arithmetic primitives on plain Python integers."""

from math import gcd as _gcd, isqrt

__all__ = [
    "NotInvertible",
    "gcd",
    "is_square",
    "jacobi",
    "mod_inv",
    "mod_pow",
    "next_prime_1mod4",
    "primorial_below",
    "small_primes_below",
]


class NotInvertible(ArithmeticError):
    """Raised by :func:`mod_inv` when ``gcd(x, modulus) > 1``.

    The shared divisor is kept in ``g`` so callers can treat it as a
    factor of the modulus.
    """

    def __init__(self, x, modulus, g):
        super().__init__(f"{x} is not invertible modulo {modulus} (gcd={g})")
        self.x = x
        self.modulus = modulus
        self.g = g


def mod_pow(base, exponent, modulus):
    """Return ``base ** exponent % modulus``."""
    if modulus < 2:
        raise ValueError(f"modulus must be >= 2, got {modulus}")
    if exponent < 0:
        raise ValueError("negative exponent")
    # builtin pow is windowed square-and-multiply in C
    return pow(base, exponent, modulus)


def gcd(x, y):
    # gcd(0, y) = y and gcd(0, 0) = 0, as math.gcd already does.
    return _gcd(x, y)


def mod_inv(x, modulus):
    """Inverse of ``x`` modulo ``modulus``.

    Raises :class:`NotInvertible` carrying ``gcd(x, modulus)`` when no
    inverse exists.
    """
    if modulus < 2:
        raise ValueError(f"modulus must be >= 2, got {modulus}")
    try:
        return pow(x, -1, modulus)
    except ValueError:
        raise NotInvertible(x, modulus, _gcd(x, modulus)) from None


def jacobi(top, bottom):
    """Jacobi symbol (top/bottom) for odd ``bottom >= 3``.

    Binary algorithm: strip factors of two using the (2/m) rule and swap
    with the reciprocity sign flip when both sides are 3 mod 4.
    """
    if bottom < 3 or bottom & 1 == 0:
        raise ValueError(f"bottom must be odd and >= 3, got {bottom}")
    top %= bottom
    sign = 1
    while top:
        while top & 1 == 0:
            top >>= 1
            if bottom & 7 in (3, 5):
                sign = -sign
        top, bottom = bottom, top
        if top & 3 == 3 and bottom & 3 == 3:
            sign = -sign
        top %= bottom
    return sign if bottom == 1 else 0


def is_square(n):
    return n >= 0 and isqrt(n) ** 2 == n


def _is_prime_trial(k):
    if k < 2:
        return False
    if k % 2 == 0:
        return k == 2
    d = 3
    while d * d <= k:
        if k % d == 0:
            return False
        d += 2
    return True


def small_primes_below(bound):
    """All primes ``p < bound`` (sieve of Eratosthenes)."""
    if bound <= 2:
        return []
    sieve = bytearray([1]) * bound
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(bound - 1) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytes(len(range(p * p, bound, p)))
    return [i for i, flag in enumerate(sieve) if flag]


def primorial_below(bound):
    """Product of all primes strictly below ``bound``."""
    if bound < 2:
        raise ValueError(f"bound must be >= 2, got {bound}")
    product = 1
    for p in small_primes_below(bound):
        product *= p
    return product


def next_prime_1mod4(after):
    """Smallest prime ``p > after`` with ``p % 4 == 1``.

    Candidates are checked by trial division; callers only ever ask for
    small values.
    """
    p = max(after + 1, 2)
    p += (1 - p) % 4
    while not _is_prime_trial(p):
        p += 4
    return p
