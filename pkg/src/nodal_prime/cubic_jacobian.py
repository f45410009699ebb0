"""Group law on the singular cubic y^2 = x(x - a)^2 over Z/nZ.

A non-singular point is stored by the slope ``t`` of the line joining it
to the node, i.e. the point ``(t^2, t(t^2 - a))``. Two points add to
``(t1*t2 + a) / (t1 + t2)``; a zero denominator means the points are
inverse to each other. The point at infinity has no slope and is the
separate :data:`IDENTITY` marker, so ``Param(0)`` (the point ``(0, 0)``,
of order two) stays an ordinary element.

Over a composite modulus any denominator sharing a proper factor with
``n`` raises :class:`FactorFound`.
"""

from dataclasses import dataclass
from typing import Optional, Union

from .modarith import NotInvertible, gcd, mod_inv

__all__ = [
    "IDENTITY",
    "CurveContext",
    "FactorFound",
    "GroupElement",
    "Param",
]


class _Identity:
    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "IDENTITY"

    def __reduce__(self):
        return (_Identity, ())


IDENTITY = _Identity()


@dataclass(frozen=True)
class Param:
    t: int


GroupElement = Union[_Identity, Param]


class FactorFound(ArithmeticError):
    """A group operation hit a denominator with a proper common factor.

    ``d`` is guaranteed to satisfy ``1 < d < n`` and ``n % d == 0``.
    """

    def __init__(self, n, d):
        if not (1 < d < n and n % d == 0):
            raise ValueError(f"{d} is not a proper divisor of {n}")
        super().__init__(f"found factor {d} of {n}")
        self.n = n
        self.d = d

    def __reduce__(self):
        return (FactorFound, (self.n, self.d))


@dataclass(frozen=True)
class CurveContext:
    """The curve y^2 = x(x - a)^2 with coordinates in Z/nZ."""

    n: int
    a: int

    def __post_init__(self):
        if self.n < 3 or self.n % 2 == 0:
            raise ValueError(f"modulus must be odd and >= 3, got {self.n}")
        if not 1 <= self.a < self.n:
            raise ValueError(f"a must lie in [1, n-1], got {self.a}")
        if gcd(self.a, self.n) != 1:
            raise ValueError(f"a={self.a} shares a factor with n={self.n}")

    def make_element(self, t) -> Optional[Param]:
        """Point with slope ``t``; None if ``t^2 == a`` modulo every factor of n."""
        n = self.n
        if not 0 <= t < n:
            raise ValueError(f"t must lie in [0, n-1], got {t}")
        g = gcd((t * t - self.a) % n, n)
        if g == 1:
            return Param(t)
        if g == n:
            return None
        raise FactorFound(n, g)

    def is_valid(self, p) -> bool:
        if p is IDENTITY:
            return True
        return 0 <= p.t < self.n and gcd((p.t * p.t - self.a) % self.n, self.n) == 1

    def _add(self, t1, t2):
        # Slopes in, slope out; None stands for the identity.
        n = self.n
        s = (t1 + t2) % n
        if s == 0:
            return None
        try:
            inv = mod_inv(s, n)
        except NotInvertible as exc:
            raise FactorFound(n, exc.g) from None
        return (t1 * t2 + self.a) * inv % n

    def add(self, p, q) -> GroupElement:
        if p is IDENTITY:
            return q
        if q is IDENTITY:
            return p
        t = self._add(p.t, q.t)
        return IDENTITY if t is None else Param(t)

    def negate(self, p) -> GroupElement:
        if p is IDENTITY:
            return p
        return Param(-p.t % self.n)

    def scalar_mul(self, k, p) -> GroupElement:
        """``k * p`` by left-to-right double-and-add.

        The first failing inversion raises :class:`FactorFound`.
        """
        if k < 0:
            raise ValueError("negative scalar")
        if p is IDENTITY or k == 0:
            return IDENTITY
        base = p.t
        r = None
        add = self._add
        for bit in bin(k)[2:]:
            if r is not None:
                r = add(r, r)
            if bit == "1":
                r = base if r is None else add(r, base)
        return IDENTITY if r is None else Param(r)

    def small_order_at_most(self, p, bound) -> Optional[int]:
        """Smallest ``m <= bound`` with ``m * p`` the identity, else None."""
        if p is IDENTITY:
            raise ValueError("the identity has order 1")
        if bound < 1:
            raise ValueError("bound must be >= 1")
        r = p.t
        for m in range(2, bound + 1):
            r = self._add(r, p.t)
            if r is None:
                return m
        return None
