"""Primality pipelines: base-2 strong test followed by a group order check.

For odd ``n`` passing the strong test to base 2, pick a prime ``a = 1 mod 4``
with Jacobi symbol ``(n/a) = -1``. If ``n`` is prime then ``a`` is a
non-residue mod ``n`` and the singular cubic y^2 = x(x-a)^2 has a cyclic
group of order ``n + 1``, so ``(n + 1) P`` must be the identity. The
multiplication is carried out modulo ``n`` without knowing whether ``n`` is
prime; a composite shows up either as a failed inversion (which hands back a
factor) or as a non-identity result.
"""

from dataclasses import dataclass
from enum import Enum
from math import isqrt
from typing import Optional

from . import _backend
from .cubic_jacobian import IDENTITY, CurveContext, FactorFound
from .modarith import jacobi, next_prime_1mod4, primorial_below
from .strongprp import is_spsp2

__all__ = [
    "BaseSelectionExhausted",
    "Inconclusive",
    "Outcome",
    "PointSearchExhausted",
    "Stage",
    "Verdict",
    "full_test",
    "quick_test",
    "select_base",
]

DEFAULT_T_START = 2
DEFAULT_MAX_CANDIDATES = 1000
DEFAULT_MAX_POINTS = 32
SMALL_ORDER_BOUND = 100
FULL_TEST_THRESHOLD = 10**4
PRIMORIAL = primorial_below(100)


class Outcome(str, Enum):
    COMPOSITE = "composite"
    PROBABLE_PRIME = "probable_prime"


class Stage(str, Enum):
    PRETEST = "pretest"
    SPSP2 = "spsp2"
    BASE_SELECTION = "base_selection"
    POINT_SEARCH = "point_search"
    GROUP_STAGE = "group_stage"


class Inconclusive(Exception):
    """The test could not reach a verdict for this input."""

    def __init__(self, n, message):
        super().__init__(message)
        self.n = n


class BaseSelectionExhausted(Inconclusive):
    pass


class PointSearchExhausted(Inconclusive):
    pass


@dataclass(frozen=True)
class Verdict:
    """Result of a primality test, with the evidence that produced it.

    ``stage`` names the step that decided the outcome. A probable prime
    carries the curve parameter ``base_a`` and the starting slope
    ``param_t`` so the run can be reproduced; the only exceptions are the
    tiny inputs 2 and 3, settled by the pretest. Any ``factor`` is checked
    to be a proper divisor of ``n``.
    """

    n: int
    outcome: Outcome
    stage: Stage
    factor: Optional[int] = None
    base_a: Optional[int] = None
    param_t: Optional[int] = None

    def __post_init__(self):
        if self.factor is not None:
            if not (1 < self.factor < self.n and self.n % self.factor == 0):
                raise ValueError(f"factor {self.factor} is not a proper divisor of {self.n}")
            if self.outcome is not Outcome.COMPOSITE:
                raise ValueError("a probable prime cannot carry a factor")
        if self.outcome is Outcome.PROBABLE_PRIME and self.stage is not Stage.PRETEST:
            if self.base_a is None or self.param_t is None:
                raise ValueError("probable prime verdict needs base_a and param_t")

    @property
    def is_composite(self):
        return self.outcome is Outcome.COMPOSITE

    @property
    def is_probable_prime(self):
        return self.outcome is Outcome.PROBABLE_PRIME

    def to_dict(self):
        d = {
            "n": self.n,
            "verdict": self.outcome.value,
            "stage": self.stage.value,
            "base_a": self.base_a,
            "param_t": self.param_t,
        }
        if self.factor is not None:
            d["factor"] = self.factor
        return d

    def describe(self):
        if self.is_probable_prime:
            if self.base_a is None:
                return "probable prime"
            return f"probable prime (a={self.base_a}, t={self.param_t})"
        parts = [f"stage={self.stage.value}"]
        if self.factor is not None:
            parts.append(f"factor={self.factor}")
        if self.base_a is not None:
            parts.append(f"a={self.base_a}")
        if self.param_t is not None:
            parts.append(f"t={self.param_t}")
        return f"composite ({', '.join(parts)})"


def select_base(n, max_candidates=DEFAULT_MAX_CANDIDATES):
    """Smallest prime ``a >= 5``, ``a = 1 mod 4``, with ``jacobi(n, a) == -1``.

    With ``a = 1 mod 4`` reciprocity gives ``(a/n) = (n/a)``, so only the
    small symbol needs evaluating. A prime ``a < n`` dividing ``n`` raises
    :class:`FactorFound`. Squares never yield -1; they exhaust the search.
    """
    a = 5
    for _ in range(max_candidates):
        j = jacobi(n, a)
        if j == -1:
            return a
        if j == 0 and a < n:
            raise FactorFound(n, a)
        a = next_prime_1mod4(a)
    raise BaseSelectionExhausted(n, f"no base found for {n} in {max_candidates} primes")


def _pretest(n):
    if n < 2:
        return Verdict(n, Outcome.COMPOSITE, Stage.PRETEST)
    if n in (2, 3):
        return Verdict(n, Outcome.PROBABLE_PRIME, Stage.PRETEST)
    if n % 2 == 0:
        return Verdict(n, Outcome.COMPOSITE, Stage.PRETEST, factor=2)
    r = isqrt(n)
    if r * r == n:
        return Verdict(n, Outcome.COMPOSITE, Stage.PRETEST, factor=r)
    return None


_KERNEL_STAGES = {
    1: Stage.SPSP2,
    2: Stage.BASE_SELECTION,
    3: Stage.POINT_SEARCH,
    4: Stage.GROUP_STAGE,
}


def _quick_test_kernel(n, t_start, max_candidates):
    code, a, t, factor = _backend.kernel.quick_pipeline(n, t_start % n, max_candidates)
    if code == 0:
        return Verdict(n, Outcome.PROBABLE_PRIME, Stage.GROUP_STAGE, base_a=a, param_t=t)
    if code == -1:
        raise BaseSelectionExhausted(n, f"no base found for {n} in {max_candidates} primes")
    if code == -2:
        raise PointSearchExhausted(n, f"no usable point for {n}")
    return Verdict(
        n,
        Outcome.COMPOSITE,
        _KERNEL_STAGES[code],
        factor=factor or None,
        base_a=a or None,
        param_t=t if code == 4 else None,
    )


def quick_test(n, t_start=DEFAULT_T_START, max_candidates=DEFAULT_MAX_CANDIDATES, *, use_kernel=True):
    """Strong base-2 test, then check ``(n - 1) P + 2 P`` is the identity.

    ``P`` is the point with the first usable slope ``t >= t_start``. The
    two partial products are computed separately and then added, so any
    failed inversion along the way reports a factor.

    Raises :class:`Inconclusive` when no base or point can be found.
    """
    pre = _pretest(n)
    if pre is not None:
        return pre
    if use_kernel and _backend.kernel is not None and n < _backend.WORD_LIMIT:
        return _quick_test_kernel(n, t_start, max_candidates)
    if not is_spsp2(n):
        return Verdict(n, Outcome.COMPOSITE, Stage.SPSP2)

    try:
        a = select_base(n, max_candidates)
    except FactorFound as exc:
        return Verdict(n, Outcome.COMPOSITE, Stage.BASE_SELECTION, factor=exc.d)
    ctx = CurveContext(n, a % n)
    P = None
    try:
        for i in range(n):
            P = ctx.make_element((t_start + i) % n)
            if P is not None:
                break
    except FactorFound as exc:
        return Verdict(n, Outcome.COMPOSITE, Stage.POINT_SEARCH, factor=exc.d, base_a=a)
    if P is None:
        raise PointSearchExhausted(n, f"no non-singular slope modulo {n}")

    try:
        q = ctx.add(ctx.scalar_mul(n - 1, P), ctx.add(P, P))
    except FactorFound as exc:
        return Verdict(n, Outcome.COMPOSITE, Stage.GROUP_STAGE, factor=exc.d, base_a=a, param_t=P.t)
    outcome = Outcome.PROBABLE_PRIME if q is IDENTITY else Outcome.COMPOSITE
    return Verdict(n, outcome, Stage.GROUP_STAGE, base_a=a, param_t=P.t)


def full_test(
    n,
    t_start=DEFAULT_T_START,
    max_candidates=DEFAULT_MAX_CANDIDATES,
    max_points=DEFAULT_MAX_POINTS,
):
    """Check ``b (n - 1) P + 2 b P`` with ``b`` the product of primes below 100.

    ``P`` must not have order 100 or less and ``2 b P`` must not be the
    identity; up to ``max_points`` slopes are tried before giving up with
    :class:`PointSearchExhausted`. When ``n + 1`` divides ``2 b`` no point
    can qualify, so such ``n`` always exhaust. Inputs up to 10**4 go
    through :func:`quick_test`.
    """
    if n <= FULL_TEST_THRESHOLD:
        return quick_test(n, t_start, max_candidates)
    pre = _pretest(n)
    if pre is not None:
        return pre
    if not is_spsp2(n):
        return Verdict(n, Outcome.COMPOSITE, Stage.SPSP2)
    try:
        a = select_base(n, max_candidates)
    except FactorFound as exc:
        return Verdict(n, Outcome.COMPOSITE, Stage.BASE_SELECTION, factor=exc.d)
    ctx = CurveContext(n, a % n)
    b = PRIMORIAL

    for i in range(max_points):
        t = (t_start + i) % n
        try:
            P = ctx.make_element(t)
            if P is None or ctx.small_order_at_most(P, SMALL_ORDER_BOUND) is not None:
                continue
            two_b_p = ctx.scalar_mul(2 * b, P)
        except FactorFound as exc:
            return Verdict(n, Outcome.COMPOSITE, Stage.POINT_SEARCH, factor=exc.d, base_a=a)
        if two_b_p is IDENTITY:
            continue
        try:
            q = ctx.add(ctx.scalar_mul(b * (n - 1), P), two_b_p)
        except FactorFound as exc:
            return Verdict(n, Outcome.COMPOSITE, Stage.GROUP_STAGE, factor=exc.d, base_a=a, param_t=t)
        outcome = Outcome.PROBABLE_PRIME if q is IDENTITY else Outcome.COMPOSITE
        return Verdict(n, outcome, Stage.GROUP_STAGE, base_a=a, param_t=t)
    raise PointSearchExhausted(n, f"no point of large order among {max_points} slopes for {n}")
