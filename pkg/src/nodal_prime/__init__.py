"""Strong base-2 pseudoprime test with a singular cubic group order check."""

from ._backend import BACKEND
from .cubic_jacobian import IDENTITY, CurveContext, FactorFound, Param
from .primality import (
    BaseSelectionExhausted,
    Inconclusive,
    Outcome,
    PointSearchExhausted,
    Stage,
    Verdict,
    full_test,
    quick_test,
    select_base,
)
from .strongprp import is_spsp2, strong_probable_prime

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "IDENTITY",
    "BaseSelectionExhausted",
    "CurveContext",
    "FactorFound",
    "Inconclusive",
    "Outcome",
    "Param",
    "PointSearchExhausted",
    "Stage",
    "Verdict",
    "full_test",
    "is_spsp2",
    "quick_test",
    "select_base",
    "strong_probable_prime",
]
