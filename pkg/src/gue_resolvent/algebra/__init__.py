"""Exact coefficient rings and truncated-series arithmetic."""
from .laurent import LaurentSeries, ResolventMatrix
from .multiseries import MultiSeries, biseries_divide_by_square_diff, geometric_kernel, square_diff
from .polyn import PolyN, is_scalar, normalize_scalar
from .powerseries import PowerSeries, series_compose
from .ratfunc import RationalFunction, XField
from .rings import QQ, SYM, PolyRing, Ring, check_same_ring
from .sympoly import SymPoly

__all__ = [
    "LaurentSeries",
    "ResolventMatrix",
    "MultiSeries",
    "biseries_divide_by_square_diff",
    "geometric_kernel",
    "square_diff",
    "PolyN",
    "is_scalar",
    "normalize_scalar",
    "PowerSeries",
    "series_compose",
    "RationalFunction",
    "XField",
    "QQ",
    "SYM",
    "PolyRing",
    "Ring",
    "check_same_ring",
    "SymPoly",
]
