"""Exact GUE correlators from the matrix resolvent of the Toda lattice.

Main entry points:

- :func:`correlator`, :func:`one_point`, :func:`two_point`, :func:`k_point`,
  :func:`mixed_correlator`, :func:`general_mixed`: connected correlators
  ``<tr M^{i_1} ... tr M^{i_k}>_c`` as polynomials in ``N``.
- :func:`build_gue_resolvent`, :func:`build_general_resolvent`: the 2x2
  matrix resolvent as truncated Laurent series.
- :func:`polygon_numbers`, :func:`weighted_count`: ribbon-graph counts.
- :func:`free_energy`, :func:`weighted_triangle_numbers`: genus 0, 1, 2
  free energies with triangle coupling.
- :func:`moment`, :func:`connected_moment`: the brute-force Wick oracle.
"""
from .algebra import PolyN
from .correlators import (
    correlator,
    general_mixed,
    k_point,
    mixed_correlator,
    one_point,
    rk_family,
    two_point,
    two_point_closed_form,
)
from .enumeration import PolygonTable, polygon_numbers, weighted_count
from .errors import (
    BudgetExceededError,
    ConsistencyError,
    GUEError,
    NotDivisibleError,
    RingMismatchError,
    TruncationError,
    WindowError,
)
from .genus import free_energy, weighted_triangle_numbers
from .hypergeometric import double_factorial, hyp2f1_terminating, hyp_A, hyp_B
from .resolvent import LatticeData, build_general_resolvent, build_gue_resolvent, compute_omega
from .wick import connected_moment, moment

__version__ = "0.1.0"


def clear_caches():
    """Drop memoized resolvents and oracle histograms (for cold timings)."""
    from . import correlators, wick

    correlators._gue.cache_clear()
    wick._histograms.cache_clear()
    wick._cumulant.cache_clear()


__all__ = [
    "clear_caches",
    "PolyN",
    "correlator",
    "general_mixed",
    "k_point",
    "mixed_correlator",
    "one_point",
    "rk_family",
    "two_point",
    "two_point_closed_form",
    "PolygonTable",
    "polygon_numbers",
    "weighted_count",
    "BudgetExceededError",
    "ConsistencyError",
    "GUEError",
    "NotDivisibleError",
    "RingMismatchError",
    "TruncationError",
    "WindowError",
    "free_energy",
    "weighted_triangle_numbers",
    "double_factorial",
    "hyp2f1_terminating",
    "hyp_A",
    "hyp_B",
    "LatticeData",
    "build_general_resolvent",
    "build_gue_resolvent",
    "compute_omega",
    "connected_moment",
    "moment",
]
