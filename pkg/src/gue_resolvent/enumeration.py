"""Ribbon-graph counts read off connected correlators.

``n_{g,b,k}`` counts connected oriented labelled ribbon graphs of genus
``g`` with ``k`` vertices of valence ``b``; it is the coefficient of
``N^{2 - 2g + (b/2 - 1) k}`` in ``<(tr M^b)^k>_c``.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .correlators import correlator, mixed_correlator, one_point, two_point
from .errors import ConsistencyError

__all__ = ["PolygonTable", "polygon_numbers", "genus_buckets", "weighted_count", "max_genus"]


@dataclass
class PolygonTable:
    b: int
    k: int
    counts: dict = field(default_factory=dict)

    def as_list(self):
        """Counts for ``g = 0, 1, ..., max_genus(b, k)``."""
        return [self.counts.get(g, 0) for g in range(max_genus(self.b, self.k) + 1)]

    def rows(self):
        return [(self.b, self.k, g, c) for g, c in sorted(self.counts.items())]


def max_genus(b, k):
    """Largest genus allowed for ``k`` polygons with ``b`` sides."""
    if (b * k) % 2:
        return -1
    # 2 - 2g + (b/2 - 1) k >= 1
    return ((b - 2) * k + 2) // 4


def genus_buckets(poly, exps):
    """Split a connected correlator into ``{g: coefficient}``.

    A coefficient at a power of ``N`` that does not correspond to a
    non-negative integer genus is an error, never silently dropped.
    """
    k, total = len(exps), sum(exps)
    top = 2 - k + total // 2
    out = {}
    for p, c in poly.to_dict().items():
        twice_g = top - p
        if total % 2 or twice_g < 0 or twice_g % 2:
            raise ConsistencyError(f"coefficient {c} at N^{p} has no genus for {tuple(exps)}")
        out[twice_g // 2] = c
    return out


def polygon_numbers(b, k, backend="interp"):
    """``{g: n_{g,b,k}}`` for ``k`` labelled ``b``-gons."""
    if b < 1 or k < 1:
        raise ValueError("valence and vertex count must be positive")
    exps = [b] * k
    if (b * k) % 2:
        return PolygonTable(b, k, {})
    if k == 1:
        poly = one_point(b)
    elif k == 2:
        poly = two_point(b, b, backend=backend)
    else:
        poly = mixed_correlator(b, k - 2, b, b, backend=backend)
    counts = genus_buckets(poly, exps)
    for g, c in counts.items():
        if c < 0 or c != int(c):
            raise ConsistencyError(f"n_{g},{b},{k} = {c} is not a non-negative integer")
    return PolygonTable(b, k, {g: int(c) for g, c in sorted(counts.items())})


def weighted_count(g, exps, backend="interp"):
    """``a_g(i_1, ..., i_k)``: genus-``g`` coefficient of the correlator over ``k!``."""
    exps = [int(i) for i in exps]
    if sum(exps) % 2:
        raise ValueError("the total degree must be even")
    poly = correlator(exps, backend=backend)
    power = 2 - 2 * g - len(exps) + sum(exps) // 2
    c = poly.coeff(power) if power >= 0 else 0
    value = Fraction(c) / factorial(len(exps))
    return value.numerator if value.denominator == 1 else value
