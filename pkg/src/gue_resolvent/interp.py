"""Recover a polynomial in ``N`` from exact values at integer points.

Connected correlators have a known degree bound and a single parity, so a
pipeline can run with plain integers at a handful of sizes and the result
is interpolated exactly.  One or more extra points are always evaluated and
must agree with the interpolant; otherwise :class:`ConsistencyError` is
raised.
"""
from fractions import Fraction

from .algebra.polyn import PolyN
from .errors import ConsistencyError

__all__ = ["interpolate_parity", "sample_points", "reconstruct"]


def sample_points(degree, parity=None, extra=1):
    """Sizes ``N = 1, 2, ...`` needed to pin a polynomial of the given shape."""
    if degree < 0:
        return list(range(1, 1 + extra))
    if parity is None:
        unknowns = degree + 1
    else:
        unknowns = (degree - parity) // 2 + 1
    return list(range(1, unknowns + extra + 1))


def _lagrange(xs, ys):
    """Coefficients (low first) of the interpolating polynomial through (xs, ys)."""
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i in range(n):
        # basis polynomial prod_{j != i} (X - x_j) / (x_i - x_j)
        basis = [Fraction(1)]
        denom = 1
        for j in range(n):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xs[j] * basis[k + 1]
            denom *= xs[i] - xs[j]
        scale = Fraction(ys[i]) / denom
        for k in range(n):
            coeffs[k] += basis[k] * scale
    return coeffs


def interpolate_parity(values, degree, parity=None, var="N"):
    """Polynomial ``p`` of degree <= ``degree`` with ``p(N) = values[N]``.

    With ``parity`` set, only monomials ``N^e`` with ``e % 2 == parity`` are
    allowed.  Points beyond the number of unknowns serve as checks.
    """
    pts = sorted(values)
    if degree < 0:
        if any(values[p] != 0 for p in pts):
            raise ConsistencyError("nonzero value where the correlator must vanish")
        return PolyN((), var)
    if parity is None:
        m = degree + 1
        xs = pts[:m]
        c = _lagrange(xs, [values[x] for x in xs])
        poly = PolyN(c, var)
    else:
        m = (degree - parity) // 2 + 1
        xs = pts[:m]
        ys = [Fraction(values[x]) / x ** parity for x in xs]
        q = _lagrange([x * x for x in xs], ys)
        dense = [0] * (degree + 1)
        for k, cq in enumerate(q):
            dense[2 * k + parity] = cq
        poly = PolyN(dense, var)
    for x in pts[m:]:
        if poly(x) != values[x]:
            raise ConsistencyError(
                f"value at N={x} disagrees with the degree-{degree} interpolant"
            )
    return poly


def reconstruct(fn, degree, parity=None, extra=1, var="N"):
    """Evaluate ``fn`` at integer sizes and interpolate the polynomial in ``N``."""
    values = {n: fn(n) for n in sample_points(degree, parity, extra)}
    return interpolate_parity(values, degree, parity, var)
