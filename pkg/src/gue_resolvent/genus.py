"""Genus expansion of the GUE free energy with triangle coupling ``s``.

Everything is a truncated power series in ``s`` whose coefficients live in
``Q(t)`` with ``x = t**2``, so square roots of ``x`` stay inside the field.
``log x`` is carried as a formal marker (:class:`XField`) and must cancel
from every positive power of ``s``.

Starting from the odd series ``v`` solving ``v (1 - 9 s v + 18 s^2 v^2) =
6 s x``, one builds ``w = x / (1 - 6 s v)`` and ``u = log w``; the genus 0,
1 and 2 free energies are explicit expressions in these and their
``x``-derivatives.  Their ``s^k`` coefficients at ``x = 1`` are the weighted
numbers ``a_g(3^k)`` of genus-``g`` triangulations with ``k`` triangles.
"""
from dataclasses import dataclass
from fractions import Fraction

from .algebra.powerseries import PowerSeries, series_compose
from .algebra.ratfunc import RationalFunction, XField
from .errors import ConsistencyError

__all__ = [
    "DEFAULT_ORDER",
    "FreeEnergySeries",
    "solve_cubic_v",
    "cubic_residual",
    "build_w_u",
    "sqrt_w",
    "free_energy_F0",
    "free_energy_F1",
    "free_energy_F2",
    "free_energy",
    "weighted_triangle_numbers",
]

DEFAULT_ORDER = 20

X = RationalFunction.monomial(1, 2)
ZERO = RationalFunction.monomial(0)


def _rf(c, k=0):
    return RationalFunction.monomial(c, k)


@dataclass
class FreeEnergySeries:
    genus: int
    series: PowerSeries

    @property
    def order(self):
        return self.series.order

    def coefficient(self, k):
        """Coefficient of ``s^k`` as an :class:`XField`."""
        c = self.series.coefficient(k)
        return c if isinstance(c, XField) else XField(c)

    def log_part(self, k):
        return self.coefficient(k).g

    def at_x1(self, k):
        """Coefficient of ``s^k`` evaluated at ``x = 1``."""
        return self.coefficient(k).at_t(1)

    def check_log_free(self):
        for k in range(1, self.order + 1):
            if self.coefficient(k).has_log():
                raise ConsistencyError(f"log x survives at s^{k} in F_{self.genus}")



def solve_cubic_v(order=DEFAULT_ORDER):
    """The series ``v = 6 s x + 324 s^3 x^2 + ...`` vanishing at ``s = 0``.

    Uses ``v = 6 s x + 9 s v^2 - 18 s^2 v^3``; the right side at ``s^k``
    only involves ``v_1 .. v_{k-1}``.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    v = [ZERO] * (order + 1)
    sq = [ZERO] * (order + 1)  # coefficients of v^2
    cube = [ZERO] * (order + 1)  # coefficients of v^3
    for k in range(1, order + 1):
        val = X * 6 if k == 1 else ZERO
        val = val + sq[k - 1] * 9
        if k >= 2:
            val = val - cube[k - 2] * 18
        v[k] = val
        # refresh v^2 and v^3 at s^{k}, now that v_1..v_k are known
        sq[k] = sum((v[i] * v[k - i] for i in range(1, k)), ZERO)
        cube[k] = sum((v[i] * sq[k - i] for i in range(1, k)), ZERO)
    return PowerSeries(v, order)


def cubic_residual(v):
    """``v (1 - 9 s v + 18 s^2 v^2) - 6 s x``; identically zero for the solution."""
    order = v.order
    s = PowerSeries.monomial(1, _rf(1), order)
    one = PowerSeries.constant(_rf(1), order)
    bracket = one - s * v * 9 + s * s * v * v * 18
    return v * bracket - s * PowerSeries.constant(X * 6, order)


def build_w_u(v):
    """``w = x / (1 - 6 s v)`` and ``u = log x + log1p(w/x - 1)``."""
    order = v.order
    s = PowerSeries.monomial(1, _rf(1), order)
    one = PowerSeries.constant(_rf(1), order)
    ratio = (one - s * v * 6).inverse()  # w / x
    w = ratio * X
    tail = series_compose("log1p", ratio - one)
    u = tail.map_coeffs(XField)
    u.coeffs[0] = u.coeffs[0] + XField.log_x()
    return w, u


def sqrt_w(w):
    """``sqrt(w) = t * sqrt1p(w/x - 1)``."""
    order = w.order
    one = PowerSeries.constant(_rf(1), order)
    ratio = w * _rf(1, -2)
    return series_compose("sqrt1p", ratio - one) * _rf(1, 1)


def _dx(f):
    return series_compose("derivative", f)


def _check(F, genus):
    out = FreeEnergySeries(genus, F)
    out.check_log_free()
    return out


def _as_x(series):
    return series.map_coeffs(lambda c: c if isinstance(c, XField) else XField(c))


def free_energy_F0(order=DEFAULT_ORDER):
    """Genus-0 free energy; the ``s^0`` term ``x^2 (log x - 3/2) / 2`` is kept."""
    v = solve_cubic_v(order)
    w, u = build_w_u(v)
    s = PowerSeries.monomial(1, _rf(1), order)
    x = PowerSeries.constant(X, order)
    h = Fraction(1, 2)
    v2, v3 = v * v, v * v * v
    F = (
        (v2 * w + w * w * h) * h
        - s * (v3 * w * h + v * w * w) * 6
        + s * s * (v2 * v2 * w * Fraction(1, 4) + v2 * w * w + w * w * w * Fraction(1, 3)) * 18
        - x * (v2 * h + w)
        + s * x * (v3 * Fraction(1, 6) + v * w) * 6
    )
    F = _as_x(F) + u * XField(X * X * h)
    return _check(F, 0)


def _log_series(f):
    """``log f`` up to an additive constant, for ``f_0 = c x^k``.

    Returns ``k log x + log1p(f / f_0 - 1)`` as a series of :class:`XField`.
    """
    c, e = f.coefficient(0).leading_term()
    lead = _rf(c, e)
    if f.coefficient(0) != lead or e % 2:
        raise ConsistencyError("the s^0 term of the logarithm argument is not a power of x")
    one = PowerSeries.constant(_rf(1), f.order)
    out = _as_x(series_compose("log1p", f * lead.inverse() - one))
    out.coeffs[0] = out.coeffs[0] + XField(0, Fraction(e, 2))
    return out


def free_energy_F1(order=DEFAULT_ORDER):
    """Genus-1 free energy ``(1/24) log(v_x^2 - w u_x^2) - u/24``.

    The ``-u/24`` term (a multiple of ``log w``) is needed to reach the
    ``-(1/12) log x`` leading behaviour and the ``3/2 s^2 x`` coefficient.
    """
    v = solve_cubic_v(order)
    w, u = build_w_u(v)
    vx = _dx(v)
    ux = _dx(u).map_coeffs(lambda c: c.f if not c.has_log() else _no_log(c))
    arg = vx * vx - w * ux * ux
    F = (_log_series(arg) - u) * Fraction(1, 24)
    return _check(F, 1)


def _no_log(c):
    raise ConsistencyError("derivative of u still carries log x")


def free_energy_F2(order=DEFAULT_ORDER):
    """Genus-2 free energy from ``u_{1,2} = v +- 2 sqrt(w)`` and their derivatives."""
    v = solve_cubic_v(order)
    w, _ = build_w_u(v)
    r = sqrt_w(w)
    u1 = v + r * 2
    u2 = v - r * 2
    d1 = [u1]
    d2 = [u2]
    for _ in range(4):
        d1.append(_dx(d1[-1]))
        d2.append(_dx(d2[-1]))
    _, a1, a2, a3, a4 = d1
    _, b1, b2, b3, b4 = d2
    u12 = u1 - u2
    F = Fraction
    i1, j1 = a1.inverse(), b1.inverse()
    i12 = u12.inverse()
    i1_2, j1_2 = i1 * i1, j1 * j1
    i1_3, j1_3 = i1_2 * i1, j1_2 * j1
    E = (
        a2 * a2 * a2 * u12 * i1_3 * i1 * F(4, 5)
        - b2 * b2 * b2 * u12 * j1_3 * j1 * F(4, 5)
        - a2 * b2 * i1 * j1 * F(1, 4)
        + a2 * i1_3 * (a2 * b1 * F(1, 2) - a3 * u12 * F(7, 5)) * F(3, 4)
        + b2 * j1_3 * (b2 * a1 * F(1, 2) + b3 * u12 * F(7, 5)) * F(3, 4)
        + i1_2 * (a2 * a2 * F(33, 10) - a3 * b1 * F(9, 10) + a2 * b2 * F(1, 10) + a4 * u12) * F(1, 4)
        + j1_2 * (b2 * b2 * F(33, 10) - b3 * a1 * F(9, 10) + a2 * b2 * F(1, 10) - b4 * u12) * F(1, 4)
        - i1 * (a3 * F(17, 5) + b3 * F(1, 2)) * F(1, 4)
        - j1 * (b3 * F(17, 5) + a3 * F(1, 2)) * F(1, 4)
        - i12 * i12 * (a1 * a1 * a1 * j1 + b1 * b1 * b1 * i1) * F(1, 10)
        - i12 * i12 * (a1 * a1 - a1 * b1 * F(11, 5) + b1 * b1)
        + (a2 - b2) * i12 * (b1 * i1 * F(1, 5) + a1 * j1 * F(1, 5) + PowerSeries.constant(_rf(1), order))
    )
    for k in range(order + 1):
        if not E.coefficient(k).is_even():
            raise ConsistencyError(f"odd powers of sqrt(x) survive at s^{k} in F_2")
    return _check(_as_x(E * F(1, 576)), 2)


def free_energy(g, order=DEFAULT_ORDER):
    """Dispatch to ``free_energy_F0/F1/F2``."""
    builders = {0: free_energy_F0, 1: free_energy_F1, 2: free_energy_F2}
    if g not in builders:
        raise ValueError("only genera 0, 1 and 2 are available")
    return builders[g](order)


def weighted_triangle_numbers(g, kmax=DEFAULT_ORDER, order=None):
    """``a_g(3^k)`` for ``k = 2, 4, ..., kmax`` as exact rationals."""
    if kmax % 2 or kmax < 2:
        raise ValueError("kmax must be a positive even integer")
    order = kmax if order is None else order
    if kmax > order:
        raise ValueError("kmax exceeds the series order")
    F = free_energy(g, order)
    return [F.at_x1(k) for k in range(2, kmax + 1, 2)]
