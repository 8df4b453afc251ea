"""Truncated power series in one variable (the coupling ``s``).

Coefficients may be any exact field-like values supporting ``+ - *`` and
division by integers (``Fraction``, ``PolyN``, ``RationalFunction``,
``XField``).  A series of order ``K`` knows the coefficients of
``s**0 .. s**K``.
"""
from fractions import Fraction

from ..errors import TruncationError

__all__ = ["PowerSeries", "series_compose"]


def _is_zero(c):
    return c == 0


def _div(c, d):
    # exact division that never falls back to floats
    if isinstance(c, (int, Fraction)) and isinstance(d, (int, Fraction)):
        q = Fraction(c) / d
        return q.numerator if q.denominator == 1 else q
    return c / d


class PowerSeries:
    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order=None):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if len(coeffs) > order + 1:
            coeffs = coeffs[: order + 1]
        coeffs += [0] * (order + 1 - len(coeffs))
        self.coeffs = coeffs
        self.order = order

    @classmethod
    def constant(cls, c, order):
        return cls([c], order)

    @classmethod
    def monomial(cls, k, c, order):
        if k > order:
            return cls([], order)
        return cls([0] * k + [c], order)

    @classmethod
    def from_dict(cls, terms, order):
        out = [0] * (order + 1)
        for k, c in terms.items():
            if k <= order:
                out[k] = c
        return cls(out, order)

    def coefficient(self, k):
        if k > self.order:
            raise TruncationError(f"s^{k} is beyond the series order {self.order}")
        if k < 0:
            return 0
        return self.coeffs[k]

    __getitem__ = coefficient

    def is_zero(self):
        return all(_is_zero(c) for c in self.coeffs)

    def valuation(self):
        for k, c in enumerate(self.coeffs):
            if not _is_zero(c):
                return k
        return None

    # -- arithmetic -------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, PowerSeries):
            return other
        return PowerSeries([other], self.order)

    def __add__(self, other):
        other = self._lift(other)
        order = min(self.order, other.order)
        return PowerSeries([self.coeffs[k] + other.coeffs[k] for k in range(order + 1)], order)

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        return PowerSeries([x * c for x in self.coeffs], self.order)

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            return self.scale(other)
        order = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        nz_a = [(i, c) for i, c in enumerate(a[: order + 1]) if not _is_zero(c)]
        nz_b = [(j, c) for j, c in enumerate(b[: order + 1]) if not _is_zero(c)]
        out = [0] * (order + 1)
        for i, ca in nz_a:
            for j, cb in nz_b:
                if i + j > order:
                    break
                out[i + j] = out[i + j] + ca * cb
        return PowerSeries(out, order)

    def __rmul__(self, c):
        return self.scale(c)

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = PowerSeries([1], self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self):
        """Multiplicative inverse; the constant term must be invertible."""
        f = self.coeffs
        if _is_zero(f[0]):
            raise ZeroDivisionError("series with zero constant term is not invertible")
        inv0 = _div(1, f[0])
        g = [inv0]
        nz = [(j, c) for j, c in enumerate(f) if j and not _is_zero(c)]
        for k in range(1, self.order + 1):
            acc = 0
            for j, c in nz:
                if j > k:
                    break
                acc = acc + c * g[k - j]
            g.append(-(acc * inv0))
        return PowerSeries(g, self.order)

    def __truediv__(self, other):
        if isinstance(other, PowerSeries):
            return self * other.inverse()
        return PowerSeries([_div(c, other) for c in self.coeffs], self.order)

    def __rtruediv__(self, other):
        return self.inverse() * other

    def truncate(self, order):
        return PowerSeries(self.coeffs[: order + 1], min(order, self.order))

    def map_coeffs(self, f):
        return PowerSeries([f(c) for c in self.coeffs], self.order)

    def shift(self, k):
        """Multiply by ``s**k`` (order is kept)."""
        return PowerSeries([0] * k + self.coeffs[: self.order + 1 - k], self.order)

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        order = min(self.order, other.order)
        return all(self.coeffs[k] == other.coeffs[k] for k in range(order + 1))

    __hash__ = None

    def __repr__(self):
        terms = [f"({c})*s^{k}" for k, c in enumerate(self.coeffs) if not _is_zero(c)]
        return "PowerSeries(" + (" + ".join(terms) or "0") + f" + O(s^{self.order + 1}))"


def _log1p(f):
    # (1 + f) L' = f'  =>  k l_k = k f_k - sum_{j<k} j l_j f_{k-j}
    a = f.coeffs
    l = [0] * (f.order + 1)
    for k in range(1, f.order + 1):
        acc = a[k] * k
        for j in range(1, k):
            if not _is_zero(l[j]) and not _is_zero(a[k - j]):
                acc = acc - l[j] * a[k - j] * j
        l[k] = _div(acc, k)
    return PowerSeries(l, f.order)


def _sqrt1p(f):
    # h^2 = 1 + f, h_0 = 1  =>  2 h_k = f_k - sum_{0<j<k} h_j h_{k-j}
    a = f.coeffs
    h = [1] + [0] * f.order
    for k in range(1, f.order + 1):
        acc = a[k]
        for j in range(1, k):
            if not _is_zero(h[j]) and not _is_zero(h[k - j]):
                acc = acc - h[j] * h[k - j]
        h[k] = _div(acc, 2)
    return PowerSeries(h, f.order)


def series_compose(kind, f):
    """Apply ``log1p``, ``sqrt1p`` or a coefficient-wise ``derivative``.

    ``log1p`` and ``sqrt1p`` return ``log(1 + f)`` and ``sqrt(1 + f)`` and
    need ``f`` to have zero constant term.  ``derivative`` differentiates
    every coefficient through its ``derivative()`` method.
    """
    if kind == "derivative":
        return f.map_coeffs(lambda c: 0 if isinstance(c, (int, Fraction)) else c.derivative())
    if kind not in ("log1p", "sqrt1p"):
        raise ValueError(f"unknown composition {kind!r}")
    if not _is_zero(f.coeffs[0]):
        raise ValueError(f"{kind} needs a series with zero constant term")
    return _log1p(f) if kind == "log1p" else _sqrt1p(f)
