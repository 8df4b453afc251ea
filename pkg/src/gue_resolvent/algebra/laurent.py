"""Truncated Laurent series in ``lam**-1`` and 2x2 matrices of them.

A series stores its nonzero coefficients in a dict keyed by exponent of
``lam`` together with ``lo``, the lowest exponent whose coefficient is known.
Coefficients below ``lo`` are *unknown*, never zero; ``lo=None`` marks an
exact (finite) Laurent polynomial.  Every operation recomputes ``lo`` from
the operands so that truncation error can never leak into a reported
coefficient.
"""
from ..errors import TruncationError
from .polyn import is_scalar
from .rings import QQ, check_same_ring

__all__ = ["LaurentSeries", "ResolventMatrix"]


def _max_lo(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return max(a, b)


class LaurentSeries:
    __slots__ = ("ring", "coeffs", "lo")

    def __init__(self, ring=QQ, coeffs=None, lo=None):
        self.ring = ring
        self.lo = lo
        if coeffs is None:
            self.coeffs = {}
        elif lo is None:
            self.coeffs = {e: c for e, c in coeffs.items() if c}
        else:
            self.coeffs = {e: c for e, c in coeffs.items() if c and e >= lo}

    @classmethod
    def monomial(cls, ring, exponent, coeff=None):
        return cls(ring, {exponent: ring.one if coeff is None else coeff})

    @classmethod
    def zero(cls, ring, lo=None):
        return cls(ring, {}, lo)

    # -- bookkeeping ------------------------------------------------------

    @property
    def depth(self):
        """Largest ``D`` such that the coefficient of ``lam**-D`` is known."""
        return None if self.lo is None else -self.lo

    @property
    def top(self):
        """Highest exponent with a nonzero known coefficient (None if none)."""
        return max(self.coeffs) if self.coeffs else None

    @property
    def principal(self):
        """Degree of the polynomial part, or -1 when it vanishes."""
        t = self.top
        return -1 if t is None or t < 0 else t

    def _effective_top(self):
        t = self.top
        if self.lo is None:
            return t
        return self.lo - 1 if t is None else max(t, self.lo - 1)

    def is_exact(self):
        return self.lo is None

    def is_zero(self):
        """True when every *known* coefficient vanishes."""
        return not self.coeffs

    def coefficient(self, e):
        if self.lo is not None and e < self.lo:
            raise TruncationError(f"coefficient of lam^{e} is beyond depth {self.depth}")
        return self.coeffs.get(e, self.ring.zero)

    __getitem__ = coefficient

    def exponents(self):
        return sorted(self.coeffs)

    # -- arithmetic -------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, LaurentSeries):
            raise TypeError(f"expected LaurentSeries, got {type(other).__name__}")
        check_same_ring(self.ring, other.ring)

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out[e] + c if e in out else c
        return LaurentSeries(self.ring, out, _max_lo(self.lo, other.lo))

    def __neg__(self):
        return LaurentSeries(self.ring, {e: -c for e, c in self.coeffs.items()}, self.lo)

    def __sub__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out[e] - c if e in out else -c
        return LaurentSeries(self.ring, out, _max_lo(self.lo, other.lo))

    def scale(self, c):
        """Multiply every coefficient by a ring element or scalar ``c``."""
        if not c:
            return LaurentSeries(self.ring, {}, self.lo)
        return LaurentSeries(self.ring, {e: x * c for e, x in self.coeffs.items()}, self.lo)

    def __mul__(self, other):
        if not isinstance(other, LaurentSeries):
            return self.scale(other)
        self._check(other)
        a, b = self, other
        if (a.lo is None and not a.coeffs) or (b.lo is None and not b.coeffs):
            return LaurentSeries(self.ring)
        lo = None
        if a.lo is not None:
            lo = a.lo + b._effective_top()
        if b.lo is not None:
            cand = b.lo + a._effective_top()
            lo = cand if lo is None else max(lo, cand)
        ta = sorted(a.coeffs.items(), reverse=True)
        tb = sorted(b.coeffs.items(), reverse=True)
        out = {}
        for ea, ca in ta:
            for eb, cb in tb:
                e = ea + eb
                if lo is not None and e < lo:
                    break
                p = ca * cb
                if e in out:
                    out[e] = out[e] + p
                else:
                    out[e] = p
        return LaurentSeries(self.ring, out, lo)

    def __rmul__(self, c):
        return self.scale(c)

    def shift_exponent(self, k):
        """Multiply by ``lam**k``."""
        return LaurentSeries(
            self.ring,
            {e + k: c for e, c in self.coeffs.items()},
            None if self.lo is None else self.lo + k,
        )

    def plus(self):
        """Polynomial part ``( . )_+`` (non-negative exponents), exact."""
        if self.lo is not None and self.lo > 0:
            raise TruncationError("polynomial part needs the constant term")
        return LaurentSeries(self.ring, {e: c for e, c in self.coeffs.items() if e >= 0})

    def truncate(self, lo):
        """Forget every coefficient below ``lam**lo``."""
        return LaurentSeries(self.ring, self.coeffs, _max_lo(self.lo, lo))

    def map_coeffs(self, f, ring=None):
        return LaurentSeries(
            ring or self.ring, {e: f(c) for e, c in self.coeffs.items()}, self.lo
        )

    # -- comparison -------------------------------------------------------

    def agrees(self, other, lo=None):
        """Exact equality of all coefficients known in both (and >= ``lo``)."""
        self._check(other)
        bound = _max_lo(_max_lo(self.lo, other.lo), lo)
        keys = set(self.coeffs) | set(other.coeffs)
        for e in keys:
            if bound is not None and e < bound:
                continue
            if self.coeffs.get(e, 0) != other.coeffs.get(e, 0):
                return False
        return True

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self.ring == other.ring and self.lo == other.lo and self.coeffs == other.coeffs

    __hash__ = None

    def __repr__(self):
        terms = ", ".join(f"{e}: {c}" for e, c in sorted(self.coeffs.items(), reverse=True))
        tail = "" if self.lo is None else f" + O(lam^{self.lo - 1})"
        return f"LaurentSeries({{{terms}}}{tail})"


class ResolventMatrix:
    """2x2 matrix ``[[e11, e12], [e21, e22]]`` of Laurent series over one ring."""

    __slots__ = ("e11", "e12", "e21", "e22")

    def __init__(self, e11, e12, e21, e22):
        ring = e11.ring
        for x in (e12, e21, e22):
            check_same_ring(ring, x.ring)
        self.e11, self.e12, self.e21, self.e22 = e11, e12, e21, e22

    @classmethod
    def from_rows(cls, rows):
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    @classmethod
    def constant(cls, ring, rows):
        """Matrix with exact polynomial entries given as ``{exp: coeff}`` dicts."""
        (a, b), (c, d) = rows
        return cls(*(LaurentSeries(ring, {k: ring(x) for k, x in t.items()}) for t in (a, b, c, d)))

    @property
    def ring(self):
        return self.e11.ring

    def entries(self):
        return (self.e11, self.e12, self.e21, self.e22)

    @property
    def lo(self):
        lo = None
        for x in self.entries():
            lo = _max_lo(lo, x.lo)
        return lo

    @property
    def depth(self):
        lo = self.lo
        return None if lo is None else -lo

    def __getitem__(self, ij):
        i, j = ij
        return self.entries()[2 * i + j]

    def __add__(self, other):
        return ResolventMatrix(*(x + y for x, y in zip(self.entries(), other.entries())))

    def __sub__(self, other):
        return ResolventMatrix(*(x - y for x, y in zip(self.entries(), other.entries())))

    def __neg__(self):
        return ResolventMatrix(*(-x for x in self.entries()))

    def scale(self, c):
        return ResolventMatrix(*(x.scale(c) for x in self.entries()))

    def __mul__(self, other):
        if not isinstance(other, ResolventMatrix):
            return self.scale(other)
        a, b, c, d = self.entries()
        p, q, r, s = other.entries()
        return ResolventMatrix(a * p + b * r, a * q + b * s, c * p + d * r, c * q + d * s)

    def __rmul__(self, c):
        return self.scale(c)

    def commutator(self, other):
        return self * other - other * self

    def trace(self):
        return self.e11 + self.e22

    def det(self):
        return self.e11 * self.e22 - self.e12 * self.e21

    def plus(self):
        return ResolventMatrix(*(x.plus() for x in self.entries()))

    def shift_exponent(self, k):
        return ResolventMatrix(*(x.shift_exponent(k) for x in self.entries()))

    def truncate(self, lo):
        return ResolventMatrix(*(x.truncate(lo) for x in self.entries()))

    def map_coeffs(self, f, ring=None):
        return ResolventMatrix(*(x.map_coeffs(f, ring) for x in self.entries()))

    def agrees(self, other, lo=None):
        return all(x.agrees(y, lo) for x, y in zip(self.entries(), other.entries()))

    def is_zero(self):
        return all(x.is_zero() for x in self.entries())

    def __repr__(self):
        return f"ResolventMatrix({self.e11!r}, {self.e12!r}, {self.e21!r}, {self.e22!r})"


def scalar_series(c, ring=QQ):
    if is_scalar(c):
        c = ring(c)
    return LaurentSeries(ring, {0: c})
