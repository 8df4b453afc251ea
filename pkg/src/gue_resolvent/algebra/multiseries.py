"""Truncated series in several variables ``lam_1 .. lam_k``.

Terms live in a dict keyed by exponent tuples.  Each variable ``m`` has a
window ``[lo[m], hi[m]]``: coefficients with exponent below ``lo[m]`` are
unknown (dropped because truncation cannot determine them), while terms
above ``hi[m]`` are discarded as out of scope and counted in ``escaped``.
``hi[m] = None`` means no upper cut.
"""
from ..errors import NotDivisibleError, TruncationError
from .rings import QQ, check_same_ring

__all__ = ["MultiSeries", "biseries_divide_by_square_diff", "square_diff"]


class MultiSeries:
    __slots__ = ("ring", "nvars", "terms", "lo", "hi", "escaped")

    def __init__(self, ring, nvars, terms=None, lo=None, hi=None, escaped=0):
        self.ring = ring
        self.nvars = nvars
        self.lo = tuple(lo) if lo is not None else (None,) * nvars
        self.hi = tuple(hi) if hi is not None else (None,) * nvars
        self.escaped = escaped
        clean = {}
        for e, c in (terms or {}).items():
            if not c:
                continue
            if len(e) != nvars:
                raise ValueError(f"exponent {e} does not have {nvars} entries")
            if self._outside_lo(e):
                continue
            if self._outside_hi(e):
                self.escaped += 1
                continue
            clean[e] = c
        self.terms = clean

    def _outside_lo(self, e):
        return any(l is not None and x < l for x, l in zip(e, self.lo))

    def _outside_hi(self, e):
        return any(h is not None and x > h for x, h in zip(e, self.hi))

    @classmethod
    def embed(cls, series, var, nvars, lo=None, hi=None):
        """View a one-variable ``LaurentSeries`` as a series in variable ``var``.

        The known range of ``series`` narrows the window of that variable.
        """
        lo = list(lo) if lo is not None else [None] * nvars
        if series.lo is not None:
            lo[var] = series.lo if lo[var] is None else max(lo[var], series.lo)
        terms = {}
        for e, c in series.coeffs.items():
            key = [0] * nvars
            key[var] = e
            terms[tuple(key)] = c
        return cls(series.ring, nvars, terms, lo, hi)

    @classmethod
    def constant(cls, ring, nvars, c, lo=None, hi=None):
        return cls(ring, nvars, {(0,) * nvars: c}, lo, hi)

    # -- windows ----------------------------------------------------------

    def _merge_windows(self, other):
        lo = tuple(
            b if a is None else a if b is None else max(a, b) for a, b in zip(self.lo, other.lo)
        )
        hi = tuple(
            b if a is None else a if b is None else min(a, b) for a, b in zip(self.hi, other.hi)
        )
        return lo, hi

    def with_window(self, lo=None, hi=None):
        """Return a copy restricted to a (narrower) window."""
        other = MultiSeries(self.ring, self.nvars, {}, lo, hi)
        lo2, hi2 = self._merge_windows(other)
        return MultiSeries(self.ring, self.nvars, self.terms, lo2, hi2, self.escaped)

    def coefficient(self, e):
        e = tuple(e)
        if self._outside_lo(e):
            raise TruncationError(f"exponent {e} is below the known window {self.lo}")
        if self._outside_hi(e):
            raise TruncationError(f"exponent {e} is above the window {self.hi}")
        return self.terms.get(e, self.ring.zero)

    __getitem__ = coefficient

    def is_zero(self):
        return not self.terms

    def __len__(self):
        return len(self.terms)

    # -- arithmetic -------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, MultiSeries):
            raise TypeError(f"expected MultiSeries, got {type(other).__name__}")
        check_same_ring(self.ring, other.ring)
        if self.nvars != other.nvars:
            raise ValueError("series in different numbers of variables")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        lo, hi = self._merge_windows(other)
        return MultiSeries(self.ring, self.nvars, out, lo, hi, self.escaped + other.escaped)

    def __neg__(self):
        return MultiSeries(
            self.ring, self.nvars, {e: -c for e, c in self.terms.items()}, self.lo, self.hi, self.escaped
        )

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return MultiSeries(
            self.ring, self.nvars, {e: x * c for e, x in self.terms.items()}, self.lo, self.hi, self.escaped
        )

    def __mul__(self, other):
        if not isinstance(other, MultiSeries):
            return self.scale(other)
        self._check(other)
        lo, hi = self._merge_windows(other)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out = {}
        n = self.nvars
        rng = range(n)
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple(ea[m] + eb[m] for m in rng)
                bad = False
                for m in rng:
                    l = lo[m]
                    if l is not None and e[m] < l:
                        bad = True
                        break
                if bad:
                    continue
                p = ca * cb
                if e in out:
                    out[e] = out[e] + p
                else:
                    out[e] = p
        result = MultiSeries(self.ring, n, out, lo, hi)
        result.escaped += self.escaped + other.escaped
        return result

    def __rmul__(self, c):
        return self.scale(c)

    def map_coeffs(self, f, ring=None):
        return MultiSeries(
            ring or self.ring, self.nvars, {e: f(c) for e, c in self.terms.items()}, self.lo, self.hi
        )

    def __eq__(self, other):
        if not isinstance(other, MultiSeries):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.terms == other.terms
            and self.lo == other.lo
            and self.hi == other.hi
        )

    __hash__ = None

    def __repr__(self):
        return f"MultiSeries(nvars={self.nvars}, terms={len(self.terms)}, lo={self.lo}, hi={self.hi})"


def geometric_kernel(ring, nvars, a, b, rmax, lo=None, hi=None):
    """Expansion of ``1/(lam_a - lam_b)`` for ``|lam_a| > |lam_b|``, ``r <= rmax``."""
    terms = {}
    one = ring.one
    for r in range(rmax + 1):
        e = [0] * nvars
        e[a] -= r + 1
        e[b] += r
        terms[tuple(e)] = one
    return MultiSeries(ring, nvars, terms, lo, hi)


def square_diff(ring=QQ):
    """``(lam_1 - lam_2)**2`` as an exact two-variable series."""
    one = ring.one
    return MultiSeries(ring, 2, {(2, 0): one, (1, 1): -2 * one, (0, 2): one})


def biseries_divide_by_square_diff(S, depth=None, rows=None, cols=None):
    """Exact quotient ``T = S / (lam_1 - lam_2)**2`` of a two-variable series.

    ``S`` must contain only non-positive exponents.  Writing
    ``S = sum s[A,B] lam_1^-A lam_2^-B`` and ``T = sum t[a,b] lam_1^-a lam_2^-b``
    (``a, b >= 2``), the coefficients come from the triangular recurrence
    ``t[a,b] = s[a-2,b] + 2 t[a-1,b+1] - t[a-2,b+2]``, i.e.
    ``t[a,b] = sum_r (r+1) s[a-2-r, b+r]``.  The rows ``B = 0, 1`` of ``S``
    are not used by the recurrence and are checked against ``T`` instead;
    a mismatch raises ``NotDivisibleError``.

    ``depth`` bounds the known part of ``S`` in both variables (taken from
    the windows of ``S`` when omitted).  ``t[a,b]`` is known when
    ``a + b - 2 <= depth``.  The result window is ``2..rows`` by ``2..cols``.
    """
    if S.nvars != 2:
        raise ValueError("division by (lam_1 - lam_2)^2 needs a two-variable series")
    ring = S.ring
    for (x, y) in S.terms:
        if x > 0 or y > 0:
            raise NotDivisibleError(f"positive exponent ({x}, {y}) in dividend")
    known = [-l for l in S.lo if l is not None]
    if depth is None:
        if len(known) < 2:
            raise ValueError("an exact dividend needs an explicit depth")
        depth = min(known)
    elif known and depth > min(known):
        raise TruncationError(f"depth {depth} exceeds the known window of the dividend")
    if rows is None and cols is None:
        rows = depth // 2 + 1
    if rows is None:
        rows = depth + 2 - cols
    if cols is None:
        cols = depth + 2 - rows
    if rows + cols - 2 > depth:
        raise TruncationError(
            f"quotient window {rows}x{cols} needs dividend depth {rows + cols - 2}, have {depth}"
        )
    zero = ring.zero

    def s(A, B):
        return S.terms.get((-A, -B), zero)

    t = {}
    # t[a,b] for a <= rows and b >= 2 with a + b - 2 <= depth
    for a in range(2, depth + 1):
        for b in range(2, depth + 3 - a):
            acc = zero
            for r in range(a - 1):
                c = s(a - 2 - r, b + r)
                if c:
                    acc = acc + c * (r + 1)
            if acc:
                t[(a, b)] = acc

    def tt(a, b):
        return t.get((a, b), zero)

    # overdetermined rows B = 0, 1 and stray column terms A with B outside
    for A in range(0, depth - 1):
        if s(A, 0) != tt(A, 2):
            raise NotDivisibleError(f"coefficient lam_1^-{A} lam_2^0 is inconsistent")
    for A in range(0, depth - 2):
        if s(A, 1) != tt(A, 3) - 2 * tt(A + 1, 2):
            raise NotDivisibleError(f"coefficient lam_1^-{A} lam_2^-1 is inconsistent")
    terms = {(-a, -b): c for (a, b), c in t.items() if a <= rows and b <= cols}
    return MultiSeries(ring, 2, terms, lo=(-rows, -cols), hi=(-2, -2))
