"""Matrix resolvents of the discrete Lax operator.

Two construction paths are provided.  :func:`build_gue_resolvent` writes the
GUE resolvent down directly from the hypergeometric coefficients
``A_{n,j}``, ``B_{n,j}``.  :func:`build_general_resolvent` solves the
recursion for the coefficients ``c_{n,j}`` (of ``gamma``) and ``a_{n,j}`` (of
``alpha``) for arbitrary lattice data ``(v, w)``, in any of the three
coefficient rings.  With ``v = 0, w = n`` both paths must coincide.
"""
import weakref
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra.laurent import LaurentSeries, ResolventMatrix
from .algebra.multiseries import MultiSeries, biseries_divide_by_square_diff
from .algebra.polyn import PolyN, is_scalar, normalize_scalar
from .algebra.rings import QQ, SYM, PolyRing
from .algebra.sympoly import SymPoly
from .errors import ConsistencyError, WindowError
from .hypergeometric import as_symbol, double_factorial, hyp_A, hyp_B

__all__ = [
    "LatticeData",
    "OmegaTable",
    "build_gue_resolvent",
    "build_general_resolvent",
    "lax_matrix",
    "shift_resolvent",
    "check_resolvent_equation",
    "check_normalization",
    "check_rec2",
    "check_recur_gamma",
    "pair_trace_series",
    "compute_omega",
    "hamiltonian_density",
    "required_window",
]


def _ring_of(n):
    if isinstance(n, PolyN):
        return PolyRing(n.var)
    if is_scalar(n):
        return QQ
    raise TypeError(f"site must be an integer or a polynomial symbol, got {n!r}")


def build_gue_resolvent(n, depth, var="n"):
    """Closed-form GUE resolvent at site ``n`` known down to ``lam**-depth``.

    ``n`` may be an integer (scalar coefficients) or a symbol name / ``PolyN``
    (coefficients in ``Z[n]``-valued polynomials).
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    if n is None:
        n = var
    n = as_symbol(n)
    ring = _ring_of(n)
    lo = -depth
    e11, e12, e21 = {0: ring.one}, {}, {}
    j = 0
    while 2 * j + 1 <= depth:
        df = double_factorial(2 * j - 1)
        e21[-2 * j - 1] = ring(hyp_B(n, j) * df)
        e12[-2 * j - 1] = ring(-(n * hyp_B(n + 1, j)) * df)
        if 2 * j + 2 <= depth:
            e11[-2 * j - 2] = ring(n * hyp_A(n, j) * (df * (2 * j + 1)))
        j += 1
    e22 = {k: -c for k, c in e11.items() if k != 0}
    return ResolventMatrix(
        LaurentSeries(ring, e11, lo),
        LaurentSeries(ring, e12, lo),
        LaurentSeries(ring, e21, lo),
        LaurentSeries(ring, e22, lo),
    )


# -- lattice data -----------------------------------------------------------


def required_window(site, depth):
    """Sites the recursion may touch when building ``R_site`` to ``depth``."""
    return site - depth - 1, site + depth + 1


class LatticeData:
    """Values ``v_k``, ``w_k`` on a window of sites, in one coefficient ring.

    ``translation_invariant`` data satisfies ``v_{k+m} = shift_m(v_k)`` (for
    instance generic symbols or the GUE data ``w_k = n + k``), which lets the
    recursion compute one site and obtain the others by substitution.
    """

    def __init__(self, ring, v, w, window=None, translation_invariant=False, label=""):
        self.ring = ring
        self._v = v
        self._w = w
        self.window = window
        self.translation_invariant = translation_invariant
        self.label = label

    def _check(self, site):
        if self.window is not None and not (self.window[0] <= site <= self.window[1]):
            raise WindowError(site)

    def v(self, site):
        self._check(site)
        return self.ring(self._v(site))

    def w(self, site):
        self._check(site)
        return self.ring(self._w(site))

    def covers(self, lo, hi):
        if self.window is None:
            return None
        for site in range(lo, hi + 1):
            if not (self.window[0] <= site <= self.window[1]):
                return site
        return None

    @classmethod
    def generic(cls, window=None):
        """Independent symbols ``v_k``, ``w_k``; unbounded when ``window`` is None."""
        return cls(
            SYM,
            lambda k: SymPoly.symbol("v", k),
            lambda k: SymPoly.symbol("w", k),
            window,
            translation_invariant=window is None,
            label="generic",
        )

    @classmethod
    def gue(cls, var="n"):
        """GUE data ``v = 0``, ``w_k = n + k`` with the site ``n`` kept symbolic."""
        n = PolyN.gen(var)
        return cls(PolyRing(var), lambda k: 0, lambda k: n + k, None, True, label="gue")

    @classmethod
    def gue_numeric(cls, window):
        """GUE data at explicit integer sites ``w_k = k``."""
        return cls(QQ, lambda k: 0, lambda k: k, window, False, label="gue-numeric")

    @classmethod
    def from_values(cls, v, w):
        """Scalar data from two dicts keyed by site."""
        sites = sorted(set(v) & set(w))
        if not sites:
            raise ValueError("no sites with both v and w")
        window = (sites[0], sites[-1])
        missing = [k for k in range(window[0], window[1] + 1) if k not in v or k not in w]
        if missing:
            raise WindowError(missing[0], f"site {missing[0]} has no data")
        return cls(QQ, v.__getitem__, w.__getitem__, window, False, label="values")


class _Recursion:
    """Memoized coefficients ``c_{k,j}`` and ``a_{k,j}`` of one data set."""

    def __init__(self, data, base=0):
        self.data = data
        self.ring = data.ring
        self.base = base
        self._c = {}
        self._a = {}

    def c(self, site, j):
        if j == 0:
            return self.ring.one
        key = (site, j)
        got = self._c.get(key)
        if got is not None:
            return got
        d = self.data
        if d.translation_invariant and site != self.base:
            val = self.ring.shift(self.c(self.base, j), site - self.base)
        else:
            val = d.v(site - 1) * self.c(site, j - 1) + self.a(site, j - 1) + self.a(site - 1, j - 1)
        self._c[key] = val
        return val

    def a(self, site, l):
        if l == 0:
            return self.ring.zero
        key = (site, l)
        got = self._a.get(key)
        if got is not None:
            return got
        d = self.data
        if d.translation_invariant and site != self.base:
            val = self.ring.shift(self.a(self.base, l), site - self.base)
        else:
            # coefficient of lam^{-l-1} in alpha (1 + alpha) = w_n gamma_n gamma_{n+1}
            cc = self.ring.zero
            aa = self.ring.zero
            for i in range(l):
                k = l - 1 - i
                cc = cc + self.c(site, i) * self.c(site + 1, k)
                if i and k:
                    aa = aa + self.a(site, i) * self.a(site, k)
            val = d.w(site) * cc - aa
        self._a[key] = val
        return val


_recursions = weakref.WeakKeyDictionary()


def _recursion_for(data, site):
    # one shared memo per data set; site-anchored unless translation invariant
    per_data = _recursions.setdefault(data, {})
    base = 0 if data.translation_invariant else site
    rec = per_data.get(base)
    if rec is None:
        rec = per_data[base] = _Recursion(data, base)
    return rec


def build_general_resolvent(data, site=0, depth=4):
    """Matrix resolvent ``R_site`` of the lattice data, known to ``lam**-depth``."""
    if depth < 1:
        raise ValueError("depth must be at least 1")
    lo, hi = required_window(site, depth)
    missing = data.covers(lo, hi)
    if missing is not None:
        raise WindowError(missing, f"depth {depth} at site {site} needs sites {lo}..{hi}; site {missing} is missing")
    rec = _recursion_for(data, site)
    ring = data.ring
    gamma = {-j - 1: rec.c(site, j) for j in range(depth)}
    gamma_next = {-j - 1: rec.c(site + 1, j) for j in range(depth)}
    alpha = {-j - 1: rec.a(site, j) for j in range(depth)}
    w = data.w(site)
    beta = {e: -(w * c) for e, c in gamma_next.items()}
    e11 = dict(alpha)
    e11[0] = e11.get(0, ring.zero) + ring.one
    lo = -depth
    return ResolventMatrix(
        LaurentSeries(ring, e11, lo),
        LaurentSeries(ring, beta, lo),
        LaurentSeries(ring, gamma, lo),
        LaurentSeries(ring, {e: -c for e, c in alpha.items()}, lo),
    )


def lax_matrix(v, w, ring):
    """``U = [[v - lam, w], [-1, 0]]`` as an exact matrix."""
    return ResolventMatrix(
        LaurentSeries(ring, {0: ring(v), 1: -ring.one}),
        LaurentSeries(ring, {0: ring(w)}),
        LaurentSeries(ring, {0: -ring.one}),
        LaurentSeries(ring),
    )


def shift_resolvent(R, k):
    """Apply the site shift ``n -> n + k`` to every coefficient."""
    ring = R.ring
    return R.map_coeffs(lambda c: ring.shift(c, k))


def check_resolvent_equation(R_n, R_next, U):
    """True iff ``R_{n+1} U_n - U_n R_n`` vanishes to the common depth."""
    return (R_next * U - U * R_n).is_zero()


def check_normalization(R):
    """``tr R = 1``, ``det R = 0`` and ``tr R^2 = 1`` coefficient-wise."""
    ring = R.ring
    one = LaurentSeries(ring, {0: ring.one})
    return (
        R.trace().agrees(one)
        and R.det().is_zero()
        and (R * R).trace().agrees(one)
    )


def check_rec2(data, site, depth):
    """Verify the redundant recursion linking neighbouring sites, ``j < depth``."""
    rec = _recursion_for(data, site)
    c, a = rec.c, rec.a
    n = site
    for j in range(depth):
        lhs = (
            a(n, j + 1)
            - a(n + 1, j + 1)
            + data.v(n) * (a(n + 1, j) - a(n, j))
            + data.w(n + 1) * c(n + 2, j)
            - data.w(n) * c(n, j)
        )
        if lhs != 0:
            return False
    return True


def check_recur_gamma(n, depth):
    """Three-term recursion of the GUE ``gamma`` series at integer site ``n``."""
    g = [build_gue_resolvent(n + k, depth + 2).e21 for k in range(4)]
    lam2 = LaurentSeries(QQ, {2: 1, 0: -(n + 1)})
    lhs = g[3].scale(n + 2)
    rhs = lam2 * (g[2] - g[1]) + g[0].scale(n)
    return lhs.agrees(rhs, -depth)


# -- two-point data -----------------------------------------------------------


def pair_trace_series(RA, RB):
    """``tr RA(lam_1) RB(lam_2)`` as a two-variable series."""
    ring = RA.ring
    ea = [MultiSeries.embed(x, 0, 2) for x in RA.entries()]
    eb = [MultiSeries.embed(x, 1, 2) for x in RB.entries()]
    # tr(A B) = a11 b11 + a12 b21 + a21 b12 + a22 b22
    total = ea[0] * eb[0] + ea[1] * eb[2] + ea[2] * eb[1] + ea[3] * eb[3]
    assert total.ring == ring
    return total


@dataclass
class OmegaTable:
    imax: int
    jmax: int
    values: dict = field(default_factory=dict)

    def __getitem__(self, ij):
        return self.values[ij]

    def is_symmetric(self):
        for (i, j), x in self.values.items():
            if (j, i) in self.values and self.values[(j, i)] != x:
                return False
        return True


def compute_omega(data, site, imax, jmax):
    """Coefficients ``Omega_{i;j}`` of ``(tr R(lam)R(mu) - 1)/(lam - mu)^2``."""
    depth = imax + jmax + 4
    R = build_general_resolvent(data, site, depth)
    S = pair_trace_series(R, R)
    S = S - MultiSeries.constant(data.ring, 2, data.ring.one)
    T = biseries_divide_by_square_diff(S, depth=depth, rows=imax + 2, cols=jmax + 2)
    table = OmegaTable(imax, jmax)
    for i in range(imax + 1):
        for j in range(jmax + 1):
            table.values[(i, j)] = T[(-i - 2, -j - 2)]
    return table


def hamiltonian_density(data, site, j):
    """``h_j(site) = c_{site+1, j+2} / (j + 2)`` for ``j >= -1``."""
    if j < -1:
        raise ValueError("densities start at j = -1")
    rec = _recursion_for(data, site)
    c = rec.c(site + 1, j + 2)
    if is_scalar(c):
        return normalize_scalar(Fraction(c) / (j + 2))
    return c / (j + 2)


def gamma_coefficients(R):
    """``c_j`` read off from the ``(2,1)`` entry ``gamma = sum c_j lam^{-j-1}``."""
    g = R.e21
    return [g.coefficient(-j - 1) for j in range(-g.lo)] if g.lo is not None else []


def assert_consistent(R):
    if not check_normalization(R):
        raise ConsistencyError("resolvent fails tr R = 1, det R = 0")
    return R
