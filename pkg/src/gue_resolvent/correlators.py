"""Connected GUE correlators as polynomials in the matrix size ``N``.

Conventions: ``<tr M^{i_1} ... tr M^{i_k}>_c`` is the coefficient of
``lam_1^{-(i_1+1)} ... lam_k^{-(i_k+1)}`` in the corresponding generating
series.

Every series pipeline here is written once for a generic size ``n`` that is
either the symbol ``N`` (coefficients are ``PolyN``) or an integer.  The
default ``backend="interp"`` runs the pipeline at a few integer sizes and
interpolates, using the known degree bound and parity of connected
correlators plus a spare point as a check.  ``backend="poly"`` runs the
pipeline directly over ``Z[N]``.
"""
from functools import lru_cache
from itertools import permutations, product
from math import comb

from .algebra.laurent import ResolventMatrix
from .algebra.multiseries import MultiSeries, biseries_divide_by_square_diff, geometric_kernel
from .algebra.polyn import PolyN
from .errors import ConsistencyError
from .hypergeometric import double_factorial, hyp2f1_terminating
from .interp import reconstruct
from .resolvent import build_gue_resolvent, pair_trace_series

__all__ = [
    "one_point",
    "two_point",
    "two_point_closed_form",
    "k_point",
    "rk_family",
    "mixed_correlator",
    "general_mixed",
    "correlator",
    "degree_shape",
]

BACKENDS = ("interp", "poly")
NSYM = PolyN.gen("N")


def _validate(exps):
    exps = [int(e) for e in exps]
    if not exps:
        raise ValueError("at least one exponent is required")
    if any(e < 1 for e in exps):
        raise ValueError("exponents must be positive integers")
    return exps


def degree_shape(exps):
    """``(d, parity)`` where ``d = 2 - k + sum/2`` bounds the degree in ``N``.

    A connected ribbon graph has at least one face, so ``d < 1`` forces the
    correlator to vanish; ``d = -1`` is returned in that case.
    """
    total = sum(exps)
    d = 2 - len(exps) + total // 2
    if total % 2 or d < 1:
        return -1, None
    return d, d % 2


def _finish(fn, exps, N, backend):
    if backend not in BACKENDS:
        raise ValueError(f"unknown backend {backend!r}")
    d, parity = degree_shape(exps)
    if sum(exps) % 2:
        poly = PolyN((), "N")
    elif backend == "poly":
        val = fn(NSYM)
        poly = val if isinstance(val, PolyN) else PolyN((val,), "N")
        if poly.degree > d or (poly and poly.parities() - {parity}):
            raise ConsistencyError(f"{poly} violates the degree/parity bound for {tuple(exps)}")
    else:
        poly = reconstruct(fn, d, parity)
    if N is not None:
        return poly(N)
    return poly


@lru_cache(maxsize=256)
def _gue(n, depth):
    return build_gue_resolvent(n, depth)


# -- one and two points -------------------------------------------------------


def one_point(i, N=None, backend="interp"):
    """``<tr M^i>_c`` from the hypergeometric closed form."""
    (i,) = _validate([i])
    if i % 2:
        poly = PolyN((), "N")
    else:
        j = i // 2
        bracket = hyp2f1_terminating(-j, -NSYM, 2, 2)
        if j:
            bracket = bracket - hyp2f1_terminating(1 - j, 1 - NSYM, 3, 2) * j
        poly = NSYM * bracket * double_factorial(2 * j - 1)
    return poly(N) if N is not None else poly


def _two_point_series(n, i, j):
    if i > j:
        i, j = j, i
    depth = i + j
    R = _gue(n, depth)
    S = pair_trace_series(R, R) - MultiSeries.constant(R.ring, 2, R.ring.one)
    T = biseries_divide_by_square_diff(S, depth=depth, rows=i + 1, cols=j + 1)
    return T[(-i - 1, -j - 1)]


def two_point(i, j, N=None, backend="interp"):
    """``<tr M^i tr M^j>_c`` from ``(tr R(l1) R(l2) - 1) / (l1 - l2)^2``."""
    i, j = _validate([i, j])
    return _finish(lambda n: _two_point_series(n, i, j), [i, j], N, backend)


def _F(a, b, c):
    return hyp2f1_terminating(a, b, c, 2)


def two_point_closed_form(i, j, N=None):
    """Independent path through the double-hypergeometric two-point formula."""
    i, j = _validate([i, j])
    a, b = i - 1, j - 1
    if (a + b) % 2:
        poly = PolyN((), "N")
    else:
        n = NSYM
        df = double_factorial
        poly = n * _F(-(a + b) // 2, 1 - n, 2) * (df(a + b + 1) * (1 + b))
        for jj in range(b % 2, b - 1, 2):
            term = _F(-(a + jj) // 2, 1 - n, 2) * _F(-(b - jj - 2) // 2, 1 - n, 2)
            poly = poly + n * n * term * (2 * df(a + jj + 1) * df(b - jj - 1) * (1 + jj))
        for jj in range((b - 1) % 2, b, 2):
            p, q = -(a + 1 + jj) // 2, -(b - jj - 1) // 2
            term = _F(p, -n, 1) * _F(q, 1 - n, 1) + _F(q, -n, 1) * _F(p, 1 - n, 1)
            poly = poly - n * term * (df(a + jj) * df(b - jj - 2) * (1 + jj))
        poly = poly if isinstance(poly, PolyN) else PolyN((poly,), "N")
    return poly(N) if N is not None else poly


# -- k points via the multi-variable expansion --------------------------------


def _cycle_edges(cycle):
    return [(cycle[t], cycle[(t + 1) % len(cycle)]) for t in range(len(cycle))]


def _window_budget(k, edges, L):
    """Raise budgets ``G`` and geometric cut-offs for one denominator cycle.

    Expanding ``1/(lam_a - lam_b)`` with ``a < b`` lowers ``lam_a`` by
    ``r + 1`` and raises ``lam_b`` by ``r``.  Numerators only carry
    non-positive exponents, so ``r + 1 <= G_a - L_a`` and ``G_b`` is the sum of
    these cut-offs over the edges raising ``b``.
    """
    pairs = [(min(x, y), max(x, y)) for x, y in edges]
    G = [0] * k
    rmax = {}
    for m in range(k):
        for idx, (a, b) in enumerate(pairs):
            if b == m:
                rmax[idx] = G[a] - L[a] - 1
                G[m] += rmax[idx]
    return G, rmax


def _denominator(ring, k, edges, G, rmax, lo):
    den = MultiSeries.constant(ring, k, ring.one, lo=lo)
    for idx, (x, y) in enumerate(edges):
        if x < y:
            den = den * geometric_kernel(ring, k, x, y, rmax[idx], lo=lo)
        else:
            den = den * (-geometric_kernel(ring, k, y, x, rmax[idx], lo=lo))
    return den


def _k_point_series(n, exps, method, slack, top_slack):
    k = len(exps)
    L = [-(e + 1 + slack) for e in exps]
    U = [top_slack] * k
    if method == "ad":
        tail = (k - 2, k - 1)
        cycles = [tuple(s) + tail for s in permutations(range(k - 2))]
    elif method == "sym":
        cycles = [(0,) + tuple(s) for s in permutations(range(1, k))]
    else:
        raise ValueError(f"unknown k-point method {method!r}")
    plans = []
    need = [0] * k
    for cyc in cycles:
        edges = _cycle_edges(cyc)
        G, rmax = _window_budget(k, edges, L)
        plans.append((cyc, edges, G, rmax))
        for m in range(k):
            need[m] = max(need[m], G[m] - L[m])
    base = [_gue(n, max(need[m], 1)) for m in range(k)]
    ring = base[0].ring
    total = None
    for cyc, edges, G, rmax in plans:
        # numerator entries only carry exponents <= 0, so once the kernels
        # are multiplied in first, every partial product can be cut at L
        full = [L[m] - G[m] for m in range(k)]
        den = _denominator(ring, k, edges, G, rmax, full).with_window(lo=L)
        mats = [
            ResolventMatrix(*(MultiSeries.embed(x, m, k, lo=full) for x in base[m].entries()))
            for m in range(k)
        ]
        first = mats[k - 2] if method == "ad" else mats[cyc[0]]
        acc = ResolventMatrix(*(den * x for x in first.entries()))
        if method == "ad":
            for s in reversed(cyc[: k - 2]):
                acc = mats[s] * acc - acc * mats[s]
            term = (mats[k - 1] * acc).trace()
        else:
            for s in cyc[1:]:
                acc = acc * mats[s]
            term = acc.trace()
        total = term if total is None else total + term
    total = -total
    for e, c in total.terms.items():
        if any(x >= -1 for x in e):
            raise ConsistencyError(f"uncancelled term at exponent {e} in the k-point expansion")
    target = tuple(-(e + 1) for e in exps)
    restricted = total.with_window(hi=U)
    return restricted[target]


def k_point(exps, N=None, method="ad", slack=2, top_slack=2, backend="interp", reorder=True):
    """``<tr M^{i_1} ... tr M^{i_k}>_c`` for ``k >= 3`` by the permutation formulas.

    ``method="ad"`` sums ``(k-2)!`` nested commutator terms, ``method="sym"``
    the ``(k-1)!`` cyclic classes of the full symmetric sum.  The expansion
    region is ``|lam_1| > ... > |lam_k|``; with ``reorder`` the variables
    are assigned in increasing exponent order, which keeps windows small.
    """
    exps = _validate(exps)
    if len(exps) < 3:
        raise ValueError("k_point needs at least three exponents")
    order = sorted(exps) if reorder else list(exps)
    return _finish(lambda n: _k_point_series(n, order, method, slack, top_slack), exps, N, backend)


# -- the R^b family -----------------------------------------------------------


def _plus(R, b):
    """``(lam^b R)_+``."""
    return R.shift_exponent(b).plus()


def _bracket(P, A):
    return P * A - A * P


def rk_family(b, M, n="N", depth=None):
    """``R^b_0 .. R^b_M`` with ``R^b_0`` the GUE resolvent at site ``n``.

    ``R^b_m = sum_i C(m-1, i) [(lam^b R^b_{m-1-i})_+, R^b_i]``.  Each member
    carries its own known depth; ``depth`` is the depth of ``R^b_0``
    (default ``4 + M*b``).
    """
    if isinstance(n, str):
        n = PolyN.gen(n)
    if depth is None:
        depth = 4 + M * b
    fam = [_gue(n, depth)]
    for m in range(1, M + 1):
        acc = None
        for i in range(m):
            term = _bracket(_plus(fam[m - 1 - i], b), fam[i]).scale(comb(m - 1, i))
            acc = term if acc is None else acc + term
        fam.append(acc)
    return fam


def _pair_quotient(n, pairs, i, j, subtract_one):
    """Coefficient ``(i, j)`` of ``(sum_w w * tr A(l1) B(l2) [- 1]) / (l1 - l2)^2``."""
    swap = i > j
    if swap:
        i, j = j, i
    depth = i + j
    S = None
    for weight, A, B in pairs:
        if swap:
            A, B = B, A
        term = pair_trace_series(A, B)
        if weight != 1:
            term = term.scale(weight)
        S = term if S is None else S + term
    ring = S.ring
    if subtract_one:
        S = S - MultiSeries.constant(ring, 2, ring.one)
    T = biseries_divide_by_square_diff(S, depth=depth, rows=i + 1, cols=j + 1)
    return T[(-i - 1, -j - 1)]


def _mixed_series(n, b, m, i, j):
    target = i + j
    # depth demand: R_q used as the left factor of a bracket for R_m' loses
    # at most b + top(R_{m'-1-q}) <= b + (m'-1-q) b of depth
    demand = [target] * (m + 1)
    for mm in range(m, 0, -1):
        for q in range(mm):
            demand[q] = max(demand[q], demand[mm] + b * (mm - q))
            demand[mm - 1 - q] = max(demand[mm - 1 - q], b)
    fam = [_gue(n, demand[0])]
    for mm in range(1, m + 1):
        acc = None
        for q in range(mm):
            term = _bracket(_plus(fam[mm - 1 - q], b), fam[q]).scale(comb(mm - 1, q))
            acc = term if acc is None else acc + term
        fam.append(acc.truncate(-demand[mm]))
    pairs = [(comb(m, q), fam[q], fam[m - q]) for q in range(m + 1)]
    return _pair_quotient(n, pairs, i, j, subtract_one=(m == 0))


def mixed_correlator(b, m, i, j, N=None, backend="interp"):
    """``<(tr M^b)^m tr M^i tr M^j>_c`` through the ``R^b_m`` family."""
    _validate([b, i, j])
    if m < 0:
        raise ValueError("m must be non-negative")
    exps = [b] * m + [i, j]
    return _finish(lambda n: _mixed_series(n, b, m, i, j), exps, N, backend)


def _submultisets(counts):
    for sub in product(*(range(c + 1) for c in counts)):
        mult = 1
        for c, s in zip(counts, sub):
            mult *= comb(c, s)
        yield sub, tuple(c - s for c, s in zip(counts, sub)), mult


def _general_series(n, blist, i, j):
    vals = sorted(set(blist))
    full = tuple(blist.count(v) for v in vals)
    target = i + j

    def first(K):
        for idx, c in enumerate(K):
            if c:
                return idx
        return None

    def top_bound(K):
        return sum(c * v for c, v in zip(K, vals))

    def reduced(K, idx):
        return tuple(c - (1 if t == idx else 0) for t, c in enumerate(K))

    # depth demands, propagated from larger to smaller multisets
    demand = {}
    for sub, _, _ in _submultisets(full):
        demand[sub] = target
    for K in sorted(demand, key=sum, reverse=True):
        idx = first(K)
        if idx is None:
            continue
        bk = vals[idx]
        for I, J, _ in _submultisets(reduced(K, idx)):
            demand[I] = max(demand[I], demand[K] + bk + top_bound(J))
            demand[J] = max(demand[J], bk)
    fam = {}
    for K in sorted(demand, key=sum):
        idx = first(K)
        if idx is None:
            fam[K] = _gue(n, demand[K])
            continue
        bk = vals[idx]
        acc = None
        for I, J, mult in _submultisets(reduced(K, idx)):
            term = _bracket(_plus(fam[J], bk), fam[I])
            if mult != 1:
                term = term.scale(mult)
            acc = term if acc is None else acc + term
        fam[K] = acc.truncate(-demand[K])
    pairs = [(mult, fam[I], fam[J]) for I, J, mult in _submultisets(full)]
    return _pair_quotient(n, pairs, i, j, subtract_one=not blist)


def general_mixed(blist, i, j, N=None, backend="interp"):
    """``<tr M^{b_1} ... tr M^{b_m} tr M^i tr M^j>_c`` by subset splitting."""
    blist = sorted(_validate(blist)) if blist else []
    i, j = _validate([i, j])
    exps = list(blist) + [i, j]
    return _finish(lambda n: _general_series(n, blist, i, j), exps, N, backend)


def correlator(exps, N=None, backend="interp"):
    """Connected correlator for any exponent list, choosing the cheapest path."""
    exps = sorted(_validate(exps))
    if sum(exps) % 2:
        return PolyN((), "N") if N is None else 0
    if len(exps) == 1:
        return one_point(exps[0], N)
    if len(exps) == 2:
        return two_point(exps[0], exps[1], N, backend)
    *rest, i, j = exps
    return general_mixed(rest, i, j, N, backend)
