"""Brute-force GUE moments from Wick pairings of half-edges.

Each ``tr M^i`` is a star with ``i`` half-edges arranged cyclically; the
rotation ``gamma`` sends a half-edge to the next one around its star.  A
perfect matching ``pi`` of half-edges is a ribbon graph whose faces are the
cycles of ``gamma o pi``, and it contributes ``N**faces`` to the moment.

The enumeration pairs the lowest unpaired half-edge with every candidate.
Faces are tracked incrementally by gluing open paths of ``gamma o pi``, and
star connectivity by a union-find with rollback, so one pass yields both the
full moment and its connected part.

Stars that have no paired half-edge yet are interchangeable up to rotation
(and up to relabelling among stars of equal valence), so by default only one
representative partner per class of such stars is explored and weighted by
the class size.  ``symmetry=False`` walks every matching.
"""
from functools import lru_cache
from itertools import combinations
from math import factorial, prod

from .algebra.polyn import PolyN
from .errors import BudgetExceededError, ConsistencyError

__all__ = [
    "DEFAULT_BUDGET",
    "matching_count",
    "enumerate_pairings",
    "moment",
    "connected_moment",
    "set_partitions",
]

DEFAULT_BUDGET = 16


def matching_count(total):
    """Number of perfect matchings of ``total`` half-edges, ``(total-1)!!``."""
    if total % 2:
        return 0
    out = 1
    for m in range(total - 1, 0, -2):
        out *= m
    return out


def _check_budget(exps, budget):
    total = sum(exps)
    if budget is not None and total > budget:
        raise BudgetExceededError(matching_count(total), matching_count(budget))


class _Stars:
    """Half-edge bookkeeping for a fixed list of star valences."""

    def __init__(self, exps):
        self.exps = list(exps)
        self.vertex = []
        self.gamma = []
        base = 0
        for v, i in enumerate(self.exps):
            for p in range(i):
                self.vertex.append(v)
                self.gamma.append(base + (p + 1) % i)
            base += i
        self.first = []
        acc = 0
        for i in self.exps:
            self.first.append(acc)
            acc += i
        self.size = acc


def enumerate_pairings(exps, symmetry=True, budget=DEFAULT_BUDGET):
    """Face-count histograms ``(full, connected)`` as dicts ``{faces: weight}``.

    Every connected matching is checked against Euler's formula
    ``faces = 2 - 2g - k + E`` with an integer ``g >= 0``.
    """
    exps = [int(i) for i in exps]
    if any(i < 0 for i in exps):
        raise ValueError("valences must be non-negative")
    exps = [i for i in exps if i]
    _check_budget(exps, budget)
    total = sum(exps)
    if total % 2:
        return {}, {}
    if not exps:
        return {0: 1}, {}
    st = _Stars(exps)
    n, k, E = st.size, len(exps), total // 2
    vertex, gamma, first = st.vertex, st.gamma, st.first
    paired = [False] * n
    touched = [0] * k
    # open paths of gamma o pi: start_of[end], end_of[start]
    start_of = list(range(n))
    end_of = list(range(n))
    parent = list(range(k))
    size = [1] * k
    state = {"faces": 0, "comps": k}
    full, conn = {}, {}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    def link(x, y, log):
        s = start_of[x]
        if s == y:
            state["faces"] += 1
            log.append(None)
        else:
            e = end_of[y]
            log.append((s, end_of[s], e, start_of[e]))
            end_of[s] = e
            start_of[e] = s

    def unlink(log):
        entry = log.pop()
        if entry is None:
            state["faces"] -= 1
        else:
            s, old_end, e, old_start = entry
            end_of[s] = old_end
            start_of[e] = old_start

    def candidates(h):
        vh = vertex[h]
        out = []
        classes = {}
        for h2 in range(h + 1, n):
            if paired[h2]:
                continue
            v2 = vertex[h2]
            if v2 == vh or touched[v2]:
                out.append((h2, 1))
            elif h2 == first[v2]:
                val = exps[v2]
                if val in classes:
                    classes[val][1] += 1
                else:
                    classes[val] = [h2, 1]
        if symmetry:
            for val, (h2, count) in classes.items():
                out.append((h2, val * count))
        else:
            for h2 in range(h + 1, n):
                v2 = vertex[h2]
                if not paired[h2] and v2 != vh and not touched[v2]:
                    out.append((h2, 1))
        return out

    def leaf(weight):
        F = state["faces"]
        full[F] = full.get(F, 0) + weight
        if state["comps"] == 1:
            twice_g = 2 - k + E - F
            if twice_g < 0 or twice_g % 2:
                raise ConsistencyError(f"matching with {F} faces violates Euler's formula")
            conn[F] = conn.get(F, 0) + weight

    def dfs(lowest, weight):
        h = lowest
        while h < n and paired[h]:
            h += 1
        if h == n:
            leaf(weight)
            return
        a = h
        for b, w in candidates(a):
            va, vb = vertex[a], vertex[b]
            paired[a] = paired[b] = True
            touched[va] += 1
            touched[vb] += 1
            log = []
            link(a, gamma[b], log)
            link(b, gamma[a], log)
            ra, rb = find(va), find(vb)
            merged = None
            if ra != rb:
                if size[ra] < size[rb]:
                    ra, rb = rb, ra
                parent[rb] = ra
                size[ra] += size[rb]
                state["comps"] -= 1
                merged = (ra, rb)
            dfs(a + 1, weight * w)
            if merged:
                ra, rb = merged
                parent[rb] = rb
                size[ra] -= size[rb]
                state["comps"] += 1
            unlink(log)
            unlink(log)
            touched[va] -= 1
            touched[vb] -= 1
            paired[a] = paired[b] = False

    dfs(0, 1)
    if sum(full.values()) != matching_count(total):
        raise ConsistencyError("matching weights do not add up to (2E-1)!!")
    return full, conn


def _poly(hist):
    return PolyN.from_dict(hist, "N")


@lru_cache(maxsize=None)
def _histograms(exps, symmetry):
    full, conn = enumerate_pairings(exps, symmetry=symmetry, budget=None)
    return _poly(full), _poly(conn)


def moment(exps, budget=DEFAULT_BUDGET, symmetry=True):
    """Full moment ``<tr M^{i_1} ... tr M^{i_k}>`` as a polynomial in ``N``."""
    exps = tuple(sorted(int(i) for i in exps))
    _check_budget(exps, budget)
    if sum(exps) % 2:
        return PolyN((), "N")
    return _histograms(exps, symmetry)[0]


def set_partitions(items):
    """All set partitions of a list, as lists of blocks."""
    items = list(items)
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[head]] + part
        for idx in range(len(part)):
            yield part[:idx] + [[head] + part[idx]] + part[idx + 1 :]


@lru_cache(maxsize=None)
def _cumulant(exps, symmetry):
    # m(S) = sum over blocks B containing the first element of kappa(B) m(S \ B)
    if not exps:
        return PolyN((), "N")
    head, rest = exps[0], exps[1:]
    out = moment(exps, budget=None, symmetry=symmetry)
    idx = range(len(rest))
    for r in range(len(rest)):
        for chosen in combinations(idx, r):
            block = tuple(sorted((head,) + tuple(rest[c] for c in chosen)))
            other = tuple(rest[c] for c in idx if c not in chosen)
            out = out - _cumulant(block, symmetry) * moment(other, budget=None, symmetry=symmetry)
    return out


def connected_moment(exps, method="filter", budget=DEFAULT_BUDGET, symmetry=True):
    """Connected correlator ``<tr M^{i_1} ... tr M^{i_k}>_c``.

    ``method="filter"`` keeps only matchings connecting all stars,
    ``"cumulant"`` inverts moments recursively over blocks containing the
    first star, and ``"partition"`` sums the set-partition Moebius formula.
    """
    exps = tuple(sorted(int(i) for i in exps))
    if not exps:
        raise ValueError("at least one exponent is required")
    _check_budget(exps, budget)
    if sum(exps) % 2:
        return PolyN((), "N")
    if method == "filter":
        return _histograms(exps, symmetry)[1]
    if method == "cumulant":
        return _cumulant(exps, symmetry)
    if method == "partition":
        out = PolyN((), "N")
        for part in set_partitions(range(len(exps))):
            m = len(part)
            term = prod(
                (moment([exps[i] for i in block], budget=None, symmetry=symmetry) for block in part),
                start=PolyN.constant(1, "N"),
            )
            coef = factorial(m - 1) * (-1) ** (m - 1)
            out = out + term * coef
        return out
    raise ValueError(f"unknown method {method!r}")
