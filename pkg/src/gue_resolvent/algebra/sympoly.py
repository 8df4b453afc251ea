"""Sparse multivariate polynomials over site-indexed symbols ``v_i``, ``w_i``.

A monomial is a sorted tuple of ``((name, site), exponent)`` pairs; the
empty tuple is the constant monomial.  This is the ambient ring of the
matrix resolvent for generic lattice data.
"""
from fractions import Fraction

from .polyn import is_scalar, normalize_scalar

__all__ = ["SymPoly", "v", "w"]


def _mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for s, e in m2:
        d[s] = d.get(s, 0) + e
    return tuple(sorted(d.items()))


class SymPoly:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for m, c in (terms or {}).items():
            if c != 0:
                clean[m] = normalize_scalar(c)
        self.terms = clean

    @classmethod
    def symbol(cls, name, site):
        return cls({(((name, site), 1),): 1})

    @classmethod
    def constant(cls, c):
        return cls({(): c})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _coerce(self, other):
        if isinstance(other, SymPoly):
            return other
        if is_scalar(other):
            return SymPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return SymPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return SymPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if is_scalar(other):
            return SymPoly({m: c * other for m, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return SymPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        result = SymPoly.constant(1)
        for _ in range(k):
            result = result * self
        return result

    def __truediv__(self, other):
        if is_scalar(other):
            return SymPoly({m: Fraction(c) / other for m, c in self.terms.items()})
        return NotImplemented

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def shift(self, k):
        """Relabel every site ``i -> i + k``; a ring homomorphism."""
        out = {}
        for m, c in self.terms.items():
            out[tuple(((name, site + k), e) for (name, site), e in m)] = c
        return SymPoly(out)

    def sites(self):
        return {site for m in self.terms for (_, site), _ in m}

    def evaluate(self, values):
        """Substitute ``values[(name, site)]`` for every symbol."""
        total = 0
        for m, c in self.terms.items():
            term = c
            for sym, e in m:
                term = term * values[sym] ** e
            total = total + term
        return total

    def __repr__(self):
        return f"SymPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items()):
            mono = "*".join(
                f"{name}{site}" + (f"^{e}" if e != 1 else "") for (name, site), e in m
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)


def v(site):
    return SymPoly.symbol("v", site)


def w(site):
    return SymPoly.symbol("w", site)
