"""Coefficient ring descriptors.

Three rings appear: exact scalars (``QQ``), univariate polynomials in a site
or size symbol (``PolyRing("n")``), and polynomials in indexed lattice
symbols (``SYM``).  Series and matrices carry their ring so that mixing
incompatible coefficients is caught instead of silently coerced.
"""
from dataclasses import dataclass

from ..errors import RingMismatchError
from .polyn import PolyN, is_scalar
from .sympoly import SymPoly

__all__ = ["Ring", "QQ", "SYM", "PolyRing", "check_same_ring"]


@dataclass(frozen=True)
class Ring:
    name: str
    var: str = ""

    @property
    def zero(self):
        if self.name == "poly":
            return PolyN((), self.var)
        if self.name == "sym":
            return SymPoly()
        return 0

    @property
    def one(self):
        if self.name == "poly":
            return PolyN((1,), self.var)
        if self.name == "sym":
            return SymPoly.constant(1)
        return 1

    def __call__(self, x):
        """Coerce a scalar or native element into this ring."""
        if self.name == "poly":
            if isinstance(x, PolyN):
                return x
            if is_scalar(x):
                return PolyN((x,), self.var)
        elif self.name == "sym":
            if isinstance(x, SymPoly):
                return x
            if is_scalar(x):
                return SymPoly.constant(x)
        elif is_scalar(x):
            return x
        raise RingMismatchError(f"cannot coerce {x!r} into {self}")

    def shift(self, x, k):
        """Site shift ``n -> n + k``; identity on scalars."""
        if k == 0 or is_scalar(x):
            return x
        return x.shift(k)

    def __str__(self):
        return f"Z[{self.var}]" if self.name == "poly" else {"qq": "Q", "sym": "Z[v,w]"}[self.name]


QQ = Ring("qq")
SYM = Ring("sym")


def PolyRing(var="N"):
    return Ring("poly", var)


def check_same_ring(a, b):
    if a != b:
        raise RingMismatchError(f"incompatible coefficient rings {a} and {b}")
