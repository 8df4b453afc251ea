"""Dense univariate polynomials with exact integer/rational coefficients."""
from fractions import Fraction
from math import comb

from ..errors import RingMismatchError

__all__ = ["PolyN", "normalize_scalar", "is_scalar"]


def is_scalar(x):
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def normalize_scalar(c):
    """Return ``c`` as an int when it is integral, else as a reduced Fraction."""
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    raise TypeError(f"not an exact scalar: {c!r}")


def _trim(coeffs):
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(normalize_scalar(c) for c in coeffs[:n])


class PolyN:
    """Polynomial in a single named variable (``N`` by default).

    Coefficients are stored densely, lowest degree first, with trailing zeros
    removed, so the zero polynomial has an empty coefficient tuple and degree -1.
    Instances are immutable and hashable.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=(), var="N"):
        object.__setattr__(self, "coeffs", _trim(list(coeffs)))
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):
        raise AttributeError("PolyN is immutable")

    @classmethod
    def _raw(cls, coeffs, var):
        # coeffs already trimmed and normalized
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", coeffs)
        object.__setattr__(p, "var", var)
        return p

    @classmethod
    def constant(cls, c, var="N"):
        return cls((c,), var)

    @classmethod
    def gen(cls, var="N"):
        return cls._raw((0, 1), var)

    @classmethod
    def monomial(cls, degree, c=1, var="N"):
        return cls([0] * degree + [c], var)

    @classmethod
    def from_dict(cls, terms, var="N"):
        terms = {int(k): v for k, v in terms.items()}
        if not terms:
            return cls((), var)
        if min(terms) < 0:
            raise ValueError("negative exponent in polynomial")
        dense = [0] * (max(terms) + 1)
        for k, v in terms.items():
            dense[k] += v
        return cls(dense, var)

    def to_dict(self):
        return {k: c for k, c in enumerate(self.coeffs) if c != 0}

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def coeff(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_integral(self):
        return all(isinstance(c, int) for c in self.coeffs)

    # -- coercion ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, PolyN):
            if other.var != self.var and other.coeffs and self.coeffs:
                if other.degree > 0 or self.degree > 0:
                    raise RingMismatchError(
                        f"polynomials in {self.var!r} and {other.var!r} do not mix"
                    )
            return other
        if is_scalar(other):
            return PolyN._raw(_trim([other]), self.var)
        return NotImplemented

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return PolyN._raw(_trim(out), self.var)

    __radd__ = __add__

    def __neg__(self):
        return PolyN._raw(tuple(-c for c in self.coeffs), self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if is_scalar(other):
            if other == 0:
                return PolyN._raw((), self.var)
            return PolyN._raw(tuple(normalize_scalar(c * other) for c in self.coeffs), self.var)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return PolyN._raw((), self.var)
        if len(a) < len(b):
            a, b = b, a
        out = [0] * (len(a) + len(b) - 1)
        for j, cb in enumerate(b):
            if cb:
                for i, ca in enumerate(a):
                    out[i + j] += ca * cb
        return PolyN._raw(_trim(out), self.var)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers")
        result = PolyN._raw((1,), self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other):
        if is_scalar(other):
            return PolyN([Fraction(c) / other for c in self.coeffs], self.var)
        return NotImplemented

    def divmod_exact_monomial(self, k):
        """Divide by ``var**k``; the low coefficients must vanish."""
        if any(self.coeffs[:k]):
            raise ArithmeticError(f"{self} is not divisible by {self.var}^{k}")
        return PolyN._raw(self.coeffs[k:], self.var)

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, PolyN):
            if self.coeffs != other.coeffs:
                return False
            return self.var == other.var or len(self.coeffs) <= 1
        if is_scalar(other):
            return self.coeffs == _trim([other])
        return NotImplemented

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else 0)
        return hash((self.var, self.coeffs))

    # -- evaluation and substitution -------------------------------------

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return normalize_scalar(acc) if is_scalar(acc) else acc

    def shift(self, k):
        """Return ``p(var + k)``; a ring homomorphism (Taylor shift)."""
        if k == 0 or len(self.coeffs) <= 1:
            return self
        n = len(self.coeffs)
        out = [0] * n
        for d, c in enumerate(self.coeffs):
            if c:
                for i in range(d + 1):
                    out[i] += c * comb(d, i) * k ** (d - i)
        return PolyN._raw(_trim(out), self.var)

    def derivative(self):
        return PolyN._raw(_trim([k * c for k, c in enumerate(self.coeffs)][1:]), self.var)

    def with_var(self, var):
        return PolyN._raw(self.coeffs, var)

    def parities(self):
        """Return the set of parities of the degrees that carry nonzero terms."""
        return {k % 2 for k, c in enumerate(self.coeffs) if c}

    # -- display ----------------------------------------------------------

    def __repr__(self):
        return f"PolyN({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                mono = ""
            elif k == 1:
                mono = self.var
            else:
                mono = f"{self.var}^{k}"
            if mono and c == 1:
                term = mono
            elif mono and c == -1:
                term = "-" + mono
            elif mono:
                term = f"{c}*{mono}"
            else:
                term = str(c)
            parts.append(term)
        s = " + ".join(parts)
        return s.replace("+ -", "- ")
