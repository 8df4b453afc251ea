"""Rational functions of ``t`` (with ``x = t**2``) and a formal ``log x`` slot.

A :class:`RationalFunction` is kept as ``L(t) / D(t)`` where ``L`` is a
Laurent polynomial (sparse dict of exponents) and ``D`` is a monic
polynomial with nonzero constant term, coprime to ``L``.  Every quantity in
the genus expansion has a monomial denominator, so ``D = 1`` is the common
case and stays cheap; general denominators are still handled exactly.

:class:`XField` pairs two rational functions ``(f, g)`` standing for
``f + g*log(x)``.  Products producing ``log(x)**2`` are rejected.
"""
from fractions import Fraction

from .polyn import PolyN, is_scalar, normalize_scalar

__all__ = ["RationalFunction", "XField", "T"]


def _norm(c):
    return normalize_scalar(c) if isinstance(c, Fraction) else c


def _lmul(a, b):
    out = {}
    for i, x in a.items():
        for j, y in b.items():
            k = i + j
            out[k] = out.get(k, 0) + x * y
    return {k: _norm(c) for k, c in out.items() if c != 0}


def _ladd(a, b, sign=1):
    out = dict(a)
    for k, c in b.items():
        out[k] = out.get(k, 0) + sign * c
    return {k: _norm(c) for k, c in out.items() if c != 0}


def _to_poly(laurent):
    """Split a Laurent polynomial as ``t**m * P(t)`` with ``P(0) != 0``."""
    if not laurent:
        return 0, PolyN((), "t")
    m = min(laurent)
    return m, PolyN.from_dict({k - m: c for k, c in laurent.items()}, "t")


def _from_poly(p, shift=0):
    return {k + shift: c for k, c in enumerate(p.coeffs) if c != 0}


def _pdivmod(a, b):
    """Polynomial long division over the rationals."""
    a = [Fraction(c) for c in a.coeffs]
    b = b.coeffs
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = Fraction(b[-1])
    while len(a) >= len(b) and any(a):
        shift = len(a) - len(b)
        f = a[-1] / lead
        q[shift] = f
        for i, c in enumerate(b):
            a[i + shift] -= f * c
        while a and a[-1] == 0:
            a.pop()
    return PolyN(q, "t"), PolyN(a, "t")


def _pgcd(a, b):
    while b:
        a, b = b, _pdivmod(a, b)[1]
    lead = a.leading()
    return a / lead if lead else a


def _monic(p):
    lead = p.leading()
    return p / lead, lead


ONE_T = PolyN((1,), "t")


class RationalFunction:
    __slots__ = ("num", "den")

    def __init__(self, num=None, den=None):
        # num: {exponent: scalar}; den: PolyN in t or None for 1
        num = {k: _norm(c) for k, c in (num or {}).items() if c != 0}
        if den is None or den.degree == 0:
            if den is not None:
                c = den.coeffs[0]
                num = {k: _norm(Fraction(v) / c) for k, v in num.items()}
            self.num, self.den = num, ONE_T
            return
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        # move factors of t from the denominator into the Laurent exponent
        shift = 0
        while den.coeffs[0] == 0:
            den = den.divmod_exact_monomial(1)
            shift -= 1
        if shift:
            num = {k + shift: c for k, c in num.items()}
        if num and den.degree > 0:
            m, p = _to_poly(num)
            g = _pgcd(den, p)
            if g.degree > 0:
                p = _pdivmod(p, g)[0]
                den = _pdivmod(den, g)[0]
                num = _from_poly(p, m)
        den, lead = _monic(den)
        if lead != 1:
            num = {k: _norm(Fraction(c) / lead) for k, c in num.items()}
        if den.degree == 0:
            den = ONE_T
        self.num, self.den = num, den

    @classmethod
    def _fast(cls, num):
        r = object.__new__(cls)
        r.num, r.den = num, ONE_T
        return r

    @classmethod
    def monomial(cls, c, k=0):
        return cls._fast({k: _norm(c)} if c != 0 else {})

    @classmethod
    def from_scalar(cls, c):
        return cls.monomial(c, 0)

    @classmethod
    def from_polys(cls, num, den):
        """Build ``num(t)/den(t)`` from two ``PolyN`` in ``t``."""
        return cls(_from_poly(num), den)

    def is_laurent(self):
        return self.den.degree == 0

    def __bool__(self):
        return bool(self.num)

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if is_scalar(other):
            return RationalFunction.monomial(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den.degree == 0 and other.den.degree == 0:
            return RationalFunction._fast(_ladd(self.num, other.num))
        return RationalFunction(
            _ladd(_lmul(self.num, _from_poly(other.den)), _lmul(other.num, _from_poly(self.den))),
            self.den * other.den,
        )

    __radd__ = __add__

    def __neg__(self):
        r = object.__new__(RationalFunction)
        r.num, r.den = {k: -c for k, c in self.num.items()}, self.den
        return r

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
                return RationalFunction._fast({})
            r = object.__new__(RationalFunction)
            r.num, r.den = {k: _norm(c * other) for k, c in self.num.items()}, self.den
            return r
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den.degree == 0 and other.den.degree == 0:
            return RationalFunction._fast(_lmul(self.num, other.num))
        return RationalFunction(_lmul(self.num, other.num), self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of the zero rational function")
        if len(self.num) == 1 and self.den.degree == 0:
            (k, c), = self.num.items()
            return RationalFunction._fast({-k: _norm(Fraction(1) / c)})
        m, p = _to_poly(self.num)
        return RationalFunction({-m + k: c for k, c in _from_poly(self.den).items()}, p)

    def __truediv__(self, other):
        if is_scalar(other):
            return self * (Fraction(1) / other)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = RationalFunction.monomial(1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if is_scalar(other):
            if other == 0:
                return not self.num
            other = RationalFunction.monomial(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((frozenset(self.num.items()), self.den))

    # -- calculus and evaluation -----------------------------------------

    def derivative_t(self):
        dn = {k - 1: _norm(c * k) for k, c in self.num.items() if k != 0}
        if self.den.degree == 0:
            return RationalFunction._fast(dn)
        dd = _from_poly(self.den.derivative())
        d = _from_poly(self.den)
        top = _ladd(_lmul(dn, d), _lmul(self.num, dd), -1)
        return RationalFunction(top, self.den * self.den)

    def derivative(self):
        """Derivative in ``x = t**2``, i.e. ``(1/(2t)) d/dt``."""
        return self.derivative_t() * RationalFunction.monomial(Fraction(1, 2), -1)

    def __call__(self, t):
        top = sum(c * Fraction(t) ** k for k, c in self.num.items())
        bottom = self.den(t)
        if bottom == 0:
            raise ZeroDivisionError(f"pole at t = {t}")
        return normalize_scalar(Fraction(top) / bottom)

    def is_even(self):
        """True when the function depends on ``t`` only through ``x = t**2``."""
        return all(k % 2 == 0 for k in self.num) and self.den.parities() <= {0}

    def leading_term(self):
        """``(c, k)`` for the lowest-order monomial ``c t**k`` of a Laurent polynomial."""
        if self.den.degree:
            raise ValueError("leading term needs a monomial denominator")
        k = min(self.num)
        return self.num[k], k

    def __repr__(self):
        return f"RationalFunction({self})"

    def __str__(self):
        if not self.num:
            return "0"
        parts = []
        for k in sorted(self.num, reverse=True):
            c = self.num[k]
            parts.append(f"{c}" if k == 0 else f"{c}*t^{k}")
        s = " + ".join(parts)
        if self.den.degree:
            s = f"({s})/({self.den})"
        return s


T = RationalFunction.monomial(1, 1)


class XField:
    """Element ``f + g*log(x)`` with ``f, g`` rational functions of ``t``."""

    __slots__ = ("f", "g")

    def __init__(self, f=None, g=None):
        self.f = _lift_rf(f)
        self.g = _lift_rf(g)

    @classmethod
    def log_x(cls):
        return cls(0, 1)

    @classmethod
    def x(cls):
        return cls(RationalFunction.monomial(1, 2))

    @classmethod
    def t(cls):
        return cls(T)

    def has_log(self):
        return bool(self.g)

    def _coerce(self, other):
        if isinstance(other, XField):
            return other
        if is_scalar(other) or isinstance(other, RationalFunction):
            return XField(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return XField(self.f + other.f, self.g + other.g)

    __radd__ = __add__

    def __neg__(self):
        return XField(-self.f, -self.g)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return XField(self.f - other.f, self.g - other.g)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if is_scalar(other):
            return XField(self.f * other, self.g * other)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.g and other.g:
            raise ArithmeticError("log(x)^2 is outside the field")
        g = self.f * other.g if other.g else RationalFunction._fast({})
        if self.g:
            g = g + self.g * other.f
        return XField(self.f * other.f, g)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if is_scalar(other):
            return self * (Fraction(1) / other)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.g:
            raise ArithmeticError("division by an element carrying log(x)")
        inv = other.f.inverse()
        return XField(self.f * inv, self.g * inv)

    def __rtruediv__(self, other):
        return XField(other) / self

    def __eq__(self, other):
        if is_scalar(other) or isinstance(other, RationalFunction):
            return not self.g and self.f == other
        if not isinstance(other, XField):
            return NotImplemented
        return self.f == other.f and self.g == other.g

    def __hash__(self):
        return hash((self.f, self.g))

    def derivative(self):
        """``d/dx`` with ``d log(x)/dx = 1/x``."""
        f = self.f.derivative()
        if self.g:
            f = f + self.g * RationalFunction.monomial(1, -2)
        return XField(f, self.g.derivative())

    def at_t(self, t):
        """Evaluate at a rational ``t`` (``t = 1`` makes ``log x`` vanish)."""
        if self.g and t != 1:
            raise ValueError("log(x) has no exact value away from x = 1")
        return self.f(t)

    def __repr__(self):
        if self.g:
            return f"XField({self.f} + ({self.g})*log(x))"
        return f"XField({self.f})"


def _lift_rf(c):
    if c is None:
        return RationalFunction._fast({})
    if isinstance(c, RationalFunction):
        return c
    if is_scalar(c):
        return RationalFunction.monomial(c)
    raise TypeError(f"cannot use {c!r} as a rational function")
