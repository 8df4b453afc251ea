"""Terminating Gauss hypergeometric sums and related binomial helpers.

Arguments may be integers, fractions or ``PolyN`` values, so the same code
evaluates at a fixed size and produces polynomials in a size symbol.
"""
from fractions import Fraction
from math import comb, factorial

from .algebra.polyn import PolyN, normalize_scalar

__all__ = ["double_factorial", "binom_poly", "hyp2f1_terminating", "hyp_A", "hyp_B", "as_symbol"]


def double_factorial(n):
    """``n!!`` for ``n >= -1`` with the convention ``(-1)!! = 0!! = 1``."""
    if n < -1:
        raise ValueError("double factorial needs n >= -1")
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def as_symbol(n):
    """Turn a variable name into the generator ``PolyN``; pass other values through."""
    return PolyN.gen(n) if isinstance(n, str) else n


def _clean(x):
    if isinstance(x, Fraction):
        return normalize_scalar(x)
    return x


def binom_poly(top, k):
    """Generalized binomial ``top (top-1) ... (top-k+1) / k!`` for any ring element."""
    if k < 0:
        return 0
    acc = 1
    for m in range(k):
        acc = acc * (top - m)
    if isinstance(acc, PolyN):
        return acc / factorial(k)
    return _clean(Fraction(acc, factorial(k)))


def _poch(a, k):
    acc = 1
    for m in range(k):
        acc = acc * (a + m)
    return acc


def hyp2f1_terminating(a, b, c, z):
    """``2F1(a, b; c; z)`` where ``a`` is a non-positive integer.

    ``b`` and ``z`` may be ring elements; ``c`` must be a positive integer or
    fraction so that no denominator vanishes.
    """
    if not isinstance(a, int) or a > 0:
        raise ValueError("the first upper parameter must be a non-positive integer")
    total = 0
    for k in range(-a + 1):
        coef = Fraction(_poch(a, k)) / (_poch(c, k) * factorial(k))
        term = _poch(b, k) * (z ** k)
        total = total + term * _clean(coef)
    return _clean(total)


def hyp_A(n, j):
    """``A_{n,j} = (1/n) sum_i 2^i C(j,i) C(n,i+1)`` as a value or polynomial in ``n``.

    The factor ``1/n`` cancels term by term since ``C(n,i+1)/n`` equals
    ``(n-1)...(n-i)/(i+1)!``, so ``n = 0`` is allowed.
    """
    n = as_symbol(n)
    total = 0
    for i in range(j + 1):
        falling = 1
        for m in range(1, i + 1):
            falling = falling * (n - m)
        coef = Fraction(2 ** i * comb(j, i), factorial(i + 1))
        total = total + falling * _clean(coef)
    return _clean(total)


def hyp_B(n, j):
    """``B_{n,j} = sum_i 2^i C(j,i) C(n-1,i)`` as a value or polynomial in ``n``."""
    n = as_symbol(n)
    total = 0
    for i in range(j + 1):
        total = total + binom_poly(n - 1, i) * (2 ** i * comb(j, i))
    return _clean(total)
