from fractions import Fraction
from math import comb

import pytest

from gue_resolvent.algebra import PolyN
from gue_resolvent.hypergeometric import binom_poly, double_factorial, hyp2f1_terminating, hyp_A, hyp_B


def test_double_factorial():
    assert [double_factorial(n) for n in range(-1, 8)] == [1, 1, 1, 2, 3, 8, 15, 48, 105]
    with pytest.raises(ValueError):
        double_factorial(-2)


def test_binom_poly_matches_comb():
    n = PolyN.gen("n")
    assert binom_poly(n, 0) == 1
    for k in range(1, 6):
        p = binom_poly(n, k)
        assert [p(m) for m in range(10)] == [comb(m, k) for m in range(10)]
    assert binom_poly(Fraction(1, 2), 2) == Fraction(-1, 8)


@pytest.mark.parametrize("m", range(6))
def test_chu_vandermonde(m):
    # 2F1(-m, b; c; 1) = (c - b)_m / (c)_m
    def poch(a, k):
        out = Fraction(1)
        for i in range(k):
            out *= a + i
        return out

    b, c = Fraction(3, 2), 5
    assert hyp2f1_terminating(-m, b, c, 1) == poch(c - b, m) / poch(c, m)


def test_hyp2f1_rejects_non_terminating():
    with pytest.raises(ValueError):
        hyp2f1_terminating(1, 2, 3, Fraction(1, 2))


@pytest.mark.parametrize("j", range(7))
def test_A_and_B_are_hypergeometric(j):
    n = PolyN.gen("n")
    assert hyp_A(n, j) == hyp2f1_terminating(-j, 1 - n, 2, 2)
    assert hyp_B(n, j) == hyp2f1_terminating(-j, 1 - n, 1, 2)


@pytest.mark.parametrize("j", range(7))
def test_boundary_values(j):
    assert hyp_A(1, j) == 1
    assert hyp_B(1, j) == 1
    assert hyp_B(0, j) == (-1) ** j
    assert hyp_A("n", 0) == 1 and hyp_B("n", 0) == 1


def test_n_times_A_is_integer_valued():
    A = hyp_A("n", 2)
    assert A == PolyN.from_dict({2: Fraction(2, 3), 0: Fraction(1, 3)}, "n")
    assert A(3) == Fraction(19, 3)
    assert all(Fraction((PolyN.gen("n") * A)(m)).denominator == 1 for m in range(12))
