from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gue_resolvent.algebra import (
    QQ,
    SYM,
    LaurentSeries,
    MultiSeries,
    PolyN,
    PolyRing,
    PowerSeries,
    RationalFunction,
    ResolventMatrix,
    SymPoly,
    XField,
    biseries_divide_by_square_diff,
    series_compose,
    square_diff,
)
from gue_resolvent.algebra.sympoly import v, w
from gue_resolvent.errors import NotDivisibleError, RingMismatchError, TruncationError

small = st.integers(-6, 6)
fractions = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 5))
polys = st.lists(small, max_size=6).map(lambda cs: PolyN(cs, "n"))


@st.composite
def sympolys(draw):
    out = SymPoly.constant(draw(small))
    for _ in range(draw(st.integers(0, 3))):
        name = draw(st.sampled_from("vw"))
        site = draw(st.integers(-2, 2))
        sym = v(site) if name == "v" else w(site)
        out = out + sym * draw(small) * (sym if draw(st.booleans()) else 1)
    return out


RINGS = {"scalar": fractions, "poly": polys, "sym": sympolys()}


@pytest.mark.parametrize("ring", sorted(RINGS))
def test_ring_axioms(ring):
    elems = RINGS[ring]

    @settings(max_examples=60, deadline=None)
    @given(elems, elems, elems)
    def check(a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a - a == 0 * a

    check()


@settings(max_examples=80, deadline=None)
@given(polys, polys, st.integers(-3, 3))
def test_site_shift_is_a_homomorphism(p, q, k):
    assert (p * q).shift(k) == p.shift(k) * q.shift(k)
    assert (p + q).shift(k) == p.shift(k) + q.shift(k)


@settings(max_examples=40, deadline=None)
@given(sympolys(), sympolys(), st.integers(-2, 2))
def test_symbolic_shift_is_a_homomorphism(a, b, k):
    assert (a * b).shift(k) == a.shift(k) * b.shift(k)


def test_polyn_basics():
    n = PolyN.gen("n")
    p = (n + 1) * (n - 1)
    assert p.to_dict() == {0: -1, 2: 1}
    assert p(3) == 8
    assert p.shift(1).to_dict() == {1: 2, 2: 1}
    assert PolyN.from_dict({2: Fraction(2, 3), 0: Fraction(1, 3)}, "n")(2) == 3
    with pytest.raises(RingMismatchError):
        _ = PolyN.gen("n") + PolyN.gen("N")


def test_sympoly_print_and_shift():
    a = v(0) * w(1) + w(0)
    assert str(a.shift(1)) == "v1*w2 + w1"
    assert (a * a).shift(-1) == a.shift(-1) * a.shift(-1)


def test_rings_coerce_and_reject():
    assert PolyRing("n")(3) == PolyN.constant(3, "n")
    assert SYM(2) == SymPoly.constant(2)
    with pytest.raises(RingMismatchError):
        QQ(PolyN.gen("n"))


def test_laurent_truncation_is_tracked():
    a = LaurentSeries(QQ, {0: 1, -1: 2}, lo=-5)
    sq = a * a
    assert [sq.coefficient(e) for e in (0, -1, -2, -3)] == [1, 4, 4, 0]
    with pytest.raises(TruncationError):
        sq.coefficient(-6)
    exact = LaurentSeries(QQ, {1: 1, -2: 3})
    assert exact.is_exact() and exact.plus().exponents() == [1]


def test_resolvent_matrix_commutator_of_scalars_vanishes():
    one = LaurentSeries.monomial(QQ, 0)
    lam = LaurentSeries.monomial(QQ, 1)
    A = ResolventMatrix.from_rows([[lam, one], [one, LaurentSeries.zero(QQ)]])
    assert A.commutator(A).is_zero()
    assert A.trace().coefficient(1) == 1


@settings(max_examples=40, deadline=None)
@given(st.lists(fractions, min_size=1, max_size=6))
def test_sqrt1p_squares_back(cs):
    order = 6
    f = PowerSeries.from_dict({k + 1: c for k, c in enumerate(cs)}, order)
    r = series_compose("sqrt1p", f)
    one = PowerSeries.constant(1, order)
    assert r * r == one + f


@settings(max_examples=40, deadline=None)
@given(st.lists(fractions, min_size=1, max_size=6))
def test_log1p_of_a_square_doubles(cs):
    # 1 + f = (1 + g)^2  =>  log1p(f) = 2 log1p(g)
    order = 6
    g = PowerSeries.from_dict({k + 1: c for k, c in enumerate(cs)}, order)
    f = g * 2 + g * g
    assert series_compose("log1p", f) == series_compose("log1p", g) * 2


def test_power_series_inverse():
    order = 8
    f = PowerSeries.from_dict({0: 1, 1: -1}, order)
    inv = f.inverse()
    assert [inv.coefficient(k) for k in range(order + 1)] == [1] * (order + 1)
    with pytest.raises(ValueError):
        series_compose("log1p", f)


@st.composite
def quotients(draw):
    terms = {}
    for _ in range(draw(st.integers(1, 5))):
        a, b = draw(st.integers(2, 6)), draw(st.integers(2, 6))
        terms[(-a, -b)] = draw(st.integers(-5, 5))
    return MultiSeries(QQ, 2, terms)


@settings(max_examples=50, deadline=None)
@given(quotients())
def test_division_by_square_diff_inverts_multiplication(T):
    S = T * square_diff()
    depth = 14
    Q = biseries_divide_by_square_diff(S, depth=depth, rows=7, cols=7)
    for a in range(2, 8):
        for b in range(2, 8):
            assert Q[(-a, -b)] == T.terms.get((-a, -b), 0)


def test_division_rejects_non_divisible():
    S = MultiSeries(QQ, 2, {(0, 0): 1, (-2, -2): 1})
    with pytest.raises(NotDivisibleError):
        biseries_divide_by_square_diff(S, depth=6)


@settings(max_examples=30, deadline=None)
@given(quotients(), quotients(), st.integers(0, 3))
def test_multiseries_window_independence(A, B, extra):
    # a product computed in a narrow window equals the wide product cut to that window
    lo = (-8, -8)
    narrow = A.with_window(lo=lo) * B.with_window(lo=lo)
    wide_lo = (lo[0] - extra, lo[1] - extra)
    wide = A.with_window(lo=wide_lo) * B.with_window(lo=wide_lo)
    assert narrow.terms == wide.with_window(lo=lo).terms


def test_rational_function_field():
    t = RationalFunction.monomial(1, 1)
    r = t * t + 1
    assert r * r.inverse() == RationalFunction.monomial(1)
    assert (RationalFunction.monomial(2, 3)).inverse() == RationalFunction.monomial(Fraction(1, 2), -3)
    assert r.derivative_t() == t * 2


def test_xfield_log_marker():
    lx = XField.log_x()
    x = XField.x()
    assert lx.derivative() == XField(RationalFunction.monomial(1, -2))
    assert (x * lx).derivative() == lx + 1
    assert (x * lx + x).at_t(1) == 1
    with pytest.raises(ValueError):
        lx.at_t(2)
