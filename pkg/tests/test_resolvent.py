import random

import pytest

from gue_resolvent.algebra import PolyN, PolyRing
from gue_resolvent.algebra.sympoly import v, w
from gue_resolvent.errors import WindowError
from gue_resolvent.resolvent import (
    LatticeData,
    build_general_resolvent,
    build_gue_resolvent,
    check_normalization,
    check_rec2,
    check_recur_gamma,
    check_resolvent_equation,
    compute_omega,
    hamiltonian_density,
    lax_matrix,
    required_window,
    shift_resolvent,
)

n = PolyN.gen("n")


def test_gue_first_coefficients():
    R = build_gue_resolvent("n", 6)
    # gamma = sum_j c_j lam^{-j-1}; c_2 = w_n + w_{n-1}, and at n = 0 it is -(1)!! = -1
    assert R.e21.coefficient(-1) == 1
    assert R.e21.coefficient(-2) == 0
    assert R.e21.coefficient(-3) == 2 * n - 1
    assert R.e11.coefficient(-2) == n


@pytest.mark.parametrize("depth", [1, 5, 12])
def test_gue_closed_form_equals_recursion(depth):
    closed = build_gue_resolvent("n", depth)
    general = build_general_resolvent(LatticeData.gue("n"), 0, depth)
    assert closed.agrees(general)


@pytest.mark.parametrize("site", [0, 1, 4])
def test_gue_numeric_site_matches_symbolic(site):
    depth = 8
    sym = build_gue_resolvent("n", depth)
    num = build_gue_resolvent(site, depth)
    assert num.agrees(sym.map_coeffs(lambda c: c(site) if isinstance(c, PolyN) else c, ring=num.ring))


def test_resolvent_equation_both_paths():
    depth = 10
    R = build_gue_resolvent("n", depth)
    U = lax_matrix(0, n, PolyRing("n"))
    assert check_resolvent_equation(R, shift_resolvent(R, 1), U)
    assert not check_resolvent_equation(R, R, U)

    data = LatticeData.generic()
    R0 = build_general_resolvent(data, 0, 6)
    R1 = build_general_resolvent(data, 1, 6)
    assert check_resolvent_equation(R0, R1, lax_matrix(v(0), w(0), data.ring))


def test_normalization_generic_and_gue():
    assert check_normalization(build_general_resolvent(LatticeData.generic(), 0, 6))
    assert check_normalization(build_gue_resolvent("n", 12))
    assert check_normalization(build_gue_resolvent(3, 12))


def test_normalization_on_random_numeric_data():
    rng = random.Random(7)
    sites = range(-8, 10)
    vals = {k: rng.randint(-4, 4) for k in sites}
    ws = {k: rng.randint(1, 6) for k in sites}
    data = LatticeData.from_values(vals, ws)
    R0 = build_general_resolvent(data, 0, 6)
    R1 = build_general_resolvent(data, 1, 6)
    assert check_normalization(R0)
    assert check_resolvent_equation(R0, R1, lax_matrix(vals[0], ws[0], data.ring))
    assert check_rec2(data, 0, 5)


def test_rec2_holds_generically():
    assert check_rec2(LatticeData.generic(), 0, 4)
    assert check_rec2(LatticeData.gue("n"), 0, 8)


@pytest.mark.parametrize("site", range(7))
def test_gamma_three_term_recursion(site):
    assert check_recur_gamma(site, 12)


def test_window_is_enforced():
    assert required_window(0, 3) == (-4, 4)
    data = LatticeData.gue_numeric((0, 5))
    with pytest.raises(WindowError):
        build_general_resolvent(data, 0, 3)
    with pytest.raises(WindowError):
        LatticeData.from_values({0: 0, 2: 0}, {0: 1, 2: 1})


def test_omega_reference_values():
    table = compute_omega(LatticeData.generic(), 0, 1, 1)
    assert table[(0, 0)] == w(0)
    assert table[(0, 1)] == w(0) * (v(0) + v(-1))
    assert table[(1, 1)] == w(0) * (w(1) + w(-1) + (v(0) + v(-1)) ** 2)


def test_omega_is_symmetric():
    assert compute_omega(LatticeData.generic(), 0, 2, 2).is_symmetric()
    assert compute_omega(LatticeData.gue("n"), 0, 5, 5).is_symmetric()


def test_hamiltonian_densities():
    data = LatticeData.generic()
    assert hamiltonian_density(data, 0, -1) == v(0)
    assert hamiltonian_density(data, 0, 0) == (v(0) ** 2 + w(0) + w(1)) / 2
    h1 = v(0) ** 3 + 2 * v(0) * (w(0) + w(1)) + w(0) * v(-1) + w(1) * v(1)
    assert hamiltonian_density(data, 0, 1) == h1 / 3
    with pytest.raises(ValueError):
        hamiltonian_density(data, 0, -2)
