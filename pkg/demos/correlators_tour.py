"""
A tour of exact GUE correlators
===============================

Connected correlators <tr M^i1 ... tr M^ik>_c of the Gaussian Unitary
Ensemble are polynomials in the matrix size N.  They are read off the
matrix resolvent of the Toda lattice at the GUE point (v = 0, w_n = n).
"""
from gue_resolvent import build_gue_resolvent, correlator, k_point, one_point, two_point

# The resolvent at a symbolic site n: every coefficient is a polynomial in n
R = build_gue_resolvent("n", 6)
print("gamma_n(lam) =", R.e21)

# One-point functions are Catalan-like polynomials; the top coefficient of
# <tr M^2j> is the Catalan number
for i in (2, 4, 6, 20):
    print(f"<tr M^{i}> =", one_point(i))

# Two-point functions come from dividing tr R(l1) R(l2) - 1 by (l1 - l2)^2
print("<tr M^3 tr M^3>_c =", two_point(3, 3))
print("<tr M^4 tr M^4>_c =", two_point(4, 4))

# Three and more points: a sum over permutations of cyclic products
print("<tr M^2 tr M^3 tr M^5>_c =", k_point([2, 3, 5]))
print("<(tr M^2)^4>_c =", correlator([2, 2, 2, 2]))

# Each coefficient counts labelled ribbon graphs; setting N = 10
print("<(tr M^4)^3>_c at N = 10:", correlator([4, 4, 4], N=10))

# Odd total degree always gives zero
print("<tr M^2 tr M^3>_c =", correlator([2, 3]))
