"""
Genus expansion with a triangle coupling
========================================

Adding s tr M^3 to the Gaussian weight, the free energy splits into genus
components F_g(x; s) with x the 't Hooft coupling.  For g = 0, 1, 2 they are
closed expressions in the series v, w = x/(1 - 6sv) and u = log w, where v
solves v(1 - 9sv + 18s^2 v^2) = 6sx.
"""
from gue_resolvent.genus import build_w_u, free_energy, solve_cubic_v, weighted_triangle_numbers

v = solve_cubic_v(7)
w, u = build_w_u(v)
print("v =", v)
print("w =", w)

# log x only survives in the s^0 terms
for g in (0, 1, 2):
    F = free_energy(g, 8)
    for k in (0, 2, 4, 6):
        print(f"F_{g} [s^{k}] =", F.coefficient(k))

# At x = 1 the s^k coefficients are weighted triangulation counts
for g in (0, 1, 2):
    print(f"a_{g}(3^k), k = 2..12:", [str(a) for a in weighted_triangle_numbers(g, kmax=12)])
