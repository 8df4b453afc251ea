"""
Counting maps glued from polygons
=================================

n_{g,b,k} counts connected labelled ribbon graphs of genus g made of k
vertices of valence b, i.e. genus-g surfaces glued from k b-gons.  They are
the coefficients of <(tr M^b)^k>_c, bucketed by the power of N.
"""
from math import factorial

from gue_resolvent import polygon_numbers, weighted_count

# Triangles: only even numbers of them can be glued
for k in (2, 4, 6, 8):
    print(f"{k} triangles:", polygon_numbers(3, k).as_list())

# Quadrangles at every k
for k in range(1, 6):
    print(f"{k} quadrangles:", polygon_numbers(4, k).as_list())

# The weighted count a_g divides out the k! labellings of the polygons
k, g = 4, 1
a = weighted_count(g, [3] * k)
print(f"a_{g}(3^{k}) = {a}, times {k}! = {a * factorial(k)}")

# Rows as (valence, k, genus, count) tuples, ready for a CSV writer
for row in polygon_numbers(5, 2).rows():
    print(row)
