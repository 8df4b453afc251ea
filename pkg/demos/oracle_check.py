"""
Checking against brute-force Wick contractions
==============================================

The Wick oracle enumerates every pairing of half-edges, counts faces of the
resulting ribbon graph and sums N^faces.  It is slow ((2E-1)!! pairings) but
independent of the resolvent machinery, so it is the arbiter for small cases.
"""
from itertools import combinations_with_replacement

from gue_resolvent import connected_moment, correlator, moment

print("<tr M^4> =", moment([4]))
print("<(tr M^2)^2> =", moment([2, 2]), " connected:", connected_moment([2, 2]))

# Three ways to the connected part agree
for method in ("filter", "cumulant", "partition"):
    print(method, connected_moment([2, 3, 5], method=method))

# Compare with the resolvent for every triple of exponents up to 4
agree = 0
for exps in combinations_with_replacement(range(1, 5), 3):
    if sum(exps) % 2 == 0:
        assert correlator(list(exps)) == connected_moment(exps)
        agree += 1
print(f"{agree} triples agree with the oracle")
