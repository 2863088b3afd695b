"""
Covering walks in a Schreier graph
==================================

K(F, c) is the length of the shortest generator walk from the identity to c
whose base-point images visit every point of F.
"""

from permwreath.actions import natural_action
from permwreath.finite import symmetric_group
from permwreath.geodesic import K, explore

G = symmetric_group(4)
frag = explore(natural_action(G), radius=30)
print("explored", len(frag), "elements; complete:", frag.complete)

for F in [{1}, {1, 2}, {1, 2, 3}]:
    print(sorted(F), [K(F, g, frag) for g in G.elements[:8]])
