"""
Subgroups over a fibre product
==============================

Subgroups of D4 x D4 containing the diagonal correspond to normal subgroups
of D4; the number of diagonal double cosets is the number of conjugacy classes.
"""

from permwreath.fibre import FibreProductSpec, biindex_vs_conjclasses, verify_lattice_bijection
from permwreath.finite import dihedral_group

G = dihedral_group(4)
spec = FibreProductSpec(G, G, G, dict(G.generators), dict(G.generators))
print(verify_lattice_bijection(spec).to_json())
print(biindex_vs_conjclasses(spec).to_json())
