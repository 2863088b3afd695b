"""
A finite presentation of C2 wr Sym(3)
=====================================

Build relators from a presentation of Sym(3), one of C2, the point
stabiliser and double-coset representatives; then check each relator in a
concrete model and count the group it generates.
"""

from permwreath.actions import natural_action
from permwreath.finite import FiniteGroup
from permwreath.presentations import (G_MODELS, finite_fp_input, generated_order,
                                      synthesize_wreath_presentation, verify_relators, wreath_assignment)

G = FiniteGroup(G_MODELS["Sym3"][1], name="Sym3")
inp = finite_fp_input("Sym3", "C2", natural_action(G))
p = synthesize_wreath_presentation(inp)
print(p.pretty())
print(p.families())

assign, _ = wreath_assignment(inp)
print("relators hold:", verify_relators(p, assign).ok)
print("order:", generated_order(assign))    # 2^3 * 6
