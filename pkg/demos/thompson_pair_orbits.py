"""
Orbits of Thompson's group F on pairs of dyadic points
======================================================

Pairs (a, b) with a < b, a = b, a > b each form a single orbit. Inside a
finite window the generators alone cannot connect everything, so each pair is
also joined to a canonical pair by an explicit element of F.
"""

from permwreath.actions import dyadic_window, thompson_dyadic_action
from permwreath.cosets import orbits_on_pairs, sign_classifier
from permwreath.thompson import pair_transporter

act = thompson_dyadic_action()
window = dyadic_window(5)
plain = orbits_on_pairs(act, window, sign_classifier())
print("generator moves only:", plain.count, "classes")
merged = orbits_on_pairs(act, window, sign_classifier(), pair_transporter)
print("with transporters:", merged.count, "classes, labels", merged.labels)
