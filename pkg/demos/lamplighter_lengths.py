"""
Word lengths in the lamplighter group
=====================================

C2 wr Z: a lamp configuration on the integers plus a cursor. The length of
an element is the shortest tour that visits every lit lamp and ends at the
cursor, plus one toggle per lit lamp.
"""

from permwreath.actions import z_regular
from permwreath.groups import Cyclic, ZInt
from permwreath.wreath import WreathElement, WreathProduct

t = Cyclic(1, 2)
W = WreathProduct(z_regular(), {"t": t}, radius=16)

# lamps at -1 and 2, cursor parked at 0: walk to -1, then to 2, then back
a = WreathElement({-1: t, 2: t}, ZInt(0))
print("length:", W.word_length(a))          # 1 + 3 + 2 travel, 2 toggles

# growth of balls
print("ball sizes:", [len(W.ball(r)) for r in range(7)])
