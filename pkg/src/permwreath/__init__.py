"""Exact computations in permutational wreath products W wr_X G.

Concrete groups (finite permutation groups, Z, D_inf, cyclic groups,
Thompson's group F, Houghton groups), wreath-product arithmetic and exact word
length through covering walks, double cosets and pair orbits, presentation
synthesis, graph-product kernel criteria and fibre-product lattices.
"""

__version__ = "0.1.0"

from .dyadic import Dyadic, dyadic
from .errors import WreathError
from .groups import Cyclic, Dihedral, DirectProduct, Perm, ZInt, compose, evaluate_word
from .thompson import PLMap, X0, X1
from .houghton import HoughtonElement
from .words import Word
from .finite import FiniteGroup
from .actions import GroupAction
from .geodesic import K, cover_walk_length, explore
from .wreath import WreathElement, WreathProduct, bilipschitz_compare

__all__ = [
    "Dyadic", "dyadic", "WreathError", "Cyclic", "Dihedral", "DirectProduct", "Perm", "ZInt",
    "compose", "evaluate_word", "PLMap", "X0", "X1", "HoughtonElement", "Word", "FiniteGroup",
    "GroupAction", "K", "cover_walk_length", "explore", "WreathElement", "WreathProduct",
    "bilipschitz_compare", "__version__",
]
