"""
Free subgroups in graph-product kernels
=======================================

The kernel of a graph product onto the direct sum of its vertex groups
contains a free group of rank 2 unless the complement graph is very sparse.
"""

from permwreath.graph_products import VertexGraph, kernel_free_subgroup_criterion

for g in [VertexGraph.empty(2, ["C2", "C2"]),
          VertexGraph.empty(2, ["C2", "C3"]),
          VertexGraph.empty(3)]:
    r = kernel_free_subgroup_criterion(g)
    print(g.labels, r.verdict, r.case)
    if r.witness:
        print("   ", r.witness.description, r.witness.ball_counts(5))
