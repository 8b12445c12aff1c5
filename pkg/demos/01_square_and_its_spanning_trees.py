"""The square C_4: spanning trees, the spanning complex, and its invariants.

Run:  python demos/01_square_and_its_spanning_trees.py
"""

from spancom import (
    build_graph,
    count_spanning_trees_kirchhoff,
    enumerate_spanning_trees,
    f_vector,
    minimal_nonfaces,
    spanning_complex,
)

# Four vertices, four edges. Edge labels are list positions: e1=(1,2), e2=(2,3),
# e3=(3,4), e4=(1,4).
square = build_graph(4, [(1, 2), (2, 3), (3, 4), (1, 4)])

# Every spanning tree drops exactly one edge of the cycle.
trees = enumerate_spanning_trees(square)
for t in trees:
    print("tree:", t)

# The matrix-tree theorem gives the same count without listing anything.
print("Kirchhoff count:", count_spanning_trees_kirchhoff(square))

# The spanning complex has the trees as facets and lives on the edge labels.
cx = spanning_complex(square)
print("facets:", cx.facets)
print("f-vector:", tuple(f_vector(cx)))

# Its Stanley-Reisner ideal has a single generator: the product of all four
# edge variables, since the whole cycle is the only missing set.
print("minimal non-faces:", minimal_nonfaces(cx))
