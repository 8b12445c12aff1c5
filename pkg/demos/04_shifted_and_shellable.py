"""Shiftedness depends on the labelling; shellability does not.

Run:  python demos/04_shifted_and_shellable.py
"""

from spancom import (
    build_graph,
    canonical_relabel,
    find_shelling_order,
    is_shelling_order,
    is_shifted,
    spanning_complex,
)

# Triangle on edges 2, 3, 4 with the pendant edge listed first.
g = build_graph(4, [(3, 4), (1, 2), (2, 3), (1, 3)])
cx = spanning_complex(g)
print("as given:", is_shifted(cx))  # not shifted; the witness says why

# Putting the cycle on the first labels restores shiftedness.
u, perm = canonical_relabel(g)
print("relabelling (new -> old):", perm)
cx_canon = spanning_complex(u.base)
print("canonical:", is_shifted(cx_canon))

# Any two facets E - {e_i}, E - {e_j} meet in a set of size n - 2, so every
# facet order is a shelling.
order = find_shelling_order(cx_canon)
print("shelling order:", order)
print("reversed order works too:", is_shelling_order(cx_canon, list(reversed(order))))
