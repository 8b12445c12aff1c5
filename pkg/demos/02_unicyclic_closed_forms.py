"""Closed-form f- and h-vectors for uni-cyclic graphs, checked by brute force.

Run:  python demos/02_unicyclic_closed_forms.py
"""

from spancom import f_closed, f_vector, h_closed, h_from_f, make_unicyclic, spanning_complex
from spancom.graph import attachment_shape

# A triangle (m = 3) with a path of three edges hanging off vertex 1 (n = 6).
n, m = 6, 3
u = make_unicyclic(n, m, attachment_shape(n, m, "chain"))
print("edges:", u.base.edges, "cycle labels:", sorted(u.cycle_edge_labels))

cx = spanning_complex(u.base)
print("enumerated f-vector:", tuple(f_vector(cx)))
print("closed-form f-vector:", tuple(f_closed(n, m)))

# Below size m every subset of edges is a face, so f_i = C(n, i+1) there.
# From size m on, the sets swallowing the whole cycle drop out.

raw_h = h_closed(n, m)
print("raw h-vector:", tuple(raw_h))
print("h from the enumerated f:", tuple(h_from_f(f_vector(cx), n - 2)))

# The h-vector is m ones followed by zeros, so it sums to m: one per facet.
print("sum of h:", sum(raw_h), "facets:", len(cx.facets))

# Nothing is enumerated by the closed forms, so large cases are cheap.
big = h_closed(200, 100)
print("n=200, m=100: sum of h =", sum(big), "; f_99 =", f_closed(200, 100)[99])
