"""Spanning simplicial complexes of finite simple connected graphs.

The facets of the spanning complex of a graph are the edge sets of its
spanning trees. This package builds that complex, computes its f-vector,
h-vector, minimal non-faces and Hilbert series exactly, and checks the
closed forms for uni-cyclic graphs against brute force.
"""

from .graph import (
    Graph,
    UnicyclicGraph,
    attachment_shape,
    build_graph,
    canonical_relabel,
    find_unique_cycle,
    format_edge_list,
    is_connected,
    make_unicyclic,
    parse_edge_list,
)
from .simplicial import (
    FVector,
    SimplicialComplex,
    contains_face,
    f_vector,
    faces_of_dim,
    find_shelling_order,
    from_facets,
    is_shelling_order,
    is_shifted,
    minimal_nonfaces,
    spanning_complex,
)
from .sr import (
    HilbertSeries,
    HVector,
    expand_series,
    h_from_f,
    hilbert_function_direct,
    normalize,
    series_from_f,
)
from .trees import (
    SpanningTreeSet,
    count_spanning_trees_kirchhoff,
    enumerate_spanning_trees,
    unicyclic_spanning_trees,
)
from .unicyclic import UnicyclicParams, binom, f_closed, h_closed, hilbert_closed

__version__ = "0.1.0"
