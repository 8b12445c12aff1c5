import random
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import (
    brute_f_vector,
    brute_faces,
    brute_is_shifted,
    brute_minimal_nonfaces,
)
from strategies import complexes, unicyclic_graphs

from spancom.binomial import binom
from spancom.errors import (
    EmptyInput,
    LabelOutOfRange,
    NotPermutation,
    NotPure,
    TooLarge,
)
from spancom.graph import attachment_shape, build_graph, make_unicyclic
from spancom.simplicial import (
    SimplicialComplex,
    contains_face,
    f_vector,
    faces_of_dim,
    find_shelling_order,
    from_facets,
    full_simplex,
    is_shellable,
    is_shelling_order,
    is_shifted,
    minimal_nonfaces,
    spanning_complex,
)

SQUARE_FACETS = [(2, 3, 4), (1, 3, 4), (1, 2, 4), (1, 2, 3)]


def u_complex(n, m, shape="chain"):
    return spanning_complex(make_unicyclic(n, m, attachment_shape(n, m, shape)).base)


# -- construction -------------------------------------------------------------


def test_from_facets_square():
    c = from_facets(4, SQUARE_FACETS)
    assert c.facets == ((1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4))
    assert c.dim == 2 and c.is_pure


def test_from_facets_removes_dominated_and_duplicates():
    assert from_facets(3, [{1, 2}, {1}]).facets == ((1, 2),)
    assert from_facets(3, [{1, 2}, {2, 1}, ()]).facets == ((1, 2),)
    c = from_facets(2, [{1}, {2}])
    assert c.facets == ((1,), (2,)) and c.dim == 0


def test_from_facets_errors():
    with pytest.raises(EmptyInput):
        from_facets(3, [])
    with pytest.raises(EmptyInput):
        from_facets(3, [()])
    with pytest.raises(LabelOutOfRange):
        from_facets(3, [{1, 4}])


def test_unused_ground_elements():
    c = from_facets(5, [{1, 2}, {2, 3}])
    assert c.unused == (4, 5)
    assert minimal_nonfaces(c)[:2] == [(4,), (5,)]


def test_spanning_complex_examples(c4):
    assert spanning_complex(c4) == from_facets(4, SQUARE_FACETS)
    tree = build_graph(4, [(1, 2), (2, 3), (3, 4)])
    assert spanning_complex(tree).facets == ((1, 2, 3),)
    c = u_complex(5, 4)
    assert len(c.facets) == 4 and all(len(F) == 4 for F in c.facets)
    assert c.unused == ()


# -- faces ----------------------------------------------------------------------


def test_contains_face(c4):
    c = spanning_complex(c4)
    assert contains_face(c, {1, 3})
    assert not contains_face(c, {1, 2, 3, 4})
    assert contains_face(c, ())
    with pytest.raises(LabelOutOfRange):
        contains_face(c, {5})


def test_faces_of_dim(c4):
    c = spanning_complex(c4)
    assert faces_of_dim(c, 2) == sorted(SQUARE_FACETS)
    assert faces_of_dim(c, 0) == [(1,), (2,), (3,), (4,)]
    assert faces_of_dim(c, -1) == [()]
    assert len(faces_of_dim(u_complex(4, 3), 2)) == 3


def test_f_vector_examples(c4):
    assert tuple(f_vector(spanning_complex(c4))) == (4, 6, 4)
    assert tuple(f_vector(full_simplex(3))) == (3, 3, 1)
    assert tuple(f_vector(u_complex(4, 3))) == (4, 6, 3)
    # derived oracles for the same three
    assert brute_f_vector(4, SQUARE_FACETS) == (4, 6, 4)
    assert brute_f_vector(4, [(2, 3, 4), (1, 3, 4), (1, 2, 4)]) == (4, 6, 3)


def test_guard():
    c = full_simplex(26)
    with pytest.raises(TooLarge):
        f_vector(c)
    assert contains_face(c, range(1, 27))


@given(complexes())
@settings(max_examples=100, deadline=None)
def test_f_vector_matches_brute_force(c):
    assert tuple(f_vector(c)) == brute_f_vector(c.ground_size, c.facets)


@given(complexes())
@settings(max_examples=60, deadline=None)
def test_downward_closure_sampled(c):
    rng = random.Random(len(c.facets))
    faces = [F for i in range(c.dim + 1) for F in faces_of_dim(c, i)]
    for F in rng.sample(faces, min(10, len(faces))):
        for r in range(len(F)):
            for G in combinations(F, r):
                assert contains_face(c, G)


@given(complexes(max_n=7))
@settings(max_examples=100, deadline=None)
def test_full_skeleton_propagates_down(c):
    N = c.ground_size
    f = f_vector(c)
    for t in range(len(f)):
        if f[t] == binom(N, t + 1):
            assert all(f[i] == binom(N, i + 1) for i in range(t))


@given(unicyclic_graphs(max_n=8))
@settings(max_examples=40, deadline=None)
def test_unicyclic_faces_are_cycle_free_sets(u):
    c = spanning_complex(u.base)
    cycle = set(range(1, u.m + 1))
    for S in brute_faces(u.n, [range(1, u.n + 1)]):
        assert contains_face(c, S) == (not cycle <= S)


# -- minimal non-faces ------------------------------------------------------------


@pytest.mark.parametrize("n, m", [(n, m) for n in range(3, 9) for m in range(3, n + 1)])
def test_unicyclic_single_minimal_nonface(n, m):
    assert minimal_nonfaces(u_complex(n, m, "star")) == [tuple(range(1, m + 1))]


def test_minimal_nonfaces_examples(c4):
    assert minimal_nonfaces(full_simplex(5)) == []
    assert minimal_nonfaces(spanning_complex(c4)) == [(1, 2, 3, 4)]


@given(complexes())
@settings(max_examples=100, deadline=None)
def test_minimal_nonfaces_match_brute_force(c):
    assert minimal_nonfaces(c) == brute_minimal_nonfaces(c.ground_size, c.facets)


# -- shifted ------------------------------------------------------------------------


def test_shifted_canonical_u43():
    assert is_shifted(u_complex(4, 3)) == (True, None)


def test_not_shifted_when_cycle_is_relabelled():
    g = build_graph(4, [(3, 4), (1, 2), (2, 3), (1, 3)])
    c = spanning_complex(g)
    assert c.facets == ((1, 2, 3), (1, 2, 4), (1, 3, 4))
    shifted, witness = is_shifted(c)
    assert not shifted
    assert witness == ((1, 2, 3), 1, 4)
    # the other obvious witness is genuine too
    assert not contains_face(c, ({1, 3, 4} - {1}) | {2})


def test_full_simplex_shifted():
    assert is_shifted(full_simplex(4)) == (True, None)


@given(complexes(max_n=6))
@settings(max_examples=150, deadline=None)
def test_shifted_agrees_with_literal_definition(c):
    shifted, witness = is_shifted(c)
    assert shifted == brute_is_shifted(c.ground_size, c.facets)
    if witness:
        F, i, j = witness
        assert contains_face(c, F) and i in F and j > i and j not in F
        assert not contains_face(c, (set(F) - {i}) | {j})


# -- shelling -----------------------------------------------------------------------


def test_c4_identity_is_a_shelling(c4):
    c = spanning_complex(c4)
    hats = [tuple(x for x in range(1, 5) if x != i) for i in range(1, 5)]
    assert is_shelling_order(c, hats)
    assert is_shelling_order(c, hats, method="union")


@pytest.mark.parametrize("n, m", [(5, 3), (6, 4), (6, 6), (7, 5)])
def test_every_order_shells_unicyclic(n, m):
    c = u_complex(n, m)
    for order in permutations(c.facets):
        assert is_shelling_order(c, order)


def test_single_facet_shelling():
    c = full_simplex(3)
    assert is_shelling_order(c, c.facets)
    assert find_shelling_order(c) == list(c.facets)


def test_find_shelling_examples():
    c = u_complex(6, 4)
    assert find_shelling_order(c) == list(c.facets)
    disjoint = from_facets(4, [{1, 2}, {3, 4}])
    assert find_shelling_order(disjoint) is None
    assert is_shellable(disjoint) is False
    points = from_facets(3, [{1}, {2}, {3}])
    assert find_shelling_order(points) == [(1,), (2,), (3,)]


def test_shelling_needs_backtracking():
    # a strip of triangles: opening with the two ends is not a shelling
    c = from_facets(6, [{1, 2, 3}, {4, 5, 6}, {2, 3, 4}, {3, 4, 5}])
    order = find_shelling_order(c)
    assert order is not None and is_shelling_order(c, order)
    assert not is_shelling_order(c, [(1, 2, 3), (4, 5, 6), (2, 3, 4), (3, 4, 5)])


def test_shelling_errors():
    c = from_facets(4, [{1, 2, 3}, {4}])
    with pytest.raises(NotPure):
        is_shelling_order(c, c.facets)
    with pytest.raises(NotPure):
        find_shelling_order(c)
    c = u_complex(4, 3)
    with pytest.raises(NotPermutation):
        is_shelling_order(c, c.facets[:2])
    with pytest.raises(NotPermutation):
        is_shelling_order(c, [c.facets[0]] * 3)


def test_greedy_path_for_many_facets():
    c = u_complex(9, 9)
    assert len(c.facets) == 9
    order = find_shelling_order(c)
    assert order is not None and is_shelling_order(c, order)
    assert is_shellable(c) is True


@given(complexes(max_n=6, pure=True), st.randoms(use_true_random=False))
@settings(max_examples=200, deadline=None)
def test_two_shelling_formulations_agree(c, rnd):
    for _ in range(5):
        order = list(c.facets)
        rnd.shuffle(order)
        assert is_shelling_order(c, order, "pairs") == is_shelling_order(c, order, "union")


@given(complexes(max_n=6, pure=True))
@settings(max_examples=150, deadline=None)
def test_shifted_implies_shellable(c):
    if len(c.facets) <= 8 and is_shifted(c)[0]:
        assert find_shelling_order(c) is not None


def test_shelling_order_result_is_valid_on_small_complexes():
    rng = random.Random(5)
    for _ in range(200):
        N = rng.randint(2, 6)
        k = rng.randint(1, N)
        facets = [rng.sample(range(1, N + 1), k) for _ in range(rng.randint(1, 6))]
        c = SimplicialComplex(N, from_facets(N, facets).facets)
        order = find_shelling_order(c)
        if order is not None:
            assert is_shelling_order(c, order, "union")
