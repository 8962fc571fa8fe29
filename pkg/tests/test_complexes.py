from collections import Counter

import pytest

from coxcat.complexes import SimplicialComplex, enumerate_cliques, order_complex
from coxcat.errors import NotPure
from coxcat.posets import FinitePoset


def full_simplex(n):
    return SimplicialComplex.from_faces([tuple(range(n))])


def tetra_boundary():
    return SimplicialComplex.from_faces(
        [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])


def test_from_faces_closure():
    cx = full_simplex(3)
    assert cx.f_vector() == (1, 3, 3, 1)
    assert cx.has_face((0, 2))
    assert cx.has_face(())
    assert not cx.has_face((3,))


def test_h_vector():
    assert full_simplex(3).h_vector() == (1, 0, 0, 0)
    assert tetra_boundary().h_vector() == (1, 1, 1, 1)


def test_h_vector_needs_pure():
    cx = SimplicialComplex.from_faces([(0, 1), (2,)])
    assert not cx.is_pure()
    with pytest.raises(NotPure):
        cx.h_vector()


def test_reduced_euler():
    assert tetra_boundary().reduced_euler() == 1
    assert full_simplex(4).reduced_euler() == 0
    assert SimplicialComplex.from_faces([(0,), (1,)]).reduced_euler() == 1
    assert SimplicialComplex.from_faces([()]).reduced_euler() == -1


def test_link():
    lk = tetra_boundary().link((0,))
    assert lk.f_vector() == (1, 3, 3)
    assert lk.reduced_euler() == -1


def test_join_of_two_point_pairs_is_a_square():
    s0 = SimplicialComplex.from_faces([(0,), (1,)])
    sq = s0.join(s0)
    assert sq.f_vector() == (1, 4, 4)
    assert sq.reduced_euler() == -1


def test_restrict_vertices():
    cx = tetra_boundary().restrict_vertices(lambda v: v != 3)
    assert cx.f_vector() == (1, 3, 3, 1)


def test_face_poset_and_barycentric():
    cx = SimplicialComplex.from_faces([(0, 1), (1, 2), (0, 2)])
    poset, faces = cx.face_poset()
    assert poset.n == len(faces) == 6
    bc = cx.barycentric()
    assert bc.f_vector() == (1, 6, 6)
    assert bc.reduced_euler() == cx.reduced_euler() == -1
    assert order_complex(poset).f_vector() == bc.f_vector()


def test_order_complex_of_chain():
    p = FinitePoset.from_leq(3, lambda x, y: x <= y)
    cx = order_complex(p)
    assert cx.f_vector() == (1, 3, 3, 1)


def test_enumerate_cliques_on_square():
    # 4-cycle 0-1-2-3: cliques are the empty set, vertices, and edges
    adj = [0] * 4
    for a, b in ((0, 1), (1, 2), (2, 3), (0, 3)):
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    cliques = list(enumerate_cliques(adj))
    by_size = Counter(len(c) for c in cliques)
    assert by_size[1] == 4 and by_size[2] == 4
    assert max(by_size) == 2
