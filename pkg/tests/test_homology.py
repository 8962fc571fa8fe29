from conftest import nc
from coxcat.complexes import SimplicialComplex
from coxcat.homology import (betti, dense_snf, euler_from_profile,
                             homology_cm_check, homology_profile, torsion_free)


def test_dense_snf():
    assert dense_snf([[2, 4], [6, 8]]) == [2, 4]
    assert dense_snf([[1, 0], [0, 1]]) == [1, 1]
    assert dense_snf([[0, 0], [0, 0]]) == []


def test_empty_complex():
    cx = SimplicialComplex.from_faces([()])
    assert homology_profile(cx) == {-1: (1, ())}


def test_two_points():
    cx = SimplicialComplex.from_faces([(0,), (1,)])
    prof = homology_profile(cx)
    assert prof[-1] == (0, ())
    assert prof[0] == (1, ())


def test_circle():
    cx = SimplicialComplex.from_faces([(0, 1), (1, 2), (0, 2)])
    prof = homology_profile(cx)
    assert prof == {-1: (0, ()), 0: (0, ()), 1: (1, ())}
    assert betti(prof, 1) == 1
    assert torsion_free(prof)
    chi = euler_from_profile(prof)
    assert chi == -1 and isinstance(chi, int)


def test_sphere():
    cx = SimplicialComplex.from_faces(
        [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])
    prof = homology_profile(cx)
    assert prof[2] == (1, ())
    assert prof[1] == (0, ())
    assert euler_from_profile(prof) == 1


def test_projective_plane_torsion():
    # antipodal quotient of the icosahedron on 6 vertices
    faces = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
             (1, 2, 4), (2, 4, 5), (2, 3, 5), (1, 3, 5), (1, 3, 4)]
    prof = homology_profile(SimplicialComplex.from_faces(faces))
    assert prof[0] == (0, ())
    assert prof[1] == (0, (2,))
    assert prof[2] == (0, ())
    assert not torsion_free(prof)
    assert euler_from_profile(prof) == 0


def test_cm_check_passes_on_nc():
    for label in ("A2", "B2"):
        assert homology_cm_check(nc(label).poset) == []


def test_cm_check_fails_on_disconnected_interval():
    # face poset of two disjoint edges, bounded: the open bottom-top
    # interval is homotopy equivalent to two points, which sits in
    # degree 0 instead of degree 1
    cx = SimplicialComplex.from_faces([(0, 1), (2, 3)])
    poset, _ = cx.face_poset()
    bounded, _, _ = poset.with_bounds()
    assert homology_cm_check(bounded) != []
