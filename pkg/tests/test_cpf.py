from collections import Counter

import pytest

from conftest import cpf, group
from coxcat.cpf import (coxeter_complex_fvector, coxeter_degeneration_check,
                        cpf_join_check, dihedral_cpf_check, lefschetz_target,
                        park_rank)
from coxcat.coxeter import parse_type
from coxcat.homology import betti, torsion_free

# label, m, positive -> (f_vector or None, top betti)
HOMOLOGY = {
    ("A1", 1, False): ((1, 4), 3),
    ("A1", 1, True): ((1, 2), 1),
    ("A1", 2, False): ((1, 6), 5),
    ("A1xA1", 1, False): ((1, 8, 16), 9),
    ("A1xA1", 1, True): ((1, 4, 4), 1),
    ("A1xA1", 2, False): ((1, 12, 36), 25),
    ("A2", 1, False): ((1, 15, 30), 16),
    ("A2", 1, True): ((1, 9, 12), 4),
    ("A2", 2, False): ((1, 24, 72), 49),
    ("A2", 2, True): (None, 25),
    ("B2", 1, False): ((1, 24, 48), 25),
    ("B2", 1, True): (None, 9),
    ("B2", 2, False): ((1, 40, 120), 81),
    ("B2", 2, True): (None, 49),
    ("I2(5)", 1, False): (None, 36),
    ("I2(5)", 1, True): (None, 16),
    ("I2(7)", 2, False): ((1, 112, 336), 225),
    ("A3", 1, False): ((1, 42, 252, 336), 125),
    ("A3", 1, True): ((1, 28, 120, 120), 27),
    ("A1xA2", 1, False): ((1, 19, 90, 120), 48),
}


@pytest.mark.parametrize("key", sorted(HOMOLOGY))
def test_homology_concentrated_in_top_degree(key):
    label, m, positive = key
    fv, rank = HOMOLOGY[key]
    cp = cpf(label, m, positive)
    if fv is not None:
        assert cp.complex.f_vector() == fv
    g = group(label)
    assert rank == park_rank(g.datum, m, positive)
    prof = cp.homology()
    assert torsion_free(prof)
    n = g.rank
    assert betti(prof, n - 1) == rank
    for d in prof:
        if d != n - 1:
            assert prof[d] == (0, ())


def test_park_rank_componentwise():
    assert park_rank(parse_type("A1xA1"), 1) == 9
    assert park_rank(parse_type("A1xA2"), 1) == 48
    assert park_rank(parse_type("A1xA2"), 1, positive=True) == 4
    assert park_rank(parse_type("B2"), 2) == 81


def test_vertices_are_regular_in_dihedral_rank_two():
    cp = cpf("A2")
    deg = Counter()
    for e in cp.complex.faces(2):
        for v in e:
            deg[v] += 1
    assert set(deg.values()) == {4}
    assert len(deg) == 15


def test_fixed_subcomplex_under_transposition():
    cp = cpf("A2")
    g = cp.group
    w = g.one_line_index[(0, 2, 1)]
    fixed = cp.fixed_subcomplex(w)
    assert fixed.f_vector() == (1, 5)
    assert fixed.reduced_euler() == 4
    assert cp.lefschetz(w) == 4


def test_action_on_faces():
    cp = cpf("B2")
    g = cp.group
    nfaces = len(cp.faces)
    for w in (g.reflections[0], g.coxeter_element):
        images = [cp.act(w, i) for i in range(nfaces)]
        assert sorted(images) == list(range(nfaces))
    for i in range(nfaces):
        assert cp.act(0, i) == i


@pytest.mark.parametrize("label,m", [("A2", 1), ("A2", 2), ("B2", 1)])
def test_lefschetz_matches_character_formula(label, m):
    cp = cpf(label, m)
    g = cp.group
    for w in range(g.order):
        assert cp.lefschetz(w) == lefschetz_target(g, m, w)


def test_lefschetz_positive_variant():
    cp = cpf("A2", 1, True)
    g = cp.group
    for w in range(g.order):
        assert cp.lefschetz(w) == lefschetz_target(g, 1, w, prime=True)


def test_vertex_links():
    for label in ("A2", "B2"):
        cp = cpf(label)
        for f, k in ((f, k) for (f, k) in cp.faces if len(f) == 1):
            i = cp.face_id[(f, k)]
            assert cp.link_check(i)


def test_flag_two_skeleton():
    rep = cpf("A2").flag_report()
    assert rep["flag"] is True


def test_cohen_macaulay_check():
    assert cpf("A2").cm_check() == []
    assert cpf("A2", 1, True).cm_check() == []


def test_coxeter_complex_at_m_zero():
    assert coxeter_complex_fvector(group("A2")) == (1, 6, 6)
    assert coxeter_complex_fvector(group("B2")) == (1, 8, 8)
    assert coxeter_complex_fvector(group("A3")) == (1, 14, 36, 24)
    for label in ("A1", "A2", "B2"):
        assert coxeter_degeneration_check(group(label))


def test_join_factorization():
    assert cpf_join_check(parse_type("A1"), parse_type("A1"), 1)
    assert cpf_join_check(parse_type("A1"), parse_type("A2"), 1)


def test_dihedral_closed_form():
    for k in (3, 4, 5, 6):
        assert dihedral_cpf_check(k)
