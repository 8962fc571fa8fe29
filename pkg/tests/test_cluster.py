import pytest

from conftest import cluster, group
from coxcat.enumerative import os_exponents

F_VECTORS = {
    ("A2", 1): (1, 5, 5),
    ("A2", 2): (1, 8, 12),
    ("B2", 1): (1, 6, 6),
    ("B2", 2): (1, 10, 15),
    ("A3", 1): (1, 9, 21, 14),
    ("B3", 1): (1, 12, 30, 20),
    ("B3", 2): (1, 21, 84, 84),
    ("I2(5)", 1): (1, 7, 7),
}

POSITIVE_F_VECTORS = {
    ("A2", 1): (1, 3, 2),
    ("A3", 1): (1, 6, 10, 5),
    ("B3", 1): (1, 9, 18, 10),
}


@pytest.mark.parametrize("key,fv", sorted(F_VECTORS.items()))
def test_f_vectors(key, fv):
    label, m = key
    assert cluster(label, m).complex.f_vector() == fv


@pytest.mark.parametrize("key,fv", sorted(POSITIVE_F_VECTORS.items()))
def test_positive_f_vectors(key, fv):
    label, m = key
    assert cluster(label, m).positive_complex.f_vector() == fv


def test_facet_count_is_fuss_catalan():
    for label, m in (("A2", 1), ("A2", 2), ("B2", 1), ("A3", 1), ("A3", 2)):
        g = group(label)
        h, n = g.coxeter_number, g.rank
        cl = cluster(label, m)
        num = den = 1
        ambient = g.lattice.flat_id(g.fixed_space(0))
        for e in os_exponents(g, ambient):
            num *= m * h + e + 1
            den *= e + 1
        assert len(cl.complex.faces(n)) == num // den


def test_facet_products_reach_top():
    cl = cluster("A3")
    lat = cl.nc
    n = cl.group.rank
    for facet in cl.complex.faces(n):
        assert cl.face_product(facet) == lat.bottom()
        assert cl.underline(facet) == lat.top()
    assert cl.underline(()) == lat.bottom()


def test_underline_rank_matches_face_size():
    cl = cluster("B2", 2)
    for k in range(cl.group.rank + 1):
        for f in cl.complex.faces(k):
            assert cl.nc.rank_of[cl.underline(f)] == len(f)


def test_negative_simplex_at_m_zero():
    cl = cluster("A2", 0)
    assert cl.complex.f_vector() == (1, 2, 1)


def test_restricted_subcomplex_dimensions():
    cl = cluster("A2")
    lat = cl.nc
    for pi in range(lat.size):
        sub = cl.restricted_subcomplex(pi)
        assert sub.dim == lat.rank_of[pi] - 1
        assert sub.is_pure()


def test_link_fvector_check():
    cl = cluster("A3")
    for v in cl.complex.faces(1):
        assert cl.link_fvector_check(v)


def test_vertex_count():
    # n negative simple roots plus m colored copies of each positive root
    for label, m in (("A2", 3), ("B2", 2), ("I2(7)", 2)):
        g = group(label)
        assert cluster(label, m).complex.f_vector()[1] == m * g.npos + g.rank
