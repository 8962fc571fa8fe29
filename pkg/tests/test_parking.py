import pytest

from conftest import cluster, cpf, group, nc, pf
from coxcat.complexes import order_complex
from coxcat.errors import FussParameterUnsupported, ReducibleGroup
from coxcat.homology import betti, homology_profile, torsion_free
from coxcat.noncrossing import facets_within_inversions
from coxcat.parking import (helly_report, inversion_free_counts,
                            labeled_cluster_bijection_check, labeled_clusters,
                            park_char, pf_filter_iso_check,
                            pf_interval_iso_check, pf_top_homology,
                            whitney_check)

SIZES = {"A2": 16, "B2": 25, "A3": 125, "B3": 343, "I2(5)": 36, "I2(7)": 64}


@pytest.mark.parametrize("label,size", sorted(SIZES.items()))
def test_sizes(label, size):
    g = group(label)
    assert len(pf(label).elements) == size == (g.coxeter_number + 1) ** g.rank


def test_rank_sizes():
    ranks = pf("A2").poset.ranks()
    assert [ranks.count(r) for r in range(3)] == [1, 9, 6]


def test_cosets_partition_group():
    p = pf("B2")
    g = p.group
    lat = p.nc
    for q in range(lat.size):
        members = []
        ids = [i for i, (pos, _) in enumerate(p.elements) if pos == q]
        for i in ids:
            members.extend(p.coset_members(i))
        assert sorted(members) == list(range(g.order))
        for i in ids:
            rep = p.representative(i)
            assert g.coxlen[rep] == min(g.coxlen[u] for u in p.coset_members(i))


def test_action_permutes():
    p = pf("A2")
    g = p.group
    for w in range(g.order):
        images = p.action_images(w)
        assert sorted(images) == list(range(len(p.elements)))
        for u in range(g.order):
            left = p.action_images(g.mul(w, u))
            right = [images[i] for i in p.action_images(u)]
            assert left == right


def test_singletons_are_the_maximal_elements():
    p = pf("A2")
    g = p.group
    tops = {p.singleton(w) for w in range(g.order)}
    assert len(tops) == g.order
    maxs = set(p.poset.maximals())
    assert tops == maxs


TOP_HOMOLOGY = {"A2": 4, "B2": 9, "A3": 27, "B3": 125, "I2(7)": 36}


@pytest.mark.parametrize("label,rank", sorted(TOP_HOMOLOGY.items()))
def test_top_homology(label, rank):
    g = group(label)
    n = g.rank
    prof = pf_top_homology(pf(label))
    assert torsion_free(prof)
    assert betti(prof, n - 1) == rank == (g.coxeter_number - 1) ** n
    for d in prof:
        if d != n - 1:
            assert prof[d] == (0, ())


def test_park_char():
    g = group("A2")
    assert park_char(g, 1, 0) == 16
    assert park_char(g, 2, 0) == 49
    t = g.reflections[0]
    assert park_char(g, 1, t) == 4
    assert park_char(g, 1, t, prime=True) == 2
    c = g.coxeter_element
    assert park_char(g, 3, c) == 1
    with pytest.raises(ReducibleGroup):
        park_char(group("A1xA1"), 1, 0)


def test_multichain_character():
    for label in ("A2", "B2"):
        p = pf(label)
        g = p.group
        for m in (1, 2, 3):
            for w in range(g.order):
                images = p.action_images(w)
                assert p.poset.multichain_count(m, images) == park_char(g, m, w)


def test_interval_and_filter_isomorphisms():
    for label in ("A2", "B2"):
        p = pf(label)
        for w in range(1, p.group.order):
            assert pf_interval_iso_check(p, w)
        for i in range(len(p.elements)):
            assert pf_filter_iso_check(p, i)


def test_labeled_clusters():
    for label in ("A2", "B2"):
        g = group(label)
        cl = cluster(label)
        h, n = g.coxeter_number, g.rank
        assert len(labeled_clusters(cl)) == (h + 1) ** n
        assert len(labeled_clusters(cl, positive=True)) == (h - 1) ** n
    with pytest.raises(FussParameterUnsupported):
        labeled_clusters(cluster("A2", 2))


def test_inversion_free_counts_agree():
    for label in ("A2", "B2", "A3"):
        g = group(label)
        cl = cluster(label)
        for w in range(g.order):
            a, b = inversion_free_counts(cl, w)
            assert a == b


def test_labeled_cluster_bijection():
    for label in ("A2", "B2"):
        rep = labeled_cluster_bijection_check(cluster(label), pf(label))
        assert rep["ok"]


def test_inversion_ideal_homology():
    # the ideal below Inv(w) in NC has top homology counting the
    # positive facets inside the inversion set
    for label in ("A2", "B2"):
        g = group(label)
        lat = nc(label)
        cl = cluster(label)
        pos = cl.positive_facet_roots()
        n = g.rank
        total = 0
        for w in range(1, g.order):
            cx = order_complex(lat.poset, lat.inversion_ideal(w))
            prof = homology_profile(cx)
            k = facets_within_inversions(g, w, pos)
            total += k
            assert torsion_free(prof)
            assert betti(prof, n - 2) == k
        assert total == (g.coxeter_number - 1) ** n


def test_helly():
    rep = helly_report(pf("A2"))
    assert rep["holds"]
    assert rep["counterexample"] is None
    assert rep["rank_one_elements"] == 9
    assert rep["rank_one_families"] > 0


def test_whitney():
    for label in ("A2", "B2"):
        assert whitney_check(pf(label), cpf(label, 1, True).complex)
