import json
from fractions import Fraction

from conftest import cluster, group, nc, pf
from coxcat import serialize
from coxcat.exact import number_field


def test_scalar():
    assert serialize.scalar(3) == 3
    assert serialize.scalar(Fraction(1, 3)) == "1/3"
    assert serialize.scalar(Fraction(4, 2)) == "2"
    K = number_field(5)
    doc = serialize.scalar(K.generator)
    assert doc["K"] == 5


def test_dumps_is_deterministic():
    doc = {"b": 1, "a": [2, 3]}
    s1 = serialize.dumps(doc)
    s2 = serialize.dumps({"a": [2, 3], "b": 1})
    assert s1 == s2
    assert s1.endswith("\n")
    assert json.loads(s1) == doc


def test_group_doc():
    doc = serialize.group_doc(group("A2"))
    assert doc["label"] == "A2"
    assert doc["order"] == 6
    assert doc["coxeter_number"] == 3
    assert len(doc["elements"]) == 6
    doc2 = serialize.group_doc(group("A1xA2"))
    assert doc2["coxeter_number"] is None


def test_nc_doc_roundtrips_structure():
    lat = nc("A2")
    doc = serialize.nc_doc(lat)
    assert doc["size"] == 5
    assert sorted(doc["ranks"]) == [0, 1, 1, 1, 2]
    assert len(doc["hasse"]) == 6
    assert "kreweras" in doc


def test_cluster_doc():
    doc = serialize.cluster_doc(cluster("A2"), positive=False)
    assert doc["f_vector"] == [1, 5, 5]
    assert len(doc["faces"]) == 11


def test_pf_doc():
    doc = serialize.pf_doc(pf("A2"))
    assert len(doc["elements"]) == 16
    assert all("rep_word" in e for e in doc["elements"])


def test_counts_doc_sorted():
    doc = serialize.counts_doc({(2, 1): 5, (1, 1, 1): 5, (3,): 1})
    assert doc == [[[1, 1, 1], 5], [[2, 1], 5], [[3], 1]]
