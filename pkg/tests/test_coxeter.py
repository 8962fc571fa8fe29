import pytest

from coxcat.coxeter import parse_type, product_datum
from coxcat.exact import NumberField


def test_parse_crystallographic():
    d = parse_type("A2")
    assert d.label == "A2"
    assert d.rank == 2
    assert d.coxeter_matrix == ((1, 3), (3, 1))
    assert d.crystallographic
    assert d.cartan is not None
    assert d.components == (("A2", (0, 1)),)
    assert d.is_irreducible()


def test_parse_dihedral():
    d = parse_type("I2(5)")
    assert d.rank == 2
    assert d.coxeter_matrix[0][1] == 5
    assert not d.crystallographic
    assert isinstance(d.ring, NumberField)
    assert d.ring.K == 5


def test_parse_product():
    d = parse_type("A1xA2")
    assert d.rank == 3
    assert d.components == (("A1", (0,)), ("A2", (1, 2)))
    assert not d.is_irreducible()


def test_product_datum_label():
    d = product_datum(parse_type("A1"), parse_type("A2"))
    assert d.label == "A1xA2"
    assert d.rank == 3


def test_bipartition_covers_nodes():
    for label in ("A3", "B3", "A1xA2", "I2(7)"):
        d = parse_type(label)
        assert sorted(d.bullet + d.circle) == list(range(d.rank))
        M = d.coxeter_matrix
        for part in (d.bullet, d.circle):
            for i in part:
                for j in part:
                    assert i == j or M[i][j] == 2


def test_gram_symmetric():
    for label in ("B2", "I2(5)", "H3"):
        G = parse_type(label).gram()
        n = len(G)
        for i in range(n):
            for j in range(n):
                assert G[i][j] == G[j][i]


def test_unknown_token_rejected():
    with pytest.raises(AssertionError):
        parse_type("Z9")
