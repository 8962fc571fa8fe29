import pytest

from conftest import nc, pf
from coxcat.complexes import order_complex
from coxcat.errors import NotAnAutomorphism
from coxcat.homology import euler_from_profile, homology_profile
from coxcat.parking import pf_top_homology
from coxcat.posets import FinitePoset, bits


def chain(n):
    return FinitePoset.from_leq(n, lambda x, y: x <= y)


def boolean_lattice(n):
    return FinitePoset.from_leq(1 << n, lambda x, y: x & y == x)


def test_bits():
    assert list(bits(0b10110)) == [1, 2, 4]


def test_chain_basics():
    p = chain(3)
    assert p.minimals() == [0]
    assert p.maximals() == [2]
    assert p.ranks() == [0, 1, 2]
    assert p.covers()[0] == 0b010


def test_two_chain_multichains():
    # weakly increasing pairs in a 2-chain: (0,0), (0,1), (1,1)
    assert chain(2).multichain_count(2) == 3
    assert chain(2).multichain_count(0) == 1


def test_boolean_mobius():
    p = boolean_lattice(3)
    assert p.mobius(0, 7) == -1
    assert p.mobius(0, 3) == 1
    assert p.mobius(1, 2) == 0


def test_zeta_polynomiality_on_diamond():
    # bottom, two atoms, top: multichain counts are (m+1)^2
    p = FinitePoset.from_leq(4, lambda x, y: x == y or x == 0 or y == 3)
    for m in range(5):
        assert p.multichain_count(m) == (m + 1) ** 2
    assert p.zeta_value(-1) == p.mobius(0, 3) == 1


def test_zeta_at_minus_one_is_mobius():
    for label in ("A2", "B2", "A3"):
        lat = nc(label)
        p = lat.poset
        assert p.zeta_value(-1) == p.mobius(lat.bottom(), lat.top())


def test_zeta_at_minus_one_is_reduced_euler():
    # adjoin a top to PF; zeta(-1) then equals the reduced Euler
    # characteristic of the order complex of PF minus its bottom.
    for label in ("A2", "B2"):
        p = pf(label)
        bounded, _, _ = p.poset.with_bounds()
        chi = euler_from_profile(pf_top_homology(p))
        assert bounded.zeta_value(-1) == chi


def test_multichain_with_automorphism():
    p = pf("A2")
    g = p.group
    for w in (0, g.reflections[0]):
        images = p.action_images(w)
        assert p.poset.multichain_count(1, images) == sum(
            1 for i, j in enumerate(images) if i == j)


def test_multichain_rejects_non_automorphism():
    p = chain(3)
    with pytest.raises(NotAnAutomorphism):
        p.multichain_count(2, [2, 1, 0])


def test_with_bounds():
    p = FinitePoset.from_leq(2, lambda x, y: x == y)
    q, bot, top = p.with_bounds()
    assert q.n == 4
    assert q.minimals() == [bot]
    assert q.maximals() == [top]
    assert q.mobius(bot, top) == 1


def test_open_interval_and_order_complex():
    p = boolean_lattice(3)
    ids = p.open_interval(0, 7)
    assert len(ids) == 6
    cx = order_complex(p, ids)
    # proper part of the boolean lattice on 3 atoms is a hexagon
    assert cx.f_vector() == (1, 6, 6)
    prof = homology_profile(cx)
    assert prof[1] == (1, ())


def test_subposet_and_linear_extension():
    p = nc("A2").poset
    order = p.linear_extension()
    pos = {v: i for i, v in enumerate(order)}
    for x in range(p.n):
        for y in range(p.n):
            if p.leq(x, y) and x != y:
                assert pos[x] < pos[y]
    q = p.subposet(list(range(p.n)))
    assert q.n == p.n
