"""Face counts in closed form: OS exponents, descent polynomials, Kung checks.

Polynomials are integer coefficient tuples, low degree first.  Restriction
characteristic polynomials factor over the integers with all roots >= 1;
anything else raises instead of falling back to approximation.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, prod

from .cluster import ClusterComplex
from .errors import NonIntegerRoots
from .groups import Group
from .posets import FinitePoset, bits

Poly = tuple[int, ...]


def char_poly_restriction(group: Group, fid: int) -> Poly:
    """Moebius sum over flats inside the given one; monic of degree dim."""
    lat = group.lattice
    out = [0] * (lat.dim(fid) + 1)
    for y in bits(lat.poset.up[fid]):
        out[lat.dim(y)] += lat.mobius(fid, y)
    return tuple(out)


def os_exponents(group: Group, fid: int) -> tuple[int, ...]:
    """Integer roots of the restriction characteristic polynomial, ascending."""
    poly = list(char_poly_restriction(group, fid))
    roots: list[int] = []
    b = 1
    while len(poly) > 1:
        if poly[0] == 0 or b > abs(poly[0]):
            raise NonIntegerRoots(f"flat {fid}: leftover factor {poly}")
        # synthetic division by (t - b), high coefficient first
        quot: list[int] = []
        acc = 0
        for c in reversed(poly):
            acc = acc * b + c if quot else c
            quot.append(acc)
        rem = quot.pop()
        if rem == 0:
            roots.append(b)
            poly = quot[::-1]
        else:
            b += 1
    assert poly == [1]
    return tuple(roots)


def f_poly_formula(group: Group, m: int, positive: bool = False) -> Poly:
    a = m * group.coxeter_number + (-1 if positive else 1)
    lat = group.lattice
    out = [0] * (group.rank + 1)
    for orb in lat.orbits:
        c = prod(a + b for b in os_exponents(group, orb[0]))
        out[lat.dim(orb[0])] += len(orb) * c
    return tuple(out)


def h_poly_formula(group: Group, m: int, positive: bool = False) -> Poly:
    a = m * group.coxeter_number + (-1 if positive else 1)
    lat = group.lattice
    out = [0] * (group.rank + 1)
    for orb in lat.orbits:
        c = prod(a - b for b in os_exponents(group, orb[0]))
        des = lat.parabolic(orb[0]).descent_polynomial()
        d = lat.dim(orb[0])
        for j, coef in enumerate(des):
            out[d + j] += len(orb) * c * coef
    return tuple(out)


def orbit_face_count_check(cluster: ClusterComplex, positive: bool = False) -> bool:
    """Faces grouped by conjugacy of the underline parabolic, against
    prod(mh+-1+b_i^X) / [N(X):W_X] on the flat orbit."""
    g = cluster.group
    lat = g.lattice
    a = cluster.m * g.coxeter_number + (-1 if positive else 1)
    cx = cluster.positive_complex if positive else cluster.complex
    actual: dict[int, int] = {}
    for f in cx.all_faces():
        par = cluster.nc.parabolic_of[cluster.underline(f)]
        rep = lat.orbit_rep[lat.flat_id(par.flat)]
        actual[rep] = actual.get(rep, 0) + 1
    for orb in lat.orbits:
        x = orb[0]
        num = prod(a + b for b in os_exponents(g, x))
        norm = len(lat.setwise_stabilizer(x)) // len(lat.parabolic(x).ids)
        if actual.get(x, 0) * norm != num:
            return False
    return True


def kung_identity_check(group: Group, s: int, t: int) -> bool:
    """chi(K, st) = sum_Y chi(K_Y, s) chi(K^Y, t), evaluated at integers."""
    lat = group.lattice
    poset = lat.poset
    [bot] = poset.minimals()

    def loc(y: int, u: int) -> int:
        return sum(
            poset.mobius(bot, z) * u ** lat.dim(z)
            for z in range(len(lat)) if poset.leq(z, y)
        )

    def res(y: int, u: int) -> int:
        return sum(poset.mobius(y, z) * u ** lat.dim(z) for z in bits(poset.up[y]))

    lhs = res(bot, s * t)
    return lhs == sum(loc(y, s) * res(y, t) for y in range(len(lat)))


def kung_restriction_check(group: Group, fid: int, m: int,
                           positive: bool = False) -> bool:
    """prod(mh+-1+b_i^X) = sum over flats Y inside X of
    prod(mh+-1-b_i^Y) times the region count of the localization of A^X at Y;
    Kung at (s, t) = (-1, mh+-1) plus region counting."""
    a = m * group.coxeter_number + (-1 if positive else 1)
    lat = group.lattice
    poset = lat.poset
    lhs = prod(a + b for b in os_exponents(group, fid))
    rhs = 0
    for y in bits(poset.up[fid]):
        regs = (-1) ** lat.dim(fid) * sum(
            poset.mobius(fid, z) * (-1) ** lat.dim(z)
            for z in bits(poset.up[fid]) if poset.leq(z, y)
        )
        rhs += prod(a - b for b in os_exponents(group, y)) * regs
    return lhs == rhs


def zaslavsky_regions(poset: FinitePoset, dim_of: list[int]) -> int:
    """Region count of an arrangement from its intersection poset."""
    [bot] = poset.minimals()
    return (-1) ** dim_of[bot] * sum(
        poset.mobius(bot, x) * (-1) ** dim_of[x] for x in range(poset.n)
    )


def quasi_stirling(n: int) -> Poly:
    """Descent polynomial over quasi-Stirling permutations of length 2n:
    (1-z)^(2n+1) sum_i i^n/(n+1) C(n+i, i) z^i, which telescopes at degree n."""
    assert n >= 1

    def coeff(j: int) -> int:
        c = sum(
            Fraction((-1) ** (j - i) * comb(2 * n + 1, j - i), n + 1)
            * i ** n * comb(n + i, i)
            for i in range(j + 1)
        )
        assert c.denominator == 1
        return int(c)

    assert coeff(n + 1) == 0 and coeff(n + 2) == 0
    return tuple(coeff(j) for j in range(n + 1))
