"""Regions of the m-Catalan arrangement, floors, and h-polynomial statistics.

Points live in the coordinates y_j = <alpha_j, x> for the simple roots, so a
hyperplane <alpha, x> = k is the integer equation c(alpha).y = k with c the
simple-root coordinates of alpha (crystallographic data only).  Regions are
found by inserting hyperplanes one at a time and splitting; feasibility of an
open side is decided by an exact rational simplex (Bland's rule) maximizing
the least slack.  Walls need no LP: flipping one sign in a region's vector is
realizable exactly when that hyperplane supports a facet.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cluster import ClusterComplex
from .enumerative import Poly, h_poly_formula
from .errors import NonCrystallographic
from .groups import Group
from .posets import FinitePoset

Row = tuple[Fraction, ...]


def _pivot(T: list[list[Fraction]], basis: list[int], r: int, c: int) -> None:
    piv = T[r][c]
    T[r] = [v / piv for v in T[r]]
    for i in range(len(T)):
        if i != r and T[i][c]:
            f = T[i][c]
            T[i] = [a - f * b for a, b in zip(T[i], T[r])]
    basis[r] = c


def _optimize(T: list[list[Fraction]], basis: list[int], ncols: int) -> bool:
    """Bland's rule on a tableau whose last row holds reduced costs (max);
    False means unbounded."""
    while True:
        col = next((j for j in range(ncols) if T[-1][j] > 0), None)
        if col is None:
            return True
        row = None
        for i in range(len(T) - 1):
            if T[i][col] > 0:
                ratio = T[i][-1] / T[i][col]
                if row is None or ratio < best or (ratio == best and basis[i] < basis[row]):
                    row, best = i, ratio
        if row is None:
            return False
        _pivot(T, basis, row, col)


def lp_max(obj: list[Fraction], rows: list[list[Fraction]],
           rhs: list[Fraction]) -> tuple[Fraction, list[Fraction]] | None:
    """max obj.x with rows.x <= rhs and x >= 0; None when infeasible."""
    m, n = len(rows), len(obj)
    need_art = [i for i in range(m) if rhs[i] < 0]
    ncols = n + m + len(need_art)
    T: list[list[Fraction]] = []
    basis: list[int] = []
    art_col = {i: n + m + j for j, i in enumerate(need_art)}
    for i in range(m):
        row = [Fraction(v) for v in rows[i]] + [Fraction(0)] * (m + len(need_art) + 1)
        row[n + i] = Fraction(1)
        row[-1] = Fraction(rhs[i])
        if i in art_col:
            row = [-v for v in row]
            row[art_col[i]] = Fraction(1)
            basis.append(art_col[i])
        else:
            basis.append(n + i)
        T.append(row)
    if need_art:
        # phase 1: maximize minus the sum of artificials, which are basic in
        # exactly the negated rows
        z = [Fraction(0)] * (ncols + 1)
        for i in need_art:
            z = [a + b for a, b in zip(z, T[i])]
        for j in range(n + m, ncols):
            z[j] = Fraction(0)
        T.append(z)
        assert _optimize(T, basis, n + m)
        if T[-1][-1] != 0:
            return None
        T.pop()
        for r in range(m):
            if basis[r] >= n + m:
                c = next((j for j in range(n + m) if T[r][j] != 0), None)
                if c is not None:
                    _pivot(T, basis, r, c)
        # rows still carrying an artificial are redundant equalities at zero;
        # drop them so phase 2 cannot relax the original constraint
        keep = [r for r in range(m) if basis[r] < n + m]
        T = [T[r] for r in keep]
        basis = [basis[r] for r in keep]
    z = [Fraction(v) for v in obj] + [Fraction(0)] * (ncols + 1 - n)
    for r in range(len(T)):
        if z[basis[r]]:
            f = z[basis[r]]
            z = [a - f * b for a, b in zip(z, T[r])]
    T.append(z)
    assert _optimize(T, basis, n + m), "objective must be bounded here"
    x = [Fraction(0)] * n
    for r in range(len(T) - 1):
        if basis[r] < n:
            x[basis[r]] = T[r][-1]
    return -T[-1][-1], x


def _interior_point(cons: list[tuple[tuple[int, ...], int, int]],
                    n: int) -> tuple[Fraction, ...] | None:
    """A point with s(a.y - k) > 0 for every (a, k, s), via slack maximization
    capped at 1; y is free, split as u - v."""
    nv = 2 * n + 1
    obj = [Fraction(0)] * nv
    obj[-1] = Fraction(1)
    rows, rhs = [], []
    for a, k, s in cons:
        row = [Fraction(-s * c) for c in a] + [Fraction(s * c) for c in a] + [Fraction(1)]
        rows.append(row)
        rhs.append(Fraction(-s * k))
    rows.append([Fraction(0)] * (nv - 1) + [Fraction(1)])
    rhs.append(Fraction(1))
    out = lp_max(obj, rows, rhs)
    if out is None or out[0] <= 0:
        return None
    x = out[1]
    return tuple(x[j] - x[n + j] for j in range(n))


@dataclass
class Region:
    signs: tuple[int, ...]
    witness: tuple[Fraction, ...]


class CatalanArrangement:
    def __init__(self, group: Group, m: int):
        if not group.datum.crystallographic:
            raise NonCrystallographic(group.datum.label)
        assert m >= 0
        self.group = group
        self.m = m
        n = group.rank
        self.hyperplanes: list[tuple[tuple[int, ...], int]] = [
            (tuple(group.roots[r]), k)
            for r in range(group.npos) for k in range(-m, m + 1)
        ]

        def cons_of(signs: list[int]) -> list[tuple[tuple[int, ...], int, int]]:
            return [
                (self.hyperplanes[j][0], self.hyperplanes[j][1], s)
                for j, s in enumerate(signs)
            ]

        live: list[tuple[list[int], tuple[Fraction, ...]]] = [
            ([], tuple(Fraction(0) for _ in range(n)))
        ]
        for a, k in self.hyperplanes:
            nxt = []
            for signs, y in live:
                val = sum(c * yi for c, yi in zip(a, y)) - k
                sides = [1, -1] if val == 0 else [-1 if val > 0 else 1]
                if val != 0:
                    nxt.append((signs + [1 if val > 0 else -1], y))
                grew = val != 0
                for s in sides:
                    pt = _interior_point(cons_of(signs) + [(a, k, s)], n)
                    if pt is not None:
                        nxt.append((signs + [s], pt))
                        grew = True
                assert grew, "a region lost both sides of a hyperplane"
            live = nxt
        self.regions = [Region(tuple(signs), y) for signs, y in live]
        self.index = {r.signs: i for i, r in enumerate(self.regions)}
        assert len(self.index) == len(self.regions)

    def __len__(self) -> int:
        return len(self.regions)

    # --- walls and floors, from sign vectors alone ---------------------------

    def walls(self, i: int) -> list[int]:
        signs = self.regions[i].signs
        out = []
        for j in range(len(self.hyperplanes)):
            flipped = signs[:j] + (-signs[j],) + signs[j + 1:]
            if flipped in self.index:
                out.append(j)
        return out

    def floors(self, i: int) -> list[int]:
        signs = self.regions[i].signs
        return [
            j for j in self.walls(i)
            if self.hyperplanes[j][1] != 0
            and signs[j] == (1 if self.hyperplanes[j][1] > 0 else -1)
        ]

    def m_floors(self, i: int) -> list[int]:
        if self.m == 0:
            return []
        return [j for j in self.floors(i) if self.hyperplanes[j][1] == self.m]

    def mfl(self, i: int) -> int:
        return len(self.m_floors(i))

    def dominant_ids(self) -> list[int]:
        zero = [j for j, (_, k) in enumerate(self.hyperplanes) if k == 0]
        return [
            i for i, r in enumerate(self.regions)
            if all(r.signs[j] == 1 for j in zero)
        ]

    # --- the W-action ---------------------------------------------------------

    def act_point(self, w: int, y: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
        """Image of a point: <alpha_j, wx> = <w^-1 alpha_j, x>."""
        g = self.group
        perm = g.elements[g.inverse_ids[w]]
        return tuple(
            sum(c * yi for c, yi in zip(g.roots[perm[g.simple_root_ids[j]]], y))
            for j in range(g.rank)
        )

    def region_of(self, y: tuple[Fraction, ...]) -> int:
        signs = []
        for a, k in self.hyperplanes:
            val = sum(c * yi for c, yi in zip(a, y)) - k
            assert val != 0, "point on a hyperplane"
            signs.append(1 if val > 0 else -1)
        return self.index[tuple(signs)]

    def act_region(self, w: int, i: int) -> int:
        return self.region_of(self.act_point(w, self.regions[i].witness))

    # --- statistics against the complexes ------------------------------------

    def parabolic_type_flat(self, i: int):
        """Linear flat parallel to the intersection of the region's m-floors."""
        g = self.group
        w = 0
        count = 0
        for j in self.m_floors(i):
            root = self.hyperplanes[j][0]
            rid = g.root_index[root]
            w = g.mul(w, g.reflection(rid))
            count += 1
        assert g.refl_len[w] == count, "m-floor normals must be independent"
        return g.fixed_space(w)

    def lemma_orbit_check(self, i: int) -> bool:
        """Distribution of mfl over the W-orbit of a dominant region equals
        [W:W_X] Des(W_X; z) for its parabolic type X."""
        g = self.group
        par = g.pointwise_stabilizer(self.parabolic_type_flat(i))
        des = par.descent_polynomial()
        dist = [0] * (g.rank + 1)
        for w in range(g.order):
            dist[self.mfl(self.act_region(w, i))] += 1
        want = [0] * (g.rank + 1)
        for j, c in enumerate(des):
            want[j] = par.index * c
        return dist == want

    def intersection_poset(self) -> tuple[FinitePoset, list[int]]:
        """Nonempty affine flats by reverse inclusion; dims alongside."""
        n = self.group.rank
        start = _rref([])
        flats = {start: 0}
        order = [start]
        frontier = [start]
        while frontier:
            nxt = []
            for sys in frontier:
                for a, k in self.hyperplanes:
                    new = _rref(list(sys) + [tuple(Fraction(c) for c in a) + (Fraction(k),)])
                    if new is None or new in flats:
                        continue
                    flats[new] = len(order)
                    order.append(new)
                    nxt.append(new)
            frontier = nxt
        dims = [n - len(sys) for sys in order]

        def leq(x: int, y: int) -> bool:
            # x contains y: y's system implies every row of x
            merged = _rref(list(order[y]) + list(order[x]))
            return merged is not None and len(merged) == len(order[y])

        return FinitePoset.from_leq(len(order), leq), dims


def _rref(rows: list[tuple[Fraction, ...]]) -> tuple[Row, ...] | None:
    """Reduced row echelon form of an augmented system; None if inconsistent."""
    rows = [list(r) for r in rows]
    out: list[list[Fraction]] = []
    for row in rows:
        for r in out:
            lead = next(j for j, v in enumerate(r) if v)
            if row[lead]:
                f = row[lead]
                row = [a - f * b for a, b in zip(row, r)]
        nz = next((j for j, v in enumerate(row) if v), None)
        if nz is None:
            continue
        if nz == len(row) - 1:
            return None
        row = [v / row[nz] for v in row]
        for r in out:
            if r[nz]:
                f = r[nz]
                r[:] = [a - f * b for a, b in zip(r, row)]
        out.append(row)
    out.sort(key=lambda r: next(j for j, v in enumerate(r) if v))
    return tuple(tuple(r) for r in out)


def verify_prop_9_1(arr: CatalanArrangement,
                    cluster: ClusterComplex | None = None) -> bool:
    """Dominant-region m-floor statistic against the cluster h-polynomial."""
    assert arr.m >= 1
    g = arr.group
    if cluster is None:
        cluster = ClusterComplex(g, arr.m)
    dist = [0] * (g.rank + 1)
    for i in arr.dominant_ids():
        dist[g.rank - arr.mfl(i)] += 1
    return tuple(dist) == cluster.complex.h_vector()


def verify_thm_9_3(arr: CatalanArrangement) -> bool:
    """All-region m-floor statistic against the closed-form h-polynomial."""
    assert arr.m >= 1
    g = arr.group
    dist = [0] * (g.rank + 1)
    for i in range(len(arr)):
        dist[g.rank - arr.mfl(i)] += 1
    return tuple(dist) == h_poly_formula(g, arr.m)
