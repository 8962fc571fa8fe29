"""Generalized cluster complexes on colored almost-positive roots.

A vertex is a pair (root_id, color): positive roots carry colors 1..m,
negated simple roots carry color 1.  Compatibility is transported along the
rotation map until a negated simple appears, where the coefficient-zero rule
decides.  The complex is the flag complex of that relation; every face owns a
product (the unique NC element realized by ordering its reflections) and an
underline (the Kreweras complement of the product).
"""

from __future__ import annotations

from functools import cached_property
from itertools import permutations
from math import lcm

from .complexes import SimplicialComplex, enumerate_cliques
from .errors import ProductNotFound, ProductNotUnique, RotationBudgetExceeded
from .groups import Group
from .noncrossing import NcLattice

Vertex = tuple[int, int]


class ClusterComplex:
    def __init__(self, group: Group, m: int, nc: NcLattice | None = None):
        assert m >= 0
        self.group = group
        self.m = m
        self.nc = nc if nc is not None else NcLattice(group)
        assert self.nc.has_kreweras, "underline needs the bipartite Coxeter element"

        g = group
        self.verts: list[Vertex] = [
            (r, i) for r in range(g.npos) for i in range(1, m + 1)
        ] + [(g.neg_of[s], 1) for s in sorted(g.simple_root_ids)]
        assert len(self.verts) == m * g.npos + g.rank
        self.vert_id = {v: k for k, v in enumerate(self.verts)}

        self._bullet = {g.simple_root_ids[i] for i in g.datum.bullet}
        self._circle = {g.simple_root_ids[i] for i in g.datum.circle}
        self._c_perm = g.elements[self.nc.c]

        if m >= 1:
            images = [self.rotate(v) for v in self.verts]
            assert sorted(images) == sorted(self.verts), "rotation must be a bijection"
            perm = [self.vert_id[w] for w in images]
            self._budget = _perm_order(perm)
        else:
            self._budget = 0

        nv = len(self.verts)
        adj = [0] * nv
        for a in range(nv):
            for b in range(a + 1, nv):
                if self._pair_compatible(self.verts[a], self.verts[b]):
                    adj[a] |= 1 << b
                    adj[b] |= 1 << a
        self.adj = adj
        self.complex = SimplicialComplex.from_faces(enumerate_cliques(adj))
        assert self.complex.dim == g.rank - 1 and self.complex.is_pure()

        self._products: dict[tuple[int, ...], int] = {(): self.nc.top()}

    # --- rotation and compatibility ----------------------------------------

    def rotate(self, v: Vertex) -> Vertex:
        g = self.group
        r, i = v
        if r < g.npos:
            if i < self.m:
                return (r, i + 1)
            if r in self._circle:
                return (g.neg_of[r], 1)
            return (self._c_perm[r], 1)
        # negated simple, color 1
        p = g.neg_of[r]
        if p in self._bullet:
            return (p, 1)
        return (self._c_perm[r], 1)

    def _base_compatible(self, neg: Vertex, other: Vertex) -> bool:
        """neg is a negated simple; test its coefficient in the other root."""
        g = self.group
        s = g.neg_of[neg[0]]
        coeff = g.roots[other[0]][g.simple_root_ids.index(s)]
        return not coeff

    def _pair_compatible(self, u: Vertex, v: Vertex) -> bool:
        npos = self.group.npos
        for _ in range(self._budget + 1):
            if u[0] >= npos:
                return self._base_compatible(u, v)
            if v[0] >= npos:
                return self._base_compatible(v, u)
            u, v = self.rotate(u), self.rotate(v)
        raise RotationBudgetExceeded(f"no negated simple within {self._budget} steps")

    def compatible(self, u: Vertex, v: Vertex) -> bool:
        a, b = self.vert_id[u], self.vert_id[v]
        return bool(self.adj[a] >> b & 1)

    # --- faces ---------------------------------------------------------------

    def face_of_vertices(self, vs) -> tuple[int, ...]:
        return tuple(sorted(self.vert_id[v] for v in vs))

    def face_roots(self, face) -> list[int]:
        return [self.verts[k][0] for k in face]

    def face_product(self, face) -> int:
        """NC position of the unique ordered product of the face's reflections."""
        face = tuple(sorted(face))
        if face in self._products:
            return self._products[face]
        g = self.group
        refls = [g.reflection(self.verts[k][0]) for k in face]
        found = set()
        for order in permutations(refls):
            w = 0
            for t in order:
                w = g.mul(w, t)
            if g.refl_len[w] == len(face) and w in self.nc.pos:
                found.add(w)
        if not found:
            raise ProductNotFound(f"no ordering of face {face} lands in NC")
        if len(found) > 1:
            raise ProductNotUnique(f"face {face} admits {len(found)} NC products")
        out = self.nc.position(found.pop())
        self._products[face] = out
        return out

    def underline(self, face) -> int:
        return self.nc.kreweras(self.face_product(face))

    # --- subcomplexes ----------------------------------------------------------

    @cached_property
    def positive_complex(self) -> SimplicialComplex:
        npos = self.group.npos
        return self.complex.restrict_vertices(lambda k: self.verts[k][0] < npos)

    def positive_facet_roots(self) -> list[frozenset[int]]:
        n = self.group.rank
        return [frozenset(self.face_roots(f)) for f in self.positive_complex.faces(n)]

    def restricted_subcomplex(self, pi: int, positive: bool = False) -> SimplicialComplex:
        cx = self.positive_complex if positive else self.complex
        faces = [f for f in cx.all_faces() if self.nc.leq(self.underline(f), pi)]
        out = SimplicialComplex.from_faces(faces)
        assert out.dim == self.nc.rank_of[pi] - 1 and out.is_pure()
        return out

    # --- checks ------------------------------------------------------------------

    def link_fvector_check(self, face) -> bool:
        """Link of a face against the complex of the underline's parabolic."""
        par = self.nc.parabolic_of[self.underline(face)]
        link = self.complex.link(face)
        if par.rank == 0:
            return link.f_vector() == (1,)
        sub = ClusterComplex(Group(par.datum), self.m)
        return link.f_vector() == sub.complex.f_vector()

    def alternating_character_sum(self, w: int, positive: bool = False) -> int:
        """Sum over faces of (-1)^dim times the fixed cosets of w on W/W_underline."""
        g = self.group
        cx = self.positive_complex if positive else self.complex
        weights: dict[int, int] = {}
        for card, level in enumerate(cx.faces_by_card):
            s = (-1) ** (card - 1)
            for f in level:
                u = self.underline(f)
                weights[u] = weights.get(u, 0) + s
        total = 0
        for pos, wt in weights.items():
            if not wt:
                continue
            par = self.nc.parabolic_of[pos]
            hits = sum(
                1
                for u in range(g.order)
                if g.mul(g.mul(g.inverse_ids[u], w), u) in par.set
            )
            assert hits % len(par) == 0
            total += wt * (hits // len(par))
        return total


def _perm_order(perm: list[int]) -> int:
    seen = [False] * len(perm)
    out = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length, x = 0, start
        while not seen[x]:
            seen[x] = True
            x = perm[x]
            length += 1
        out = lcm(out, length)
    return out
