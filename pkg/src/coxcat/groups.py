"""Finite reflection groups as permutations of their root systems.

Roots are coordinate vectors in the simple-root basis: integer tuples on the
crystallographic path, Fraction or number-field tuples otherwise.  Group
elements are permutations of the root list, composed with the left-action
convention (vw)(alpha) = v(w(alpha)).  Two lengths coexist: `coxlen` is the
Coxeter length (= number of inversions) and `refl_len` is the absolute
reflection length (= codimension of the fixed space).
"""

from __future__ import annotations

from fractions import Fraction as Q
from functools import cached_property
from typing import Iterable, Sequence

from .coxeter import CoxeterDatum, datum_from_coxeter_matrix
from .errors import FlatNotInLattice, ReducibleGroup, RootCountExceeded
from .exact import RATIONALS, kernel_basis, residual, rref, scalar_key, scalar_sign
from .posets import FinitePoset

Subspace = tuple[tuple, ...]  # canonical RREF basis rows


def canonical_subspace(vectors: Iterable[Sequence], ncols: int) -> Subspace:
    work = [list(v) for v in vectors]
    rref(work)
    return tuple(tuple(r) for r in work)


def subspace_contains(big: Subspace, small: Subspace) -> bool:
    """Whether span(small) is inside span(big); rows must be RREF."""
    pivots = [next(j for j, x in enumerate(row) if x) for row in big]
    return all(not any(residual(big, pivots, v)) for v in small)


def _subspace_key(flat: Subspace):
    return tuple(tuple(scalar_key(x) for x in row) for row in flat)


class Group:
    def __init__(self, datum: CoxeterDatum, max_roots: int = 1500):
        self.datum = datum
        n = datum.rank
        self.rank = n
        if datum.crystallographic:
            C = datum.cartan
            self.ring = RATIONALS
            simples = [tuple(int(j == i) for j in range(n)) for i in range(n)]

            def apply(i: int, v: tuple) -> tuple:
                c = sum(C[i][j] * v[j] for j in range(n) if v[j])
                if not c:
                    return v
                w = list(v)
                w[i] -= c
                return tuple(w)

        else:
            G = datum.gram()
            ring = datum.ring
            self.ring = ring
            zero, one = ring.from_int(0), ring.from_int(1)
            simples = [
                tuple(one if j == i else zero for j in range(n)) for i in range(n)
            ]

            def apply(i: int, v: tuple) -> tuple:
                c = sum((G[i][j] * v[j] for j in range(n)), start=zero)
                w = list(v)
                w[i] = w[i] - c
                return tuple(w)

        self._apply_simple = apply
        all_roots = set(simples)
        frontier = list(simples)
        while frontier:
            new = []
            for v in frontier:
                for i in range(n):
                    w = apply(i, v)
                    if w not in all_roots:
                        all_roots.add(w)
                        new.append(w)
            if len(all_roots) > 2 * max_roots:
                raise RootCountExceeded(f"more than {max_roots} positive roots")
            frontier = new

        pos, neg = [], []
        for v in all_roots:
            signs = [scalar_sign(x) for x in v]
            if all(s >= 0 for s in signs):
                pos.append(v)
            else:
                assert all(s <= 0 for s in signs), f"mixed-sign root {v}"
                neg.append(v)
        assert len(pos) == len(neg)
        pos.sort()
        neg.sort()
        self.roots: list[tuple] = pos + neg
        self.npos = len(pos)
        self.root_index = {v: i for i, v in enumerate(self.roots)}
        self.neg_of = [
            self.root_index[tuple(-x for x in v)] for v in self.roots
        ]
        self.simple_root_ids = [self.root_index[s] for s in simples]
        nroots = len(self.roots)
        self.simple_perms = [
            tuple(self.root_index[apply(i, self.roots[r])] for r in range(nroots))
            for i in range(n)
        ]

        ident = tuple(range(nroots))
        self.elements: list[tuple] = [ident]
        self.index: dict[tuple, int] = {ident: 0}
        self.parent = [-1]
        self.lastgen = [-1]
        self.coxlen = [0]
        pos_i = 0
        while pos_i < len(self.elements):
            p = self.elements[pos_i]
            for i in range(n):
                q = tuple(p[x] for x in self.simple_perms[i])
                if q not in self.index:
                    self.index[q] = len(self.elements)
                    self.elements.append(q)
                    self.parent.append(pos_i)
                    self.lastgen.append(i)
                    self.coxlen.append(self.coxlen[pos_i] + 1)
            pos_i += 1
        self.order = len(self.elements)

        self.inverse_ids = []
        for p in self.elements:
            inv = [0] * nroots
            for r, img in enumerate(p):
                inv[img] = r
            self.inverse_ids.append(self.index[tuple(inv)])

        self._flats: list[Subspace] = [self._compute_fixed(w) for w in range(self.order)]
        self.refl_len = [n - len(f) for f in self._flats]

        self.reflections = [w for w in range(self.order) if self.refl_len[w] == 1]
        self.root_to_refl: dict[int, int] = {}
        self.refl_to_root: dict[int, int] = {}
        for t in self.reflections:
            p = self.elements[t]
            negated = [r for r in range(self.npos) if p[r] == self.neg_of[r]]
            assert len(negated) == 1, "reflection must negate exactly one positive root"
            self.root_to_refl[negated[0]] = t
            self.refl_to_root[t] = negated[0]
        assert len(self.reflections) == self.npos

        self._parabolic_cache: dict[Subspace, Parabolic] = {}
        self._lattice: IntersectionLattice | None = None

    # --- multiplication -------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        pa, pb = self.elements[a], self.elements[b]
        return self.index[tuple(pa[x] for x in pb)]

    def inv(self, a: int) -> int:
        return self.inverse_ids[a]

    def conj(self, a: int, w: int) -> int:
        """w a w^-1."""
        return self.mul(self.mul(w, a), self.inverse_ids[w])

    def element_order(self, a: int) -> int:
        k, b = 1, a
        while b != 0:
            b = self.mul(b, a)
            k += 1
        return k

    def word(self, a: int) -> tuple[int, ...]:
        out = []
        while a != 0:
            out.append(self.lastgen[a])
            a = self.parent[a]
        return tuple(reversed(out))

    # --- roots and lengths ----------------------------------------------

    def inversion_set(self, w: int) -> tuple[int, ...]:
        p = self.elements[w]
        return tuple(r for r in range(self.npos) if p[r] >= self.npos)

    def reflection(self, root_id: int) -> int:
        if root_id >= self.npos:
            root_id = self.neg_of[root_id]
        return self.root_to_refl[root_id]

    def coord_columns(self, w: int) -> list[tuple]:
        """Column j = coordinates of w(alpha_j)."""
        p = self.elements[w]
        return [self.roots[p[self.simple_root_ids[j]]] for j in range(self.rank)]

    def act_vector(self, w: int, v: Sequence) -> list:
        cols = self.coord_columns(w)
        return [
            sum(v[j] * cols[j][i] for j in range(self.rank))
            for i in range(self.rank)
        ]

    def _compute_fixed(self, w: int) -> Subspace:
        n = self.rank
        cols = self.coord_columns(w)
        if self.datum.crystallographic:
            rows = [[Q(cols[j][i] - (i == j)) for j in range(n)] for i in range(n)]
            ring = RATIONALS
        else:
            ring = self.ring
            one = ring.from_int(1)
            rows = [
                [cols[j][i] - (one if i == j else 0) for j in range(n)]
                for i in range(n)
            ]
        basis = kernel_basis(rows, n, ring)
        return canonical_subspace(basis, n)

    def fixed_space(self, w: int) -> Subspace:
        return self._flats[w]

    # --- Coxeter structure ------------------------------------------------

    @cached_property
    def bipartite_elements(self) -> tuple[int, int, int]:
        """(c_bullet, c_circle, c) element ids for the datum's bipartition."""

        def prod(idxs):
            a = 0
            for i in idxs:
                a = self.mul(a, self.index[self.simple_perms[i]])
            return a

        cb = prod(self.datum.bullet)
        cc = prod(self.datum.circle)
        return cb, cc, self.mul(cb, cc)

    @property
    def coxeter_element(self) -> int:
        return self.bipartite_elements[2]

    @cached_property
    def component_data(self) -> list[dict]:
        out = []
        for label, idxs in self.datum.components:
            idx_set = set(idxs)
            nroots = sum(
                1
                for r in range(self.npos)
                if {j for j, x in enumerate(self.roots[r]) if x} <= idx_set
            )
            assert (2 * nroots) % len(idxs) == 0
            out.append(
                {"label": label, "indices": idxs, "npos": nroots,
                 "h": 2 * nroots // len(idxs)}
            )
        assert sum(c["npos"] for c in out) == self.npos
        return out

    @property
    def coxeter_number(self) -> int:
        if not self.datum.is_irreducible():
            raise ReducibleGroup(f"{self.datum.label} has several components")
        return self.component_data[0]["h"]

    # --- subgroups --------------------------------------------------------

    def closure(self, gens: Iterable[int]) -> tuple[int, ...]:
        gens = list(gens)
        seen = {0}
        frontier = [0]
        while frontier:
            new = []
            for a in frontier:
                for g in gens:
                    b = self.mul(a, g)
                    if b not in seen:
                        seen.add(b)
                        new.append(b)
            frontier = new
        return tuple(sorted(seen))

    def pointwise_stabilizer(self, flat: Subspace) -> "Parabolic":
        """Elements fixing the flat pointwise (generated by its reflections)."""
        if flat in self._parabolic_cache:
            return self._parabolic_cache[flat]
        gens = [
            t
            for t in self.reflections
            if all(self.act_vector(t, v) == list(v) for v in flat)
        ]
        ids = self.closure(gens)
        par = Parabolic(self, flat, ids)
        self._parabolic_cache[flat] = par
        return par

    def standard_parabolic(self, simple_subset: Iterable[int]) -> tuple[int, ...]:
        gens = [self.index[self.simple_perms[i]] for i in simple_subset]
        return self.closure(gens)

    def min_coset_rep(self, w: int, par: "Parabolic") -> int:
        """Unique shortest element of the coset w * P."""
        best = None
        for p in par.ids:
            u = self.mul(w, p)
            if best is None or self.coxlen[u] < self.coxlen[best]:
                best, ties = u, 1
            elif self.coxlen[u] == self.coxlen[best]:
                ties += 1
        assert ties == 1, "coset minimum must be unique"
        return best

    @property
    def lattice(self) -> "IntersectionLattice":
        if self._lattice is None:
            self._lattice = IntersectionLattice(self)
        return self._lattice

    # --- symmetric-group model for irreducible type A ----------------------

    @cached_property
    def sn_model(self) -> list[tuple[int, ...]] | None:
        """One-line images on {0..rank} when the datum is irreducible type A."""
        if not (self.datum.is_irreducible() and self.datum.components[0][0].startswith("A")
                and self.datum.crystallographic):
            return None
        letters = self.rank + 1
        taus = []
        for i in range(self.rank):
            t = list(range(letters))
            t[i], t[i + 1] = t[i + 1], t[i]
            taus.append(tuple(t))
        model: list[tuple[int, ...]] = [tuple(range(letters))]
        for a in range(1, self.order):
            p, i = model[self.parent[a]], self.lastgen[a]
            model.append(tuple(p[x] for x in taus[i]))
        return model

    @cached_property
    def one_line_index(self) -> dict[tuple[int, ...], int]:
        model = self.sn_model
        assert model is not None, "one-line lookups need irreducible type A"
        return {p: i for i, p in enumerate(model)}

    def root_pair(self, r: int) -> tuple[int, int]:
        """Positive root of type A as the pair (i, j), 0-based letters i < j."""
        coords = self.roots[r]
        support = [j for j, x in enumerate(coords) if x]
        assert all(coords[j] == 1 for j in support)
        lo, hi = support[0], support[-1]
        assert support == list(range(lo, hi + 1))
        return lo, hi + 1


class Parabolic:
    """A pointwise stabilizer W' with its flat, reflections, and own datum."""

    def __init__(self, group: Group, flat: Subspace, ids: tuple[int, ...]):
        self.group = group
        self.flat = flat
        self.ids = ids
        self.set = frozenset(ids)
        self.rank = group.rank - len(flat)
        self.refl_roots = tuple(
            sorted(group.refl_to_root[t] for t in ids if group.refl_len[t] == 1)
        )

    def __len__(self) -> int:
        return len(self.ids)

    @property
    def index(self) -> int:
        return self.group.order // len(self.ids)

    @cached_property
    def simple_roots(self) -> tuple[int, ...]:
        """Positive roots acting as the simple system of this reflection subgroup."""
        g = self.group
        psi = set(self.refl_roots)
        out = []
        for a in self.refl_roots:
            p = g.elements[g.root_to_refl[a]]
            if all(p[b] < g.npos for b in psi if b != a):
                out.append(a)
        assert len(out) == self.rank, (out, self.rank)
        return tuple(out)

    def descent_count(self, u: int) -> int:
        g = self.group
        p = g.elements[g.inverse_ids[u]]
        return sum(1 for b in self.simple_roots if p[b] >= g.npos)

    def descent_polynomial(self) -> tuple[int, ...]:
        """Coefficient k = number of elements with k left descents."""
        out = [0] * (self.rank + 1)
        for u in self.ids:
            out[self.descent_count(u)] += 1
        return tuple(out)

    @cached_property
    def datum(self) -> CoxeterDatum:
        g = self.group
        k = self.rank
        simples = self.simple_roots
        M = [[1 if i == j else 2 for j in range(k)] for i in range(k)]
        for i in range(k):
            for j in range(i + 1, k):
                ti = g.root_to_refl[simples[i]]
                tj = g.root_to_refl[simples[j]]
                M[i][j] = M[j][i] = g.element_order(g.mul(ti, tj))
        return datum_from_coxeter_matrix(M)


class IntersectionLattice:
    """All fixed spaces V^w ordered by reverse inclusion (V at the bottom)."""

    def __init__(self, group: Group):
        self.group = group
        n = group.rank
        flats = sorted(set(group._flats), key=lambda f: (n - len(f), _subspace_key(f)))
        self.flats = flats
        self.flat_ids = {f: i for i, f in enumerate(flats)}
        self.poset = FinitePoset.from_leq(
            len(flats), lambda x, y: subspace_contains(flats[x], flats[y])
        )
        self._act_cache: dict[tuple[int, int], int] = {}
        self._setwise: dict[int, tuple[int, ...]] = {}

    def __len__(self) -> int:
        return len(self.flats)

    def flat_id(self, flat: Subspace) -> int:
        try:
            return self.flat_ids[flat]
        except KeyError:
            raise FlatNotInLattice(f"{flat!r}") from None

    def dim(self, fid: int) -> int:
        return len(self.flats[fid])

    def act(self, w: int, fid: int) -> int:
        key = (w, fid)
        if key not in self._act_cache:
            g = self.group
            moved = canonical_subspace(
                [g.act_vector(w, v) for v in self.flats[fid]], g.rank
            )
            self._act_cache[key] = self.flat_id(moved)
        return self._act_cache[key]

    @cached_property
    def orbits(self) -> list[list[int]]:
        g = self.group
        gens = [g.index[p] for p in g.simple_perms]
        seen = set()
        out = []
        for fid in range(len(self.flats)):
            if fid in seen:
                continue
            orbit = {fid}
            frontier = [fid]
            while frontier:
                new = []
                for x in frontier:
                    for s in gens:
                        y = self.act(s, x)
                        if y not in orbit:
                            orbit.add(y)
                            new.append(y)
                frontier = new
            seen |= orbit
            out.append(sorted(orbit))
        return out

    @cached_property
    def orbit_rep(self) -> list[int]:
        rep = [0] * len(self.flats)
        for orb in self.orbits:
            for x in orb:
                rep[x] = orb[0]
        return rep

    def setwise_stabilizer(self, fid: int) -> tuple[int, ...]:
        if fid not in self._setwise:
            self._setwise[fid] = tuple(
                w for w in range(self.group.order) if self.act(w, fid) == fid
            )
        return self._setwise[fid]

    def parabolic(self, fid: int) -> Parabolic:
        return self.group.pointwise_stabilizer(self.flats[fid])

    def mobius(self, x: int, y: int) -> int:
        return self.poset.mobius(x, y)
