"""Noncrossing partition lattices inside the absolute order.

The absolute order here puts the Coxeter element c at the BOTTOM: v >= w
means refl_len(v) + refl_len(v^-1 w) = refl_len(w), the lattice is
NC = {w : w >= c} ordered by pi <= tau iff tau >= pi, and the rank of pi is
rank(W) - refl_len(pi) = dim of its fixed space.  Joins go through the
parabolic dictionary (W_{pi v tau} = W_pi n W_tau); meets by interval scan.
"""

from __future__ import annotations

from functools import cached_property

from .errors import (IdentityElement, NotBipartiteCoxeter, NotCoxeterElement,
                     NotInNC)
from .groups import Group, Parabolic
from .posets import FinitePoset, bits


def abs_geq(group: Group, v: int, w: int) -> bool:
    """v >= w in absolute order (identity on top of nothing: e >= w always)."""
    return (
        group.refl_len[v] + group.refl_len[group.mul(group.inv(v), w)]
        == group.refl_len[w]
    )


class NcLattice:
    def __init__(self, group: Group, c: int | None = None, verify: bool = True):
        self.group = group
        n = group.rank
        if c is None:
            c = group.coxeter_element
        if group.refl_len[c] != n:
            raise NotCoxeterElement(f"reflection length {group.refl_len[c]} != rank {n}")
        self.c = c
        members = [
            w
            for w in range(group.order)
            if group.refl_len[w]
            + group.refl_len[group.mul(group.inverse_ids[w], c)]
            == n
        ]
        members.sort(key=lambda w: (n - group.refl_len[w], w))
        self.ids = members
        self.pos = {w: i for i, w in enumerate(members)}
        self.rank_of = [n - group.refl_len[w] for w in members]
        self.size = len(members)

        rl = group.refl_len
        inv = group.inverse_ids
        mul = group.mul

        def leq(i: int, j: int) -> bool:
            a, b = members[i], members[j]
            return rl[b] + rl[mul(inv[b], a)] == rl[a]

        self.poset = FinitePoset.from_leq(self.size, leq)
        assert self.poset.ranks() == self.rank_of

        self.parabolic_of: list[Parabolic] = [
            group.pointwise_stabilizer(group.fixed_space(w)) for w in members
        ]
        self.par_index: dict[frozenset, int] = {}
        for i, par in enumerate(self.parabolic_of):
            assert par.set not in self.par_index, "parabolic map not injective on NC"
            self.par_index[par.set] = i

        if verify:
            self._verify_lattice()

    # --- basic access -----------------------------------------------------

    def position(self, w: int) -> int:
        """Lattice position of a group element; NotInNC when absent."""
        try:
            return self.pos[w]
        except KeyError:
            raise NotInNC(f"element {w} is not above the Coxeter element") from None

    def leq(self, i: int, j: int) -> bool:
        return self.poset.leq(i, j)

    def bottom(self) -> int:
        return 0

    def top(self) -> int:
        return self.pos[0]

    def atoms(self) -> list[int]:
        return [i for i in range(self.size) if self.rank_of[i] == 1]

    def elements_of_rank(self, r: int) -> list[int]:
        return [i for i in range(self.size) if self.rank_of[i] == r]

    # --- lattice operations -------------------------------------------------

    def join(self, i: int, j: int) -> int:
        inter = self.parabolic_of[i].set & self.parabolic_of[j].set
        k = self.par_index.get(frozenset(inter))
        assert k is not None, "parabolic intersection left the lattice"
        assert self.leq(i, k) and self.leq(j, k)
        return k

    def meet(self, i: int, j: int) -> int:
        lower = self.poset.down[i] & self.poset.down[j]
        best = max(bits(lower), key=lambda x: (self.rank_of[x], -x))
        ties = [x for x in bits(lower) if self.rank_of[x] == self.rank_of[best]]
        assert len(ties) == 1, "meet not unique"
        assert lower & ~self.poset.down[best] == 0, "meet is not a greatest lower bound"
        return best

    def join_of(self, items: list[int]) -> int:
        out = 0
        for i in items:
            out = self.join(out, i)
        return out

    def _verify_lattice(self) -> None:
        for i in range(self.size):
            for j in range(i + 1, self.size):
                k = self.join(i, j)
                ub = self.poset.up[i] & self.poset.up[j]
                assert ub >> k & 1 and ub & ~self.poset.up[k] == 0, (
                    "join law violated"
                )

    # --- Kreweras complement -------------------------------------------------

    @property
    def has_kreweras(self) -> bool:
        return self.c == self.group.coxeter_element

    def kreweras(self, i: int) -> int:
        """kappa(pi) = c_bullet pi c_circle; bipartite Coxeter element only."""
        if not self.has_kreweras:
            raise NotBipartiteCoxeter(
                "Kreweras complement is wired to the bipartite Coxeter element"
            )
        g = self.group
        cb, cc, _ = g.bipartite_elements
        img = g.mul(cb, g.mul(self.ids[i], cc))
        k = self.position(img)
        assert self.rank_of[k] == g.rank - self.rank_of[i]
        return k

    # --- prime elements -----------------------------------------------------

    @cached_property
    def _proper_standard_union(self) -> frozenset[int]:
        g = self.group
        out: set[int] = set()
        n = g.rank
        for skip in range(n):
            out.update(g.standard_parabolic([i for i in range(n) if i != skip]))
        return frozenset(out)

    def is_prime(self, i: int) -> bool:
        """Whether pi avoids every proper standard parabolic subgroup."""
        return self.ids[i] not in self._proper_standard_union

    # --- inversion ideals -----------------------------------------------------

    def reflection_position(self, root_id: int) -> int:
        return self.position(self.group.root_to_refl[root_id])

    def inversion_ideal(self, w: int) -> list[int]:
        """Positions of the NC-bar ideal generated by the reflections in Inv(w)."""
        if w == 0:
            raise IdentityElement("inversion ideal of the identity is empty")
        mask = 0
        for r in self.group.inversion_set(w):
            mask |= self.poset.down[self.reflection_position(r)]
        mask &= ~(1 << self.bottom())
        mask &= ~(1 << self.top())
        return list(bits(mask))


def facets_within_inversions(group: Group, w: int, positive_facet_roots) -> int:
    """Facets of the positive cluster complex carried inside Inv(w)."""
    inv = set(group.inversion_set(w))
    return sum(1 for roots in positive_facet_roots if roots <= inv)
