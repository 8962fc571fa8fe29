"""Abstract simplicial complexes, f/h-vectors, order complexes, cliques.

A face is a sorted tuple of integer vertex ids (ids need not be contiguous).
The empty face is always present; `f_vector()[k]` counts faces of
cardinality k, so a complex of dimension d has f-vector length d + 2 and
`f_vector()[0] == 1`.
"""

from __future__ import annotations

from itertools import combinations
from math import comb
from typing import Callable, Iterable, Iterator, Sequence

from .errors import NotPure
from .posets import FinitePoset, bits


class SimplicialComplex:
    def __init__(self, faces_by_card: list[list[tuple[int, ...]]]):
        assert faces_by_card and faces_by_card[0] == [()]
        self.faces_by_card = faces_by_card
        self._face_set = {f for level in faces_by_card for f in level}

    @staticmethod
    def from_faces(faces: Iterable[Sequence[int]]) -> "SimplicialComplex":
        levels: list[set[tuple[int, ...]]] = [{()}]
        for f in faces:
            t = tuple(sorted(f))
            assert len(set(t)) == len(t), f"repeated vertex in face {t}"
            while len(levels) <= len(t):
                levels.append(set())
            for k in range(1, len(t) + 1):
                levels[k].update(combinations(t, k))
        return SimplicialComplex([sorted(lv) for lv in levels])

    from_facets = from_faces

    @property
    def dim(self) -> int:
        return len(self.faces_by_card) - 2

    def faces(self, card: int) -> list[tuple[int, ...]]:
        if 0 <= card < len(self.faces_by_card):
            return self.faces_by_card[card]
        return []

    def all_faces(self) -> Iterator[tuple[int, ...]]:
        for level in self.faces_by_card:
            yield from level

    def has_face(self, f: Sequence[int]) -> bool:
        return tuple(sorted(f)) in self._face_set

    def vertices(self) -> list[int]:
        return [f[0] for f in self.faces(1)]

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(lv) for lv in self.faces_by_card)

    def is_pure(self) -> bool:
        top = len(self.faces_by_card) - 1
        for k in range(1, top):
            covered = set()
            for g in self.faces_by_card[k + 1]:
                covered.update(combinations(g, k))
            if any(f not in covered for f in self.faces_by_card[k]):
                return False
        return True

    def h_vector(self) -> tuple[int, ...]:
        """h-vector of a pure complex via sum_k f_{k} z^k (1-z)^{d-k}."""
        if not self.is_pure():
            raise NotPure("h-vector requested for a non-pure complex")
        fv = self.f_vector()
        d = len(fv) - 1
        h = [0] * (d + 1)
        for k, fk in enumerate(fv):
            # z^k (1-z)^(d-k)
            for j in range(d - k + 1):
                h[k + j] += fk * (-1) ** j * comb(d - k, j)
        return tuple(h)

    def reduced_euler(self) -> int:
        return sum((-1) ** (k + 1) * len(lv) for k, lv in enumerate(self.faces_by_card))

    def link(self, face: Sequence[int]) -> "SimplicialComplex":
        t = tuple(sorted(face))
        assert t in self._face_set, f"{t} is not a face"
        s = set(t)
        out = []
        for f in self._face_set:
            if f and not s & set(f) and tuple(sorted(set(f) | s)) in self._face_set:
                out.append(f)
        return SimplicialComplex.from_faces(out)

    def restrict_vertices(self, keep: Callable[[int], bool]) -> "SimplicialComplex":
        return SimplicialComplex.from_faces(
            f for f in self._face_set if f and all(keep(v) for v in f)
        )

    def join(self, other: "SimplicialComplex") -> "SimplicialComplex":
        """Simplicial join; the other complex's vertex ids get shifted clear of ours."""
        shift = max(self.vertices(), default=-1) + 1 - min(other.vertices(), default=0)
        faces = []
        for f in self._face_set:
            for g in other._face_set:
                faces.append(tuple(sorted(f + tuple(v + shift for v in g))))
        return SimplicialComplex.from_faces(faces)

    def face_poset(self) -> tuple[FinitePoset, list[tuple[int, ...]]]:
        """Poset of nonempty faces under inclusion, with the face list."""
        elems = [f for lv in self.faces_by_card[1:] for f in lv]
        pos = {f: i for i, f in enumerate(elems)}
        up = [0] * len(elems)
        for f in elems:
            sf = set(f)
            for g in elems:
                if len(g) >= len(f) and sf <= set(g):
                    up[pos[f]] |= 1 << pos[g]
        return FinitePoset(up), elems

    def barycentric(self) -> "SimplicialComplex":
        poset, _ = self.face_poset()
        return order_complex(poset)


def order_complex(poset: FinitePoset, ids: Sequence[int] | None = None) -> SimplicialComplex:
    """Complex of strict chains of the (sub)poset; vertex ids are poset ids."""
    levels: list[set[tuple[int, ...]]] = [{()}]
    for chain in poset.chains(ids):
        while len(levels) <= len(chain):
            levels.append(set())
        levels[len(chain)].add(tuple(sorted(chain)))
    return SimplicialComplex([sorted(lv) for lv in levels])


def enumerate_cliques(adj: list[int]) -> Iterator[tuple[int, ...]]:
    """All nonempty cliques of a graph given as adjacency bitmasks over 0..n-1."""
    n = len(adj)

    def extend(clique: list[int], allowed: int) -> Iterator[tuple[int, ...]]:
        yield tuple(clique)
        for v in bits(allowed):
            clique.append(v)
            yield from extend(clique, allowed & adj[v] & ~((1 << (v + 1)) - 1))
            clique.pop()

    for v in range(n):
        yield from extend([v], adj[v] & ~((1 << (v + 1)) - 1))
