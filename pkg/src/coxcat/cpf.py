"""Cluster parking functions: cosets of underline parabolics on cluster faces.

An element is a pair (f, k): f a face of the cluster complex, k a coset of
W_{underline f}, with W acting on the coset part only.  Built face by face
from the cluster complex (the pairs are sparse in the full product with the
parking poset).  The realization keys a pair by its rank-one subpairs; the
build asserts that this map is injective and hits every face of the closure,
so the pair poset really is the face poset of a simplicial complex.
"""

from __future__ import annotations

from .cluster import ClusterComplex
from .complexes import SimplicialComplex, enumerate_cliques
from .coxeter import CoxeterDatum, parse_type, product_datum
from .errors import NotAdmissible
from .groups import Group
from .homology import Profile, homology_cm_check, homology_profile
from .parking import PfPoset, park_char

Face = tuple[int, ...]


class CpfComplex:
    def __init__(self, group: Group, m: int = 1, positive: bool = False,
                 cluster: ClusterComplex | None = None,
                 pf: PfPoset | None = None):
        assert m >= 1 or not positive
        self.group = group
        self.m = m
        self.positive = positive
        self.cluster = cluster if cluster is not None else ClusterComplex(group, m)
        assert self.cluster.m == m
        self.pf = pf if pf is not None else PfPoset(group, self.cluster.nc)
        assert self.pf.nc is self.cluster.nc
        self.nc = self.cluster.nc
        g = group

        base = self.cluster.positive_complex if positive else self.cluster.complex
        self.base = base
        self._under: dict[Face, int] = {
            f: self.cluster.underline(f) for f in base.all_faces()
        }

        reps, coset_of = self.pf.reps, self.pf.coset_of
        self.faces: list[tuple[Face, int]] = [
            (f, k) for f in base.all_faces() for k in range(len(reps[self._under[f]]))
        ]
        self.face_id = {fk: i for i, fk in enumerate(self.faces)}

        self._vid: dict[tuple[Face, int], int] = {}
        for f in base.faces(1):
            for k in range(len(reps[self._under[f]])):
                self._vid[(f, k)] = len(self._vid)

        keys: list[tuple[int, ...]] = []
        seen: dict[tuple[int, ...], int] = {}
        for i, (f, k) in enumerate(self.faces):
            rep = reps[self._under[f]][k]
            key = tuple(sorted(
                self._vid[((v,), coset_of[self._under[(v,)]][rep])] for v in f
            ))
            assert len(key) == len(f) and seen.setdefault(key, i) == i, (
                "realization must embed the pair poset"
            )
            keys.append(key)
        self._key = keys
        self._key_id = seen

        self.complex = SimplicialComplex.from_faces(keys)
        counts = [0] * (g.rank + 1)
        for f, _ in self.faces:
            counts[len(f)] += 1
        assert self.complex.f_vector() == tuple(counts)
        assert self.complex.dim == g.rank - 1 and self.complex.is_pure()
        assert counts[g.rank] == g.order * len(base.faces(g.rank))

    def __len__(self) -> int:
        return len(self.faces)

    # --- W-action on the coset part ------------------------------------------

    def act(self, w: int, i: int) -> int:
        f, k = self.faces[i]
        u = self._under[f]
        moved = self.group.mul(w, self.pf.reps[u][k])
        return self.face_id[(f, self.pf.coset_of[u][moved])]

    def fixed_face_ids(self, w: int) -> list[int]:
        return [i for i in range(len(self.faces)) if self.act(w, i) == i]

    def _fixed_keys(self, w: int) -> set[tuple[int, ...]]:
        keys = {self._key[i] for i in self.fixed_face_ids(w)}
        for key in keys:
            for j in range(len(key)):
                if key[:j] + key[j + 1:] not in keys:
                    raise NotAdmissible(
                        f"fixed faces of element {w} not closed under subfaces"
                    )
        return keys

    def fixed_subcomplex(self, w: int) -> SimplicialComplex:
        return SimplicialComplex.from_faces(self._fixed_keys(w))

    def lefschetz(self, w: int) -> int:
        """Signed fixed-face count; cross-checked against the fixed subcomplex."""
        keys = self._fixed_keys(w)
        signed = sum((-1) ** (len(key) - 1) for key in keys)
        assert signed == SimplicialComplex.from_faces(keys).reduced_euler()
        return signed

    # --- invariants -----------------------------------------------------------

    def homology(self) -> Profile:
        return homology_profile(self.complex)

    def link_check(self, i: int) -> bool:
        """Link of a face against the complex built on its underline parabolic."""
        assert not self.positive
        f, k = self.faces[i]
        par = self.nc.parabolic_of[self._under[f]]
        link = self.complex.link(self._key[i])
        if par.rank == 0:
            return link.f_vector() == (1,)
        sub = CpfComplex(Group(par.datum), self.m)
        return link.f_vector() == sub.complex.f_vector()

    def flag_report(self) -> dict:
        adj = [0] * len(self._vid)
        for a, b in self.complex.faces(2):
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        for clique in enumerate_cliques(adj):
            if len(clique) >= 3 and not self.complex.has_face(clique):
                return {"flag": False, "counterexample": clique}
        return {"flag": True, "counterexample": None}

    def cm_check(self) -> list[str]:
        poset, _ = self.complex.face_poset()
        return homology_cm_check(poset)


def lefschetz_target(group: Group, m: int, w: int, prime: bool = False) -> int:
    """(-1)^(n-1) det(w) (mh+1)^(n-l(w)), l the reflection length; +1 -> -1 if prime."""
    det = -1 if group.refl_len[w] % 2 else 1
    return (-1) ** (group.rank - 1) * det * park_char(group, m, w, prime)


def park_rank(datum: CoxeterDatum, m: int, positive: bool = False) -> int:
    """(mh+-1)^n taken componentwise across the irreducible factors."""
    out = 1
    for label, idxs in datum.components:
        h = Group(parse_type(label)).coxeter_number
        out *= (m * h + (-1 if positive else 1)) ** len(idxs)
    return out


def coxeter_complex_fvector(group: Group) -> tuple[int, ...]:
    """Face counts of the complex of cosets of standard parabolics."""
    n = group.rank
    out = [0] * (n + 1)
    for mask in range(1 << n):
        J = [s for s in range(n) if mask >> s & 1]
        out[n - len(J)] += group.order // len(group.standard_parabolic(J))
    return tuple(out)


def coxeter_degeneration_check(group: Group) -> bool:
    """At m = 0 the complex collapses onto the Coxeter complex."""
    return CpfComplex(group, 0).complex.f_vector() == coxeter_complex_fvector(group)


def cpf_join_check(d1: CoxeterDatum, d2: CoxeterDatum, m: int) -> bool:
    whole = CpfComplex(Group(product_datum(d1, d2)), m)
    a = CpfComplex(Group(d1), m)
    b = CpfComplex(Group(d2), m)
    return whole.complex.f_vector() == a.complex.join(b.complex).f_vector()


def dihedral_cpf_check(k: int) -> bool:
    """CPF of I2(k) at m = 1: 4-regular on k(k+2) vertices, 2k(k+2) edges."""
    cpf = CpfComplex(Group(parse_type(f"I2({k})")), 1)
    fv = cpf.complex.f_vector()
    deg = [0] * fv[1]
    for a, b in cpf.complex.faces(2):
        deg[a] += 1
        deg[b] += 1
    return fv == (1, k * (k + 2), 2 * k * (k + 2)) and set(deg) == {4}
