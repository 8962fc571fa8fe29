"""Deterministic JSON documents for the CLI and its cache.

Every document carries "schema": 1.  Integers stay integers, rationals are
rendered "p/q", and number-field coordinates become coefficient lists, so a
dump is byte-for-byte reproducible (sorted keys, fixed separators).
"""

from __future__ import annotations

import json
from fractions import Fraction

from .catalan import CatalanArrangement
from .cluster import ClusterComplex
from .cpf import CpfComplex
from .groups import Group
from .homology import Profile
from .noncrossing import NcLattice
from .parking import PfPoset
from .posets import bits

SCHEMA = 1


def scalar(x):
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return str(x)
    return {"K": x.field.K, "coeffs": [str(c) for c in x.coeffs]}


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def _hasse(poset) -> list[list[int]]:
    cov = poset.covers()
    return [[x, y] for x in range(poset.n) for y in bits(cov[x])]


def profile_doc(profile: Profile) -> dict:
    return {
        str(deg): {"rank": rank, "torsion": list(tor)}
        for deg, (rank, tor) in sorted(profile.items())
    }


def group_doc(group: Group) -> dict:
    return {
        "schema": SCHEMA,
        "label": group.datum.label,
        "rank": group.rank,
        "order": group.order,
        "reflections": len(group.reflections),
        "coxeter_number": (
            group.coxeter_number if group.datum.is_irreducible() else None
        ),
        "roots": [[scalar(c) for c in r] for r in group.roots],
        "elements": [list(p) for p in group.elements],
    }


def nc_doc(nc: NcLattice) -> dict:
    doc = {
        "schema": SCHEMA,
        "label": nc.group.datum.label,
        "size": nc.size,
        "ranks": [nc.rank_of[i] for i in range(nc.size)],
        "hasse": _hasse(nc.poset),
    }
    if nc.has_kreweras:
        doc["kreweras"] = [nc.kreweras(i) for i in range(nc.size)]
    return doc


def cluster_doc(cluster: ClusterComplex, positive: bool = False) -> dict:
    g = cluster.group
    cx = cluster.positive_complex if positive else cluster.complex
    faces = []
    for f in cx.all_faces():
        faces.append({
            "vertices": [
                {"root": [scalar(c) for c in g.roots[r]], "color": col}
                for r, col in (cluster.verts[v] for v in f)
            ],
            "product": cluster.face_product(f),
            "underline": cluster.underline(f),
        })
    return {
        "schema": SCHEMA,
        "label": g.datum.label,
        "m": cluster.m,
        "positive": positive,
        "f_vector": list(cx.f_vector()),
        "faces": faces,
    }


def pf_doc(pf: PfPoset) -> dict:
    g = pf.group
    return {
        "schema": SCHEMA,
        "label": g.datum.label,
        "size": len(pf),
        "elements": [
            {
                "pi_rank": pf.rank_of[i],
                "rep_word": list(g.word(pf.representative(i))),
            }
            for i in range(len(pf))
        ],
        "hasse": _hasse(pf.poset),
    }


def cpf_doc(cpf: CpfComplex, with_lefschetz: bool = False) -> dict:
    doc = {
        "schema": SCHEMA,
        "label": cpf.group.datum.label,
        "m": cpf.m,
        "positive": cpf.positive,
        "f_vector": list(cpf.complex.f_vector()),
        "homology": profile_doc(cpf.homology()),
    }
    if with_lefschetz:
        doc["lefschetz"] = [cpf.lefschetz(w) for w in range(cpf.group.order)]
    return doc


def catalan_doc(arr: CatalanArrangement) -> dict:
    dominant = set(arr.dominant_ids())
    return {
        "schema": SCHEMA,
        "label": arr.group.datum.label,
        "m": arr.m,
        "hyperplanes": [
            {"root": [scalar(c) for c in a], "level": k}
            for a, k in arr.hyperplanes
        ],
        "regions": [
            {
                "signs": list(r.signs),
                "witness": [str(c) for c in r.witness],
                "walls": arr.walls(i),
                "floors": arr.floors(i),
                "mfl": arr.mfl(i),
                "dominant": i in dominant,
            }
            for i, r in enumerate(arr.regions)
        ],
    }


def counts_doc(counts: dict[tuple[int, ...], int]) -> list[list]:
    return [[list(lam), c] for lam, c in sorted(counts.items())]
