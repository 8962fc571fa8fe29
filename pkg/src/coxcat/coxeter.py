"""Coxeter data: type parsing, Cartan/Gram matrices, bipartition.

A datum is the raw input every group build starts from.  Crystallographic
type letters (A, B/C, D, E, F, G) carry an integer Cartan matrix and run the
integer root path; everything else (I2(k), H3, H4) carries a Gram matrix
over Q or Q(2cos(pi/K)) with K = lcm of the edge labels outside {2, 3}.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .errors import InvalidBipartition
from .exact import NumberField, RATIONALS, RationalRing, number_field

_CRYSTAL_LETTERS = set("ABDEFG")

_COX_FROM_CARTAN = {0: 2, 1: 3, 2: 4, 3: 6}


@dataclass(frozen=True)
class CoxeterDatum:
    label: str
    rank: int
    coxeter_matrix: tuple[tuple[int, ...], ...]
    crystallographic: bool
    cartan: tuple[tuple[int, ...], ...] | None
    components: tuple[tuple[str, tuple[int, ...]], ...]
    bullet: tuple[int, ...]
    circle: tuple[int, ...]

    @property
    def ring(self) -> RationalRing | NumberField:
        """Scalar ring for the generic (Gram) path."""
        K = 1
        for i in range(self.rank):
            for j in range(i + 1, self.rank):
                m = self.coxeter_matrix[i][j]
                if m not in (2, 3):
                    K = K * m // math.gcd(K, m)
        return RATIONALS if K == 1 else number_field(K)

    def gram(self) -> list[list]:
        """2*B(alpha_i, alpha_j) in the equal-length normalization, diag = 2."""
        ring = self.ring
        two = ring.from_int(2)
        zero, mone = ring.from_int(0), ring.from_int(-1)
        G = [[zero] * self.rank for _ in range(self.rank)]
        for i in range(self.rank):
            G[i][i] = two
            for j in range(i + 1, self.rank):
                m = self.coxeter_matrix[i][j]
                if m == 2:
                    v = zero
                elif m == 3:
                    v = mone
                else:
                    assert isinstance(ring, NumberField)
                    v = -ring.two_cos(m)
                G[i][j] = G[j][i] = v
        return G

    def is_irreducible(self) -> bool:
        return len(self.components) == 1


def _edges(M: tuple[tuple[int, ...], ...]) -> list[tuple[int, int, int]]:
    n = len(M)
    return [(i, j, M[i][j]) for i in range(n) for j in range(i + 1, n) if M[i][j] >= 3]


def _components(M) -> list[list[int]]:
    n = len(M)
    seen = [False] * n
    comps = []
    for start in range(n):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        stack = [start]
        while stack:
            x = stack.pop()
            for y in range(n):
                if not seen[y] and M[x][y] >= 3:
                    seen[y] = True
                    comp.append(y)
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def classify_component(M, nodes: list[int]) -> str:
    """Standard type label of a connected Coxeter graph (finite types)."""
    r = len(nodes)
    if r == 1:
        return "A1"
    sub = {(a, b): M[a][b] for a in nodes for b in nodes if a != b and M[a][b] >= 3}
    ms = sorted(v for (a, b), v in sub.items() if a < b)
    if r == 2:
        k = ms[0]
        return {3: "A2", 4: "B2", 6: "G2"}.get(k, f"I2({k})")
    deg = {a: sum(1 for b in nodes if a != b and M[a][b] >= 3) for a in nodes}
    branch = [a for a in nodes if deg[a] >= 3]
    if 5 in ms:
        return "H3" if r == 3 else "H4"
    if 4 in ms:
        if r == 4 and not branch:
            (a, b) = next((a, b) for (a, b) in sub if a < b and sub[(a, b)] == 4)
            if deg[a] == 2 and deg[b] == 2:
                return "F4"
        return f"B{r}"
    if not branch:
        return f"A{r}"
    center = branch[0]
    lengths = []
    for nb in [b for b in nodes if sub.get((center, b), 0) >= 3 or sub.get((b, center), 0) >= 3]:
        ln, prev, cur = 1, center, nb
        while True:
            nxt = [b for b in nodes if b != prev and (sub.get((cur, b), 0) >= 3)]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            ln += 1
        lengths.append(ln)
    lengths.sort()
    if lengths[:2] == [1, 1]:
        return f"D{r}"
    return f"E{r}"


def _component_cartan(letter: str, n: int) -> list[list[int]]:
    C = [[2 * (i == j) for j in range(n)] for i in range(n)]

    def edge(i, j, cij=-1, cji=-1):
        C[i][j] = cij
        C[j][i] = cji

    if letter in ("A",):
        for i in range(n - 1):
            edge(i, i + 1)
    elif letter in ("B", "C"):
        for i in range(n - 2):
            edge(i, i + 1)
        if n >= 2:
            # alpha_{n-1} short: its coroot pairs to -2 against the long neighbor
            edge(n - 2, n - 1, -1, -2)
    elif letter == "D":
        for i in range(n - 2):
            edge(i, i + 1)
        if n >= 3:
            edge(n - 3, n - 1)
    elif letter == "E":
        chain = [0, 2, 3, 4, 5, 6, 7][: n - 1]
        for a, b in zip(chain, chain[1:]):
            edge(a, b)
        edge(1, 3)
    elif letter == "F":
        edge(0, 1)
        edge(1, 2, -1, -2)  # alpha_2, alpha_3 short
        edge(2, 3)
    elif letter == "G":
        edge(0, 1, -3, -1)  # alpha_0 short
    else:
        raise AssertionError(letter)
    return C


def _coxeter_from_cartan(C) -> list[list[int]]:
    n = len(C)
    M = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j and C[i][j]:
                M[i][j] = _COX_FROM_CARTAN[C[i][j] * C[j][i]]
    return M


def _bipartition(M) -> tuple[tuple[int, ...], tuple[int, ...]]:
    n = len(M)
    color = [-1] * n
    for comp in _components(M):
        color[comp[0]] = 0
        stack = [comp[0]]
        while stack:
            x = stack.pop()
            for y in range(n):
                if y != x and M[x][y] >= 3:
                    if color[y] == -1:
                        color[y] = 1 - color[x]
                        stack.append(y)
                    elif color[y] == color[x]:
                        raise InvalidBipartition(f"odd cycle through nodes {x}, {y}")
    bullet = tuple(i for i in range(n) if color[i] == 0)
    circle = tuple(i for i in range(n) if color[i] == 1)
    return bullet, circle


def datum_from_coxeter_matrix(M, crystallographic: bool = False, cartan=None,
                              label: str | None = None) -> CoxeterDatum:
    M = tuple(tuple(row) for row in M)
    comps = _components(M)
    components = tuple((classify_component(M, c), tuple(c)) for c in comps)
    if label is None:
        label = "x".join(lbl for lbl, _ in components)
    bullet, circle = _bipartition(M)
    return CoxeterDatum(
        label=label,
        rank=len(M),
        coxeter_matrix=M,
        crystallographic=crystallographic,
        cartan=tuple(tuple(r) for r in cartan) if cartan is not None else None,
        components=components,
        bullet=bullet,
        circle=circle,
    )


_TOKEN = re.compile(r"^([A-H])(\d+)$|^I2\((\d+)\)$", re.IGNORECASE)


def parse_type(spec: str) -> CoxeterDatum:
    """Build a datum from a type string like "A3", "B2", "I2(7)", "A1xA2".

    >>> parse_type("A2").coxeter_matrix
    ((1, 3), (3, 1))
    >>> parse_type("A1xA1").components
    (('A1', (0,)), ('A1', (1,)))
    """
    tokens = [t.strip() for t in spec.replace("X", "x").split("x")]
    blocks: list[tuple[str, int, list[list[int]] | None, list[list[int]]]] = []
    for tok in tokens:
        mt = _TOKEN.match(tok)
        assert mt, f"unrecognized type token {tok!r}"
        if mt.group(3) is not None:
            k = int(mt.group(3))
            assert k >= 2
            blocks.append((f"I2({k})", 2, None, [[1, k], [k, 1]]))
            continue
        letter, n = mt.group(1).upper(), int(mt.group(2))
        assert n >= 1
        if letter in _CRYSTAL_LETTERS or letter == "C":
            if letter == "E":
                assert n in (6, 7, 8)
            if letter == "F":
                assert n == 4
            if letter == "G":
                assert n == 2
            cartan = _component_cartan(letter, n)
            blocks.append((f"{letter}{n}", n, cartan, _coxeter_from_cartan(cartan)))
        elif letter == "H":
            assert n in (2, 3, 4)
            if n == 2:
                blocks.append(("I2(5)", 2, None, [[1, 5], [5, 1]]))
            else:
                M = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
                M[0][1] = M[1][0] = 5
                for i in range(1, n - 1):
                    M[i][i + 1] = M[i + 1][i] = 3
                blocks.append((f"H{n}", n, None, M))
        else:
            raise AssertionError(f"unsupported letter {letter}")
    rank = sum(b[1] for b in blocks)
    crystallographic = all(b[2] is not None for b in blocks)
    M = [[2] * rank for _ in range(rank)]
    C = [[0] * rank for _ in range(rank)] if crystallographic else None
    off = 0
    for _, n, cartan, cox in blocks:
        for i in range(n):
            for j in range(n):
                M[off + i][off + j] = cox[i][j]
                if C is not None:
                    C[off + i][off + j] = cartan[i][j]
        off += n
    label = "x".join(b[0] for b in blocks)
    return datum_from_coxeter_matrix(M, crystallographic, C, label)


def product_datum(d1: CoxeterDatum, d2: CoxeterDatum) -> CoxeterDatum:
    """Datum of the direct product; labels are canonical type strings."""
    return parse_type(f"{d1.label}x{d2.label}")
