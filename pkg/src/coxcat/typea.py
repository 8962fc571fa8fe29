"""Symmetric-group oracles: Dyck paths, polygon dissections, labeled cells.

Everything here is brute-force combinatorics on lattice paths and convex
polygons, independent of the root-system machinery, so the two sides can be
compared.  Types are integer partitions stored as decreasing tuples.

The closed-form dissection counts are the positive products
prod(mn+1+i) / prod mu_i! (all faces) and prod(mn-1+i) / prod mu_i! (positive
faces), the sign-cleaned negative-parameter twists of the Dyck formulas.
"""

from __future__ import annotations

from itertools import combinations
from math import factorial, prod

from .cluster import ClusterComplex
from .complexes import SimplicialComplex
from .coxeter import parse_type
from .groups import Group

Partition = tuple[int, ...]


def partitions(n: int, cap: int | None = None):
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap if cap is not None else n), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def _mults(lam: Partition) -> int:
    out = 1
    for part in set(lam):
        out *= factorial(lam.count(part))
    return out


def dyck_count_formula(n: int, m: int, lam: Partition, prime: bool = False) -> int:
    """prod_{i=1}^{l-1}(mn+-1-i) / prod mu_i!."""
    a = m * n + (-1 if prime else 1)
    num = prod(a - i for i in range(1, len(lam)))
    assert num % _mults(lam) == 0
    return num // _mults(lam)


def dissection_count_formula(n: int, m: int, lam: Partition,
                             positive: bool = False) -> int:
    """prod_{i=1}^{l-1}(mn+-1+i) / prod mu_i!."""
    a = m * n + (-1 if positive else 1)
    num = prod(a + i for i in range(1, len(lam)))
    assert num % _mults(lam) == 0
    return num // _mults(lam)


# --- Dyck paths --------------------------------------------------------------


def mdyck_types(n: int, m: int, prime: bool = False) -> dict[Partition, int]:
    """Counts of (prime) m-Dyck paths in the n x mn rectangle by vertical-run
    type; prime paths meet the diagonal only at the corners."""
    width = m * n
    out: dict[Partition, int] = {}

    def ok(x: int, y: int) -> bool:
        if m * y < x:
            return False
        return not (prime and m * y == x and (x, y) not in ((0, 0), (width, n)))

    def rec(x: int, y: int, runs: tuple[int, ...], in_run: bool) -> None:
        if x == width and y == n:
            lam = tuple(sorted(runs, reverse=True))
            out[lam] = out.get(lam, 0) + 1
            return
        if y < n:
            nruns = runs[:-1] + (runs[-1] + 1,) if in_run else runs + (1,)
            rec(x, y + 1, nruns, True)
        if x < width and ok(x + 1, y):
            rec(x + 1, y, runs, False)

    rec(0, 0, (), False)
    return out


def classical_parking_count(n: int, m: int, prime: bool = False) -> int:
    """Labeled (prime) m-Dyck paths: labels increase along each vertical run."""
    return sum(
        count * factorial(n) // prod(factorial(k) for k in lam)
        for lam, count in mdyck_types(n, m, prime).items()
    )


# --- polygon dissections -----------------------------------------------------


def _crosses(d1: tuple[int, int], d2: tuple[int, int]) -> bool:
    (a, b), (c, d) = d1, d2
    return a < c < b < d or c < a < d < b


def polygon_cells(npoly: int, diags: tuple[tuple[int, int], ...]) -> list[list[int]]:
    """Cells of a noncrossing diagonal set, each as a cyclic vertex list."""
    cells = [list(range(npoly))]
    for a, b in diags:
        ci = next(
            i for i, c in enumerate(cells)
            if a in c and b in c and abs(c.index(a) - c.index(b)) not in (1, len(c) - 1)
        )
        c = cells.pop(ci)
        ia, ib = sorted((c.index(a), c.index(b)))
        cells.append(c[ia:ib + 1])
        cells.append(c[ib:] + c[:ia + 1])
    return cells


def _valid_cells(npoly: int, m: int,
                 diags: tuple[tuple[int, int], ...]) -> list[list[int]] | None:
    cells = polygon_cells(npoly, diags)
    if all((len(c) - 2) % m == 0 and len(c) > 2 for c in cells):
        return cells
    return None


def _type_of(cells: list[list[int]], m: int) -> Partition:
    return tuple(sorted(((len(c) - 2) // m for c in cells), reverse=True))


def dissections(n: int, m: int):
    """All faces of the dissection complex of the (mn+2)-gon: noncrossing
    diagonal sets whose cells are (mk+2)-gons.  Yields (diags, cells)."""
    npoly = m * n + 2
    all_diags = [
        (i, j) for i in range(npoly) for j in range(i + 2, npoly)
        if (i, j) != (0, npoly - 1)
    ]

    def rec(start: int, chosen: tuple[tuple[int, int], ...], cells):
        yield chosen, cells
        for t in range(start, len(all_diags)):
            d = all_diags[t]
            if any(_crosses(d, e) for e in chosen):
                continue
            nc = _valid_cells(npoly, m, chosen + (d,))
            if nc is not None:
                yield from rec(t + 1, chosen + (d,), nc)

    yield from rec(0, (), [list(range(npoly))])


def dissection_types(n: int, m: int) -> dict[Partition, int]:
    out: dict[Partition, int] = {}
    for _, cells in dissections(n, m):
        lam = _type_of(cells, m)
        out[lam] = out.get(lam, 0) + 1
    return out


def cycle_type(perm: tuple[int, ...]) -> Partition:
    seen = [False] * len(perm)
    lam = []
    for i in range(len(perm)):
        if not seen[i]:
            k, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                k += 1
            lam.append(k)
    return tuple(sorted(lam, reverse=True))


def cluster_face_types(n: int, m: int, positive: bool = False) -> dict[Partition, int]:
    """Face counts by the block sizes of the underline partition, from the
    root-theoretic side."""
    g = Group(parse_type(f"A{n - 1}"))
    cl = ClusterComplex(g, m)
    model = g.sn_model
    cx = cl.positive_complex if positive else cl.complex
    out: dict[Partition, int] = {}
    for f in cx.all_faces():
        lam = cycle_type(model[cl.nc.ids[cl.underline(f)]])
        out[lam] = out.get(lam, 0) + 1
    return out


# --- labeled dissections -----------------------------------------------------


def labeled_dissection_complex(n: int, m: int) -> SimplicialComplex:
    """Dissections with k labels on each (mk+2)-gon cell, as a complex whose
    vertices are labeled single diagonals; label sets merge when cells do."""
    npoly = m * n + 2

    def labelings(sizes: list[int], pool: frozenset[int]):
        if not sizes:
            yield ()
            return
        for pick in combinations(sorted(pool), sizes[0]):
            for rest in labelings(sizes[1:], pool - set(pick)):
                yield (frozenset(pick),) + rest

    vid: dict[tuple[tuple[int, int], frozenset[int]], int] = {}
    keys: set[tuple[int, ...]] = set()
    counts = [0] * n
    for diags, cells in dissections(n, m):
        sizes = [(len(c) - 2) // m for c in cells]
        for lab in labelings(sizes, frozenset(range(n))):
            counts[len(diags)] += 1
            key = []
            for d in diags:
                a, b = d
                side = set(range(a, b + 1))
                mine = frozenset().union(
                    *(L for c, L in zip(cells, lab) if set(c) <= side)
                )
                assert len(mine) == (b - a - 1) // m
                v = (d, mine)
                if v not in vid:
                    vid[v] = len(vid)
                key.append(vid[v])
            keys.add(tuple(sorted(key)))
    assert len(keys) == sum(counts), "labels must determine the labeled dissection"
    out = SimplicialComplex.from_faces(keys)
    assert out.f_vector() == tuple(counts), "merge rule must close under subsets"
    return out
