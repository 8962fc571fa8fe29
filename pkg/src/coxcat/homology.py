"""Reduced simplicial homology over Z, exactly.

Boundary matrices are eliminated sparsely using only +-1 pivots; such a
pivot contributes an invariant factor 1 and row operations on the remaining
matrix never leave Z, so ranks and the surviving Smith data are unchanged.
Whatever is left after unit pivots run out (at these sizes: a handful of
entries, or nothing) goes through a dense textbook Smith normal form with
Python integers, so there is no overflow and no tolerance anywhere.
"""

from __future__ import annotations

from .complexes import SimplicialComplex, order_complex
from .posets import FinitePoset, bits

Profile = dict[int, tuple[int, tuple[int, ...]]]  # degree -> (betti, torsion)


def dense_snf(mat: list[list[int]]) -> list[int]:
    """Nonzero invariant factors of an integer matrix, in divisibility order."""
    m = [list(r) for r in mat]
    R = len(m)
    C = len(m[0]) if m else 0
    invs: list[int] = []
    t = 0
    while t < R and t < C:
        best = None
        for i in range(t, R):
            for j in range(t, C):
                v = m[i][j]
                if v and (best is None or abs(v) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        m[t], m[best[0]] = m[best[0]], m[t]
        for row in m:
            row[t], row[best[1]] = row[best[1]], row[t]
        while True:
            for i in range(t + 1, R):
                if m[i][t]:
                    q = m[i][t] // m[t][t]
                    if q:
                        for j in range(t, C):
                            m[i][j] -= q * m[t][j]
            residual = [i for i in range(t + 1, R) if m[i][t]]
            if residual:
                i = min(residual, key=lambda i: abs(m[i][t]))
                m[t], m[i] = m[i], m[t]
                continue
            for j in range(t + 1, C):
                if m[t][j]:
                    q = m[t][j] // m[t][t]
                    if q:
                        for i in range(t, R):
                            m[i][j] -= q * m[i][t]
            residual = [j for j in range(t + 1, C) if m[t][j]]
            if residual:
                j = min(residual, key=lambda j: abs(m[t][j]))
                for row in m:
                    row[t], row[j] = row[j], row[t]
                continue
            p = abs(m[t][t])
            bad = None
            for i in range(t + 1, R):
                for j in range(t + 1, C):
                    if m[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            for j in range(t, C):
                m[t][j] += m[bad][j]
        invs.append(abs(m[t][t]))
        t += 1
    return invs


def smith_data(row_entries: list[dict[int, int]]) -> tuple[int, tuple[int, ...]]:
    """(rank, invariant factors > 1) of a sparse integer matrix given by rows."""
    rows = {i: dict(d) for i, d in enumerate(row_entries) if d}
    cols: dict[int, set[int]] = {}
    for r, d in rows.items():
        for c in d:
            cols.setdefault(c, set()).add(r)
    rank = 0
    while True:
        best = None
        best_score = None
        for r, d in rows.items():
            lr = len(d) - 1
            for c, v in d.items():
                if v == 1 or v == -1:
                    score = lr * (len(cols[c]) - 1)
                    if best_score is None or score < best_score:
                        best, best_score = (r, c), score
                        if score == 0:
                            break
            if best_score == 0:
                break
        if best is None:
            break
        r0, c0 = best
        piv = rows[r0][c0]
        for r in list(cols[c0]):
            if r == r0:
                continue
            f = rows[r][c0] * piv
            rr = rows[r]
            for c, v in rows[r0].items():
                nv = rr.get(c, 0) - f * v
                if nv:
                    if c not in rr:
                        cols[c].add(r)
                    rr[c] = nv
                elif c in rr:
                    del rr[c]
                    cols[c].discard(r)
            if not rr:
                del rows[r]
        for c in rows[r0]:
            cols[c].discard(r0)
        del rows[r0]
        rank += 1
    torsion: tuple[int, ...] = ()
    if rows:
        col_ids = sorted({c for d in rows.values() for c in d})
        cpos = {c: i for i, c in enumerate(col_ids)}
        dense = []
        for r in sorted(rows):
            line = [0] * len(col_ids)
            for c, v in rows[r].items():
                line[cpos[c]] = v
            dense.append(line)
        invs = dense_snf(dense)
        rank += len(invs)
        torsion = tuple(v for v in invs if v > 1)
    return rank, torsion


def boundary_rows(cx: SimplicialComplex, card: int) -> list[dict[int, int]]:
    """Boundary from cardinality-`card` faces down, as rows over the smaller faces."""
    lower = cx.faces(card - 1)
    idx = {f: i for i, f in enumerate(lower)}
    rows: list[dict[int, int]] = [{} for _ in lower]
    for j, g in enumerate(cx.faces(card)):
        for i in range(len(g)):
            sub = g[:i] + g[i + 1 :]
            rows[idx[sub]][j] = (-1) ** i
    return rows


def homology_profile(cx: SimplicialComplex) -> Profile:
    """Reduced integer homology: degree -> (betti, torsion invariant factors).

    Degrees run from -1 (the empty-face degree; nonzero only for the empty
    complex) up to the dimension of the complex.
    """
    fv = cx.f_vector()
    top = len(fv) - 1
    ranks = {0: 0, top + 1: 0}
    torsions: dict[int, tuple[int, ...]] = {top + 1: ()}
    for k in range(1, top + 1):
        rank, torsion = smith_data(boundary_rows(cx, k))
        ranks[k] = rank
        torsions[k] = torsion
    profile: Profile = {}
    for k in range(top + 1):
        beta = fv[k] - ranks[k] - ranks[k + 1]
        assert beta >= 0
        profile[k - 1] = (beta, torsions.get(k + 1, ()))
    return profile


def betti(profile: Profile, degree: int) -> int:
    return profile.get(degree, (0, ()))[0]


def torsion_free(profile: Profile) -> bool:
    return all(not t for _, t in profile.values())


def euler_from_profile(profile: Profile) -> int:
    """Reduced Euler characteristic from Betti numbers (Euler-Poincare)."""
    return sum(b if d % 2 == 0 else -b for d, (b, _) in profile.items())


def homology_cm_check(poset: FinitePoset) -> list[str]:
    """Cohen-Macaulayness at the homology level, on the bounded completion.

    Every open interval (x, y), the improper one included, must have reduced
    homology free and concentrated in degree rk(y) - rk(x) - 2.  Returns one
    violation line per failing interval; empty means pass.
    """
    bounded, _, _ = poset.with_bounds()
    rk = bounded.ranks()
    out: list[str] = []
    for x in range(bounded.n):
        for y in bits(bounded.up[x] & ~(1 << x)):
            profile = homology_profile(
                order_complex(bounded, bounded.open_interval(x, y))
            )
            want = rk[y] - rk[x] - 2
            for d, (b, tor) in sorted(profile.items()):
                if tor or (b and d != want):
                    out.append(f"interval ({x}, {y}): H_{d} = (rank {b}, torsion {tor})")
                    break
    return out
