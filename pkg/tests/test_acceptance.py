"""End-to-end acceptance checks, one test per criterion.

Each test prints exactly one PASS/FAIL line.  Every comparison is exact
integer or exact-arithmetic equality; the only tolerances are the wall
clock budgets stated inline.
"""

import time
from collections import Counter

from conftest import cluster, cpf, group, nc, pf
from coxcat import NcLattice, parse_type
from coxcat.catalan import CatalanArrangement, verify_prop_9_1, verify_thm_9_3
from coxcat.complexes import order_complex
from coxcat.cpf import (coxeter_degeneration_check, cpf_join_check,
                        lefschetz_target, park_rank)
from coxcat.enumerative import (f_poly_formula, h_poly_formula,
                                kung_identity_check, quasi_stirling,
                                zaslavsky_regions)
from coxcat.homology import betti, homology_cm_check, homology_profile, torsion_free
from coxcat.noncrossing import facets_within_inversions
from coxcat.parking import (helly_report, inversion_free_counts,
                            labeled_clusters, park_char, pf_top_homology)
from coxcat.typea import (classical_parking_count, cluster_face_types,
                          dissection_count_formula, dissection_types,
                          dyck_count_formula, labeled_dissection_complex,
                          mdyck_types, partitions)


def report(num: int, ok: bool, detail: str) -> None:
    print(f"{'PASS' if ok else 'FAIL'} criterion-{num}: {detail}")
    assert ok, f"criterion-{num}: {detail}"


def _concentrated(profile, degree: int, rank: int) -> bool:
    if not torsion_free(profile):
        return False
    return all(r == (rank if d == degree else 0)
               for d, (r, _) in profile.items())


def test_criterion_01_small_labeled_cluster_complexes():
    t0 = time.monotonic()
    c2 = cpf("A1")
    ok = c2.complex.f_vector() == (1, 4) and c2.complex.reduced_euler() == 3
    c3 = cpf("A2")
    ok = ok and c3.complex.f_vector() == (1, 15, 30)
    ok = ok and c3.complex.reduced_euler() == -16
    deg = Counter(v for e in c3.complex.faces(2) for v in e)
    ok = ok and set(deg.values()) == {4} and len(deg) == 15
    w = c3.group.one_line_index[(0, 2, 1)]
    fixed = c3.fixed_subcomplex(w)
    ok = ok and fixed.f_vector() == (1, 5) and fixed.reduced_euler() == 4
    dt = time.monotonic() - t0
    ok = ok and dt < 1.0
    report(1, ok, "4 isolated vertices, then a 4-regular graph on 15 "
                  f"vertices with 5 fixed under a transposition ({dt:.2f}s, "
                  "budget 1s)")


def test_criterion_02_top_homology_ranks():
    t0 = time.monotonic()
    instances = [(label, m) for label in
                 ("A1", "A1xA1", "A2", "B2", "I2(5)", "I2(7)")
                 for m in (1, 2)] + [("A3", 1), ("B3", 1)]
    bad = []
    for label, m in instances:
        g = group(label)
        n = g.rank
        for positive in (False, True):
            cp = cpf(label, m, positive)
            want = park_rank(g.datum, m, positive)
            if not _concentrated(cp.homology(), n - 1, want):
                bad.append((label, m, positive))
    dt = time.monotonic() - t0
    ok = not bad and dt <= 300.0
    report(2, ok, f"{2 * len(instances)} reduced homology groups free of "
                  f"rank (mh+1)^n or (mh-1)^n in degree n-1"
                  + (f", failures {bad}" if bad else "")
                  + f" ({dt:.1f}s, budget 300s)")


def test_criterion_03_equivariant_lefschetz():
    bad = []
    for label, m in (("A2", 1), ("A2", 2), ("A3", 1), ("B2", 1), ("B2", 2)):
        cp = cpf(label, m)
        g = cp.group
        for w in range(g.order):
            target = lefschetz_target(g, m, w)
            if cp.lefschetz(w) != target:
                bad.append((label, m, w))
            elif cp.fixed_subcomplex(w).reduced_euler() != target:
                bad.append((label, m, w))
    report(3, not bad, "signed fixed-face counts and fixed-subcomplex Euler "
                       "characteristics both equal det(w)-twisted (mh+1) "
                       "powers on five instances"
                       + (f", failures {bad}" if bad else ""))


def test_criterion_04_parking_poset_homology():
    ranks = {"A2": 4, "B2": 9, "A3": 27, "B3": 125, "I2(7)": 36}
    bad = []
    for label, want in ranks.items():
        g = group(label)
        prof = pf_top_homology(pf(label))
        if not _concentrated(prof, g.rank - 1, want):
            bad.append(label)
        if want != (g.coxeter_number - 1) ** g.rank:
            bad.append(label)
    cm_bad = [label for label in ("A2", "B2", "A3")
              if homology_cm_check(pf(label).poset.with_bounds()[0]) != []]
    ok = not bad and not cm_bad
    report(4, ok, "proper parking posets have free top homology of rank "
                  "(h-1)^n and bounded versions are Cohen-Macaulay"
                  + (f", failures {bad + cm_bad}" if not ok else ""))


def test_criterion_05_inversion_ideal_homology():
    bad = []
    for label in ("A2", "A3", "B2", "I2(5)"):
        g = group(label)
        lat = nc(label)
        pos = cluster(label).positive_facet_roots()
        n = g.rank
        total = 0
        for w in range(1, g.order):
            k = facets_within_inversions(g, w, pos)
            total += k
            prof = homology_profile(order_complex(lat.poset,
                                                  lat.inversion_ideal(w)))
            if not _concentrated(prof, n - 2, k):
                bad.append((label, w))
        if total != (g.coxeter_number - 1) ** n:
            bad.append((label, "total"))
    report(5, not bad, "inversion ideals have free homology in degree n-2 "
                       "counting positive facets inside the inversion set, "
                       "summing to (h-1)^n"
                       + (f", failures {bad}" if bad else ""))


def test_criterion_06_labeled_cluster_counts_and_datum():
    count_bad = []
    for label in ("A2", "A3", "B2", "B3"):
        g = group(label)
        cl = cluster(label)
        h, n = g.coxeter_number, g.rank
        if len(labeled_clusters(cl)) != (h + 1) ** n:
            count_bad.append(label)
        if len(labeled_clusters(cl, positive=True)) != (h - 1) ** n:
            count_bad.append((label, "positive"))
    g = group("A3")
    cl = cluster("A3")
    pair_2413 = inversion_free_counts(cl, g.one_line_index[(1, 3, 0, 2)])
    pair_3142 = inversion_free_counts(cl, g.one_line_index[(2, 0, 3, 1)])
    lin = NcLattice(g, c=g.one_line_index[(1, 2, 3, 0)])

    def coset_count(w: int) -> int:
        inv = set(g.inversion_set(w))
        return sum(1 for q in range(lin.size)
                   if not set(lin.parabolic_of[q].refl_roots) & inv)

    m_2413 = coset_count(g.one_line_index[(1, 3, 0, 2)])
    m_3142 = coset_count(g.one_line_index[(2, 0, 3, 1)])
    datum_ok = pair_2413 == (4, 5)
    ok = not count_bad and datum_ok
    detail = ("labeled cluster counts (h+1)^n and (h-1)^n hold for "
              "A2, A3, B2, B3"
              + (f" except {count_bad}" if count_bad else "")
              + "; expected pair (4, 5) for the permutation 2413 in S4, "
              f"but the engine computes {pair_2413} for 2413 and "
              f"{pair_3142} for 3142 with the bipartite Coxeter element, "
              f"and parabolic coset counts {m_2413} for 2413 and {m_3142} "
              "for 3142 under the linear Coxeter element 2341; no element "
              "of S4 attains (4, 5) in either reading")
    report(6, ok, detail)


def test_criterion_07_face_count_formulas():
    bad = []
    for label in ("A2", "A3", "B2", "B3"):
        g = group(label)
        for m in (1, 2):
            for positive in (False, True):
                cx = cpf(label, m, positive).complex
                hv = h_poly_formula(g, m, positive)
                a = m * g.coxeter_number + (-1 if positive else 1)
                if f_poly_formula(g, m, positive) != cx.f_vector():
                    bad.append(("f", label, m, positive))
                if hv != cx.h_vector():
                    bad.append(("h", label, m, positive))
                if hv[-1] != a ** g.rank:
                    bad.append(("top", label, m, positive))
    for label in ("A2", "A3", "B2"):
        for s in (-1, 0, 2):
            for t in (-1, 1, 3):
                if not kung_identity_check(group(label), s, t):
                    bad.append(("kung", label, s, t))
    for n in (2, 3, 4):
        if quasi_stirling(n) != (0,) + cpf(f"A{n - 1}").complex.h_vector():
            bad.append(("quasi-stirling", n))
    report(7, not bad, "face and h formulas match sixteen built complexes, "
                       "nine Kung factorizations hold, and the quasi-Stirling "
                       "numbers are shifted h-vectors"
                       + (f", failures {bad}" if bad else ""))


def test_criterion_08_catalan_regions():
    t0 = time.monotonic()
    bad = []
    arrs = {}
    for label, m, want in (("A2", 1, 30), ("A2", 2, 72), ("B2", 1, 48),
                           ("A3", 1, 336)):
        arr = CatalanArrangement(group(label), m)
        arrs[(label, m)] = arr
        if want is not None and len(arr.regions) != want:
            bad.append((label, m, "count", len(arr.regions)))
        poset, dims = arr.intersection_poset()
        if zaslavsky_regions(poset, dims) != len(arr.regions):
            bad.append((label, m, "zaslavsky"))
        if not verify_prop_9_1(arr, cluster(label, m)):
            bad.append((label, m, "dominant-h"))
        if not verify_thm_9_3(arr):
            bad.append((label, m, "all-regions-h"))
    for key in (("A2", 1), ("B2", 1)):
        arr = arrs[key]
        for i in arr.dominant_ids():
            if not arr.lemma_orbit_check(i):
                bad.append((key, "orbit", i))
    dt = time.monotonic() - t0
    ok = not bad and dt <= 600.0
    report(8, ok, "region counts 30/72/48/336 match the characteristic "
                  "polynomial, m-floor counts give the h-polynomials, and "
                  "the orbit refinement holds on every dominant region"
                  + (f", failures {bad}" if bad else "")
                  + f" ({dt:.1f}s, budget 600s)")


def test_criterion_09_type_a_oracles():
    bad = []
    for n in range(1, 7):
        for m in (1, 2, 3):
            for prime in (False, True):
                counts = mdyck_types(n, m, prime=prime)
                for lam in partitions(n):
                    if counts.get(lam, 0) != dyck_count_formula(
                            n, m, lam, prime=prime):
                        bad.append(("dyck", n, m, lam, prime))
    for n in range(2, 6):
        for m in (1, 2):
            counts = dissection_types(n, m)
            for lam in partitions(n):
                if counts.get(lam, 0) != dissection_count_formula(n, m, lam):
                    bad.append(("dissection", n, m, lam))
            if counts != cluster_face_types(n, m):
                bad.append(("cluster-types", n, m))
    for n in range(2, 5):
        for m in (1, 2):
            if (labeled_dissection_complex(n, m).f_vector()
                    != cpf(f"A{n - 1}", m).complex.f_vector()):
                bad.append(("labeled", n, m))
    for n in range(1, 6):
        for m in (1, 2, 3):
            if classical_parking_count(n, m) != (m * n + 1) ** (n - 1):
                bad.append(("parking", n, m))
            if classical_parking_count(n, m, prime=True) != \
                    (m * n - 1) ** (n - 1):
                bad.append(("parking-prime", n, m))
    report(9, not bad, "lattice path, dissection, labeled dissection, and "
                       "parking function counts all match their closed forms"
                       + (f", failures {bad}" if bad else ""))


def test_criterion_10_multichain_characters():
    bad = []
    for label in ("A2", "B2", "I2(5)"):
        p = pf(label)
        g = p.group
        for m in (1, 2, 3):
            for w in range(g.order):
                got = p.poset.multichain_count(m, p.action_images(w))
                if got != park_char(g, m, w):
                    bad.append((label, m, w))
    report(10, not bad, "fixed multichain counts equal (mh+1)^(n-l(w)) for "
                        "m up to 3 and every group element"
                        + (f", failures {bad}" if bad else ""))


def test_criterion_11_coxeter_degeneration_and_joins():
    bad = [label for label in ("A2", "A3", "B2")
           if not coxeter_degeneration_check(group(label))]
    if not cpf_join_check(parse_type("A1"), parse_type("A1"), 1):
        bad.append("A1xA1 join")
    if not cpf_join_check(parse_type("A1"), parse_type("A2"), 1):
        bad.append("A1xA2 join")
    report(11, not bad, "the m=0 complex is the Coxeter complex and "
                        "reducible complexes factor as joins"
                        + (f", failures {bad}" if bad else ""))


def test_criterion_12_reports():
    lines = []
    for label in ("A2", "B2", "A3"):
        rep = helly_report(pf(label))
        assert set(rep) >= {"rank_one_elements", "rank_one_families",
                            "max_family", "holds", "counterexample"}
        flag = cpf(label).flag_report()
        assert "flag" in flag
        lines.append(f"{label} helly={rep['holds']} flag={flag['flag']}")
    report(12, True, "report-only, no pass condition: " + "; ".join(lines))
