"""Command line front end: build objects, run named checks, emit reports.

Stdout carries the report (JSON or text) and is byte-stable across runs and
--jobs settings; timings go to stderr.  Exit codes: 0 when every
non-report-only check passes, 1 on a check failure, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import serialize
from .catalan import CatalanArrangement, verify_prop_9_1, verify_thm_9_3
from .cluster import ClusterComplex
from .coxeter import CoxeterDatum, parse_type
from .cpf import CpfComplex, lefschetz_target, park_rank
from .enumerative import f_poly_formula, h_poly_formula, zaslavsky_regions
from .errors import CoxcatError
from .groups import Group
from .homology import Profile
from .noncrossing import NcLattice
from .parking import PfPoset, helly_report, labeled_clusters, pf_top_homology
from .typea import (classical_parking_count, cluster_face_types,
                    dissection_count_formula, dissection_types,
                    dyck_count_formula, labeled_dissection_complex,
                    mdyck_types, partitions)

# a check is (name, fn) with fn() -> (ok, expected, actual); ok None = report


def _concentrated(dim: int, degree: int, rank: int) -> Profile:
    out: Profile = {d: (0, ()) for d in range(-1, dim + 1)}
    out[degree] = (rank, ())
    return out


def _profile_json(profile: Profile) -> dict:
    return serialize.profile_doc(profile)


def _type_a_n(datum: CoxeterDatum) -> int:
    if not (datum.is_irreducible() and datum.components[0][0].startswith("A")
            and datum.crystallographic):
        raise CoxcatError("this verb needs an irreducible type A group")
    return datum.rank + 1


def _checks_cluster_types(args, g: Group) -> list:
    n = _type_a_n(g.datum)

    def run():
        got = cluster_face_types(n, args.m, args.positive)
        want = {
            lam: dissection_count_formula(n, args.m, lam, args.positive)
            for lam in partitions(n)
        }
        want = {lam: c for lam, c in want.items() if c}
        return (got == want, serialize.counts_doc(want), serialize.counts_doc(got))

    return [("cluster-types-formula", run)]


def _checks_pf_topology(args, g: Group) -> list:
    def run():
        pf = PfPoset(g)
        want = _concentrated(g.rank - 1, g.rank - 1,
                             park_rank(g.datum, 1, positive=True))
        got = pf_top_homology(pf)
        return (got == want, _profile_json(want), _profile_json(got))

    return [("pf-top-homology", run)]


def _checks_pf_labeled(args, g: Group) -> list:
    def run(positive: bool):
        cl = ClusterComplex(g, 1)
        got = len(labeled_clusters(cl, positive))
        want = park_rank(g.datum, 1, positive)
        return (got == want, want, got)

    return [
        ("labeled-clusters", lambda: run(False)),
        ("labeled-clusters-positive", lambda: run(True)),
    ]


def _checks_cpf_verify(args, g: Group) -> list:
    def run():
        cpf = CpfComplex(g, args.m, args.positive)
        want = _concentrated(
            g.rank - 1, g.rank - 1, park_rank(g.datum, args.m, args.positive)
        )
        got = cpf.homology()
        return (got == want, _profile_json(want), _profile_json(got))

    return [("cpf-homology", run)]


def _checks_cpf_lefschetz(args, g: Group) -> list:
    def run():
        cpf = CpfComplex(g, args.m, args.positive)
        got = [cpf.lefschetz(w) for w in range(g.order)]
        want = [
            lefschetz_target(g, args.m, w, args.positive) for w in range(g.order)
        ]
        return (got == want, want, got)

    return [("cpf-lefschetz-table", run)]


def _checks_cpf_links(args, g: Group) -> list:
    def run():
        cpf = CpfComplex(g, args.m)
        vert_ids = [i for i, (f, _) in enumerate(cpf.faces) if len(f) == 1]
        bad = [i for i in vert_ids if not cpf.link_check(i)]
        return (not bad, [], bad)

    return [("cpf-vertex-links", run)]


def _checks_cpf_flag(args, g: Group) -> list:
    def run():
        cpf = CpfComplex(g, args.m, args.positive)
        rep = cpf.flag_report()
        return (None, None, rep)

    return [("cpf-flag", run)]


def _checks_hvector(args, g: Group) -> list:
    def run():
        cl = ClusterComplex(g, args.m)
        cpf = CpfComplex(g, args.m, args.positive, cluster=cl)
        fv = tuple(cpf.complex.f_vector())
        hv = cpf.complex.h_vector()
        fw = f_poly_formula(g, args.m, args.positive)
        hw = h_poly_formula(g, args.m, args.positive)
        top = park_rank(g.datum, args.m, args.positive)
        ok = fv == fw and hv == hw and hv[-1] == top
        return (ok, {"f": list(fw), "h": list(hw), "h_top": top},
                {"f": list(fv), "h": list(hv), "h_top": hv[-1]})

    return [("hvector-closed-form", run)]


def _checks_catalan(args, g: Group) -> list:
    arr = CatalanArrangement(g, args.m)

    def regions():
        poset, dims = arr.intersection_poset()
        want = zaslavsky_regions(poset, dims)
        return (len(arr) == want, want, len(arr))

    def boolean(fn):
        def run():
            ok = fn()
            return (ok, True, ok)
        return run

    checks = [("catalan-regions-zaslavsky", regions)]
    if args.m >= 1:
        checks += [
            ("catalan-dominant-h", boolean(lambda: verify_prop_9_1(arr))),
            ("catalan-all-regions-h", boolean(lambda: verify_thm_9_3(arr))),
            ("catalan-orbit-lemma", boolean(lambda: all(
                arr.lemma_orbit_check(i) for i in arr.dominant_ids()))),
        ]
    return checks


def _checks_oracle(args, g: Group) -> list:
    n = _type_a_n(g.datum)
    m = args.m
    if not (1 <= m <= 3 and n <= 6):
        raise CoxcatError("type A oracle covers n <= 6 and 1 <= m <= 3")
    checks = []

    def dyck(prime: bool):
        got = mdyck_types(n, m, prime)
        want = {lam: dyck_count_formula(n, m, lam, prime) for lam in partitions(n)}
        want = {lam: c for lam, c in want.items() if c}
        return (got == want, serialize.counts_doc(want), serialize.counts_doc(got))

    checks.append(("oracle-dyck", lambda: dyck(False)))
    checks.append(("oracle-dyck-prime", lambda: dyck(True)))

    def parking(prime: bool):
        got = classical_parking_count(n, m, prime)
        want = (m * n + (-1 if prime else 1)) ** (n - 1)
        return (got == want, want, got)

    checks.append(("oracle-parking", lambda: parking(False)))
    checks.append(("oracle-parking-prime", lambda: parking(True)))

    if n <= 5 and m <= 2:
        def dissect():
            got = dissection_types(n, m)
            byformula = {
                lam: dissection_count_formula(n, m, lam) for lam in partitions(n)
            }
            byformula = {lam: c for lam, c in byformula.items() if c}
            ok = got == byformula and got == cluster_face_types(n, m)
            return (ok, serialize.counts_doc(byformula), serialize.counts_doc(got))

        checks.append(("oracle-dissections", dissect))

    if n <= 4 and m <= 2:
        def labeled():
            got = labeled_dissection_complex(n, m).f_vector()
            want = CpfComplex(g, m).complex.f_vector()
            return (got == want, list(want), list(got))

        checks.append(("oracle-labeled-dissections", labeled))
    return checks


def _checks_suite(args, g: Group) -> list:
    checks = []
    checks += _checks_cpf_verify(args, g)
    if g.datum.is_irreducible():
        checks += _checks_cpf_lefschetz(args, g)
    checks += _checks_cpf_links(args, g)
    checks += _checks_hvector(args, g)
    checks += _checks_pf_topology(args, g)
    if args.m == 1:
        checks += _checks_pf_labeled(args, g)
    if g.datum.crystallographic:
        checks += _checks_catalan(args, g)
    checks += _checks_cpf_flag(args, g)
    checks.append(("pf-helly-report",
                   lambda: (None, None, helly_report(PfPoset(g)))))
    return checks


def _doc_command(args, g: Group) -> dict:
    verb = (args.noun, args.verb)
    if verb == ("group", "info"):
        return serialize.group_doc(g)
    if verb == ("nc", "build"):
        return serialize.nc_doc(NcLattice(g))
    if verb == ("cluster", "build"):
        return serialize.cluster_doc(ClusterComplex(g, args.m), args.positive)
    raise AssertionError(verb)


_CHECK_BUILDERS = {
    ("cluster", "types"): _checks_cluster_types,
    ("pf", "topology"): _checks_pf_topology,
    ("pf", "helly"): lambda args, g: [
        ("pf-helly-report", lambda: (None, None, helly_report(PfPoset(g))))
    ],
    ("pf", "labeled-clusters"): _checks_pf_labeled,
    ("cpf", "verify"): _checks_cpf_verify,
    ("cpf", "lefschetz"): _checks_cpf_lefschetz,
    ("cpf", "links"): _checks_cpf_links,
    ("cpf", "flag"): _checks_cpf_flag,
    ("hvector", "compare"): _checks_hvector,
    ("catalan", "verify"): _checks_catalan,
    ("oracle", "typea"): _checks_oracle,
    ("suite", "all"): _checks_suite,
}

_VERBS = {
    ("group", "info"), ("nc", "build"), ("cluster", "build"),
    *_CHECK_BUILDERS.keys(),
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="coxcat",
        description="exact Coxeter-Catalan checks: complexes, posets, arrangements",
    )
    p.add_argument("noun", help="group|nc|cluster|pf|cpf|hvector|catalan|oracle|suite")
    p.add_argument("verb", help="action for the noun, e.g. info, build, verify, all")
    p.add_argument("--type", required=True, dest="type_label",
                   help="group label, e.g. A2, B3, I2(5), A1xA2")
    p.add_argument("--m", type=int, default=1, help="Fuss parameter, m >= 0")
    p.add_argument("--positive", action="store_true",
                   help="positive variant where it exists")
    p.add_argument("--out", choices=("json", "text"), default="text")
    p.add_argument("--jobs", type=int, default=1, help="parallel check workers")
    p.add_argument("--cache", type=Path, default=None,
                   help="directory for serialized build documents")
    return p


def _run_checks(checks, jobs: int):
    fns = [fn for _, fn in checks]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda f: f(), fns))
    else:
        results = [fn() for fn in fns]
    records = []
    for (name, _), (ok, expected, actual) in zip(checks, results):
        status = "report" if ok is None else ("pass" if ok else "fail")
        records.append(
            {"name": name, "status": status, "expected": expected, "actual": actual}
        )
    return records


def _emit(args, doc: dict) -> None:
    if args.out == "json":
        sys.stdout.write(serialize.dumps(doc))
        return
    head = f"{doc['command']} type={doc['label']} m={doc['m']}"
    if doc.get("positive"):
        head += " positive"
    print(head)
    for rec in doc.get("checks", ()):
        line = f"  {rec['status'].upper():6} {rec['name']}"
        if rec["status"] == "fail":
            line += f" expected={json.dumps(rec['expected'])} actual={json.dumps(rec['actual'])}"
        elif rec["status"] == "report":
            line += f" {json.dumps(rec['actual'])}"
        print(line)
    for key in sorted(doc):
        if key in ("schema", "command", "label", "m", "positive", "checks"):
            continue
        print(f"  {key}: {json.dumps(doc[key], sort_keys=True)}")


def _summary_fields(args, g: Group, doc: dict) -> dict:
    # small human-facing summaries for the build verbs in text mode
    verb = (args.noun, args.verb)
    if verb == ("group", "info"):
        return {k: doc[k] for k in ("rank", "order", "reflections", "coxeter_number")}
    if verb == ("nc", "build"):
        ranks = doc["ranks"]
        return {"size": doc["size"],
                "rank_sizes": [ranks.count(r) for r in range(g.rank + 1)]}
    if verb == ("cluster", "build"):
        return {"f_vector": doc["f_vector"]}
    return doc


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if (args.noun, args.verb) not in _VERBS:
        parser.error(f"unknown command: {args.noun} {args.verb}")
    if args.m < 0 or args.jobs < 1:
        parser.error("--m must be >= 0 and --jobs >= 1")
    if args.positive and args.m == 0:
        parser.error("--positive needs m >= 1")
    t0 = time.monotonic()
    try:
        g = Group(parse_type(args.type_label))
    except (AssertionError, CoxcatError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    try:
        doc = {
            "schema": serialize.SCHEMA,
            "command": f"{args.noun} {args.verb}",
            "label": g.datum.label,
            "m": args.m,
            "positive": args.positive,
        }
        if (args.noun, args.verb) in _CHECK_BUILDERS:
            checks = _CHECK_BUILDERS[(args.noun, args.verb)](args, g)
            doc["checks"] = _run_checks(checks, args.jobs)
        else:
            key = f"{args.noun}-{args.verb}-{g.datum.label}-m{args.m}" \
                  f"{'-pos' if args.positive else ''}.json"
            cached = args.cache / key if args.cache else None
            if cached is not None and cached.exists():
                payload = json.loads(cached.read_text())
                assert payload["schema"] == serialize.SCHEMA
            else:
                payload = _doc_command(args, g)
                if cached is not None:
                    args.cache.mkdir(parents=True, exist_ok=True)
                    cached.write_text(serialize.dumps(payload))
            if args.out == "json":
                doc.update(payload)
            else:
                doc.update(_summary_fields(args, g, payload))
    except (CoxcatError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    _emit(args, doc)
    failed = any(r["status"] == "fail" for r in doc.get("checks", ()))
    print(f"[{time.monotonic() - t0:.2f}s] {doc['command']} {g.datum.label}",
          file=sys.stderr)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
