"""Command-line front end.

Subcommands: verify, convert, analyze, count, catalog, selftest.
Exit codes: 0 success, 1 domain-level failure, 2 I/O or parse failure.
All output is canonically ordered, so runs are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import os
import string
import sys

from . import domain as dm
from . import generate as gen
from . import lattice as lt
from . import matgraph as mg
from . import routes
from . import serialize as io
from . import species as sp
from . import vine as vn
from .errors import StructureError


def _validate_structure(obj) -> list[tuple[str, str]]:
    """Family-axiom validation for any kind; list of (axiom, message)."""
    kind = io.kind_of(obj)
    if kind == "matgraph":
        return [(v.axiom, v.message) for v in mg.validate_mat_labeling(obj)]
    if kind == "vine":
        return [(v.axiom, v.message) for v in vn.validate_vine(obj)]
    if kind == "domain":
        out = []
        ok, triple = dm.is_aspd(obj)
        if not ok:
            out.append(("domain.never-bottom", f"every alternative of {triple} is a bottom in the restriction"))
        expected = 1 if obj.n == 0 else 2 ** (obj.n - 1)
        if len(obj.prefs) != expected:
            out.append(("domain.maximal-size", f"{len(obj.prefs)} preferences, maximal ASPDs have {expected}"))
        return out
    if kind == "lattice":
        out = []
        if not lt.is_lattice(obj):
            return [("lattice.lattice", "element family is not a lattice under inclusion")]
        n = len(obj.ground)
        witness = lt.is_b3_free(obj)
        if witness is not None:
            out.append(("lattice.b3-free", f"induced B(3) on {[sorted(s) for s in witness]}"))
        if len(obj.elements) != 1 + n + n * (n - 1) // 2:
            out.append(("lattice.size", f"{len(obj.elements)} elements, extremal is {1 + n + n * (n - 1) // 2}"))
        if len(lt.join_irreducibles(obj)) > n:
            out.append(("lattice.join-irreducibles", f"more than {n} join-irreducibles"))
        return out
    # matrix
    out = []
    witness = lt.has_no_triangles(obj)
    if witness is not None:
        out.append(("matrix.triangle", f"triangle at rows {witness[0]}"))
    n = len(obj.rows)
    if len(obj.columns) != 1 + n + n * (n - 1) // 2:
        out.append(("matrix.size", f"{len(obj.columns)} columns, extremal is {1 + n + n * (n - 1) // 2}"))
    return out


def _emit(obj, fmt: str) -> str:
    if fmt == "json":
        return io.dumps(obj)
    if fmt == "text":
        return io.to_text(obj)
    if fmt == "dot":
        return io.to_dot(obj)
    raise StructureError("format.unknown", f"unknown format {fmt!r}")


def cmd_verify(args) -> int:
    obj = io.load_file(args.path)
    if args.kind and io.kind_of(obj) != args.kind:
        print(f"kind mismatch: file holds {io.kind_of(obj)}, expected {args.kind}", file=sys.stderr)
        return 1
    report = _validate_structure(obj)
    if report:
        for axiom, message in report:
            print(f"INVALID {axiom}: {message}")
        return 1
    if args.strict:
        kind = io.kind_of(obj)
        targets = [k for k in io.KINDS if k != kind]
        for to_kind in targets:
            converted = routes.convert_structure(obj, to_kind, "direct")
            back = routes.convert_structure(converted, kind, "direct")
            if io.dumps(back) != io.dumps(obj):
                print(f"INVALID roundtrip.{to_kind}: conversion does not round-trip")
                return 1
        print(f"VALID {io.kind_of(obj)} (strict: all round trips pass)")
        return 0
    print(f"VALID {io.kind_of(obj)}")
    return 0


def cmd_convert(args) -> int:
    obj = io.load_file(args.path)
    report = _validate_structure(obj)
    if report:
        axiom, message = report[0]
        print(f"INVALID {axiom}: {message}", file=sys.stderr)
        return 1
    out = routes.convert_structure(obj, args.to, args.via)
    sys.stdout.write(_emit(out, args.format))
    return 0


def cmd_analyze(args) -> int:
    obj = io.load_file(args.path)
    report = _validate_structure(obj)
    if report:
        axiom, message = report[0]
        print(f"INVALID {axiom}: {message}", file=sys.stderr)
        return 1
    v = routes.convert_structure(obj, "vine", "direct")
    d = routes.convert_structure(v, "domain", "direct")
    richness = vn.richness_via_vine(v)
    first_rank = dict(sorted(vn.chain_counts_from_atoms(v).items()))
    axis = dm.is_bspd(d)
    info = {
        "kind": io.kind_of(obj),
        "n": v.n,
        "richness": richness,
        "richness_bounds_note": None if v.n >= 3 else "richness bounds apply for n >= 3 only",
        "first_rank": first_rank,
        "bottom_alternatives": sorted(dm.bottom_alternatives(d)),
        "is_d_vine": vn.is_d_vine(v),
        "is_c_vine": vn.is_c_vine(v),
        "is_bspd": axis is not None,
        "bspd_axis": list(axis) if axis is not None else None,
        "aut_order": lt.automorphism_group_order(v),
    }
    if io.kind_of(obj) == "domain":
        # domain-side cross-checks against the vine-side analytics
        assert dm.richness_direct(obj) == richness, "richness cross-check failed"
        assert dm.first_rank_distribution(obj) == first_rank, "first-rank cross-check failed"
        info["cross_checks"] = "domain-side richness and first-rank agree"
    if args.format == "json":
        print(json.dumps(info, sort_keys=True))
    else:
        for key in sorted(info):
            if info[key] is not None:
                print(f"{key}: {info[key]}")
    return 0


def cmd_count(args) -> int:
    n = args.n
    if args.mode == "generate":
        if n > gen.GENERATION_CAP:
            print(f"generate mode capped at n <= {gen.GENERATION_CAP}", file=sys.stderr)
            return 1
        if n <= 6:
            total = 0
            for _ in gen.generate_vines(string.ascii_lowercase[:n]):
                total += 1
                if total % 5000 == 0:
                    print(f"... {total} vines", file=sys.stderr)
        else:
            print("... counting by shape-memoized DP", file=sys.stderr)
            total = gen.count_vines(n)
        expected = gen.labeled_count_formula(n)
        status = "agrees with" if total == expected else "DISAGREES WITH"
        print(f"n={n} labeled={total} ({status} formula value {expected})")
        return 0 if total == expected else 1
    if n > 64:
        print("formula/recursive modes capped at n <= 64", file=sys.stderr)
        return 1
    labeled = gen.labeled_count_formula(n)
    unlabeled = gen.unlabeled_count_formula(n)
    p, q = gen.recursive_pq_counts(n)
    if args.mode == "recursive":
        print(f"n={n} unlabeled={p + q} p={p} q={q}")
        return 0
    print(f"n={n} labeled={labeled} unlabeled={unlabeled} p={p} q={q}")
    return 0


def cmd_catalog(args) -> int:
    n = args.n
    if not 1 <= n <= 6:
        print("catalog supports 1 <= n <= 6", file=sys.stderr)
        return 1
    os.makedirs(args.out, exist_ok=True)
    entries = gen.catalog_entries(n)
    jsonl_path = os.path.join(args.out, f"catalog_n{n}.jsonl")
    text_path = os.path.join(args.out, f"catalog_n{n}.txt")
    with open(jsonl_path, "w", encoding="utf-8") as fh:
        for entry in entries:
            fh.write(json.dumps(entry, sort_keys=True, separators=(",", ":")) + "\n")
    with open(text_path, "w", encoding="utf-8") as fh:
        for entry in entries:
            fh.write(f"== class {entry['index']} (n={n}, |Aut|={entry['aut_order']}, "
                     f"orbit {entry['orbit_size']}) ==\n")
            fh.write("vine:   " + " ".join("{" + ",".join(s) + "}" for s in entry["vine_nodes"]) + "\n")
            fh.write("graph:  " + " ".join(f"{e['u']}{e['v']}:{e['label']}" for e in entry["graph_edges"]) + "\n")
            fh.write("domain:\n")
            for r in range(n):
                fh.write("  " + " ".join(w[r] for w in entry["preferences"]) + "\n")
            fh.write("matrix columns: " + " ".join(entry["matrix_columns"]) + "\n")
            fh.write(f"richness {entry['richness']}  first-rank {entry['first_rank']}  "
                     f"D-vine {entry['is_d_vine']}  C-vine {entry['is_c_vine']}\n\n")
    print(f"wrote {len(entries)} entries to {jsonl_path} and {text_path}")
    return 0


def cmd_selftest(args) -> int:
    failures = 0

    def check(name: str, ok: bool):
        nonlocal failures
        print(f"{'PASS' if ok else 'FAIL'} {name}")
        failures += 0 if ok else 1

    for n in range(1, 6):
        got = sum(1 for _ in gen.generate_vines(string.ascii_lowercase[:n]))
        check(f"labeled count n={n}", got == gen.labeled_count_formula(n))
    for n in range(1, 13):
        p, q = gen.recursive_pq_counts(n)
        check(f"formula/recursion agree n={n}", p + q == gen.unlabeled_count_formula(n))
    intro = mg.mat_graph("abcd", [("a", "b", 1), ("a", "c", 2), ("a", "d", 3),
                                  ("b", "c", 1), ("b", "d", 1), ("c", "d", 2)])
    v = routes.convert_structure(intro, "vine", "direct")
    check("intro graph is valid", not mg.validate_mat_labeling(intro))
    check("intro graph -> vine -> graph round trip",
          routes.convert_structure(v, "matgraph", "direct") == intro)
    check("transport equals explicit map",
          sp.transport(sp.GRAPH, sp.VINE, intro) == v)
    d = routes.convert_structure(intro, "domain", "transport")
    check("intro domain is a maximal ASPD", dm.is_maximal_aspd(d))
    L = lt.vine_to_lattice(v)
    check("intro lattice is (4,3)-extremal", lt.is_extremal_lattice(L, 4))
    check("intro matrix is extremal", lt.is_extremal_matrix(lt.lattice_to_matrix(L)))
    check("n=4 classification finds 2 classes",
          len(gen.classify(gen.generate_vines("abcd"))) == 2)
    print("selftest:", "OK" if failures == 0 else f"{failures} failures")
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vinery",
                                     description="Regular vines and their equivalent structures")
    parser.add_argument("--threads", type=int, default=1,
                        help="worker cap for enumeration (counting uses a DP; accepted for compatibility)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="validate a structure file against its family axioms")
    p.add_argument("path")
    p.add_argument("--kind", choices=io.KINDS)
    p.add_argument("--strict", action="store_true", help="also require cross-representation round trips")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("convert", help="convert a structure file to another representation")
    p.add_argument("path")
    p.add_argument("--to", required=True, choices=io.KINDS)
    p.add_argument("--via", choices=("direct", "transport"), default="direct")
    p.add_argument("--format", choices=("json", "text", "dot"), default="json")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("analyze", help="richness, first-rank distribution, flags, automorphisms")
    p.add_argument("path")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("count", help="labeled/unlabeled counts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=("formula", "recursive", "generate"), default="formula")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("catalog", help="write the per-class catalog for one n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("selftest", help="run a quick internal consistency battery")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except StructureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
