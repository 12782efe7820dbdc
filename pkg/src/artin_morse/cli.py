"""
Command-line interface.

    artin-morse homology A 3 --method both
    artin-morse homology tC:4 --d 4 --format json
    artin-morse critical B 4 --d 4
    artin-morse verify tA 2..8 2..10
    artin-morse independence 9 --r 3 --contains 2,3,5,6,7,9
    artin-morse e1 A 3 --d 2

Exit codes: 0 success, 1 bad input, 2 verification failure.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from . import catalog
from .complexes import build_C, e1_page
from .coxeter import CoxeterGraph, FAMILIES, family_graph, graph_from_json, max_weight_d
from .independence import ind_complex, path_graph, reduced_betti
from .morse import (
    HomologyTable, collapse_check, homology_artin, morse_complex, verify_acyclic,
    verify_precise, verify_weighted,
)
from .oracle import homology_direct

EXIT_OK, EXIT_INPUT, EXIT_FAIL = 0, 1, 2
ORACLE_CAP = {"A": 5, "B": 5, "tA": 4, "tC": 4}


class InputError(Exception):
    pass


def max_n() -> int:
    raw = os.environ.get("ARTIN_MORSE_MAX_N", "12")
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"ARTIN_MORSE_MAX_N must be an integer, got {raw!r}") from None


def _resolve(target: str, n: str | None) -> tuple[str | None, int | None, CoxeterGraph]:
    """A family plus n, a ``family:n`` shorthand, or a JSON graph file."""
    if target.endswith(".json") or (Path(target).is_file() and n is None):
        try:
            data = json.loads(Path(target).read_text())
            graph = graph_from_json(data, name=Path(target).stem)
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise InputError(f"cannot read graph file {target}: {exc}") from None
        _check_size(graph.n_vertices)
        return None, None, graph
    if ":" in target:
        if n is not None:
            raise InputError("give either FAMILY N or FAMILY:N, not both")
        target, n = target.split(":", 1)
    if target not in FAMILIES:
        raise InputError(f"unknown family {target!r}; expected one of {', '.join(sorted(FAMILIES))} or a .json graph")
    if n is None:
        raise InputError("missing n")
    try:
        nn = int(n)
        graph = family_graph(target, nn)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _check_size(graph.n_vertices)
    return target, nn, graph


def _check_size(vertices: int):
    if vertices > max_n() + 1:
        raise InputError(f"graph has {vertices} vertices; raise ARTIN_MORSE_MAX_N to go beyond {max_n()}")


def _range(text: str) -> range:
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            return range(int(a), int(b) + 1)
        v = int(text)
        return range(v, v + 1)
    except ValueError:
        raise InputError(f"bad range {text!r}; expected N or A..B") from None


def _filter(table: HomologyTable, d: int | None) -> HomologyTable:
    if d is None:
        return table
    torsion = {m: {k: v for k, v in row.items() if k[0] == d} for m, row in table.torsion.items()}
    return HomologyTable(table.n_degrees, table.free, torsion)


def _format_summand(d: int, e: int, mult: int) -> str:
    base = f"R/(phi_{d})" if e == 1 else f"R/(phi_{d}^{e})"
    return base if mult == 1 else f"{base}^{mult}"


def _render_table(table: HomologyTable) -> str:
    lines = [f"{'m':>3}  {'free':>4}  torsion"]
    for m, free, tors in table.normalized():
        parts = [_format_summand(*t) for t in tors]
        lines.append(f"{m:>3}  {free:>4}  {' + '.join(parts) if parts else '0'}")
    return "\n".join(lines)


def cmd_homology(args) -> int:
    family, n, graph = _resolve(args.target, args.n)
    if args.d is not None and args.d < 2:
        raise InputError("--d must be >= 2")
    d_values = [args.d] if args.d is not None else None
    morse_table = snf_table = None
    if args.method in ("morse", "both"):
        if family is None:
            raise InputError("method morse needs a cataloged family (A, B, tA, tC); use --method snf for graph files")
        morse_table = _filter(homology_artin(graph, catalog.provider(family, n), d_values), args.d)
    if args.method in ("snf", "both"):
        snf_table = _filter(homology_direct(build_C(graph)), args.d)
    table = morse_table or snf_table
    verified = morse_table is not None and (snf_table is None or morse_table == snf_table)
    if args.format == "json":
        payload = {
            "family": family if family else graph.name,
            "n": n if n is not None else graph.n_vertices,
            "d": args.d,
            "degrees": table.to_json(),
            "verified": verified,
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        title = f"{family} n={n}" if family else f"graph {graph.name} ({graph.n_vertices} vertices)"
        if args.d is not None:
            title += f" d={args.d}"
        print(title)
        print(_render_table(table))
        if args.method == "both":
            print("PASS" if verified else "FAIL")
    if args.method == "both" and not verified:
        return EXIT_FAIL
    return EXIT_OK


def cmd_critical(args) -> int:
    family, n, graph = _resolve(args.target, args.n)
    if family is None:
        raise InputError("critical cells are only cataloged for A, B, tA, tC")
    if args.d < 2:
        raise InputError("--d must be >= 2")
    mc = morse_complex(graph, catalog.matching_for(family, n, args.d), args.d)
    names = {c.mask(): name for name, c in catalog.critical_table(family, n, args.d).items()}
    rows = []
    for c in mc.cells():
        rows.append({
            "bits": graph.bitstring(c),
            "vertices": graph.vertices(c),
            "degree": c.bit_count(),
            "exponent": mc.exponents[c],
            "name": catalog.critical_table(family, n, args.d)[names[c]].name if c in names else None,
        })
    if args.format == "json":
        print(json.dumps({"family": family, "n": n, "d": args.d, "critical": rows}, sort_keys=True))
    else:
        print(f"{family} n={n} d={args.d}: {len(rows)} critical")
        for r in rows:
            verts = "{" + ",".join(map(str, r["vertices"])) + "}"
            print(f"  {r['bits']}  deg {r['degree']}  v {r['exponent']}  {verts}  {r['name'] or ''}".rstrip())
    return EXIT_OK


def verify_one(family: str, n: int, d: int) -> dict[str, bool]:
    graph = catalog.graph_for(family, n)
    M = catalog.matching_for(family, n, d)
    out = {"acyclic": verify_acyclic(M), "weighted": verify_weighted(graph, M, d)}
    if not (out["acyclic"] and out["weighted"]):
        return out
    mc = morse_complex(graph, M, d)
    out["precise"] = verify_precise(mc)
    out["collapse"] = collapse_check(graph, M, d)
    table = catalog.critical_table(family, n, d)
    out["critical"] = {(c.mask(), c.exponent) for c in table.values()} == {(c, mc.exponents[c]) for c in mc.cells()}
    if out["critical"]:
        name = {c.mask(): k for k, c in table.items()}
        got = {(name[s], name[t]): v for (s, t), v in mc.incidence.items()}
        if not catalog.exact_signs(family):
            got = {k: abs(v) for k, v in got.items()}
        out["incidence"] = got == catalog.incidence_table(family, n, d)
    return out


def cmd_verify(args) -> int:
    family = args.family
    if family not in FAMILIES:
        raise InputError(f"unknown family {family!r}")
    ns, ds = _range(args.n_range), _range(args.d_range)
    failures = 0
    lines = []
    for n in ns:
        try:
            _, _, graph = _resolve(family, str(n))
        except InputError:
            if n < (2 if family in ("tA", "tC") else 1):
                continue
            raise
        for d in ds:
            if d < 2 or d > max_weight_d(graph):
                continue
            checks = verify_one(family, n, d)
            ok = all(checks.values())
            failures += not ok
            bad = [k for k, v in checks.items() if not v]
            lines.append(f"{family} n={n} d={d}: {'PASS' if ok else 'FAIL ' + ','.join(bad)}")
        if n <= ORACLE_CAP[family] and not args.skip_oracle:
            ok = homology_artin(graph, catalog.provider(family, n)) == homology_direct(build_C(graph))
            failures += not ok
            lines.append(f"{family} n={n} oracle: {'PASS' if ok else 'FAIL'}")
    print("\n".join(lines))
    print("PASS" if failures == 0 else f"FAIL ({failures})")
    return EXIT_OK if failures == 0 else EXIT_FAIL


def cmd_independence(args) -> int:
    if args.n < 0 or args.r < 0:
        raise InputError("n and r must be >= 0")
    if args.n > max_n():
        raise InputError(f"n={args.n} exceeds ARTIN_MORSE_MAX_N={max_n()}")
    cx = ind_complex(path_graph(args.n), args.r)
    betti = reduced_betti(cx)
    result = {"n": args.n, "r": args.r, "betti": {str(k): v for k, v in sorted(betti.items())}}
    if args.contains:
        try:
            verts = [int(v) for v in args.contains.split(",") if v]
        except ValueError:
            raise InputError(f"bad vertex list {args.contains!r}") from None
        if any(not 1 <= v <= args.n for v in verts):
            raise InputError("vertices must lie in 1..n")
        result["contains"] = cx.contains_vertices(verts)
    if args.format == "json":
        print(json.dumps(result, sort_keys=True))
    else:
        print(f"Ind_{args.r}(A_{args.n}): {len(cx.simplices)} simplices")
        for k, v in sorted(betti.items()):
            print(f"  b~_{k} = {v}")
        if not betti:
            print("  acyclic")
        if "contains" in result:
            print(f"  contains {{{args.contains}}}: {str(result['contains']).lower()}")
    return EXIT_OK


def cmd_e1(args) -> int:
    _, _, graph = _resolve(args.target, args.n)
    if args.d < 2:
        raise InputError("--d must be >= 2")
    page = e1_page(graph, args.d)
    if args.format == "json":
        print(json.dumps({"d": args.d, "e1": [{"p": p, "q": q, "rank": r} for (p, q), r in sorted(page.items())]}, sort_keys=True))
    else:
        print(f"E1 page, d={args.d} (rank over R/(phi^p))")
        for (p, q), r in sorted(page.items()):
            print(f"  p={p} q={q}: {r}")
        if not page:
            print("  empty")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="artin-morse", description="Homology of Artin groups via precise Morse matchings.")
    sub = ap.add_subparsers(dest="command", required=True)

    def target(p):
        p.add_argument("target", help="family (A, B, tA, tC), family:n, or a JSON graph file")
        p.add_argument("n", nargs="?", default=None)

    p = sub.add_parser("homology", help="homology table H_m(X_W; R)")
    target(p)
    p.add_argument("--method", choices=["morse", "snf", "both"], default="morse")
    p.add_argument("--d", type=int, default=None, help="only report phi_d torsion")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("critical", help="critical cells of the cataloged matching")
    target(p)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_critical)

    p = sub.add_parser("verify", help="run the matching and oracle checks over a parameter grid")
    p.add_argument("family")
    p.add_argument("n_range", help="N or A..B")
    p.add_argument("d_range", help="D or A..B")
    p.add_argument("--skip-oracle", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("independence", help="reduced Betti numbers of Ind_r(A_n)")
    p.add_argument("n", type=int)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--contains", default=None, help="comma-separated vertices to test for membership")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_independence)

    p = sub.add_parser("e1", help="E^1 page of the phi_d spectral sequence")
    target(p)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_e1)
    return ap


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    start = time.perf_counter()
    try:
        code = args.func(args)
    except (InputError, catalog.BadParams) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if os.environ.get("ARTIN_MORSE_TIMING"):
        print(f"[{time.perf_counter() - start:.3f}s]", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
