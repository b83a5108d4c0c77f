"""Command-line front end.

Exit codes: 0 success, 1 golden-value mismatch, 2 parse/validation error,
3 crossing cap exceeded, 4 unknown catalog name.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib.resources import files
from pathlib import Path

from .catalog import TABLE1_KNOTS, load_catalog
from .coloring import chromatic_number, partition_into
from .conway import ConwaySpec, conway_to_pd
from .diagram import PlanarDiagram, parse_pd
from .errors import CapExceeded, DiagramError, UndefinedForUnknot, UnknownName
from .families import FamilySpec, verify_lemma_unknotting, verify_proposition
from .indep import build_system, exchange_property_minimal, unknotting_map
from .isomorphism import independence_isomorphic
from .oracle import DEFAULT_CAP, default_workers
from .report import analyze


def _golden() -> dict:
    return json.loads(files("uindep").joinpath("data/golden.json").read_text())


def _read_pd(arg: str) -> str:
    if arg.startswith("@"):
        return Path(arg[1:]).read_text()
    return arg


def _single_input(args) -> tuple[str, PlanarDiagram]:
    given = [x for x in (args.knot, args.pd, args.conway) if x is not None]
    if len(given) != 1:
        raise DiagramError("exactly one of --knot, --pd, --conway is required")
    if args.knot is not None:
        return args.knot, load_catalog(args.knot)
    if args.pd is not None:
        return "pd", parse_pd(_read_pd(args.pd))
    spec = ConwaySpec.parse(args.conway)
    return f"conway({spec})", conway_to_pd(spec)


def _cap(args) -> int:
    if args.cap > DEFAULT_CAP and not args.force:
        raise DiagramError(f"--cap above {DEFAULT_CAP} requires --force")
    return args.cap


def _emit(args, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_analyze(args) -> int:
    name, d = _single_input(args)
    rep = analyze(d, name, workers=args.workers, cap=_cap(args), timing=args.timing)
    _emit(args, rep.to_json() if args.format == "json" else rep.to_table())
    return 0


def cmd_chromatic(args) -> int:
    name, d = _single_input(args)
    s = build_system(unknotting_map(d, workers=args.workers, cap=_cap(args)), name)
    try:
        k, part = chromatic_number(s)
    except UndefinedForUnknot as exc:
        out = {"diagram": name, "chromatic": None, "reason": str(exc)}
    else:
        out = {
            "diagram": name,
            "chromatic": k,
            "partition": [list(p) for p in part],
            "k_minus_1_feasible": partition_into(s, k - 1) is not None,
        }
    if args.format == "json":
        _emit(args, json.dumps(out, indent=2, sort_keys=True) + "\n")
    else:
        text = f"{name}: chi = {out['chromatic']}"
        if out.get("partition"):
            text += "  partition " + " ".join("{" + ",".join(map(str, p)) + "}" for p in out["partition"])
        _emit(args, text + "\n")
    return 0


def cmd_table1(args) -> int:
    expected = _golden()["table1_exchange"]
    rows = []
    for name in TABLE1_KNOTS:
        print(f"table1: {name}", file=sys.stderr)
        m = unknotting_map(load_catalog(name), workers=args.workers, cap=_cap(args))
        got = exchange_property_minimal(m).holds
        rows.append({"knot": name, "computed": got, "expected": expected[name], "match": got == expected[name]})
    mismatches = [r["knot"] for r in rows if not r["match"]]
    if args.format == "json":
        text = json.dumps({"rows": rows, "mismatches": mismatches}, indent=2, sort_keys=True) + "\n"
    else:
        yn = {True: "yes", False: "no"}
        lines = [f"{'knot':<6}{'computed':<10}{'expected':<10}match"]
        for r in rows:
            lines.append(f"{r['knot']:<6}{yn[r['computed']]:<10}{yn[r['expected']]:<10}{'ok' if r['match'] else 'DIFF'}")
        lines.append(f"{len(rows) - len(mismatches)}/{len(rows)} rows match")
        text = "\n".join(lines) + "\n"
    _emit(args, text)
    return 1 if mismatches else 0


def _iso_inputs(args) -> list[tuple[str, PlanarDiagram]]:
    out = [(k, load_catalog(k)) for k in args.knots]
    out += [("pd", parse_pd(_read_pd(p))) for p in args.pd or []]
    for c in args.conway or []:
        spec = ConwaySpec.parse(c)
        out.append((f"conway({spec})", conway_to_pd(spec)))
    if len(out) != 2:
        raise DiagramError(f"iso needs exactly two diagrams, got {len(out)}")
    return out


def cmd_iso(args) -> int:
    (n1, d1), (n2, d2) = _iso_inputs(args)
    cap = _cap(args)
    s1 = build_system(unknotting_map(d1, workers=args.workers, cap=cap), n1)
    s2 = build_system(unknotting_map(d2, workers=args.workers, cap=cap), n2)
    phi = independence_isomorphic(s1, s2)
    out = {"first": n1, "second": n2, "isomorphic": phi is not None,
           "bijection": {str(k): v for k, v in phi.items()} if phi else None}
    if args.format == "json":
        _emit(args, json.dumps(out, indent=2, sort_keys=True) + "\n")
    else:
        text = f"{n1} vs {n2}: {'isomorphic' if phi is not None else 'not isomorphic'}"
        if phi is not None:
            text += "\n  bijection " + " ".join(f"{k}->{v}" for k, v in phi.items())
        _emit(args, text + "\n")
    return 0


def cmd_family(args) -> int:
    spec = FamilySpec(args.kind, args.n)
    cap = _cap(args)
    pd = parse_pd(_read_pd(args.pd)) if args.pd is not None else None
    part = {"torus_odd": "b", "twist_pair": "c", "bridge_triple": "a"}[spec.kind]
    check = verify_proposition(part, args.n, pd=pd, cap=cap, workers=args.workers)
    out = {"family": check.family, "n": check.n, "u": check.u, "matroid": check.matroid,
           "verified": check.holds, "details": check.details}
    if spec.kind == "torus_odd" and pd is None:
        lemma = verify_lemma_unknotting(args.n, cap=cap, workers=args.workers)
        out["lemma_u_equals_n"] = lemma.holds
        out["verified"] = out["verified"] and lemma.holds
    out["details"] = json.loads(json.dumps(out["details"], default=str))
    if args.format == "json":
        _emit(args, json.dumps(out, indent=2, sort_keys=True) + "\n")
    else:
        lines = [f"{out['family']}", f"  u(D) = {out['u']}", f"  matroid = {'yes' if out['matroid'] else 'no'}"]
        if "lemma_u_equals_n" in out:
            lines.append(f"  u(D) = n and every n-subset unknots: {out['lemma_u_equals_n']}")
        lines.append(f"  verified: {out['verified']}")
        _emit(args, "\n".join(lines) + "\n")
    return 0 if out["verified"] else 1


def _common(p: argparse.ArgumentParser, inputs: bool = True) -> None:
    if inputs:
        p.add_argument("--knot", help="catalog name m_t, e.g. 7_3")
        p.add_argument("--pd", help="PD code text, or @path to read it from a file")
        p.add_argument("--conway", help="Conway word, e.g. 5,1,4")
    p.add_argument("--format", choices=("json", "table"), default="table")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="crossing cap")
    p.add_argument("--force", action="store_true", help=f"allow --cap above {DEFAULT_CAP}")
    p.add_argument("--workers", type=int, default=None,
                   help="parallel workers for the switch sweep (default: $UINDEP_WORKERS or 1)")
    p.add_argument("--out", help="write output to this path instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="uindep", description="U-independence systems of knot diagrams")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for one diagram")
    _common(p)
    p.add_argument("--timing", action="store_true", help="include wall-clock timings in the report")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("chromatic", help="I-chromatic number with witness partition")
    _common(p)
    p.set_defaults(func=cmd_chromatic)

    p = sub.add_parser("table1", help="exchange-property table for 3_1 .. 8_6, diffed against golden values")
    _common(p, inputs=False)
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("iso", help="decide isomorphism of two independence systems")
    p.add_argument("knots", nargs="*", help="catalog names")
    p.add_argument("--pd", action="append", help="PD text or @file (repeatable)")
    p.add_argument("--conway", action="append", help="Conway word (repeatable)")
    _common(p, inputs=False)
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("family", help="verify a Conway family instance")
    p.add_argument("kind", choices=("torus-odd", "twist-pair", "bridge-triple"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--pd", help="external PD for the family diagram (bridge-triple figure check)")
    _common(p, inputs=False)
    p.set_defaults(func=cmd_family)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.workers is None:
        args.workers = default_workers()
    try:
        return args.func(args)
    except UnknownName as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (DiagramError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
