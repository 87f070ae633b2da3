"""Command-line front end: ``stringalg <command> [dims ...] [options]``.

Dimension data are band vectors ``m_n ... m_1``.  A full component
``(beta, r, s)`` can be given instead through ``--spec FILE`` holding
``{"beta": [...], "r": [...], "s": [...]}``.  Exit codes: 0 success, 1 fixture
failure (or a provisional result under ``--strict``), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .algebra import ComponentSpec, band_component
from .ext import verify_rigidity
from .fixtures import run_fixtures
from .graph import build_updown_graph, graph_as_dict, reduce_band, generic_decomposition, to_dot
from .linalg import DEFAULT_PRIME
from .matching import Matching, matching_predicates
from .roots import extract_matching, si_ring_structure
from .toric import classify_ring, conjecture_scan, control_equations, ring_report

DEFAULT_SEED = 0


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _load_json(text: str):
    path = Path(text)
    try:
        return json.loads(path.read_text() if path.exists() else text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"cannot parse JSON from {text!r}: {exc}") from None


def _component(args) -> ComponentSpec:
    if args.spec:
        data = _load_json(args.spec)
        try:
            c = ComponentSpec(tuple(data["beta"]), tuple(data["r"]), tuple(data["s"]))
        except (KeyError, TypeError) as exc:
            raise UsageError(f"spec needs beta, r and s: {exc}") from None
        if args.dims:
            raise UsageError("give either dims or --spec, not both")
        return c
    return band_component(_band(args))


def _band(args) -> tuple[int, ...]:
    if not args.dims:
        raise UsageError("no dimension data given")
    if any(m < 1 for m in args.dims):
        raise UsageError("band entries must be positive")
    return tuple(args.dims)


def _format(args, allowed, default):
    fmt = args.format or default
    if fmt not in allowed:
        raise UsageError(f"--format {fmt} is not available for {args.command}")
    return fmt


# -- commands --------------------------------------------------------------------


def cmd_decompose(args, out):
    c = _component(args)
    fmt = _format(args, ("json", "text"), "text")
    dec = generic_decomposition(c)
    data = dec.as_dict()
    if c.kind == "band":
        data["reduction_count"] = reduce_band(c.band_data())[0]
    if fmt == "json":
        out.write(_dump(data) + "\n")
        return 0
    out.write(f"beta = {tuple(c.beta)}: {dec.count} summand(s)\n")
    for sm in data["summands"]:
        label = f"band {sm['band']}" if sm["kind"] == "band" else f"string r={sm['r']} s={sm['s']}"
        out.write(f"  {sm['multiplicity']} x {label}  dim {tuple(sm['dimension_vector'])}\n")
    if dec.count == 1 and data["summands"][0]["kind"] == "band":
        out.write("  Schur band component\n")
    return 0


def cmd_graph(args, out):
    c = _component(args)
    fmt = _format(args, ("json", "dot", "text"), "dot")
    g = build_updown_graph(c)
    if fmt == "dot":
        out.write(to_dot(g))
    elif fmt == "json":
        out.write(_dump(graph_as_dict(g)) + "\n")
    else:
        for (u, v), colour in g.edges():
            out.write(f"{colour:4s} {u} -- {v}\n")
    return 0


def cmd_matching(args, out):
    m = _band(args)
    fmt = _format(args, ("json", "text"), "text")
    t = extract_matching(m)
    info = si_ring_structure(m)
    data = {
        "band": list(m),
        "matching": t.to_dict(),
        "predicates": matching_predicates(t),
        "polynomial_var_count": info["polynomial_var_count"],
    }
    if fmt == "json":
        out.write(_dump(data) + "\n")
    else:
        out.write(f"Theta{list(m)}: {t}\n")
        out.write(", ".join(f"{k}={v}" for k, v in data["predicates"].items()) + "\n")
        out.write(f"noncritical orbits: {info['polynomial_var_count']}\n")
    return 0


def cmd_ring(args, out):
    fmt = _format(args, ("json", "text"), "text")
    if args.matching:
        if args.dims:
            raise UsageError("give either dims or --matching, not both")
        try:
            t = Matching.from_dict(_load_json(args.matching))
        except (KeyError, ValueError) as exc:
            raise UsageError(f"bad matching: {exc}") from None
    else:
        t = extract_matching(_band(args))
    cl = classify_ring(t, args.degree_bound)
    report = ring_report(t, cl)
    report["relation_count"] = cl.relation_count
    report["provisional"] = cl.provisional
    if fmt == "json":
        out.write(_dump(report) + "\n")
    else:
        out.write(f"matching: {t}\n")
        for eq in control_equations(t).describe():
            out.write(f"  {eq}\n")
        out.write(f"generators ({len(cl.generators)}):\n")
        for k, g in enumerate(report["generators"]):
            out.write(f"  g{k} = {g['monomial']}\n")
        out.write(f"relations ({cl.relation_count}):\n")
        for lhs, rhs in report["relations"]:
            side = lambda idx: "*".join(f"g{i}" for i in idx)
            out.write(f"  {side(lhs)} = {side(rhs)}\n")
        tag = " (provisional)" if cl.provisional else ""
        out.write(f"dim {cl.dim}, codim {cl.codim}: {cl.kind}{tag}\n")
    return 1 if args.strict and cl.provisional else 0


def cmd_ext(args, out):
    c = _component(args)
    fmt = _format(args, ("json", "text"), "text")
    report = verify_rigidity(c, trials=args.trials, seed=args.seed, prime=args.field_prime)
    if fmt == "json":
        out.write(_dump(report) + "\n")
    else:
        out.write(f"beta = {tuple(c.beta)} ({c.kind}), prime {report['prime']}, seed {args.seed}\n")
        for row in report["hom_ext_table"]:
            out.write(f"  trial {row['trial']}: hom {row['hom']}, ext1 {row['ext1']}, euler {row['euler']}\n")
        out.write(f"{report['passes']}/{report['trials']} trials rigid\n")
        for f in report["failures"]:
            out.write(f"  trial {f['trial']}: {f['reason']}\n")
    return 0


def cmd_scan(args, out):
    fmt = _format(args, ("json", "text"), "text")
    report = conjecture_scan(args.n_max, args.degree_bound)
    if fmt == "json":
        out.write(_dump(report) + "\n")
    else:
        out.write(f"{report['matchings_checked']} symmetric matchings, n <= {args.n_max}, degree bound {args.degree_bound}\n")
        for part, label in (("part_a", "generators with an exponent > 1"), ("part_b", "relations in degree > 2")):
            found = report[part]
            if isinstance(found, str):
                out.write(f"{part}: none found\n")
            else:
                s = report["summary"][part]
                out.write(f"{part}: {s['total']} {label} ({s['even']} from even matchings)\n")
        out.write(f"unstabilized: {len(report['unstabilized'])}\n")
    return 1 if args.strict and report["unstabilized"] else 0


def cmd_fixtures(args, out):
    fmt = _format(args, ("json", "text"), "text")
    results = run_fixtures()
    if fmt == "json":
        out.write(_dump([r.__dict__ for r in results]) + "\n")
    else:
        for r in results:
            out.write(f"{'PASS' if r.ok else 'FAIL'} {r.name}: {r.detail}\n")
        out.write(f"{sum(r.ok for r in results)}/{len(results)} fixtures passed\n")
    return 0 if all(r.ok for r in results) else 1


COMMANDS = {
    "decompose": (cmd_decompose, "generic decomposition of a band or string component"),
    "graph": (cmd_graph, "up-and-down graph as DOT, JSON or an edge list"),
    "matching": (cmd_matching, "the matching Theta(m) of a band vector and its predicates"),
    "ring": (cmd_ring, "presentation and classification of S(Theta)"),
    "ext": (cmd_ext, "rigidity check: Ext^1 between generic modules"),
    "scan": (cmd_scan, "scan all symmetric matchings for generator and relation bounds"),
    "fixtures": (cmd_fixtures, "run the worked-example suite"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "dot", "text"))
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--field-prime", type=int, default=DEFAULT_PRIME)
    common.add_argument("--degree-bound", type=int, default=4)
    common.add_argument("--trials", type=int, default=5)
    common.add_argument("--n-max", type=int, default=6)
    common.add_argument("--strict", action="store_true", help="exit 1 on provisional results")
    common.add_argument("--spec", help="JSON file (or literal) with beta, r, s")
    common.add_argument("--matching", help='JSON file (or literal) like {"n": 3, "theta": [["x1", "y1"], ...]}')
    parser = argparse.ArgumentParser(prog="stringalg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("dims", nargs="*", type=int)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command][0](args, out)
    except UsageError as exc:
        parser.error(str(exc))
    except ValueError as exc:
        print(f"stringalg {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
