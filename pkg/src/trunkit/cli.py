"""Command-line front end.

Exit codes: 0 success / all checks pass, 1 a check found a counterexample,
2 bad usage or input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__, catalog
from .connectivity import spanning_tree_truncation
from .io import format_graph, format_truncation, parse_graph, parse_truncation, sha256, to_dot
from .report import summarize
from .sources import coarsened_sources, graph_sources, isolating_perfect_matchings, minimal_sources, unique_source_certificate
from .truncation import (
    complete_truncation,
    matching_constituent_truncation,
    random_truncation,
    spanning_path_truncation,
)
from .verify import SUITES, run

MODES = {
    "complete": complete_truncation,
    "paths": spanning_path_truncation,
    "matching": matching_constituent_truncation,
    "tree": spanning_tree_truncation,
}


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _graph_json(G) -> dict:
    return {"order": G.order, "edges": [list(e) for e in G.edges]}


def cmd_truncate(args) -> int:
    text = _read(args.input)
    X = parse_graph(text)
    if args.mode == "random":
        t = random_truncation(X, args.density, args.seed)
    else:
        t = MODES[args.mode](X)
    out = format_truncation(t, [f"trunkit {__version__} truncate --mode {args.mode}", f"source sha256 {sha256(text)}"])
    sys.stdout.write(out)
    if args.dot:
        Path(args.dot).write_text(to_dot(t))
    return 0


def cmd_sources(args) -> int:
    text = _read(args.input)
    Y = parse_graph(text)
    certs = graph_sources(Y) if args.graph_only else minimal_sources(Y)
    listing = []
    for c in certs:
        entry = {
            "source": _graph_json(c.source),
            "matching": list(c.matching),
            "blocks": [list(b) for b in c.blocks],
            "compared": c.compared,
        }
        if args.coarsen:
            entry["coarsenings"] = [_graph_json(G) for G in coarsened_sources(Y, c)]
        listing.append(entry)
    doc = {
        "version": __version__,
        "input_sha256": sha256(text),
        "isolating_matchings": len(isolating_perfect_matchings(Y)),
        "unique_certificate": unique_source_certificate(Y),
        "sources": listing,
    }
    print(json.dumps(doc, indent=2))
    return 0


def cmd_verify(args) -> int:
    names = args.catalog.split(",") if args.catalog else None
    results = run(args.suite, names, args.seeds)
    chosen = names or list(catalog.CATALOG)
    doc = {
        "version": __version__,
        "inputs": {n: sha256(format_graph(catalog.get(n))) for n in chosen},
        "seeds": args.seeds,
        "suites": {},
    }
    failed = False
    for suite, reports in results.items():
        doc["suites"][suite] = {"summary": summarize(reports), "reports": [r.to_dict() for r in reports]}
        failed |= any(r.failed for r in reports)
    print(json.dumps(doc, indent=2))
    return 1 if failed else 0


def cmd_export_dot(args) -> int:
    t = parse_truncation(_read(args.input))
    sys.stdout.write(to_dot(t))
    return 0


def cmd_catalog(args) -> int:
    if args.name is None:
        print("\n".join(catalog.CATALOG))
    else:
        sys.stdout.write(format_graph(catalog.get(args.name), [args.name]))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="trunkit", description="Generalized truncations of multigraphs.")
    p.add_argument("--version", action="version", version=f"trunkit {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("truncate", help="build a truncation of a graph file")
    s.add_argument("input", help="graph file, or - for stdin")
    s.add_argument("--mode", choices=[*MODES, "random"], default="complete")
    s.add_argument("--density", type=float, default=0.5, help="edge probability for --mode random")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--dot", metavar="FILE", help="also write a DOT drawing")
    s.set_defaults(func=cmd_truncate)

    s = sub.add_parser("sources", help="recover sources of a graph file (JSON)")
    s.add_argument("input")
    s.add_argument("--graph-only", action="store_true", help="only sources without parallel edges")
    s.add_argument("--coarsen", action="store_true", help="list amalgamated sources too")
    s.set_defaults(func=cmd_sources)

    s = sub.add_parser("verify", help="run theorem checks over the catalog (JSON)")
    s.add_argument("--suite", choices=[*SUITES, "all"], default="all")
    s.add_argument("--catalog", help="comma-separated catalog names (default: all)")
    s.add_argument("--seeds", type=int, default=25)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("export-dot", help="draw a truncation file as DOT")
    s.add_argument("input")
    s.set_defaults(func=cmd_export_dot)

    s = sub.add_parser("catalog", help="list catalog graphs or print one as a graph file")
    s.add_argument("name", nargs="?")
    s.set_defaults(func=cmd_catalog)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError) as exc:
        print(f"trunkit: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
