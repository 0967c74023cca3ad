"""Text formats: graph files, truncation files and DOT drawings.

Graph file::

    c optional comment
    p <order> <size>
    e <u> <v>          one line per edge, edge id = line order

A truncation file is the graph file of Y followed by ``# cluster <y> <v>``
lines for every Y-vertex and ``# matching <edge-id>`` lines, one per source
edge in source edge order.
"""

from __future__ import annotations

import hashlib
from typing import Iterable

from .graph import Multigraph
from .truncation import Constituent, LabeledMatching, Truncation


class FormatError(ValueError):
    def __init__(self, msg: str, line: int | None = None):
        super().__init__(f"line {line}: {msg}" if line is not None else msg)
        self.line = line


def sha256(data: str | bytes) -> str:
    if isinstance(data, str):
        data = data.encode()
    return hashlib.sha256(data).hexdigest()


def _ints(parts: list[str], lineno: int) -> list[int]:
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise FormatError(f"expected integers, got {' '.join(parts)!r}", lineno) from None


def _parse(text: str) -> tuple[Multigraph, list[tuple[int, list[str]]]]:
    header = None
    edges = []
    extra = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c ") or line == "c":
            continue
        if line.startswith("#"):
            extra.append((lineno, line[1:].split()))
            continue
        kind, *rest = line.split()
        if kind == "p":
            if header is not None:
                raise FormatError("second header line", lineno)
            if len(rest) != 2:
                raise FormatError("header must be 'p <order> <size>'", lineno)
            header = _ints(rest, lineno)
        elif kind == "e":
            if header is None:
                raise FormatError("edge before header", lineno)
            if len(rest) != 2:
                raise FormatError("edge must be 'e <u> <v>'", lineno)
            u, v = _ints(rest, lineno)
            if not (0 <= u < header[0] and 0 <= v < header[0]):
                raise FormatError(f"edge endpoint outside 0..{header[0] - 1}", lineno)
            edges.append((u, v))
        else:
            raise FormatError(f"unknown line type {kind!r}", lineno)
    if header is None:
        raise FormatError("missing 'p' header")
    if len(edges) != header[1]:
        raise FormatError(f"header promises {header[1]} edges, found {len(edges)}")
    return Multigraph(header[0], tuple(edges)), extra


def parse_graph(text: str) -> Multigraph:
    return _parse(text)[0]


def format_graph(G: Multigraph, comments: Iterable[str] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p {G.order} {G.size}")
    lines += [f"e {u} {v}" for u, v in G.edges]
    return "\n".join(lines) + "\n"


def format_truncation(t: Truncation, comments: Iterable[str] = ()) -> str:
    out = format_graph(t.graph, comments)
    out += "".join(f"# cluster {y} {v}\n" for y, v in enumerate(t.cluster_of))
    out += "".join(f"# matching {e}\n" for e in t.matching_edge_ids)
    return out


def parse_truncation(text: str) -> Truncation:
    Y, extra = _parse(text)
    cluster: dict[int, int] = {}
    matching: list[int] = []
    for lineno, parts in extra:
        if parts[:1] == ["cluster"]:
            if len(parts) != 3:
                raise FormatError("cluster line must be '# cluster <y> <v>'", lineno)
            y, v = _ints(parts[1:], lineno)
            if not 0 <= y < Y.order or v < 0:
                raise FormatError(f"cluster entry {y} {v} out of range", lineno)
            if y in cluster:
                raise FormatError(f"vertex {y} assigned to two clusters", lineno)
            cluster[y] = v
        elif parts[:1] == ["matching"]:
            if len(parts) != 2:
                raise FormatError("matching line must be '# matching <edge-id>'", lineno)
            (e,) = _ints(parts[1:], lineno)
            if not 0 <= e < Y.size:
                raise FormatError(f"matching edge {e} out of range", lineno)
            matching.append(e)
        else:
            raise FormatError(f"unknown annotation {' '.join(parts)!r}", lineno)
    if len(cluster) != Y.order:
        raise FormatError("every vertex needs a cluster line")
    labels = tuple(cluster[y] for y in range(Y.order))
    n = max(labels) + 1 if labels else 0

    covered = [0] * Y.order
    ends = []
    for e in matching:
        a, b = Y.edges[e]
        covered[a] += 1
        covered[b] += 1
        ends.append((a, b) if labels[a] <= labels[b] else (b, a))
    if any(c != 1 for c in covered):
        raise FormatError("matching lines do not form a perfect matching")
    X = Multigraph(n, tuple((labels[a], labels[b]) for a, b in ends))
    mset = set(matching)
    per: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for e, (a, b) in enumerate(Y.edges):
        if e in mset:
            continue
        if labels[a] != labels[b]:
            raise FormatError(f"edge {e} joins clusters {labels[a]} and {labels[b]} but is not a matching edge")
        per[labels[a]].append((a, b))
    lm = LabeledMatching(X, tuple(ends), labels)
    if any(not cl for cl in lm.clusters):
        raise FormatError("a source vertex has an empty cluster")
    cons = tuple(Constituent(lm.clusters[v], tuple(per[v])) for v in range(n))
    for v, c in enumerate(cons):
        if len(set(c.edges)) != len(c.edges) or any(a == b for a, b in c.edges):
            raise FormatError(f"constituent at {v} is not simple")
    return Truncation(Y, lm, cons, tuple(matching))


def to_dot(t: Truncation, name: str = "Y") -> str:
    """One subgraph cluster per constituent; matching edges drawn bold and red."""
    lines = [f"graph {name} {{", "  node [shape=circle, fontsize=10];"]
    for v, con in enumerate(t.constituents):
        lines.append(f"  subgraph cluster_{v} {{")
        lines.append(f'    label="con({v})";')
        lines.append("    " + " ".join(f"{y};" for y in con.vertices))
        lines += [f"    {a} -- {b};" for a, b in con.edges]
        lines.append("  }")
    for e in t.matching_edge_ids:
        a, b = t.graph.edges[e]
        lines.append(f"  {a} -- {b} [style=bold, color=red];")
    lines.append("}")
    return "\n".join(lines) + "\n"
