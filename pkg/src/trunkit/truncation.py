"""Generalized truncations: excision into a labelled matching, then assemblage.

Excision replaces every edge ``e = uv`` of the source ``X`` by a matching edge
whose two ends carry the labels ``u`` and ``v``.  The ends labelled ``v`` form
the cluster of ``v``; assemblage inserts a simple graph (the constituent) on
each cluster.  With the default id scheme, matching edge ``e`` joins the
Y-vertices ``2e`` (label = lower endpoint) and ``2e + 1``, and has Y edge id
``e``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Callable, Mapping, Sequence

from .graph import Multigraph, Walk, components, is_connected
from .tours import hamilton_path


class NoConnectingPath(ValueError):
    """A constituent lacks the path an expansion needs."""

    def __init__(self, vertex: int, entry: int, exit: int):
        super().__init__(f"no path in the constituent at source vertex {vertex} from {entry} to {exit}")
        self.vertex = vertex
        self.entry = entry
        self.exit = exit


@dataclass(frozen=True)
class LabeledMatching:
    source: Multigraph
    ends: tuple[tuple[int, int], ...]  # Y-vertices of matching edge e, slot 0 then slot 1
    labels: tuple[int, ...]  # source vertex labelling each Y-vertex

    @property
    def order(self) -> int:
        return len(self.labels)

    @cached_property
    def clusters(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.source.order)]
        for y, v in enumerate(self.labels):
            out[v].append(y)
        return tuple(tuple(c) for c in out)

    @cached_property
    def edge_of(self) -> tuple[int, ...]:
        """Source edge id of the matching edge covering each Y-vertex."""
        out = [0] * self.order
        for e, (a, b) in enumerate(self.ends):
            out[a] = out[b] = e
        return tuple(out)

    def end_at(self, e: int, v: int) -> int:
        """The end of matching edge `e` labelled `v` (slot 0 first for loops)."""
        a, b = self.ends[e]
        if self.labels[a] == v:
            return a
        if self.labels[b] == v:
            return b
        raise ValueError(f"matching edge {e} has no end labelled {v}")


def excise(X: Multigraph) -> LabeledMatching:
    if any(d == 0 for d in X.valencies):
        raise ValueError("source has an isolated vertex")
    ends = tuple((2 * e, 2 * e + 1) for e in range(X.size))
    labels = tuple(x for edge in X.edges for x in edge)  # edges are stored (low, high)
    return LabeledMatching(X, ends, labels)


@dataclass(frozen=True)
class Constituent:
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple((a, b) if a < b else (b, a) for a, b in self.edges))

    def as_graph(self) -> Multigraph:
        """Relabelled copy on ``0..k-1`` following the order of `vertices`."""
        index = {v: i for i, v in enumerate(self.vertices)}
        return Multigraph(len(self.vertices), tuple((index[a], index[b]) for a, b in self.edges))

    def is_connected(self) -> bool:
        return is_connected(self.as_graph())

    def is_complete(self) -> bool:
        k = len(self.vertices)
        return len(set(self.edges)) == k * (k - 1) // 2

    def valency(self, y: int) -> int:
        return sum(y in e for e in self.edges)


ConstituentAssignment = Mapping[int, Constituent]


@dataclass(frozen=True)
class Truncation:
    graph: Multigraph
    matching: LabeledMatching
    constituents: tuple[Constituent, ...]  # indexed by source vertex
    matching_edge_ids: tuple[int, ...]  # Y edge id of each source edge's matching edge

    @property
    def source(self) -> Multigraph:
        return self.matching.source

    @property
    def cluster_of(self) -> tuple[int, ...]:
        return self.matching.labels

    @property
    def clusters(self) -> tuple[tuple[int, ...], ...]:
        return self.matching.clusters

    @cached_property
    def edge_lookup(self) -> dict[tuple[int, int], int]:
        """Y edge id of each constituent edge, keyed by its (low, high) ends."""
        mset = set(self.matching_edge_ids)
        return {e: i for i, e in enumerate(self.graph.edges) if i not in mset}

    def constituent_edge_ids(self, v: int) -> list[int]:
        return [self.edge_lookup[e] for e in self.constituents[v].edges]

    def is_cohesive(self) -> bool:
        return all(c.is_connected() for c in self.constituents)

    def is_complete(self) -> bool:
        return all(c.is_complete() for c in self.constituents)

    def without_matching(self) -> Multigraph:
        return self.graph.remove_edges(self.matching_edge_ids)


def _check_constituent(lm: LabeledMatching, v: int, con: Constituent) -> None:
    if sorted(con.vertices) != sorted(lm.clusters[v]):
        raise ValueError(f"constituent at {v} is not on the cluster {lm.clusters[v]}")
    verts = set(con.vertices)
    seen = set()
    for a, b in con.edges:
        if a == b:
            raise ValueError(f"constituent at {v} has a loop at {a}")
        if a not in verts or b not in verts:
            raise ValueError(f"constituent edge {(a, b)} leaves the cluster of {v}")
        if (a, b) in seen:
            raise ValueError(f"constituent at {v} repeats edge {(a, b)}")
        seen.add((a, b))


def assemble(lm: LabeledMatching, ca: ConstituentAssignment) -> Truncation:
    X = lm.source
    cons = []
    for v in range(X.order):
        if v not in ca:
            raise ValueError(f"no constituent given for source vertex {v}")
        _check_constituent(lm, v, ca[v])
        cons.append(ca[v])
    edges = list(lm.ends) + [e for c in cons for e in c.edges]
    Y = Multigraph(lm.order, tuple(edges))
    return Truncation(Y, lm, tuple(cons), tuple(range(X.size)))


def _build(X: Multigraph, make: Callable[[int, tuple[int, ...]], Sequence[tuple[int, int]]]) -> Truncation:
    lm = excise(X)
    return assemble(lm, {v: Constituent(c, tuple(make(v, c))) for v, c in enumerate(lm.clusters)})


def _require_loopless(X: Multigraph) -> None:
    if X.has_loops():
        raise ValueError("source has a loop")


def complete_truncation(X: Multigraph) -> Truncation:
    _require_loopless(X)
    return _build(X, lambda v, c: combinations(c, 2))


def spanning_path_truncation(X: Multigraph) -> Truncation:
    _require_loopless(X)
    return _build(X, lambda v, c: zip(c, c[1:]))


def matching_constituent_truncation(X: Multigraph) -> Truncation:
    """Every constituent a perfect matching on its cluster, so Y is 2-regular."""
    _require_loopless(X)
    odd = [v for v, d in enumerate(X.valencies) if d % 2]
    if odd:
        raise ValueError(f"source vertex {odd[0]} has odd valency")
    return _build(X, lambda v, c: zip(c[0::2], c[1::2]))


def random_truncation(X: Multigraph, density: float, seed: int) -> Truncation:
    """Each cluster pair becomes a constituent edge with probability `density`."""
    _require_loopless(X)
    if not 0 <= density <= 1:
        raise ValueError("density must lie in [0, 1]")
    rng = random.Random(seed)
    return _build(X, lambda v, c: [p for p in combinations(c, 2) if rng.random() < density])


def random_cohesive_truncation(X: Multigraph, density: float, seed: int) -> Truncation:
    """A random spanning tree on each cluster plus each other pair with probability `density`."""
    _require_loopless(X)
    rng = random.Random(seed)

    def make(v, c):
        order = list(c)
        rng.shuffle(order)
        tree = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, len(order))}
        extra = [p for p in combinations(c, 2) if p not in tree and rng.random() < density]
        return sorted(tree) + extra

    return _build(X, make)


def with_constituent(t: Truncation, v: int, edges: Sequence[tuple[int, int]]) -> Truncation:
    """Same truncation with the constituent at `v` replaced."""
    ca = dict(enumerate(t.constituents))
    ca[v] = Constituent(t.clusters[v], tuple(edges))
    return assemble(t.matching, ca)


def truncation_with_extra_edges(t: Truncation, extra: Sequence[tuple[int, int]]) -> Truncation:
    ca = dict(enumerate(t.constituents))
    for a, b in extra:
        v = t.cluster_of[a]
        if t.cluster_of[b] != v:
            raise ValueError(f"{(a, b)} joins different clusters")
        c = ca[v]
        ca[v] = Constituent(c.vertices, c.edges + ((a, b),))
    return assemble(t.matching, ca)


# --- expansion -------------------------------------------------------------

Strategy = Callable[["Truncation", int, int, int, set], list]


def _bfs_path(t: Truncation, v: int, entry: int, exit: int, blocked: set) -> list[int]:
    if entry == exit:
        return [entry]
    con = t.constituents[v]
    nbrs: dict[int, list[int]] = {y: [] for y in con.vertices}
    for a, b in con.edges:
        nbrs[a].append(b)
        nbrs[b].append(a)
    parent = {entry: entry}
    queue = [entry]
    for u in queue:
        for w in sorted(nbrs[u]):
            if w in parent or (w in blocked and w != exit):
                continue
            parent[w] = u
            if w == exit:
                path = [w]
                while path[-1] != entry:
                    path.append(parent[path[-1]])
                return path[::-1]
            queue.append(w)
    raise NoConnectingPath(v, entry, exit)


def _spanning_path(t: Truncation, v: int, entry: int, exit: int, blocked: set) -> list[int]:
    keep = [y for y in t.clusters[v] if y not in blocked]
    if entry == exit:
        if keep != [entry]:
            raise NoConnectingPath(v, entry, exit)
        return [entry]
    index = {y: i for i, y in enumerate(keep)}
    edges = tuple((index[a], index[b]) for a, b in t.constituents[v].edges if a in index and b in index)
    p = hamilton_path(Multigraph(len(keep), edges), index[entry], index[exit])
    if p is None:
        raise NoConnectingPath(v, entry, exit)
    return [keep[i] for i in p.vertices]


def expand_walk(t: Truncation, w: Walk, strategy: str | Strategy = "shortest") -> Walk:
    """Lift a walk of the source to a walk of the truncation.

    Matching edges of ``w`` are traversed in order; each visit of a source
    vertex ``v`` between two edges is bridged by a path inside ``con(v)``.
    ``"shortest"`` takes BFS paths that avoid every vertex already used or
    reserved by the walk.  ``"hamilton"`` routes the first visit of ``v``
    through all cluster vertices the walk does not otherwise touch (in
    ascending order) and every later visit directly; it therefore needs the
    relevant constituent edges, as in complete truncations.  ``"spanning"``
    searches, on the first visit of ``v``, for a path of ``con(v)`` through
    every cluster vertex not reserved by other visits, and uses BFS on later
    visits.
    """
    lm = t.matching
    k = len(w.edges)
    if k == 0:
        raise ValueError("cannot expand a walk with no edges")
    for e in w.edges:
        a, b = t.source.edges[e]
        if a == b:
            raise ValueError("walks through loops have no well-defined expansion")
    heads = [lm.end_at(w.edges[i], w.vertices[i]) for i in range(k)]
    tails = [lm.end_at(w.edges[i], w.vertices[i + 1]) for i in range(k)]
    reserved = set(heads) | set(tails)
    # visit i joins tails[i] to heads[i + 1] inside con(w.vertices[i + 1])
    visits = [(w.vertices[i + 1], tails[i], heads[i + 1]) for i in range(k - 1)]
    if w.closed:
        visits.append((w.vertices[0], tails[k - 1], heads[0]))

    if strategy == "shortest":
        used = set()

        def bridge(v, entry, exit, first):
            path = _bfs_path(t, v, entry, exit, used | reserved)
            used.update(path)
            return path

    elif strategy == "hamilton":
        def bridge(v, entry, exit, first):
            path = [entry]
            if first:
                path += [y for y in t.clusters[v] if y not in reserved]
            if exit != entry:
                path.append(exit)
            edges = set(t.constituents[v].edges)
            for a, b in zip(path, path[1:]):
                if (min(a, b), max(a, b)) not in edges:
                    raise NoConnectingPath(v, entry, exit)
            return path

    elif strategy == "spanning":
        used = set()

        def bridge(v, entry, exit, first):
            if not first:
                path = _bfs_path(t, v, entry, exit, used | reserved)
            else:
                path = _spanning_path(t, v, entry, exit, (reserved | used) - {entry, exit})
            used.update(path)
            return path

    elif callable(strategy):
        used = set()

        def bridge(v, entry, exit, first):
            path = list(strategy(t, v, entry, exit, used | (reserved - {entry, exit})))
            used.update(path)
            return path

    else:
        raise ValueError(f"unknown expansion strategy {strategy!r}")

    seen_vertex: set[int] = set()
    bridges = []
    for v, entry, exit in visits:
        bridges.append(bridge(v, entry, exit, v not in seen_vertex))
        seen_vertex.add(v)

    ys = [heads[0]]
    es = []
    for i in range(k):
        ys.append(tails[i])
        es.append(t.matching_edge_ids[w.edges[i]])
        if i < len(bridges):
            path = bridges[i]
            for a, b in zip(path, path[1:]):
                es.append(t.edge_lookup[(min(a, b), max(a, b))])
                ys.append(b)
    return Walk(tuple(ys), tuple(es), closed=w.closed)


def constituent_components_refine_clusters(t: Truncation) -> bool:
    """Components of Y minus the matching each lie inside one cluster."""
    return all(len({t.cluster_of[y] for y in block}) == 1 for block in components(t.without_matching()))
