"""Hat graph, projections and the connectivity checks for truncations."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .flow import edge_connectivity, vertex_connectivity
from .graph import Multigraph, components, is_connected
from .report import VerificationReport
from .truncation import (
    Constituent,
    LabeledMatching,
    Truncation,
    assemble,
    complete_truncation,
    excise,
    with_constituent,
)


@dataclass(frozen=True)
class HatGraph:
    labels: tuple[frozenset[int], ...]  # endpoint labels of each matching edge
    graph: Multigraph


def hat_graph(lm: LabeledMatching) -> HatGraph:
    labels = tuple(frozenset((lm.labels[a], lm.labels[b])) for a, b in lm.ends)
    edges = [(i, j) for i, j in combinations(range(len(labels)), 2) if labels[i] & labels[j]]
    return HatGraph(labels, Multigraph(len(labels), tuple(edges)))


def project_edges(Y: Multigraph, matching_edge_ids: Sequence[int]) -> Multigraph:
    """Projection of Y onto its matching edges, using only Y's edge list.

    Hat vertex ``i`` stands for ``matching_edge_ids[i]``; two hat vertices are
    adjacent when some other edge of Y joins their matching edges.
    """
    owner = [-1] * Y.order
    for i, e in enumerate(matching_edge_ids):
        a, b = Y.edges[e]
        owner[a] = owner[b] = i
    if -1 in owner:
        raise ValueError("matching edges do not cover every vertex")
    mset = set(matching_edge_ids)
    pairs = set()
    for e, (a, b) in enumerate(Y.edges):
        if e in mset:
            continue
        i, j = owner[a], owner[b]
        if i != j:
            pairs.add((min(i, j), max(i, j)))
    return Multigraph(len(matching_edge_ids), tuple(sorted(pairs)))


def project(t: Truncation) -> Multigraph:
    return project_edges(t.graph, t.matching_edge_ids)


def spanning_tree_truncation(X: Multigraph) -> Truncation:
    """A truncation that is a tree: realise a BFS spanning tree of the hat graph."""
    if X.has_loops():
        raise ValueError("source has a loop")
    if not is_connected(X):
        raise ValueError("source is disconnected")
    lm = excise(X)
    hat = hat_graph(lm)
    adj = hat.graph.adjacency
    chosen: dict[int, list[tuple[int, int]]] = {v: [] for v in range(X.order)}
    seen = {0}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j in sorted(adj[i]):
            if j in seen:
                continue
            seen.add(j)
            queue.append(j)
            v = min(hat.labels[i] & hat.labels[j])
            chosen[v].append((lm.end_at(i, v), lm.end_at(j, v)))
    return assemble(lm, {v: Constituent(lm.clusters[v], tuple(es)) for v, es in chosen.items()})


# --- theorem checks --------------------------------------------------------


def check_connectedness_theorem(t: Truncation) -> VerificationReport:
    """Y is connected exactly when its projection is."""
    y_conn = is_connected(t.graph)
    p_conn = is_connected(project(t))
    return VerificationReport(
        "connectedness",
        y_conn == p_conn,
        {"y_connected": y_conn, "projection_connected": p_conn},
    )


def check_edge_connectivity_bound(t: Truncation) -> VerificationReport:
    """kappa'(Y) <= kappa'(X)."""
    if t.source.order < 2:
        return VerificationReport("edge_connectivity_bound", None, note="source has fewer than 2 vertices")
    ky, kx = edge_connectivity(t.graph), edge_connectivity(t.source)
    rep = VerificationReport("edge_connectivity_bound", ky <= kx, {"kappa_edge_y": ky, "kappa_edge_x": kx})
    if rep.failed:
        rep.counterexample = {"source_edges": list(t.source.edges), "y_edges": list(t.graph.edges)}
    return rep


def check_complete_connectivity(X: Multigraph) -> VerificationReport:
    """Complete truncations inherit edge- and vertex-connectivity k >= 2 from X."""
    t = complete_truncation(X)
    kx, ky = edge_connectivity(X), edge_connectivity(t.graph)
    vx, vy = vertex_connectivity(X), vertex_connectivity(t.graph)
    details = {"kappa_edge_x": kx, "kappa_edge_y": ky, "kappa_x": vx, "kappa_y": vy}
    if kx < 2:
        return VerificationReport("complete_connectivity", None, details, note="source is not 2-edge-connected")
    holds = ky >= kx and (vx < 2 or vy >= vx)
    return VerificationReport("complete_connectivity", holds, details)


def check_completeness_criterion(X: Multigraph) -> VerificationReport:
    """For k-regular k-edge-connected X, deleting any constituent edge of the
    complete truncation drops its edge-connectivity below k."""
    k = X.max_valency
    if not X.is_regular() or X.order < 2 or edge_connectivity(X) != k:
        return VerificationReport("completeness_criterion", None, note="source is not k-regular and k-edge-connected")
    t = complete_truncation(X)
    full = edge_connectivity(t.graph)
    if full != k:
        return VerificationReport("completeness_criterion", False, {"kappa_edge_complete": full, "k": k})
    for v, con in enumerate(t.constituents):
        for e in con.edges:
            kept = [f for f in con.edges if f != e]
            kk = edge_connectivity(with_constituent(t, v, kept).graph)
            if kk >= k:
                return VerificationReport(
                    "completeness_criterion",
                    False,
                    {"k": k},
                    counterexample={"vertex": v, "removed_edge": list(e), "kappa_edge": kk},
                )
    deleted = sum(len(c.edges) for c in t.constituents)
    return VerificationReport("completeness_criterion", True, {"k": k, "edges_deleted": deleted})


def check_matching_cut_lemma(t: Truncation, max_size: int = 3) -> VerificationReport:
    """In a cohesive truncation, a minimal edge cut made of matching edges is an edge cut of X.

    Every set of at most `max_size` matching edges is tried.
    """
    if not t.is_cohesive():
        return VerificationReport("matching_cut_lemma", None, note="truncation is not cohesive")
    Y, X = t.graph, t.source
    base = _count_components(Y, ())
    checked = 0
    for r in range(1, max_size + 1):
        for S in combinations(range(X.size), r):
            yids = [t.matching_edge_ids[e] for e in S]
            if _count_components(Y, yids) == base:
                continue
            if any(_count_components(Y, [f for f in yids if f != g]) > base for g in yids):
                continue  # not minimal
            checked += 1
            if _count_components(X, S) == _count_components(X, ()):
                return VerificationReport(
                    "matching_cut_lemma", False, {"cuts_checked": checked}, counterexample={"source_edges": list(S)}
                )
    return VerificationReport("matching_cut_lemma", True, {"cuts_checked": checked})


def _count_components(G: Multigraph, removed) -> int:
    return len(components(G.remove_edges(removed)))
