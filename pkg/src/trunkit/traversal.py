"""Euler tours, Hamilton cycles and Hamilton decompositions of truncations."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from ._search import Cancel, Ticker, check_cap
from .catalog import complete
from .graph import Multigraph, Walk, is_connected, is_hamilton_cycle, is_perfect_matching
from .report import VerificationReport
from .tours import euler_tour, hamilton_path, is_eulerian, is_hamilton_connected, iter_hamilton_cycles
from .truncation import Truncation, complete_truncation, expand_walk


@dataclass(frozen=True)
class HamiltonDecomposition:
    cycles: tuple[Walk, ...]
    matching: tuple[int, ...] | None = None  # edge ids, present for odd valency


def is_hamilton_decomposition(G: Multigraph, hd: HamiltonDecomposition) -> bool:
    if not all(is_hamilton_cycle(G, c) for c in hd.cycles):
        return False
    used = [e for c in hd.cycles for e in c.edges]
    if hd.matching is not None:
        if not is_perfect_matching(G, hd.matching):
            return False
        used += list(hd.matching)
    return sorted(used) == list(range(G.size))


# --- eulerian truncations --------------------------------------------------


def check_euler_theorem(t: Truncation) -> VerificationReport:
    """Every component of Y is eulerian exactly when X is eulerian and every
    constituent has only odd valencies."""
    X = t.source
    if not is_connected(X):
        raise ValueError("source is disconnected")
    y_side = all(d % 2 == 0 for d in t.graph.valencies)
    odd = all(c.valency(y) % 2 == 1 for c in t.constituents for y in c.vertices)
    x_side = is_eulerian(X) and odd
    rep = VerificationReport(
        "euler",
        y_side == x_side,
        {"y_components_eulerian": y_side, "x_eulerian": is_eulerian(X), "constituents_odd": odd},
    )
    if rep.failed:
        rep.counterexample = {"source_edges": list(X.edges), "y_edges": list(t.graph.edges)}
    return rep


def spanning_eulerian_subgraph(X: Multigraph, cancel: Cancel = None) -> tuple[int, ...] | None:
    """Edge ids of a connected spanning even subgraph, or None after exhausting the cycle space.

    Members of the cycle space are visited in increasing order of their
    bitmask over the fundamental cycles of a BFS spanning forest.
    """
    check_cap("eulerian_size", X.size)
    n = X.order
    if n == 1:
        return ()
    if n == 0 or not is_connected(X):
        return None
    parent_edge = [-1] * n
    parent = [-1] * n
    depth = [0] * n
    seen = [False] * n
    seen[0] = True
    queue = [0]
    tree = set()
    for u in queue:
        for e in X.incidence[u]:
            w = X.other_end(e, u)
            if not seen[w]:
                seen[w] = True
                parent[w], parent_edge[w], depth[w] = u, e, depth[u] + 1
                tree.add(e)
                queue.append(w)
    basis = []
    for e, (a, b) in enumerate(X.edges):
        if e in tree:
            continue
        mask = 1 << e
        while a != b:
            if depth[a] < depth[b]:
                a, b = b, a
            mask ^= 1 << parent_edge[a]
            a = parent[a]
        basis.append(mask)
    ticker = Ticker(cancel)
    for sel in range(1, 1 << len(basis)):
        ticker.tick()
        mask = 0
        for i, b in enumerate(basis):
            if sel >> i & 1:
                mask ^= b
        ids = [e for e in range(X.size) if mask >> e & 1]
        H = X.edge_subgraph(ids)
        if min(H.valencies) > 0 and is_connected(H):
            return tuple(ids)
    return None


def _walk_in_y(t: Truncation, ys: Sequence[int], closed: bool) -> Walk:
    verts = list(ys) + ([ys[0]] if closed else [])
    edges = []
    for a, b in zip(verts, verts[1:]):
        if t.cluster_of[a] == t.cluster_of[b] and t.matching.edge_of[a] != t.matching.edge_of[b]:
            edges.append(t.edge_lookup[(min(a, b), max(a, b))])
        else:
            e = t.matching.edge_of[a]
            if t.matching.edge_of[b] != e:
                raise ValueError(f"{a} and {b} are not adjacent")
            edges.append(t.matching_edge_ids[e])
    return Walk(tuple(verts), tuple(edges), closed=closed)


def hamilton_cycle_of_complete_truncation(X: Multigraph, cancel: Cancel = None) -> Walk | None:
    """Hamilton cycle of ``complete_truncation(X)`` built from a spanning eulerian subgraph.

    None exactly when X has no spanning eulerian subgraph.
    """
    t = complete_truncation(X)
    S = spanning_eulerian_subgraph(X, cancel)
    if S is None:
        return None
    tour = euler_tour(X.edge_subgraph(S))
    tour = Walk(tour.vertices, tuple(S[e] for e in tour.edges), closed=True)
    return expand_walk(t, tour, "hamilton")


def hamilton_connected_path(t: Truncation, x: int, y: int, cancel: Cancel = None) -> Walk:
    """Hamilton path from x to y in a truncation of K_n whose constituents are Hamilton-connected."""
    X = t.source
    n = X.order
    if not (X.is_simple() and X.is_complete()):
        raise ValueError("source must be a complete graph")
    if n <= 3:
        raise ValueError("source must have more than 3 vertices")
    if x == y:
        raise ValueError("endpoints must differ")
    graphs = [c.as_graph() for c in t.constituents]
    for v, g in enumerate(graphs):
        if not is_hamilton_connected(g, cancel):
            raise ValueError(f"constituent at {v} is not Hamilton-connected")
    lm = t.matching

    def partner_label(z: int) -> int:
        a, b = lm.ends[lm.edge_of[z]]
        return lm.labels[b if z == a else a]

    def toward(v: int, w: int) -> int:
        """Cluster vertex of v on the matching edge to w."""
        e = X.edge_ids_between(v, w)[0]
        return lm.end_at(e, v)

    def inside(v: int, a: int, b: int) -> list[int]:
        con = t.constituents[v]
        idx = {z: i for i, z in enumerate(con.vertices)}
        p = hamilton_path(graphs[v], idx[a], idx[b], cancel)
        return [con.vertices[i] for i in p.vertices]

    def through(order: list[int], first: int, last: int) -> list[int]:
        out = []
        for i, v in enumerate(order):
            a = first if i == 0 else toward(v, order[i - 1])
            b = last if i == len(order) - 1 else toward(v, order[i + 1])
            out += inside(v, a, b)
        return out

    u, w = t.cluster_of[x], t.cluster_of[y]
    if u != w:
        p, q = partner_label(x), partner_label(y)
        middle = [v for v in range(n) if v not in (u, w)]
        for perm in permutations(middle):
            if perm[0] != p and perm[-1] != q:
                return _walk_in_y(t, through([u, *perm, w], x, y), closed=False)
        # only for n = 4 with both partners in one cluster: cover cl(u), then
        # enter cl(w) and treat it like the same-cluster case below
        head = inside(u, x, toward(u, w))
        Q = inside(w, toward(w, u), y)
        skip = (u, w)
    else:
        # same cluster: run through cl(u) to the vertex z before y, tour the rest, come back into y
        head = []
        Q = inside(u, x, y)
        skip = (u,)
    z = Q[-2]
    r, s = partner_label(z), partner_label(y)
    rest = [v for v in range(n) if v not in (*skip, r, s)]
    tail = through([r, *rest, s], toward(r, t.cluster_of[z]), toward(s, w))
    return _walk_in_y(t, head + Q[:-1] + tail + [y], closed=False)


# --- Walecki ---------------------------------------------------------------


@dataclass(frozen=True)
class PathDecomposition:
    paths: tuple[tuple[int, ...], ...]  # vertex sequences
    matching: tuple[tuple[int, int], ...] = ()


def _zigzag(i: int, k: int) -> list[int]:
    seq = [i]
    for j in range(1, k):
        seq += [(i + j) % (2 * k), (i - j) % (2 * k)]
    seq.append((i + k) % (2 * k))
    return seq


def walecki_path_decomposition(
    n: int, endpoint_pairs: Sequence[tuple[int, int]], missing: int | None = None
) -> PathDecomposition:
    """Hamilton paths of K_n with prescribed end pairs (plus a matching avoiding `missing` when n is odd)."""
    if n < 1:
        raise ValueError("n must be positive")
    k = n // 2
    pairs = [tuple(p) for p in endpoint_pairs]
    flat = [v for p in pairs for v in p]
    if n % 2:
        if missing is None:
            raise ValueError("odd n needs the vertex the matching misses")
        flat.append(missing)
    if len(pairs) != k or sorted(flat) != list(range(n)):
        raise ValueError("endpoint pairs with the missing vertex must partition the vertex set")
    if n == 1:
        return PathDecomposition((), ())
    if n % 2 == 0:
        base = [_zigzag(i, k) for i in range(k)]
        sigma = {}
        for i, (a, b) in enumerate(pairs):
            sigma[i], sigma[i + k] = a, b
        return PathDecomposition(tuple(tuple(sigma[v] for v in p) for p in base))
    inf = 2 * k
    base, diam = [], []
    for i in range(k):
        p = _zigzag(i, k)
        base.append(p[k - 1 :: -1] + [inf] + p[: k - 1 : -1])
        diam.append((p[k - 1], p[k]))
    sigma = {inf: missing}
    for (a, b), (pa, pb) in zip(pairs, diam):
        sigma[pa], sigma[pb] = a, b
    paths = tuple(tuple(sigma[v] for v in p) for p in base)
    matching = tuple(tuple(sorted((sigma[a], sigma[b]))) for a, b in diam)
    return PathDecomposition(paths, matching)


def _cycle_from_vertices(G: Multigraph, cyc: Sequence[int], used: set[int]) -> Walk:
    edges = []
    for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
        e = next(i for i in G.edge_ids_between(a, b) if i not in used)
        used.add(e)
        edges.append(e)
    return Walk(tuple(cyc) + (cyc[0],), tuple(edges), closed=True)


def walecki_cycle_decomposition(n: int) -> HamiltonDecomposition:
    """(n-1)/2 Hamilton cycles partitioning K_n for odd n, on ``catalog.complete(n)`` edge ids."""
    if n % 2 == 0 or n < 3:
        raise ValueError("n must be odd and at least 3")
    k = n // 2
    G = complete(n)
    used: set[int] = set()
    cycles = tuple(_cycle_from_vertices(G, [2 * k] + _zigzag(i, k), used) for i in range(k))
    return HamiltonDecomposition(cycles)


def hamilton_decompose_truncation(X: Multigraph, hd: HamiltonDecomposition) -> HamiltonDecomposition:
    """Lift a Hamilton decomposition of X to one of its complete truncation."""
    if X.has_loops() or not is_hamilton_decomposition(X, hd):
        raise ValueError("not a Hamilton decomposition of the source")
    t = complete_truncation(X)
    lm = t.matching
    r = len(hd.cycles)
    # passages[v][i] = the 2-set of cl(v) used by cycle i
    passages: list[list[tuple[int, int]]] = [[] for _ in range(X.order)]
    for c in hd.cycles:
        m = len(c.edges)
        for j in range(m):
            v = c.vertices[j]
            passages[v].append((lm.end_at(c.edges[j - 1], v), lm.end_at(c.edges[j], v)))
    paths: list[list[list[int]]] = []
    cluster_matching: list[tuple[int, int]] = []
    for v, cl in enumerate(t.clusters):
        idx = {y: i for i, y in enumerate(cl)}
        missing = None
        if hd.matching is not None:
            e = next(e for e in hd.matching if v in X.edges[e])
            missing = idx[lm.end_at(e, v)]
        dec = walecki_path_decomposition(len(cl), [(idx[a], idx[b]) for a, b in passages[v]], missing)
        paths.append([[cl[i] for i in p] for p in dec.paths])
        cluster_matching += [(cl[a], cl[b]) for a, b in dec.matching]
        if len(dec.paths) != r:
            raise ValueError(f"cluster {v} does not match the decomposition")
    cycles = []
    for i, c in enumerate(hd.cycles):
        def strategy(tt, v, entry, exit, blocked, i=i):
            p = paths[v][i]
            return p if p[0] == entry else p[::-1]

        cycles.append(expand_walk(t, c, strategy))
    matching = None
    if hd.matching is not None:
        matching = tuple(sorted([t.matching_edge_ids[e] for e in hd.matching] + [t.edge_lookup[p] for p in cluster_matching]))
    return HamiltonDecomposition(tuple(cycles), matching)


def find_hamilton_decomposition(G: Multigraph, cancel: Cancel = None) -> HamiltonDecomposition | None:
    """Backtracking search for a Hamilton decomposition of a regular graph."""
    if not G.is_regular() or G.order == 0:
        return None
    d = G.max_valency
    want = d // 2

    def rec(remaining: list[int], found: list[Walk]) -> HamiltonDecomposition | None:
        if len(found) == want:
            if d % 2 == 0:
                return HamiltonDecomposition(tuple(found))
            if is_perfect_matching(G, remaining):
                return HamiltonDecomposition(tuple(found), tuple(remaining))
            return None
        H = G.edge_subgraph(remaining)
        for c in iter_hamilton_cycles(H, cancel):
            mapped = Walk(c.vertices, tuple(remaining[e] for e in c.edges), closed=True)
            used = set(mapped.edges)
            out = rec([e for e in remaining if e not in used], found + [mapped])
            if out is not None:
                return out
        return None

    return rec(list(range(G.size)), [])
