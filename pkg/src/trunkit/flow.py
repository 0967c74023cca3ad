"""Edge and vertex connectivity by unit-capacity max flow (Menger)."""

from __future__ import annotations

from collections import deque

from .graph import Multigraph, is_connected


def _max_flow(cap: list[dict[int, int]], s: int, t: int, limit: int | None = None) -> int:
    """Edmonds-Karp on a residual-capacity adjacency map; mutates `cap`."""
    flow = 0
    n = len(cap)
    while limit is None or flow < limit:
        parent = [-1] * n
        parent[s] = s
        queue = deque([s])
        while queue and parent[t] < 0:
            u = queue.popleft()
            for w, c in cap[u].items():
                if c > 0 and parent[w] < 0:
                    parent[w] = u
                    queue.append(w)
        if parent[t] < 0:
            break
        bottleneck = None
        v = t
        while v != s:
            u = parent[v]
            c = cap[u][v]
            bottleneck = c if bottleneck is None else min(bottleneck, c)
            v = u
        v = t
        while v != s:
            u = parent[v]
            cap[u][v] -= bottleneck
            cap[v][u] = cap[v].get(u, 0) + bottleneck
            v = u
        flow += bottleneck
    return flow


def _edge_network(G: Multigraph) -> list[dict[int, int]]:
    cap: list[dict[int, int]] = [dict() for _ in range(G.order)]
    for (u, v), m in G.multiplicity.items():
        if u != v:
            cap[u][v] = cap[u].get(v, 0) + m
            cap[v][u] = cap[v].get(u, 0) + m
    return cap


def local_edge_connectivity(G: Multigraph, s: int, t: int) -> int:
    """Maximum number of edge-disjoint s-t paths; parallel edges add capacity."""
    return _max_flow(_edge_network(G), s, t)


def edge_connectivity(G: Multigraph) -> int:
    if G.order < 2:
        raise ValueError("edge connectivity needs at least two vertices")
    if not is_connected(G):
        return 0
    base = _edge_network(G)
    best = None
    for t in range(1, G.order):
        cap = [dict(d) for d in base]
        f = _max_flow(cap, 0, t, best)
        best = f if best is None else min(best, f)
    return best


def local_vertex_connectivity(G: Multigraph, s: int, t: int, limit: int | None = None) -> int:
    """Maximum number of internally disjoint s-t paths for non-adjacent s, t."""
    if t in G.adjacency[s] or s == t:
        raise ValueError("local vertex connectivity needs distinct non-adjacent vertices")
    n = G.order
    big = n + 1
    # vertex v splits into 2v (in) and 2v+1 (out)
    cap: list[dict[int, int]] = [dict() for _ in range(2 * n)]
    for v in range(n):
        cap[2 * v][2 * v + 1] = big if v in (s, t) else 1
    for u in range(n):
        for w in G.adjacency[u]:
            cap[2 * u + 1][2 * w] = big
    return _max_flow(cap, 2 * s + 1, 2 * t, limit)


def vertex_connectivity(G: Multigraph) -> int:
    """Size of a minimum vertex cut; complete graphs give ``order - 1``."""
    n = G.order
    if n < 2:
        raise ValueError("vertex connectivity needs at least two vertices")
    if G.is_complete():
        return n - 1
    if not is_connected(G):
        return 0
    best = n - 1
    # some vertex among the first best+1 lies outside any minimum separator
    for s in range(n):
        if s > best:
            break
        for t in range(n):
            if t == s or t in G.adjacency[s]:
                continue
            best = min(best, local_vertex_connectivity(G, s, t, best))
    return best
