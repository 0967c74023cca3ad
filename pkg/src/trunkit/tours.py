"""Euler tours (Hierholzer, Fleury with a forced first edge) and exact Hamilton search."""

from __future__ import annotations

from collections import deque
from typing import Iterator

from ._search import Cancel, Ticker, check_cap
from .graph import Multigraph, Walk, is_connected_ignoring_isolated


def is_eulerian(G: Multigraph) -> bool:
    return all(d % 2 == 0 for d in G.valencies) and is_connected_ignoring_isolated(G)


def euler_tour(G: Multigraph) -> Walk | None:
    """Closed trail through every edge, or None when G is not eulerian.

    Hierholzer's algorithm, always leaving a vertex by its lowest unused edge id.
    """
    if not is_eulerian(G):
        return None
    if G.size == 0:
        return Walk((0,), (), closed=True) if G.order else None
    start = next(v for v in range(G.order) if G.valency(v))
    used = [False] * G.size
    ptr = [0] * G.order
    inc = G.incidence
    stack: list[tuple[int, int | None]] = [(start, None)]
    out: list[tuple[int, int | None]] = []
    while stack:
        v, _ = stack[-1]
        while ptr[v] < len(inc[v]) and used[inc[v][ptr[v]]]:
            ptr[v] += 1
        if ptr[v] < len(inc[v]):
            e = inc[v][ptr[v]]
            used[e] = True
            stack.append((G.other_end(e, v), e))
        else:
            out.append(stack.pop())
    out.reverse()
    return Walk(tuple(v for v, _ in out), tuple(e for _, e in out[1:]), closed=True)


def _is_bridge(G: Multigraph, remaining: set[int], e: int) -> bool:
    a, b = G.edges[e]
    if a == b:
        return False
    seen = {a}
    queue = deque([a])
    while queue:
        u = queue.popleft()
        for f in G.incidence[u]:
            if f == e or f not in remaining:
                continue
            w = G.other_end(f, u)
            if w == b:
                return False
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return True


def euler_tour_through(G: Multigraph, first: int, last: int, v: int) -> Walk | None:
    """Euler tour from `v` that leaves on edge `first` and returns on edge `last`.

    Removing `last` leaves an Euler trail problem from `v` to the far end of
    `last`; Fleury's rule (never cross a bridge while another edge is
    available) solves it, with the first step forced onto `first`.
    """
    for e in (first, last):
        if v not in G.edges[e]:
            raise ValueError(f"edge {e} is not incident with vertex {v}")
    if not is_eulerian(G):
        return None
    if first == last:
        if G.size == 1 and G.edges[first] == (v, v):
            return Walk((v, v), (first,), closed=True)
        return None
    target = G.other_end(last, v)
    remaining = set(range(G.size)) - {last}

    def live_edges(u: int) -> list[int]:
        # a loop appears twice in the incidence list
        return sorted(set(f for f in G.incidence[u] if f in remaining))

    if len(live_edges(v)) > 1 and _is_bridge(G, remaining, first):
        return None
    verts = [v]
    edges = []
    cur = v
    step = first
    while True:
        remaining.discard(step)
        cur = G.other_end(step, cur)
        verts.append(cur)
        edges.append(step)
        if not remaining:
            break
        options = live_edges(cur)
        if not options:
            return None
        step = next((f for f in options if not _is_bridge(G, remaining, f)), options[0])
        if len(options) > 1 and _is_bridge(G, remaining, step):
            return None
    if cur != target:
        return None
    edges.append(last)
    verts.append(v)
    return Walk(tuple(verts), tuple(edges), closed=True)


# --- Hamilton search -------------------------------------------------------


def _cycle_search(adj: list[frozenset[int]], start: int, ticker: Ticker) -> Iterator[list[int]]:
    """Hamilton cycles of a simple graph through `start`, as vertex lists (both orientations)."""
    n = len(adj)
    visited = [False] * n
    visited[start] = True
    path = [start]

    def avail(u: int, end: int) -> int:
        return sum(1 for w in adj[u] if not visited[w] or w == end or w == start)

    def feasible(end: int) -> bool:
        left = n - len(path)
        if left == 0:
            return start in adj[end]
        if not any(not visited[w] for w in adj[start]):
            return False
        for u in range(n):
            if not visited[u] and avail(u, end) < 2:
                return False
        # unvisited vertices must hang together behind the current end
        seen = {end}
        queue = deque([end])
        reached = 0
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if not visited[w] and w not in seen:
                    seen.add(w)
                    reached += 1
                    queue.append(w)
        return reached == left

    def rec(end: int) -> Iterator[list[int]]:
        ticker.tick()
        if len(path) == n:
            if start in adj[end]:
                yield list(path)
            return
        cands = [w for w in adj[end] if not visited[w]]
        cands.sort(key=lambda w: (avail(w, end), w))
        for w in cands:
            visited[w] = True
            path.append(w)
            if feasible(w):
                yield from rec(w)
            path.pop()
            visited[w] = False

    yield from rec(start)


def _cycle_walk(G: Multigraph, cyc: list[int], used: set[int] | None = None) -> Walk:
    edges = []
    taken = set(used or ())
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        e = next(i for i in G.edge_ids_between(a, b) if i not in taken)
        taken.add(e)
        edges.append(e)
    return Walk(tuple(cyc) + (cyc[0],), tuple(edges), closed=True)


def _small_hamilton_cycle(G: Multigraph) -> Walk | None:
    if G.order == 1:
        loops = [i for i, (u, v) in enumerate(G.edges) if u == v]
        return Walk((0, 0), (loops[0],), closed=True) if loops else None
    between = G.edge_ids_between(0, 1)
    if len(between) >= 2:
        return Walk((0, 1, 0), tuple(between[:2]), closed=True)
    return None


def iter_hamilton_cycles(G: Multigraph, cancel: Cancel = None) -> Iterator[Walk]:
    """Every Hamilton cycle once (up to orientation), from vertex 0, lowest edge ids."""
    check_cap("hamilton_order", G.order)
    if G.order < 3:
        if G.order:
            w = _small_hamilton_cycle(G)
            if w is not None:
                yield w
        return
    adj = list(G.adjacency)
    for cyc in _cycle_search(adj, 0, Ticker(cancel)):
        if cyc[1] < cyc[-1]:
            yield _cycle_walk(G, cyc)


def hamilton_cycle(G: Multigraph, cancel: Cancel = None) -> Walk | None:
    """A Hamilton cycle, or None once exhaustive search has failed."""
    check_cap("hamilton_order", G.order)
    if G.order < 3:
        return _small_hamilton_cycle(G) if G.order else None
    adj = list(G.adjacency)
    if min(len(a) for a in adj) < 2:
        return None
    start = min(range(G.order), key=lambda v: (len(adj[v]), v))
    for cyc in _cycle_search(adj, start, Ticker(cancel)):
        i = cyc.index(0)
        cyc = cyc[i:] + cyc[:i]
        return _cycle_walk(G, cyc)
    return None


def hamilton_path(G: Multigraph, s: int, t: int, cancel: Cancel = None) -> Walk | None:
    """A Hamilton path from s to t, or None once exhaustive search has failed.

    Solved as a Hamilton cycle through an extra vertex adjacent only to s and t.
    """
    if s == t:
        raise ValueError("Hamilton path endpoints must differ")
    check_cap("hamilton_order", G.order)
    n = G.order
    if n == 2:
        between = G.edge_ids_between(s, t)
        return Walk((s, t), (between[0],)) if between else None
    adj = [set(a) for a in G.adjacency]
    adj.append({s, t})
    adj[s].add(n)
    adj[t].add(n)
    for cyc in _cycle_search([frozenset(a) for a in adj], n, Ticker(cancel)):
        inner = cyc[1:]
        if inner[0] != s:
            inner.reverse()
        edges = tuple(G.edge_ids_between(a, b)[0] for a, b in zip(inner, inner[1:]))
        return Walk(tuple(inner), edges)
    return None


def is_hamilton_connected(G: Multigraph, cancel: Cancel = None) -> bool:
    n = G.order
    if n <= 1:
        return True
    return all(hamilton_path(G, s, t, cancel) is not None for s in range(n) for t in range(s + 1, n))
