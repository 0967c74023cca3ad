"""Exact chromatic number and chromatic index by branch and bound."""

from __future__ import annotations

from dataclasses import dataclass

from ._search import Cancel, Ticker, check_cap
from .graph import Multigraph


@dataclass(frozen=True)
class EdgeColoring:
    colors: tuple[int, ...]  # indexed by edge id
    num_colors: int

    def classes(self) -> list[tuple[int, ...]]:
        out: list[list[int]] = [[] for _ in range(self.num_colors)]
        for e, c in enumerate(self.colors):
            out[c].append(e)
        return [tuple(x) for x in out]


@dataclass(frozen=True)
class VertexColoring:
    colors: tuple[int, ...]  # indexed by vertex
    num_colors: int


def is_proper_edge_coloring(G: Multigraph, col: EdgeColoring) -> bool:
    if len(col.colors) != G.size or any(not 0 <= c < col.num_colors for c in col.colors):
        return False
    for v in range(G.order):
        seen = [col.colors[e] for e in G.incidence[v]]
        if len(seen) != len(set(seen)):  # a loop at v appears twice and is never proper
            return False
    return True


def is_proper_vertex_coloring(G: Multigraph, col: VertexColoring) -> bool:
    if len(col.colors) != G.order or any(not 0 <= c < col.num_colors for c in col.colors):
        return False
    return all(col.colors[u] != col.colors[v] for u, v in G.edges)


# --- vertex colouring ------------------------------------------------------


def _greedy_clique(adj: list[frozenset[int]]) -> int:
    best = 1 if adj else 0
    for v in range(len(adj)):
        clique = [v]
        for w in sorted(adj[v], key=lambda w: -len(adj[w])):
            if all(w in adj[c] for c in clique):
                clique.append(w)
        best = max(best, len(clique))
    return best


def vertex_coloring_exact(G: Multigraph, cancel: Cancel = None) -> VertexColoring:
    """Optimal proper vertex colouring (DSATUR branch and bound)."""
    if G.has_loops():
        raise ValueError("a graph with a loop has no proper vertex colouring")
    n = G.order
    if n == 0:
        return VertexColoring((), 0)
    adj = list(G.adjacency)
    lower = _greedy_clique(adj)
    ticker = Ticker(cancel)

    color = [-1] * n
    # sat[v][c] = number of coloured neighbours of v with colour c
    sat: list[dict[int, int]] = [dict() for _ in range(n)]
    best = [n + 1, None]

    def pick() -> int:
        return max(
            (v for v in range(n) if color[v] < 0),
            key=lambda v: (len(sat[v]), sum(1 for w in adj[v] if color[w] < 0), -v),
        )

    def assign(v: int, c: int) -> None:
        color[v] = c
        for w in adj[v]:
            sat[w][c] = sat[w].get(c, 0) + 1

    def unassign(v: int) -> None:
        c = color[v]
        color[v] = -1
        for w in adj[v]:
            k = sat[w][c] - 1
            if k:
                sat[w][c] = k
            else:
                del sat[w][c]

    def rec(done: int, used: int) -> bool:
        ticker.tick()
        if done == n:
            best[0] = used
            best[1] = tuple(color)
            return used <= lower
        v = pick()
        for c in range(min(used + 1, best[0] - 1)):
            if c in sat[v]:
                continue
            assign(v, c)
            stop = rec(done + 1, max(used, c + 1))
            unassign(v)
            if stop:
                return True
        return False

    rec(0, 0)
    return VertexColoring(best[1], best[0])


def chromatic_number_exact(G: Multigraph, cancel: Cancel = None) -> int:
    return vertex_coloring_exact(G, cancel).num_colors


# --- edge colouring --------------------------------------------------------


def edge_coloring_with(G: Multigraph, k: int, cancel: Cancel = None) -> EdgeColoring | None:
    """A proper edge colouring with at most k colours, or None if none exists."""
    if G.has_loops():
        raise ValueError("a loop cannot be properly edge coloured")
    m = G.size
    if m == 0:
        return EdgeColoring((), 0)
    if G.max_valency > k:
        return None
    ticker = Ticker(cancel)
    ends = G.edges
    used_at = [0] * G.order  # bitmask of colours present at each vertex
    color = [-1] * m
    full = (1 << k) - 1

    def assign(e: int, c: int) -> None:
        color[e] = c
        u, v = ends[e]
        used_at[u] |= 1 << c
        used_at[v] |= 1 << c

    def unassign(e: int) -> None:
        c = color[e]
        color[e] = -1
        u, v = ends[e]
        used_at[u] &= ~(1 << c)
        used_at[v] &= ~(1 << c)

    # colour classes are interchangeable: fix the star of a max-valency vertex
    hub = max(range(G.order), key=lambda v: (G.valency(v), -v))
    for c, e in enumerate(G.incidence[hub]):
        assign(e, c)
    top = G.valency(hub)
    uncolored = [e for e in range(m) if color[e] < 0]

    def rec(remaining: int, top: int) -> bool:
        ticker.tick()
        if remaining == 0:
            return True
        best_e, best_free, best_cnt = -1, 0, k + 1
        for e in uncolored:
            if color[e] >= 0:
                continue
            u, v = ends[e]
            free = full & ~(used_at[u] | used_at[v])
            cnt = bin(free).count("1")
            if cnt < best_cnt:
                best_e, best_free, best_cnt = e, free, cnt
                if cnt == 0:
                    return False
        tried_new = False
        for c in range(k):
            if not best_free >> c & 1:
                continue
            if c >= top:
                # every unused colour is equivalent; try only one of them
                if tried_new:
                    break
                tried_new = True
            assign(best_e, c)
            if rec(remaining - 1, max(top, c + 1)):
                return True
            unassign(best_e)
        return False

    if not rec(len(uncolored), top):
        return None
    return EdgeColoring(tuple(color), k)


def chromatic_index_exact(G: Multigraph, cancel: Cancel = None) -> tuple[int, EdgeColoring]:
    """Chromatic index with an optimal witness colouring."""
    if G.has_loops():
        raise ValueError("chromatic index is undefined with loops")
    check_cap("edge_coloring_size", G.size)
    k = G.max_valency
    while True:
        col = edge_coloring_with(G, k, cancel)
        if col is not None:
            return k, col
        k += 1
