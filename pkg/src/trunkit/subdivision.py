"""Exhaustive search for subdivisions of K4, K_{2,3}, K5 and K_{3,3}.

A found subdivision is a certificate checkable by :func:`is_subdivision`;
an absent result means every admissible placement of branch vertices was
tried.  Both patterns are 2-connected, so the search runs block by block.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .graph import Multigraph

PATTERNS: dict[str, tuple[int, tuple[tuple[int, int], ...]]] = {
    "K4": (4, tuple(combinations(range(4), 2))),
    "K5": (5, tuple(combinations(range(5), 2))),
    "K23": (5, tuple((a, b) for a in (0, 1) for b in (2, 3, 4))),
    "K33": (6, tuple((a, b) for a in (0, 1, 2) for b in (3, 4, 5))),
}


@dataclass(frozen=True)
class Subdivision:
    pattern: str
    branch: tuple[int, ...]  # G-vertex of each pattern vertex
    paths: tuple[tuple[int, ...], ...]  # one G-path per pattern edge, in PATTERNS order

    def vertices(self) -> set[int]:
        return {v for p in self.paths for v in p}

    def edges(self) -> set[tuple[int, int]]:
        out = set()
        for p in self.paths:
            for a, b in zip(p, p[1:]):
                out.add((a, b) if a < b else (b, a))
        return out


def is_subdivision(G: Multigraph, sub: Subdivision) -> bool:
    """Check the certificate: paths exist in G, join the right branch vertices, and are internally disjoint."""
    k, pedges = PATTERNS[sub.pattern]
    if len(sub.branch) != k or len(set(sub.branch)) != k or len(sub.paths) != len(pedges):
        return False
    branch = set(sub.branch)
    interior: set[int] = set()
    for (a, b), p in zip(pedges, sub.paths):
        if len(p) < 2 or {p[0], p[-1]} != {sub.branch[a], sub.branch[b]}:
            return False
        if len(set(p)) != len(p):
            return False
        for x, y in zip(p, p[1:]):
            if y not in G.adjacency[x]:
                return False
        inner = set(p[1:-1])
        if inner & branch or inner & interior:
            return False
        interior |= inner
    return True


def blocks(G: Multigraph) -> list[list[int]]:
    """Vertex sets of the biconnected components with at least one edge."""
    n = G.order
    adj = G.adjacency
    disc = [-1] * n
    low = [0] * n
    timer = 0
    stack: list[tuple[int, int]] = []
    out: list[list[int]] = []
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        it = [(root, -1, iter(sorted(adj[root])))]
        while it:
            v, parent, nbrs = it[-1]
            advanced = False
            for w in nbrs:
                if disc[w] < 0:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((v, w))
                    it.append((w, v, iter(sorted(adj[w]))))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[v]:
                    stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            it.pop()
            if it:
                u = it[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    comp = set()
                    while True:
                        e = stack.pop()
                        comp.update(e)
                        if e == (u, v):
                            break
                    out.append(sorted(comp))
    return out


def _placements(pattern: str, verts: list[int], deg: dict[int, int]) -> Iterator[tuple[int, ...]]:
    if pattern in ("K4", "K5"):
        k = 4 if pattern == "K4" else 5
        ok = [v for v in verts if deg[v] >= k - 1]
        yield from combinations(ok, k)
    elif pattern == "K23":
        hubs = [v for v in verts if deg[v] >= 3]
        for a in combinations(hubs, 2):
            rest = [v for v in verts if v not in a and deg[v] >= 2]
            for b in combinations(rest, 3):
                yield a + b
    else:
        ok = [v for v in verts if deg[v] >= 3]
        for six in combinations(ok, 6):
            first = six[0]
            for others in combinations(six[1:], 2):
                side_a = (first,) + others
                side_b = tuple(v for v in six if v not in side_a)
                yield side_a + side_b


def _route(adj, pairs, branch_set, allowed) -> list[tuple[int, ...]] | None:
    """Internally disjoint paths for each (s, t) pair; direct edges are always taken."""
    paths: list[tuple[int, ...] | None] = [None] * len(pairs)
    pending = []
    for i, (s, t) in enumerate(pairs):
        if t in adj[s]:
            paths[i] = (s, t)
        else:
            pending.append(i)
    used: set[int] = set()
    failed: set[tuple[int, frozenset]] = set()

    def reachable(s, t, blocked) -> bool:
        seen = {s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w == t:
                    return True
                if w in allowed and w not in blocked and w not in seen and w not in branch_set:
                    seen.add(w)
                    queue.append(w)
        return False

    def simple_paths(s, t):
        trail = [s]
        on = {s}

        def dfs(u):
            for w in sorted(adj[u]):
                if w == t:
                    if len(trail) > 1:
                        yield tuple(trail) + (t,)
                    continue
                if w in on or w in used or w in branch_set or w not in allowed:
                    continue
                trail.append(w)
                on.add(w)
                if reachable(w, t, used | on):
                    yield from dfs(w)
                trail.pop()
                on.discard(w)

        yield from dfs(s)

    def rec(j: int) -> bool:
        if j == len(pending):
            return True
        key = (j, frozenset(used))
        if key in failed:
            return False
        i = pending[j]
        s, t = pairs[i]
        for p in simple_paths(s, t):
            inner = p[1:-1]
            used.update(inner)
            paths[i] = p
            if rec(j + 1):
                return True
            used.difference_update(inner)
        paths[i] = None
        failed.add(key)
        return False

    for i in pending:
        s, t = pairs[i]
        if not reachable(s, t, set()):
            return None
    if not rec(0):
        return None
    return paths  # type: ignore[return-value]


def find_subdivision(G: Multigraph, pattern: str) -> Subdivision | None:
    if pattern not in PATTERNS:
        raise ValueError(f"unknown pattern {pattern!r}; expected one of {sorted(PATTERNS)}")
    if not G.is_simple():
        raise ValueError("subdivision search needs a simple graph")
    k, pedges = PATTERNS[pattern]
    adj = G.adjacency
    for block in blocks(G):
        if len(block) < k:
            continue
        allowed = set(block)
        deg = {v: len(adj[v] & allowed) for v in block}
        for place in _placements(pattern, block, deg):
            pairs = [(place[a], place[b]) for a, b in pedges]
            paths = _route(adj, pairs, set(place), allowed)
            if paths is not None:
                return Subdivision(pattern, tuple(place), tuple(paths))
    return None
