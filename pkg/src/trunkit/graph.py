"""Multigraphs with stable edge ids, walks, and basic structural queries.

Vertices are the dense integers ``0 .. order-1``.  Edges are kept in an
indexed tuple so that parallel edges stay distinguishable by edge id; an edge
whose endpoints coincide is a loop and contributes 2 to the valency of its
vertex.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

Edge = tuple[int, int]


@dataclass(frozen=True)
class Multigraph:
    order: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be non-negative")
        norm = []
        for e in self.edges:
            u, v = e
            if not (0 <= u < self.order and 0 <= v < self.order):
                raise ValueError(f"edge {e} has an endpoint outside 0..{self.order - 1}")
            norm.append((u, v) if u <= v else (v, u))
        object.__setattr__(self, "edges", tuple(norm))

    @classmethod
    def from_edges(cls, edges: Iterable[Sequence[int]], order: int | None = None) -> "Multigraph":
        edges = [tuple(e) for e in edges]
        if order is None:
            order = 1 + max((max(e) for e in edges), default=-1)
        return cls(order, tuple(edges))

    @property
    def size(self) -> int:
        return len(self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Edge ids at each vertex, ascending; a loop is listed twice."""
        inc: list[list[int]] = [[] for _ in range(self.order)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return tuple(tuple(sorted(x)) for x in inc)

    @cached_property
    def valencies(self) -> tuple[int, ...]:
        return tuple(len(x) for x in self.incidence)

    def valency(self, v: int) -> int:
        return self.valencies[v]

    @property
    def max_valency(self) -> int:
        return max(self.valencies, default=0)

    @property
    def min_valency(self) -> int:
        return min(self.valencies, default=0)

    @cached_property
    def multiplicity(self) -> Counter:
        return Counter(self.edges)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        """Neighbour sets of the underlying simple graph (loops dropped)."""
        adj: list[set[int]] = [set() for _ in range(self.order)]
        for u, v in self.edges:
            if u != v:
                adj[u].add(v)
                adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    def other_end(self, edge_id: int, v: int) -> int:
        a, b = self.edges[edge_id]
        if v == a:
            return b
        if v == b:
            return a
        raise ValueError(f"edge {edge_id} is not incident with vertex {v}")

    def has_loops(self) -> bool:
        return any(u == v for u, v in self.edges)

    def is_simple(self) -> bool:
        return not self.has_loops() and all(c == 1 for c in self.multiplicity.values())

    def is_regular(self) -> bool:
        return len(set(self.valencies)) <= 1

    def is_complete(self) -> bool:
        n = self.order
        return all(len(self.adjacency[v]) == n - 1 for v in range(n))

    def underlying_simple(self) -> "Multigraph":
        return Multigraph(self.order, tuple(sorted({e for e in self.edges if e[0] != e[1]})))

    def edge_subgraph(self, edge_ids: Iterable[int]) -> "Multigraph":
        """Spanning subgraph on the given edges, in the given order."""
        return Multigraph(self.order, tuple(self.edges[i] for i in edge_ids))

    def remove_edges(self, edge_ids: Iterable[int]) -> "Multigraph":
        drop = set(edge_ids)
        return Multigraph(self.order, tuple(e for i, e in enumerate(self.edges) if i not in drop))

    def add_edges(self, edges: Iterable[Edge]) -> "Multigraph":
        return Multigraph(self.order, self.edges + tuple(edges))

    def induced(self, vertices: Sequence[int]) -> "Multigraph":
        """Induced subgraph, relabelled so that ``vertices[i]`` becomes ``i``."""
        index = {v: i for i, v in enumerate(vertices)}
        es = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Multigraph(len(vertices), tuple(es))

    def relabel(self, perm: Sequence[int]) -> "Multigraph":
        """Image under ``v -> perm[v]``; edge ids are preserved."""
        return Multigraph(self.order, tuple((perm[u], perm[v]) for u, v in self.edges))

    def disjoint_union(self, other: "Multigraph") -> "Multigraph":
        n = self.order
        return Multigraph(n + other.order, self.edges + tuple((u + n, v + n) for u, v in other.edges))

    def edge_ids_between(self, u: int, v: int) -> list[int]:
        key = (u, v) if u <= v else (v, u)
        return [i for i in self.incidence[u] if self.edges[i] == key]

    def __repr__(self):
        return f"Multigraph(order={self.order}, size={self.size})"


@dataclass(frozen=True)
class Walk:
    """Alternating vertex/edge-id sequence; closed walks repeat the start vertex."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...] = ()
    closed: bool = False

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        if len(self.vertices) != len(self.edges) + 1:
            raise ValueError("a walk has one more vertex than edges")
        if self.closed and self.vertices[0] != self.vertices[-1]:
            raise ValueError("closed walk must end where it starts")

    def __len__(self):
        return len(self.edges)

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    def distinct_vertices(self) -> tuple[int, ...]:
        return self.vertices[:-1] if self.closed else self.vertices


def is_walk_in(G: Multigraph, w: Walk) -> bool:
    for i, e in enumerate(w.edges):
        if not 0 <= e < G.size:
            return False
        a, b = w.vertices[i], w.vertices[i + 1]
        if G.edges[e] != ((a, b) if a <= b else (b, a)):
            return False
    return all(0 <= v < G.order for v in w.vertices)


def is_trail_in(G: Multigraph, w: Walk) -> bool:
    return is_walk_in(G, w) and len(set(w.edges)) == len(w.edges)


def is_euler_tour(G: Multigraph, w: Walk) -> bool:
    return w.closed and is_trail_in(G, w) and len(w.edges) == G.size


def is_hamilton_cycle(G: Multigraph, w: Walk) -> bool:
    if not (w.closed and is_walk_in(G, w)) or G.order == 0:
        return False
    inner = w.vertices[:-1]
    if len(set(w.edges)) != len(w.edges):
        return False
    return len(inner) == G.order and len(set(inner)) == G.order


def is_hamilton_path(G: Multigraph, w: Walk, s: int | None = None, t: int | None = None) -> bool:
    if w.closed or not is_walk_in(G, w):
        return False
    if len(w.vertices) != G.order or len(set(w.vertices)) != G.order:
        return False
    if s is not None and w.start != s:
        return False
    return t is None or w.end == t


def components(G: Multigraph) -> list[list[int]]:
    """Vertex sets of connected components, each sorted, ordered by least vertex."""
    seen = [False] * G.order
    out = []
    for s in range(G.order):
        if seen[s]:
            continue
        seen[s] = True
        block = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in G.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    block.append(w)
                    queue.append(w)
        out.append(sorted(block))
    return out


def component_index(G: Multigraph) -> list[int]:
    idx = [0] * G.order
    for i, block in enumerate(components(G)):
        for v in block:
            idx[v] = i
    return idx


def is_connected(G: Multigraph) -> bool:
    return G.order <= 1 or len(components(G)) == 1


def is_connected_ignoring_isolated(G: Multigraph) -> bool:
    blocks = [b for b in components(G) if len(b) > 1 or G.valency(b[0]) > 0]
    return len(blocks) <= 1


def is_bipartite(G: Multigraph) -> bool:
    if G.has_loops():
        return False
    side = [-1] * G.order
    for s in range(G.order):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in G.adjacency[u]:
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return False
    return True


def is_forest(G: Multigraph) -> bool:
    return G.is_simple() and G.size == G.order - len(components(G))


def is_matching(G: Multigraph, edge_ids: Iterable[int]) -> bool:
    used: set[int] = set()
    for e in edge_ids:
        u, v = G.edges[e]
        if u == v or u in used or v in used:
            return False
        used.update((u, v))
    return True


def is_perfect_matching(G: Multigraph, edge_ids: Sequence[int]) -> bool:
    return is_matching(G, edge_ids) and 2 * len(edge_ids) == G.order


def complement_edges(G: Multigraph, edge_ids: Iterable[int]) -> list[int]:
    drop = set(edge_ids)
    return [i for i in range(G.size) if i not in drop]
