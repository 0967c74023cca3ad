"""Hypothesis strategies and brute-force oracles shared by the tests."""

import random
from itertools import combinations, permutations

import networkx as nx
from hypothesis import strategies as st

from trunkit.graph import Multigraph


@st.composite
def multigraphs(draw, max_order=7, max_size=10, loops=False, connected=False, min_size=0):
    n = draw(st.integers(1 if loops else 2, max_order))
    pair = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
    if not loops:
        pair = pair.filter(lambda p: p[0] != p[1])
    edges = draw(st.lists(pair, min_size=min_size, max_size=max_size))
    if connected:
        edges = [(i, draw(st.integers(0, i - 1))) for i in range(1, n)] + edges
    return Multigraph(n, tuple(edges))


@st.composite
def simple_graphs(draw, max_order=7, connected=False):
    n = draw(st.integers(2, max_order))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    if connected:
        tree = [(draw(st.integers(0, i - 1)), i) for i in range(1, n)]
        chosen = sorted(set(chosen) | set(tree))
    return Multigraph(n, tuple(chosen))


def no_isolated(G: Multigraph) -> bool:
    return min(G.valencies) > 0


def random_simple_graph(rng: random.Random, n: int, p: float) -> Multigraph:
    return Multigraph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p))


# --- independent oracles ---------------------------------------------------


def to_nx(G: Multigraph) -> nx.MultiGraph:
    H = nx.MultiGraph()
    H.add_nodes_from(range(G.order))
    H.add_edges_from(G.edges)
    return H


def nx_isomorphic(G: Multigraph, H: Multigraph) -> bool:
    """Isomorphism with multiplicities, via networkx on weighted simple graphs."""

    def weighted(M):
        W = nx.Graph()
        W.add_nodes_from(range(M.order))
        for (u, v), m in M.multiplicity.items():
            W.add_edge(u, v, m=m)
        return W

    return nx.is_isomorphic(weighted(G), weighted(H), edge_match=lambda a, b: a["m"] == b["m"])


def brute_edge_connectivity(G: Multigraph, limit: int) -> int:
    """Smallest edge set whose removal disconnects G (searched up to `limit`)."""
    for k in range(limit + 1):
        for S in combinations(range(G.size), k):
            if not nx.is_connected(to_nx(G.remove_edges(S))):
                return k
    return limit + 1


def brute_vertex_connectivity(G: Multigraph, limit: int) -> int:
    H = to_nx(G)
    for k in range(limit + 1):
        for S in combinations(range(G.order), k):
            R = H.copy()
            R.remove_nodes_from(S)
            if R.number_of_nodes() > 1 and not nx.is_connected(R):
                return k
    return limit + 1


def count_perfect_matchings(G: Multigraph) -> int:
    """Bitmask recursion over the lowest unmatched vertex."""
    n = G.order
    memo = {}

    def f(mask):
        if mask == 0:
            return 1
        if mask in memo:
            return memo[mask]
        i = (mask & -mask).bit_length() - 1
        total = 0
        for (u, v), m in G.multiplicity.items():
            if u == v:
                continue
            if i in (u, v):
                j = v if u == i else u
                if mask >> j & 1:
                    total += m * f(mask & ~(1 << i) & ~(1 << j))
        memo[mask] = total
        return total

    return f((1 << n) - 1) if n % 2 == 0 else 0


def isolating_matchings_brute(G: Multigraph) -> list[tuple[int, ...]]:
    out = []
    if G.order % 2:
        return out
    for M in combinations(range(G.size), G.order // 2):
        ends = [x for e in M for x in G.edges[e]]
        if len(set(ends)) != G.order:
            continue
        R = to_nx(G.remove_edges(M))
        comp = {v: i for i, c in enumerate(nx.connected_components(R)) for v in c}
        if all(comp[G.edges[e][0]] != comp[G.edges[e][1]] for e in M):
            out.append(M)
    return out


def has_hamilton_cycle_brute(G: Multigraph) -> bool:
    n = G.order
    adj = G.adjacency
    for perm in permutations(range(1, n)):
        if perm[0] > perm[-1]:
            continue
        cyc = (0,) + perm
        if all(cyc[(i + 1) % n] in adj[cyc[i]] for i in range(n)):
            return True
    return False


def edge_colorable_brute(G: Multigraph, k: int) -> bool:
    """Plain backtracking in edge-id order, no symmetry breaking."""
    color = [-1] * G.size
    inc = G.incidence

    def rec(e):
        if e == G.size:
            return True
        u, v = G.edges[e]
        taken = {color[f] for f in inc[u] + inc[v] if color[f] >= 0}
        for c in range(k):
            if c not in taken:
                color[e] = c
                if rec(e + 1):
                    return True
                color[e] = -1
        return False

    return rec(0)


def closed_trails_from(G: Multigraph, v: int, first: int, last: int) -> bool:
    """Exhaustive search for an Euler tour from v that starts on `first` and ends on `last`."""
    used = [False] * G.size

    def rec(at, count):
        if count == G.size:
            return at == v
        for e in G.incidence[at]:
            if used[e] or (e == last and count != G.size - 1):
                continue
            if count == G.size - 1 and e != last:
                continue
            used[e] = True
            if rec(G.other_end(e, at), count + 1):
                return True
            used[e] = False
        return False

    used[first] = True
    return rec(G.other_end(first, v), 1)


def chromatic_number_brute(G: Multigraph) -> int:
    for k in range(1, G.order + 1):
        color = [-1] * G.order

        def rec(v):
            if v == G.order:
                return True
            for c in range(k):
                if all(color[w] != c for w in G.adjacency[v] if w < v):
                    color[v] = c
                    if rec(v + 1):
                        return True
            color[v] = -1
            return False

        if rec(0):
            return k
    return 0
