"""Named source graphs used throughout the tests and the verification suites.

Edge orders are fixed here; file outputs and reports depend on them.
"""

from __future__ import annotations

from itertools import combinations

from .graph import Multigraph


def complete(n: int) -> Multigraph:
    return Multigraph(n, tuple(combinations(range(n), 2)))


def complete_multigraph(n: int, multiplicity: int) -> Multigraph:
    """``alpha K_n``: every pair joined by `multiplicity` parallel edges."""
    return Multigraph(n, tuple(e for e in combinations(range(n), 2) for _ in range(multiplicity)))


def cycle(n: int) -> Multigraph:
    if n < 3:
        raise ValueError("simple cycles need n >= 3; use complete_multigraph(2, 2) for 2K_2")
    return Multigraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Multigraph:
    """Path with `n` vertices."""
    return Multigraph(n, tuple((i, i + 1) for i in range(n - 1)))


def star(k: int) -> Multigraph:
    return Multigraph(k + 1, tuple((0, i) for i in range(1, k + 1)))


def complete_bipartite(a: int, b: int) -> Multigraph:
    return Multigraph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))


def cartesian_product(G: Multigraph, H: Multigraph) -> Multigraph:
    """G box H with vertex ``(g, h)`` numbered ``g + G.order * h``."""
    n = G.order
    es = [(u + n * h, v + n * h) for h in range(H.order) for u, v in G.edges]
    es += [(g + n * a, g + n * b) for a, b in H.edges for g in range(n)]
    return Multigraph(n * H.order, tuple(es))


def prism(n: int = 3) -> Multigraph:
    """C_n box K_2: the two n-cycles first, then the rungs."""
    return cartesian_product(cycle(n), complete(2))


def ladder(n: int) -> Multigraph:
    """P_n box K_2."""
    return cartesian_product(path(n), complete(2))


def hypercube(d: int) -> Multigraph:
    es = [(v, v | (1 << b)) for v in range(1 << d) for b in range(d) if not v & (1 << b)]
    return Multigraph(1 << d, tuple(sorted(es)))


def octahedron() -> Multigraph:
    """K_{2,2,2}; antipodal pairs are (i, i+3)."""
    return Multigraph(6, tuple((u, v) for u, v in combinations(range(6), 2) if v - u != 3))


def petersen() -> Multigraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Multigraph(10, tuple(outer + spokes + inner))


def bowtie() -> Multigraph:
    """Two triangles sharing vertex 0."""
    return Multigraph(5, ((0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)))


CATALOG = {
    "K3": lambda: complete(3),
    "K4": lambda: complete(4),
    "K5": lambda: complete(5),
    "K6": lambda: complete(6),
    "2K2": lambda: complete_multigraph(2, 2),
    "3K2": lambda: complete_multigraph(2, 3),
    "C4": lambda: cycle(4),
    "C5": lambda: cycle(5),
    "C6": lambda: cycle(6),
    "P3": lambda: path(3),
    "P4": lambda: path(4),
    "K1,3": lambda: star(3),
    "K3,3": lambda: complete_bipartite(3, 3),
    "K2,3": lambda: complete_bipartite(2, 3),
    "Q3": lambda: hypercube(3),
    "prism": lambda: prism(3),
    "P4xK2": lambda: ladder(4),
    "octahedron": octahedron,
    "petersen": petersen,
}


def get(name: str) -> Multigraph:
    try:
        return CATALOG[name]()
    except KeyError:
        raise KeyError(f"unknown catalog graph {name!r}; known: {', '.join(CATALOG)}") from None


def items(names=None):
    for name in names or CATALOG:
        yield name, get(name)
