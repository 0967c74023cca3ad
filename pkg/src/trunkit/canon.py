"""Canonical forms of small multigraphs (loops and multiplicities included).

The form is the lexicographically least multiplicity matrix over all vertex
orders produced by individualization and colour refinement.  Cells made of
mutual twins are branched on once, since swapping twins is an automorphism.
"""

from __future__ import annotations

from ._search import check_cap
from .graph import Multigraph


def _matrix(G: Multigraph) -> list[list[int]]:
    n = G.order
    A = [[0] * n for _ in range(n)]
    for (u, v), m in G.multiplicity.items():
        A[u][v] += m
        if u != v:
            A[v][u] += m
    return A


def _refine(A: list[list[int]], cells: list[list[int]]) -> list[list[int]]:
    """Split cells until equitable; the new order depends only on the invariants."""
    while True:
        cell_of = {}
        for i, cell in enumerate(cells):
            for v in cell:
                cell_of[v] = i
        out = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig = {}
            for v in cell:
                row = A[v]
                counts = [0] * len(cells)
                for w, m in enumerate(row):
                    if m and w != v:
                        counts[cell_of[w]] += m
                # multiplicity pattern per target cell
                pat = {}
                for w, m in enumerate(row):
                    if m and w != v:
                        pat.setdefault(cell_of[w], []).append(m)
                key = (row[v], tuple(counts), tuple(sorted((c, tuple(sorted(ms))) for c, ms in pat.items())))
                sig.setdefault(key, []).append(v)
            if len(sig) > 1:
                changed = True
                for key in sorted(sig):
                    out.append(sig[key])
            else:
                out.append(cell)
        cells = out
        if not changed:
            return cells


def _twins(A: list[list[int]], cell: list[int]) -> bool:
    a = cell[0]
    n = len(A)
    for b in cell[1:]:
        if A[a][a] != A[b][b]:
            return False
        for w in range(n):
            if w != a and w != b and A[a][w] != A[b][w]:
                return False
    return True


def _encode(A: list[list[int]], order: list[int]) -> tuple[int, ...]:
    n = len(order)
    return tuple(A[order[i]][order[j]] for i in range(n) for j in range(i, n))


def canonical_form(G: Multigraph) -> bytes:
    """Bytes equal for two multigraphs exactly when they are isomorphic."""
    n = G.order
    check_cap("canonical_order", n)
    A = _matrix(G)
    best: list[tuple[int, ...] | None] = [None]

    def search(cells: list[list[int]]) -> None:
        cells = _refine(A, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            code = _encode(A, [c[0] for c in cells])
            if best[0] is None or code < best[0]:
                best[0] = code
            return
        cell = cells[target]
        choices = cell[:1] if _twins(A, cell) else cell
        for v in choices:
            rest = [w for w in cell if w != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    if n:
        search([list(range(n))])
    code = best[0] or ()
    return f"{n}:{G.size}:".encode() + bytes(_varint(code))


def _varint(values):
    for x in values:
        while x >= 0x80:
            yield (x & 0x7F) | 0x80
            x >>= 7
        yield x


def is_isomorphic(G: Multigraph, H: Multigraph) -> bool:
    if G.order != H.order or G.size != H.size or sorted(G.valencies) != sorted(H.valencies):
        return False
    return canonical_form(G) == canonical_form(H)
