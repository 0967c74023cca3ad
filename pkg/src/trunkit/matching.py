"""Exhaustive perfect-matching enumeration by backtracking."""

from __future__ import annotations

from typing import Iterator

from .graph import Multigraph


def iter_perfect_matchings(G: Multigraph) -> Iterator[tuple[int, ...]]:
    """Yield perfect matchings as sorted edge-id tuples, lexicographically.

    Parallel edges give distinct matchings.  The least uncovered vertex is
    always matched next, so every matching is produced exactly once.
    """
    n = G.order
    if n % 2:
        return
    covered = [False] * n
    chosen: list[int] = []
    inc = G.incidence

    def rec(start: int) -> Iterator[tuple[int, ...]]:
        v = start
        while v < n and covered[v]:
            v += 1
        if v == n:
            yield tuple(sorted(chosen))
            return
        covered[v] = True
        for e in inc[v]:
            w = G.other_end(e, v)
            if w == v or covered[w]:
                continue
            covered[w] = True
            chosen.append(e)
            yield from rec(v + 1)
            chosen.pop()
            covered[w] = False
        covered[v] = False

    # lexicographic order of sorted tuples is not the recursion order
    yield from sorted(rec(0))


def enumerate_perfect_matchings(G: Multigraph) -> list[tuple[int, ...]]:
    return list(iter_perfect_matchings(G))


def first_perfect_matching(G: Multigraph, accept=None) -> tuple[int, ...] | None:
    """Cheapest route to one matching satisfying `accept` (no global sort)."""
    n = G.order
    if n % 2:
        return None
    covered = [False] * n
    chosen: list[int] = []
    inc = G.incidence

    def rec(start: int):
        v = start
        while v < n and covered[v]:
            v += 1
        if v == n:
            m = tuple(sorted(chosen))
            return m if accept is None or accept(m) else None
        covered[v] = True
        for e in inc[v]:
            w = G.other_end(e, v)
            if w == v or covered[w]:
                continue
            covered[w] = True
            chosen.append(e)
            found = rec(v + 1)
            chosen.pop()
            covered[w] = False
            if found is not None:
                covered[v] = False
                return found
        covered[v] = False
        return None

    return rec(0)
