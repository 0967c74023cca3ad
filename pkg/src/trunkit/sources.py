"""Recovering sources of a graph: isolating perfect matchings and contraction.

A perfect matching ``M`` of ``Y`` is isolating when no edge of ``M`` has both
ends in one component of ``Y - M``.  Contracting each component to a vertex
and keeping the ``M`` edges gives a loopless source of ``Y``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from ._search import cap, check_cap
from .canon import canonical_form
from .graph import Multigraph, component_index, components
from .matching import first_perfect_matching, iter_perfect_matchings


@dataclass(frozen=True)
class SourceCertificate:
    matching: tuple[int, ...]  # edge ids of Y
    blocks: tuple[tuple[int, ...], ...]  # components of Y - M
    grouping: tuple[int, ...]  # source vertex of each block
    source: Multigraph
    compared: bool = True  # False when too large for isomorphism dedup

    @property
    def cluster_of(self) -> tuple[int, ...]:
        out = {}
        for b, block in enumerate(self.blocks):
            for y in block:
                out[y] = self.grouping[b]
        return tuple(out[y] for y in sorted(out))


def _remaining_is_simple(Y: Multigraph, M: Sequence[int]) -> bool:
    return Y.remove_edges(M).is_simple()


def is_truncation_of_reflexive(Y: Multigraph) -> tuple[bool, tuple[int, ...] | None]:
    """Whether Y arises from some multigraph (loops allowed); returns a witness matching."""
    M = first_perfect_matching(Y, lambda m: _remaining_is_simple(Y, m))
    return M is not None, M


def is_isolating(Y: Multigraph, M: Sequence[int]) -> bool:
    comp = component_index(Y.remove_edges(M))
    return all(comp[Y.edges[e][0]] != comp[Y.edges[e][1]] for e in M)


def iter_isolating_perfect_matchings(Y: Multigraph) -> Iterator[tuple[int, ...]]:
    if not Y.is_simple():
        raise ValueError("isolating matchings are defined for graphs")
    for M in iter_perfect_matchings(Y):
        if is_isolating(Y, M):
            yield M


def isolating_perfect_matchings(Y: Multigraph) -> list[tuple[int, ...]]:
    return list(iter_isolating_perfect_matchings(Y))


def contract_to_source(Y: Multigraph, M: Sequence[int]) -> SourceCertificate:
    """Contract the components of ``Y - M``; each M-edge becomes a source edge."""
    M = tuple(sorted(M))
    rest = Y.remove_edges(M)
    if not rest.is_simple():
        raise ValueError("Y minus the matching is not a graph")
    blocks = components(rest)
    comp = component_index(rest)
    covered = [0] * Y.order
    edges = []
    for e in M:
        a, b = Y.edges[e]
        covered[a] += 1
        covered[b] += 1
        if comp[a] == comp[b]:
            raise ValueError(f"matching edge {e} lies inside a component; the matching is not isolating")
        edges.append((comp[a], comp[b]))
    if any(c != 1 for c in covered):
        raise ValueError("not a perfect matching")
    X = Multigraph(len(blocks), tuple(edges))
    return SourceCertificate(M, tuple(tuple(b) for b in blocks), tuple(range(len(blocks))), X)


def _dedupe(certs: Sequence[SourceCertificate]) -> list[SourceCertificate]:
    seen: set[bytes] = set()
    out = []
    limit = cap("canonical_order")
    for c in certs:
        if c.source.order > limit:
            out.append(SourceCertificate(c.matching, c.blocks, c.grouping, c.source, compared=False))
            continue
        key = canonical_form(c.source)
        if key not in seen:
            seen.add(key)
            out.append(c)
    return out


def source_certificates(Y: Multigraph) -> list[SourceCertificate]:
    """One certificate per isolating perfect matching (no dedup)."""
    return [contract_to_source(Y, M) for M in iter_isolating_perfect_matchings(Y)]


def minimal_sources(Y: Multigraph) -> list[SourceCertificate]:
    """Finest-contraction sources, one per isomorphism class, in matching order."""
    return _dedupe(source_certificates(Y))


def _independent_partitions(X: Multigraph) -> Iterator[tuple[int, ...]]:
    """Set partitions of V(X) into blocks with no internal edge (restricted growth strings)."""
    n = X.order
    adj = X.adjacency
    label = [-1] * n
    members: list[list[int]] = []

    def rec(v: int) -> Iterator[tuple[int, ...]]:
        if v == n:
            yield tuple(label)
            return
        label[v] = len(members)
        members.append([v])
        yield from rec(v + 1)
        members.pop()
        for b, group in enumerate(members):
            if not any(w in adj[v] for w in group):
                label[v] = b
                group.append(v)
                yield from rec(v + 1)
                group.pop()
        label[v] = -1

    yield from rec(0)


def coarsened_sources(Y: Multigraph, cert: SourceCertificate) -> list[Multigraph]:
    """Every amalgamation of the certificate's source with no matching edge inside a block.

    The minimal source itself is the first entry.  Results are deduplicated up
    to isomorphism.
    """
    X = cert.source
    if X.has_loops():
        raise ValueError("certificate source has a loop")
    check_cap("coarsening_order", X.order)
    seen: set[bytes] = set()
    out = []
    for part in _independent_partitions(X):
        k = max(part) + 1
        G = Multigraph(k, tuple((part[a], part[b]) for a, b in X.edges))
        key = canonical_form(G)
        if key not in seen:
            seen.add(key)
            out.append(G)
    return out


def graph_sources(Y: Multigraph) -> list[SourceCertificate]:
    """Minimal sources that are themselves graphs (no repeated M-edges between blocks)."""
    return _dedupe([c for c in source_certificates(Y) if c.source.is_simple()])


def unique_source_certificate(Y: Multigraph) -> bool:
    """Exactly one isolating matching, with every pair of blocks joined by an M-edge."""
    found = []
    for M in iter_isolating_perfect_matchings(Y):
        found.append(M)
        if len(found) > 1:
            return False
    if not found:
        return False
    X = contract_to_source(Y, found[0]).source
    return X.underlying_simple().is_complete()


def group_by_clusters(Y: Multigraph, M: Sequence[int], cluster_of: Sequence[int]) -> Multigraph:
    """Contract by a given labelling instead of by components (round-trip check)."""
    n = max(cluster_of) + 1 if cluster_of else 0
    return Multigraph(n, tuple((cluster_of[Y.edges[e][0]], cluster_of[Y.edges[e][1]]) for e in M))
