"""Planarity and outerplanarity, with subdivision witnesses for small graphs."""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from ._search import cap
from .catalog import bowtie
from .flow import vertex_connectivity
from .graph import Multigraph
from .report import VerificationReport
from .subdivision import Subdivision, find_subdivision, is_subdivision
from .truncation import Constituent, Truncation, assemble, excise


def _nx(G: Multigraph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(G.order))
    H.add_edges_from(G.edges)
    return H


def _require_simple(G: Multigraph) -> None:
    if not G.is_simple():
        raise ValueError("planarity is tested on simple graphs")


def is_planar(G: Multigraph) -> bool:
    _require_simple(G)
    planar, _ = nx.check_planarity(_nx(G))
    return planar


@dataclass(frozen=True)
class PlanarityResult:
    planar: bool
    witness: Subdivision | None = None  # K5 or K33 subdivision when non-planar and small


def planarity(G: Multigraph) -> PlanarityResult:
    """Planarity decision plus a validated Kuratowski subdivision for small non-planar graphs."""
    _require_simple(G)
    planar, cert = nx.check_planarity(_nx(G), counterexample=True)
    if planar or G.order > cap("planarity_witness_order"):
        return PlanarityResult(planar)
    sub = Multigraph(G.order, tuple(sorted(tuple(sorted(e)) for e in cert.edges())))
    for pattern in ("K33", "K5"):
        w = find_subdivision(sub, pattern)
        if w is not None:
            assert is_subdivision(G, w)
            return PlanarityResult(False, w)
    raise AssertionError("non-planar certificate holds no Kuratowski subdivision")


def kuratowski_subdivision(G: Multigraph) -> Subdivision | None:
    return planarity(G).witness


def is_outerplanar(G: Multigraph) -> bool:
    """Planar after adding a vertex joined to every vertex (parallels and loops ignored)."""
    S = G.underlying_simple()
    n = S.order
    return is_planar(Multigraph(n + 1, S.edges + tuple((v, n) for v in range(n))))


def outerplanar_obstruction(G: Multigraph) -> Subdivision | None:
    """A K4 or K_{2,3} subdivision, by exhaustive search."""
    S = G.underlying_simple()
    return find_subdivision(S, "K4") or find_subdivision(S, "K23")


def _is_two_connected(X: Multigraph) -> bool:
    return X.order >= 3 and vertex_connectivity(X.underlying_simple()) >= 2


def check_cohesive_planarity_theorem(t: Truncation) -> VerificationReport:
    """For a cohesive truncation of a 2-connected planar source:
    Y planar exactly when every constituent is outerplanar."""
    X = t.source
    if not t.is_cohesive():
        return VerificationReport("cohesive_planarity", None, note="truncation is not cohesive")
    if not _is_two_connected(X) or not is_planar(X.underlying_simple()):
        return VerificationReport("cohesive_planarity", None, note="source is not 2-connected and planar")
    y_planar = is_planar(t.graph)
    bad = [v for v, c in enumerate(t.constituents) if not is_outerplanar(c.as_graph())]
    rep = VerificationReport(
        "cohesive_planarity",
        y_planar == (not bad),
        {"y_planar": y_planar, "constituents_outerplanar": not bad, "non_outerplanar": bad},
    )
    if rep.failed:
        rep.counterexample = {
            "source_edges": [list(e) for e in X.edges],
            "constituents": [[list(e) for e in c.edges] for c in t.constituents],
        }
        w = kuratowski_subdivision(t.graph) if not y_planar else None
        if w is not None:
            rep.counterexample["kuratowski"] = {"pattern": w.pattern, "branch": list(w.branch)}
    return rep


def check_nonplanar_lemma(t: Truncation) -> VerificationReport:
    """A cohesive truncation of a non-planar source is non-planar."""
    if not t.is_cohesive():
        return VerificationReport("nonplanar_lemma", None, note="truncation is not cohesive")
    x_planar = is_planar(t.source.underlying_simple())
    y_planar = is_planar(t.graph)
    holds = x_planar or not y_planar
    return VerificationReport(
        "nonplanar_lemma", holds, {"x_planar": x_planar, "y_planar": y_planar, "vacuous": x_planar}
    )


def cut_vertex_witness() -> Truncation:
    """Planar cohesive truncation of the bowtie with a K4 constituent at the cut vertex.

    Shows the 2-connectivity hypothesis cannot be dropped.
    """
    X = bowtie()
    lm = excise(X)
    hub = max(range(X.order), key=lambda v: X.valency(v))
    cons = {}
    for v, cl in enumerate(lm.clusters):
        pairs = [(a, b) for i, a in enumerate(cl) for b in cl[i + 1 :]]
        cons[v] = Constituent(cl, tuple(pairs if v == hub else pairs[:1]))
    return assemble(lm, cons)
