"""Verification suites: every theorem check swept over the catalog and seeds."""

from __future__ import annotations

from typing import Callable, Iterable

from . import catalog
from .canon import is_isomorphic
from .coloring import (
    check_chi_of_complete_truncation,
    check_class1_coloring,
    chromatic_index_spectrum,
    chromatic_number_spectrum,
)
from .connectivity import (
    check_complete_connectivity,
    check_completeness_criterion,
    check_connectedness_theorem,
    check_edge_connectivity_bound,
    check_matching_cut_lemma,
)
from .exact_coloring import chromatic_index_exact, chromatic_number_exact
from .graph import Multigraph, is_hamilton_cycle, is_perfect_matching
from .planarity import check_cohesive_planarity_theorem, check_nonplanar_lemma, cut_vertex_witness, is_planar
from .report import VerificationReport
from .sources import contract_to_source, is_isolating, minimal_sources, unique_source_certificate
from .tours import hamilton_cycle
from .traversal import (
    check_euler_theorem,
    find_hamilton_decomposition,
    hamilton_cycle_of_complete_truncation,
    hamilton_decompose_truncation,
    is_hamilton_decomposition,
    spanning_eulerian_subgraph,
    walecki_cycle_decomposition,
)
from .truncation import (
    complete_truncation,
    matching_constituent_truncation,
    random_cohesive_truncation,
    random_truncation,
)

Suite = Callable[[list[str], int], list[VerificationReport]]


def _tag(rep: VerificationReport, **subject) -> VerificationReport:
    rep.details = {**subject, **rep.details}
    return rep


def _same(check: str, got, want, **subject) -> VerificationReport:
    return VerificationReport(check, got == want, {**subject, "got": got, "expected": want})


def round_trip(X: Multigraph, t) -> VerificationReport:
    """F(M) is an isolating perfect matching of Y and contracting by cluster gives back X."""
    M = t.matching_edge_ids
    Y = t.graph
    ok = is_perfect_matching(Y, M) and is_isolating(Y, M)
    if ok:
        cert = contract_to_source(Y, M)
        labels = [t.cluster_of[b[0]] for b in cert.blocks]
        regrouped = Multigraph(X.order, tuple((labels[a], labels[b]) for a, b in cert.source.edges))
        ok = is_isomorphic(regrouped, X)
    return VerificationReport("round_trip", ok)


def suite_source(names: list[str], seeds: int) -> list[VerificationReport]:
    out = []
    for name, X in catalog.items(names):
        for s in range(seeds):
            t = random_truncation(X, 0.5, s)
            out.append(_tag(round_trip(X, t), graph=name, seed=s))
    prism = catalog.get("prism")
    srcs = minimal_sources(prism)
    out.append(_same("prism_source", [is_isomorphic(c.source, catalog.get("3K2")) for c in srcs], [True], graph="prism"))
    out.append(_same("prism_unique_certificate", unique_source_certificate(prism), True, graph="prism"))
    p4 = catalog.get("P4xK2")
    kinds = sorted(
        "4K2" if is_isomorphic(c.source, catalog.complete_multigraph(2, 4)) else
        "2P3" if is_isomorphic(c.source, Multigraph(3, ((0, 1), (0, 1), (1, 2), (1, 2)))) else "other"
        for c in minimal_sources(p4)
    )
    out.append(_same("p4_prism_sources", kinds, ["2P3", "4K2"], graph="P4xK2"))
    return out


def suite_conn(names: list[str], seeds: int) -> list[VerificationReport]:
    out = []
    for name, X in catalog.items(names):
        for s in range(seeds):
            t = random_truncation(X, 0.5, s)
            out.append(_tag(check_connectedness_theorem(t), graph=name, seed=s))
            out.append(_tag(check_edge_connectivity_bound(t), graph=name, seed=s))
            c = random_cohesive_truncation(X, 0.3, s)
            out.append(_tag(check_matching_cut_lemma(c), graph=name, seed=s))
        out.append(_tag(check_complete_connectivity(X), graph=name))
    for name in ("K4", "Q3"):
        if name in names:
            out.append(_tag(check_completeness_criterion(catalog.get(name)), graph=name))
    return out


def suite_euler(names: list[str], seeds: int) -> list[VerificationReport]:
    out = []
    for name, X in catalog.items(names):
        builds = [("complete", complete_truncation(X))]
        if all(d % 2 == 0 for d in X.valencies):
            builds.append(("matching", matching_constituent_truncation(X)))
        builds += [(f"random{s}", random_truncation(X, 0.5, s)) for s in range(seeds)]
        for kind, t in builds:
            out.append(_tag(check_euler_theorem(t), graph=name, build=kind))
    return out


def check_hamilton_theorem(X: Multigraph) -> VerificationReport:
    """The complete truncation is hamiltonian exactly when X has a spanning eulerian subgraph."""
    Y = complete_truncation(X).graph
    oracle = hamilton_cycle(Y) is not None
    S = spanning_eulerian_subgraph(X)
    built = hamilton_cycle_of_complete_truncation(X)
    holds = oracle == (S is not None) and (built is None or is_hamilton_cycle(Y, built))
    return VerificationReport(
        "hamilton",
        holds,
        {"oracle_hamiltonian": oracle, "spanning_eulerian": S is not None, "constructed": built is not None},
    )


def suite_ham(names: list[str], seeds: int) -> list[VerificationReport]:
    out = []
    for name, X in catalog.items(names):
        if X.size <= 24:
            out.append(_tag(check_hamilton_theorem(X), graph=name))
    return out


def check_decomposition(X: Multigraph, hd) -> VerificationReport:
    if hd is None:
        return VerificationReport("hamilton_decomposition", None, note="no decomposition of the source found")
    out = hamilton_decompose_truncation(X, hd)
    Y = complete_truncation(X).graph
    return VerificationReport(
        "hamilton_decomposition",
        is_hamilton_decomposition(Y, out),
        {"cycles": len(out.cycles), "matching": out.matching is not None},
    )


def suite_hamdecomp(names: list[str], seeds: int) -> list[VerificationReport]:
    out = []
    for n in (5, 7):
        out.append(_tag(check_decomposition(catalog.complete(n), walecki_cycle_decomposition(n)), graph=f"K{n}"))
    for name in ("K4", "Q3"):
        X = catalog.get(name)
        out.append(_tag(check_decomposition(X, find_hamilton_decomposition(X)), graph=name))
    for n in range(3, 9):
        X = catalog.cycle(n)
        out.append(_tag(check_decomposition(X, find_hamilton_decomposition(X)), graph=f"C{n}"))
    return out


def suite_color(names: list[str], seeds: int) -> list[VerificationReport]:
    out = []
    for name in ("K5", "Q3", "K4", "C6"):
        out.append(_tag(check_class1_coloring(catalog.get(name)), graph=name))
    for name, X in catalog.items(names):
        out.append(_tag(check_chi_of_complete_truncation(X), graph=name))
    k, _ = chromatic_index_exact(complete_truncation(catalog.petersen()).graph)
    out.append(_same("petersen_truncation_index", k, 4, graph="petersen"))
    K5 = catalog.complete(5)
    for k in (3, 4):
        t = chromatic_index_spectrum(K5, k)
        out.append(_same("index_spectrum", (chromatic_index_exact(t.graph)[0], t.is_cohesive()), (k, True), graph="K5"))
        t = chromatic_number_spectrum(K5, k)
        out.append(_same("number_spectrum", (chromatic_number_exact(t.graph), t.is_cohesive()), (k, True), graph="K5"))
    return out


PLANAR_SOURCES = ("K4", "prism", "octahedron", "C4xK2", "C5xK2")


def planar_source(name: str) -> Multigraph:
    if name.endswith("xK2") and name.startswith("C"):
        return catalog.prism(int(name[1:-3]))
    return catalog.get(name)


def suite_planar(names: list[str], seeds: int, trials: int = 200) -> list[VerificationReport]:
    out = []
    for i in range(trials):
        name = PLANAR_SOURCES[i % len(PLANAR_SOURCES)]
        t = random_cohesive_truncation(planar_source(name), 0.5, i)
        out.append(_tag(check_cohesive_planarity_theorem(t), graph=name, seed=i))
    w = cut_vertex_witness()
    out.append(_same("cut_vertex_witness", (is_planar(w.graph), w.is_cohesive()), (True, True), graph="bowtie"))
    for name in ("K5", "K3,3", "petersen"):
        X = catalog.get(name)
        for kind, t in (("complete", complete_truncation(X)), ("cohesive0", random_cohesive_truncation(X, 0.5, 0))):
            out.append(_tag(check_nonplanar_lemma(t), graph=name, build=kind))
    return out


SUITES: dict[str, Suite] = {
    "source": suite_source,
    "conn": suite_conn,
    "euler": suite_euler,
    "ham": suite_ham,
    "hamdecomp": suite_hamdecomp,
    "color": suite_color,
    "planar": suite_planar,
}


def run(suite: str, names: Iterable[str] | None = None, seeds: int = 25) -> dict[str, list[VerificationReport]]:
    names = list(names) if names else list(catalog.CATALOG)
    chosen = list(SUITES) if suite == "all" else [suite]
    out = {}
    for s in chosen:
        if s not in SUITES:
            raise ValueError(f"unknown suite {s!r}")
        out[s] = SUITES[s](names, seeds)
    return out
