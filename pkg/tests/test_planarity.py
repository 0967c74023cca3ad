import random

import pytest
from hypothesis import given, settings

from tests.strategies import random_simple_graph, simple_graphs
from trunkit import catalog
from trunkit._search import CAP_ENV
from trunkit.graph import Multigraph
from trunkit.planarity import (
    check_cohesive_planarity_theorem,
    check_nonplanar_lemma,
    cut_vertex_witness,
    is_outerplanar,
    is_planar,
    kuratowski_subdivision,
    outerplanar_obstruction,
    planarity,
)
from trunkit.subdivision import find_subdivision, is_subdivision
from trunkit.truncation import (
    complete_truncation,
    random_cohesive_truncation,
    spanning_path_truncation,
    with_constituent,
)
from trunkit.verify import PLANAR_SOURCES, planar_source


@pytest.mark.parametrize(
    "name, planar",
    [("K4", True), ("K5", False), ("K3,3", False), ("petersen", False), ("Q3", True), ("octahedron", True)],
)
def test_planarity_examples(name, planar):
    G = catalog.get(name)
    res = planarity(G)
    assert res.planar == planar == is_planar(G)
    if not planar:
        assert res.witness is not None and is_subdivision(G, res.witness)


def test_planarity_needs_a_simple_graph():
    with pytest.raises(ValueError):
        is_planar(catalog.complete_multigraph(2, 2))


@settings(max_examples=80, deadline=None)
@given(simple_graphs(max_order=7))
def test_planar_iff_no_kuratowski_subdivision(G):
    found = find_subdivision(G, "K5") or find_subdivision(G, "K33")
    assert is_planar(G) == (found is None)
    if found is None:
        assert kuratowski_subdivision(G) is None
    else:
        assert is_subdivision(G, kuratowski_subdivision(G))


@pytest.mark.parametrize(
    "G, outer",
    [
        (catalog.cycle(6), True),
        (catalog.complete(4), False),
        (catalog.complete_bipartite(2, 3), False),
        (catalog.path(4), True),
        (Multigraph(4, ((0, 1), (1, 2), (2, 3), (3, 0), (0, 2))), True),
    ],
)
def test_outerplanar_examples(G, outer):
    assert is_outerplanar(G) == outer
    assert (outerplanar_obstruction(G) is None) == outer


def test_outerplanar_apex_agrees_with_subdivision_search():
    rng = random.Random(2024)
    for _ in range(1000):
        n = rng.randint(1, 8)
        G = random_simple_graph(rng, n, rng.random())
        outer = is_outerplanar(G)
        w = outerplanar_obstruction(G)
        assert outer == (w is None)
        if w is not None:
            assert is_subdivision(G, w)
        if outer and n >= 2:
            assert G.size <= 2 * n - 3


def test_cut_vertex_witness():
    t = cut_vertex_witness()
    assert t.is_cohesive() and is_planar(t.graph)
    hub = max(range(t.source.order), key=t.source.valency)
    assert not is_outerplanar(t.constituents[hub].as_graph())
    assert len(t.constituents[hub].edges) == 6
    # the bowtie has a cut vertex, so the planarity criterion does not apply
    assert check_cohesive_planarity_theorem(t).holds is None


@pytest.mark.parametrize("name", ["K5", "K3,3", "petersen"])
def test_nonplanar_sources_give_nonplanar_truncations(name):
    X = catalog.get(name)
    for t in [complete_truncation(X), spanning_path_truncation(X)] + [
        random_cohesive_truncation(X, 0.2, s) for s in range(10)
    ]:
        rep = check_nonplanar_lemma(t)
        assert rep.holds and not rep.details["y_planar"]


def test_nonplanar_lemma_is_vacuous_for_planar_sources():
    rep = check_nonplanar_lemma(complete_truncation(catalog.complete(4)))
    assert rep.holds and rep.details["vacuous"]


@pytest.mark.parametrize("name", ["K4", "prism", "C4xK2", "C5xK2"])
def test_planarity_criterion_on_small_cluster_sources(name):
    X = planar_source(name)
    for s in range(40):
        rep = check_cohesive_planarity_theorem(random_cohesive_truncation(X, 0.5, s))
        assert rep.holds


def test_planarity_criterion_only_if_direction():
    # a non-outerplanar constituent always makes Y non-planar in this sweep
    for i in range(200):
        name = PLANAR_SOURCES[i % len(PLANAR_SOURCES)]
        rep = check_cohesive_planarity_theorem(random_cohesive_truncation(planar_source(name), 0.5, i))
        if not rep.details["constituents_outerplanar"]:
            assert not rep.details["y_planar"]


def _octahedron_crossing_paths():
    X = catalog.octahedron()
    t = spanning_path_truncation(X)
    assert t.clusters[0] == (0, 2, 4, 6)
    return with_constituent(t, 0, [(0, 4), (4, 2), (2, 6)])


def test_octahedron_with_path_constituents_can_be_nonplanar(monkeypatch):
    """Frozen finding: every constituent is a path, yet Y is not planar."""
    t = _octahedron_crossing_paths()
    assert t.is_cohesive()
    assert all(is_outerplanar(c.as_graph()) for c in t.constituents)
    assert not is_planar(t.graph)
    monkeypatch.setenv(CAP_ENV, "2")
    w = kuratowski_subdivision(t.graph)
    assert w is not None and is_subdivision(t.graph, w)
    rep = check_cohesive_planarity_theorem(t)
    assert rep.holds is False and rep.counterexample["kuratowski"]["pattern"] == w.pattern


def test_octahedron_spanning_paths_in_label_order_are_planar():
    t = spanning_path_truncation(catalog.octahedron())
    assert is_planar(t.graph) and check_cohesive_planarity_theorem(t).holds


def test_planarity_criterion_skips_non_cohesive_and_weak_sources():
    X = catalog.complete(4)
    t = with_constituent(complete_truncation(X), 0, [])
    assert check_cohesive_planarity_theorem(t).holds is None
    assert check_cohesive_planarity_theorem(complete_truncation(catalog.path(4))).holds is None
