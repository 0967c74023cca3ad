import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tests.strategies import multigraphs, no_isolated
from trunkit import catalog
from trunkit.canon import is_isomorphic
from trunkit.graph import (
    Multigraph,
    Walk,
    components,
    is_connected,
    is_hamilton_cycle,
    is_perfect_matching,
    is_walk_in,
)
from trunkit.tours import euler_tour, hamilton_cycle, iter_hamilton_cycles
from trunkit.truncation import (
    Constituent,
    NoConnectingPath,
    assemble,
    complete_truncation,
    constituent_components_refine_clusters,
    excise,
    expand_walk,
    matching_constituent_truncation,
    random_cohesive_truncation,
    random_truncation,
    spanning_path_truncation,
    with_constituent,
)


def test_excise_triangle():
    lm = excise(catalog.complete(3))
    assert len(lm.ends) == 3 and lm.order == 6
    assert [len(c) for c in lm.clusters] == [2, 2, 2]
    assert all(lm.labels[a] < lm.labels[b] for a, b in lm.ends)


def test_excise_loop_labels_both_ends():
    lm = excise(Multigraph(1, ((0, 0),)))
    assert lm.ends == ((0, 1),) and lm.labels == (0, 0)
    assert lm.clusters == ((0, 1),)


def test_excise_star_cluster_sizes():
    assert sorted(len(c) for c in excise(catalog.star(3)).clusters) == [1, 1, 1, 3]


def test_excise_rejects_isolated_vertex():
    with pytest.raises(ValueError):
        excise(Multigraph(3, ((0, 1),)))


def _with_k2_constituents(X):
    lm = excise(X)
    return assemble(lm, {v: Constituent(c, ((c[0], c[1]),)) for v, c in enumerate(lm.clusters)})


def test_assemble_examples():
    assert is_isomorphic(_with_k2_constituents(catalog.complete(3)).graph, catalog.cycle(6))
    assert is_isomorphic(_with_k2_constituents(catalog.complete_multigraph(2, 2)).graph, catalog.cycle(4))
    X = catalog.petersen()
    lm = excise(X)
    t = assemble(lm, {v: Constituent(c) for v, c in enumerate(lm.clusters)})
    assert t.graph.size == X.size and is_perfect_matching(t.graph, range(X.size))


def test_assemble_rejects_bad_constituents():
    lm = excise(catalog.complete(3))
    good = {v: Constituent(c) for v, c in enumerate(lm.clusters)}
    with pytest.raises(ValueError):
        assemble(lm, {**good, 0: Constituent((0, 1))})  # wrong vertex set
    with pytest.raises(ValueError):
        c = lm.clusters[0]
        assemble(lm, {**good, 0: Constituent(c, ((c[0], c[1]), (c[0], c[1])))})  # parallel edge
    with pytest.raises(ValueError):
        assemble(lm, {v: good[v] for v in (0, 1)})  # missing vertex


def test_complete_truncation_examples():
    assert is_isomorphic(complete_truncation(catalog.complete(3)).graph, catalog.cycle(6))
    for n in range(3, 9):
        assert is_isomorphic(complete_truncation(catalog.cycle(n)).graph, catalog.cycle(2 * n))
    Y = complete_truncation(catalog.complete(4)).graph
    assert (Y.order, Y.size, Y.is_regular(), Y.max_valency) == (12, 18, True, 3)
    assert is_hamilton_cycle(Y, hamilton_cycle(Y))


def test_complete_truncation_rejects_loops():
    with pytest.raises(ValueError):
        complete_truncation(Multigraph(2, ((0, 0), (0, 1))))


def test_spanning_path_examples():
    assert is_isomorphic(spanning_path_truncation(catalog.complete(3)).graph, catalog.cycle(6))
    t = spanning_path_truncation(catalog.star(3))
    Y = t.graph
    assert Y.size == Y.order - 1 and is_connected(Y)
    centre = max(t.constituents, key=lambda c: len(c.vertices))
    assert len(centre.edges) == 2
    t = spanning_path_truncation(catalog.complete(4))
    assert t.is_cohesive() and t.graph.max_valency == 3


def test_matching_truncation_examples():
    assert is_isomorphic(matching_constituent_truncation(catalog.cycle(5)).graph, catalog.cycle(10))
    Y = matching_constituent_truncation(catalog.complete(5)).graph
    assert Y.order == 20 and set(Y.valencies) == {2}
    assert all(len(b) >= 3 for b in components(Y))
    with pytest.raises(ValueError):
        matching_constituent_truncation(catalog.complete(4))


def test_random_truncation_extremes_and_determinism():
    X = catalog.petersen()
    assert random_truncation(X, 0.0, 3).graph.size == X.size
    assert random_truncation(X, 1.0, 3).graph == complete_truncation(X).graph
    assert random_truncation(X, 0.5, 7) == random_truncation(X, 0.5, 7)
    with pytest.raises(ValueError):
        random_truncation(X, 1.5, 0)


@pytest.mark.parametrize("name", list(catalog.CATALOG))
def test_builds_satisfy_truncation_invariants(name):
    X = catalog.get(name)
    builds = [complete_truncation(X), spanning_path_truncation(X)]
    builds += [random_truncation(X, 0.5, s) for s in range(50)]
    for t in builds:
        Y = t.graph
        assert Y.order == 2 * X.size
        rest = t.without_matching()
        assert rest.is_simple()
        assert constituent_components_refine_clusters(t)
        for v, con in enumerate(t.constituents):
            for y in con.vertices:
                assert Y.valency(y) == 1 + con.valency(y)
                assert t.cluster_of[y] == v
        assert sorted(t.matching_edge_ids + tuple(e for v in range(X.order) for e in t.constituent_edge_ids(v))) == list(
            range(Y.size)
        )


@pytest.mark.parametrize("name", ["K4", "K3,3", "Q3", "petersen", "C5", "2K2", "3K2"])
def test_complete_truncation_of_regular_is_regular(name):
    X = catalog.get(name)
    Y = complete_truncation(X).graph
    assert Y.is_regular() and Y.max_valency == X.max_valency


def test_expand_triangle_gives_hexagon():
    K3 = catalog.complete(3)
    t = complete_truncation(K3)
    w = expand_walk(t, hamilton_cycle(K3))
    assert is_hamilton_cycle(t.graph, w)


def _paths_along(X, w):
    """Cohesive truncation whose constituent paths run from entry to exit of the cycle w."""
    lm = excise(X)
    cons = {}
    k = len(w.edges)
    for i in range(k):
        v = w.vertices[i]
        a, b = lm.end_at(w.edges[i - 1], v), lm.end_at(w.edges[i], v)
        order = [a] + [y for y in lm.clusters[v] if y not in (a, b)] + [b]
        cons[v] = Constituent(lm.clusters[v], tuple(zip(order, order[1:])))
    return assemble(lm, cons)


@pytest.mark.parametrize("name", ["K4", "Q3", "prism", "octahedron", "K5"])
def test_expanding_a_hamilton_cycle_along_spanning_paths(name):
    X = catalog.get(name)
    w = hamilton_cycle(X)
    t = _paths_along(X, w)
    assert t.is_cohesive()
    y = expand_walk(t, w, "spanning")
    assert is_hamilton_cycle(t.graph, y)


@pytest.mark.parametrize("name", ["K4", "Q3", "prism", "octahedron", "K5"])
def test_spanning_strategy_on_fixed_paths_succeeds_or_reports(name):
    X = catalog.get(name)
    t = spanning_path_truncation(X)
    for w in iter_hamilton_cycles(X):
        try:
            y = expand_walk(t, w, "spanning")
        except NoConnectingPath as exc:
            assert exc.vertex in range(X.order)
        else:
            assert is_hamilton_cycle(t.graph, y)


def test_disconnected_constituent_blocks_expansion():
    X = catalog.complete(4)
    t = complete_truncation(X)
    t = with_constituent(t, 0, [])
    with pytest.raises(NoConnectingPath) as info:
        expand_walk(t, hamilton_cycle(X))
    assert info.value.vertex == 0


def test_unknown_strategy():
    t = complete_truncation(catalog.complete(3))
    with pytest.raises(ValueError):
        expand_walk(t, hamilton_cycle(catalog.complete(3)), "zigzag")


@settings(max_examples=60, deadline=None)
@given(
    multigraphs(max_order=6, max_size=9, connected=True, min_size=1).filter(no_isolated),
    st.integers(0, 1000),
)
def test_expansion_is_a_walk_over_the_image_edges(X, seed):
    t = random_cohesive_truncation(X, 0.4, seed)
    tour = euler_tour(X)
    walks = [tour] if tour is not None else []
    walks.append(Walk(X.edges[0], (0,)))
    for w in walks:
        try:
            y = expand_walk(t, w)
        except NoConnectingPath:
            continue  # visits of one vertex may need crossing paths in a tree constituent
        assert is_walk_in(t.graph, y)
        images = [e for e in y.edges if e in set(t.matching_edge_ids)]
        assert images == [t.matching_edge_ids[e] for e in w.edges]
