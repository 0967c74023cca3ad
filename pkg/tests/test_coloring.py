from itertools import combinations

import pytest
from hypothesis import given, settings

from tests.strategies import chromatic_number_brute, edge_colorable_brute, multigraphs, no_isolated
from trunkit import catalog
from trunkit.coloring import (
    EdgeClass,
    check_chi_of_complete_truncation,
    check_class1_coloring,
    chromatic_index_spectrum,
    chromatic_number_spectrum,
    class1_truncation_coloring,
    classify,
    near_one_factorization,
    one_factorization,
    one_factorization_of_truncation,
    one_factorization_via_apex,
)
from trunkit.exact_coloring import chromatic_index_exact, chromatic_number_exact
from trunkit.graph import Multigraph, is_perfect_matching
from trunkit.truncation import complete_truncation, spanning_path_truncation


def _proper(G, colors):
    for v in range(G.order):
        seen = [colors[e] for e in G.incidence[v]]
        if len(seen) != len(set(seen)):
            return False
    return True


def _is_matching(edges):
    ends = [v for e in edges for v in e]
    return len(ends) == len(set(ends))


def _all_pairs(n):
    return sorted(combinations(range(n), 2))


@pytest.mark.parametrize("n", [3, 5, 7, 9])
def test_near_one_factorization(n):
    ms = near_one_factorization(n)
    assert len(ms) == n
    assert sorted(e for m in ms for e in m) == _all_pairs(n)
    for i, m in enumerate(ms):
        assert len(m) == (n - 1) // 2 and _is_matching(m)
        assert set(range(n)) - {v for e in m for v in e} == {i}


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_apex_factorization(n):
    perfect, small, missed = one_factorization_via_apex(n)
    assert len(perfect) == n // 2 and _is_matching(perfect)
    assert len(small) == n
    assert sorted(perfect + [e for m in small for e in m]) == _all_pairs(n)
    for i, m in enumerate(small):
        assert len(m) == (n - 2) // 2 and _is_matching(m)
        assert missed[i][0] == i
        assert set(range(n)) - {v for e in m for v in e} == set(missed[i])


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_one_factorization(n):
    ms = one_factorization(n)
    assert len(ms) == n - 1
    assert sorted(e for m in ms for e in m) == _all_pairs(n)
    assert all(len(m) == n // 2 and _is_matching(m) for m in ms)


def test_factorization_parity_errors():
    with pytest.raises(ValueError):
        near_one_factorization(4)
    with pytest.raises(ValueError):
        one_factorization_via_apex(5)
    with pytest.raises(ValueError):
        one_factorization(3)


def test_classify_examples():
    assert classify(catalog.complete(4)) is EdgeClass.CLASS_I
    assert classify(catalog.petersen()) is EdgeClass.CLASS_II
    assert classify(catalog.complete(5)) is EdgeClass.CLASS_II


@pytest.mark.parametrize("name, d", [("K5", 4), ("Q3", 3), ("K4", 3), ("C6", 2), ("K6", 5), ("K3,3", 3), ("P4xK2", 3)])
def test_class1_coloring(name, d):
    X = catalog.get(name)
    Y = complete_truncation(X).graph
    col = class1_truncation_coloring(X)
    assert _proper(Y, col.colors)
    assert len(set(col.colors)) == d == Y.max_valency
    assert check_class1_coloring(X).holds


def test_class1_coloring_refuses_class_ii():
    with pytest.raises(ValueError):
        class1_truncation_coloring(catalog.petersen())
    assert check_class1_coloring(catalog.petersen()).holds is None


@pytest.mark.parametrize("name, d", [("K5", 4), ("Q3", 3), ("K4", 3), ("K3,3", 3)])
def test_one_factorization_of_truncation(name, d):
    X = catalog.get(name)
    Y = complete_truncation(X).graph
    classes = one_factorization_of_truncation(X)
    assert len(classes) == d
    assert all(is_perfect_matching(Y, c) for c in classes)
    assert sorted(e for c in classes for e in c) == list(range(Y.size))


def test_one_factorization_of_truncation_errors():
    with pytest.raises(ValueError):
        one_factorization_of_truncation(catalog.petersen())
    with pytest.raises(ValueError):
        one_factorization_of_truncation(catalog.path(4))


@settings(max_examples=40, deadline=None)
@given(multigraphs(max_order=5, max_size=8, min_size=1).filter(no_isolated))
def test_class1_coloring_property(X):
    d = X.max_valency
    if X.has_loops() or (d % 2 and not edge_colorable_brute(X, d)):
        return
    Y = complete_truncation(X).graph
    col = class1_truncation_coloring(X)
    assert _proper(Y, col.colors) and set(col.colors) <= set(range(d))


@pytest.mark.parametrize("name", list(catalog.CATALOG))
def test_chi_of_complete_truncation(name):
    X = catalog.get(name)
    rep = check_chi_of_complete_truncation(X)
    if X.max_valency <= 1:
        assert rep.holds is None
        return
    assert rep.holds and rep.details["chi"] == X.max_valency
    Y = complete_truncation(X).graph
    if Y.order <= 12:
        assert chromatic_number_brute(Y) == X.max_valency


def test_chi_examples():
    assert chromatic_number_exact(complete_truncation(catalog.complete(4)).graph) == 3
    assert chromatic_number_exact(complete_truncation(catalog.cycle(6)).graph) == 2
    assert chromatic_number_exact(complete_truncation(catalog.complete(5)).graph) == 4


def test_spectrum_examples():
    K4 = catalog.complete(4)
    t = chromatic_index_spectrum(K4, 3)
    assert t.graph == spanning_path_truncation(K4).graph
    assert chromatic_index_exact(t.graph)[0] == 3
    with pytest.raises(ValueError):
        chromatic_index_spectrum(K4, 2)
    t = chromatic_number_spectrum(K4, 3)
    assert chromatic_number_exact(t.graph) == 3 and t.is_cohesive()
    C5 = catalog.cycle(5)
    assert chromatic_number_exact(chromatic_number_spectrum(C5, 2).graph) == 2
    with pytest.raises(ValueError):
        chromatic_number_spectrum(C5, 3)
    with pytest.raises(ValueError):
        chromatic_number_spectrum(K4, 4)


def test_spanning_path_truncation_of_k4_is_bipartite():
    # the paths alone leave Y bipartite, so the number spectrum has to add an edge to reach 3
    Y = spanning_path_truncation(catalog.complete(4)).graph
    assert chromatic_number_exact(Y) == chromatic_number_brute(Y) == 2
    assert chromatic_index_exact(Y)[0] == 3


@pytest.mark.parametrize("k", [3, 4])
def test_k5_spectra(k):
    K5 = catalog.complete(5)
    t = chromatic_index_spectrum(K5, k)
    assert t.is_cohesive() and chromatic_index_exact(t.graph)[0] == k
    t = chromatic_number_spectrum(K5, k)
    assert t.is_cohesive() and chromatic_number_exact(t.graph) == k


def test_k5_spectrum_edge_counts():
    K5 = catalog.complete(5)
    sizes = {k: chromatic_index_spectrum(K5, k).graph.size for k in (3, 4)}
    assert sizes == {3: 25, 4: 26}
    sizes = {k: chromatic_number_spectrum(K5, k).graph.size for k in (3, 4)}
    assert sizes == {3: 26, 4: 28}


def test_petersen_truncation_is_class_ii():
    Y = complete_truncation(catalog.petersen()).graph
    assert (Y.order, Y.max_valency) == (30, 3)
    assert chromatic_index_exact(Y)[0] == 4
    assert classify(Y) is EdgeClass.CLASS_II


def test_loops_rejected():
    with pytest.raises(ValueError):
        class1_truncation_coloring(Multigraph(2, ((0, 0), (0, 1))))
