"""Edge and vertex colourings of truncations."""

from __future__ import annotations

import enum
from itertools import combinations

from ._search import Cancel
from .exact_coloring import (
    EdgeColoring,
    chromatic_index_exact,
    chromatic_number_exact,
    edge_coloring_with,
    is_proper_edge_coloring,
)
from .graph import Multigraph, is_perfect_matching
from .report import VerificationReport
from .truncation import Truncation, complete_truncation, spanning_path_truncation, truncation_with_extra_edges


class EdgeClass(enum.Enum):
    CLASS_I = "I"
    CLASS_II = "II"


def near_one_factorization(n: int) -> list[list[tuple[int, int]]]:
    """Round-robin: matching i is ``{(i - j, i + j)}`` and misses exactly vertex i."""
    if n % 2 == 0 or n < 3:
        raise ValueError("n must be odd and at least 3")
    out = []
    for i in range(n):
        out.append([tuple(sorted(((i - j) % n, (i + j) % n))) for j in range(1, (n - 1) // 2 + 1)])
    return out


def one_factorization_via_apex(n: int) -> tuple[list[tuple[int, int]], list[list[tuple[int, int]]], list[tuple[int, int]]]:
    """K_n (n even) as one perfect matching plus n matchings of size (n-2)/2.

    Returns ``(perfect, small, missed)`` where ``small[i]`` misses exactly the
    two vertices ``missed[i] = (i, p_i)``.
    """
    if n % 2 or n < 2:
        raise ValueError("n must be even and at least 2")
    if n == 2:
        return [(0, 1)], [[], []], [(0, 1), (1, 0)]
    apex = n
    near = near_one_factorization(n + 1)
    perfect = near[apex]
    small, missed = [], []
    for i in range(n):
        p = (2 * i - n) % (n + 1)  # partner of the apex in matching i
        small.append([e for e in near[i] if apex not in e])
        missed.append((i, p))
    return perfect, small, missed


def one_factorization(n: int) -> list[list[tuple[int, int]]]:
    """n - 1 perfect matchings of K_n, n even."""
    if n % 2 or n < 2:
        raise ValueError("n must be even")
    if n == 2:
        return [[(0, 1)]]
    near = near_one_factorization(n - 1)
    return [m + [(i, n - 1)] for i, m in enumerate(near)]


def classify(G: Multigraph, cancel: Cancel = None) -> EdgeClass:
    k, _ = chromatic_index_exact(G, cancel)
    return EdgeClass.CLASS_I if k == G.max_valency else EdgeClass.CLASS_II


def class1_truncation_coloring(X: Multigraph, cancel: Cancel = None) -> EdgeColoring:
    """A d-edge-colouring of ``complete_truncation(X)``, d the maximum valency of X.

    Needs d even, or X class I.
    """
    if X.has_loops():
        raise ValueError("source has a loop")
    t = complete_truncation(X)
    d = X.max_valency
    colors = [-1] * t.graph.size
    lm = t.matching

    def paint(v: int, local_edges, color: int) -> None:
        cl = t.clusters[v]
        for a, b in local_edges:
            colors[t.edge_lookup[(cl[min(a, b)], cl[max(a, b)])]] = color

    if d % 2 == 0:
        for e in t.matching_edge_ids:
            colors[e] = d - 1
        for v, cl in enumerate(t.clusters):
            s = len(cl)
            if s < 2:
                continue
            classes = one_factorization(s) if s % 2 == 0 else near_one_factorization(s)
            for c, m in enumerate(classes):
                paint(v, m, c)
    else:
        xcol = edge_coloring_with(X, d, cancel)
        if xcol is None:
            raise ValueError("maximum valency is odd and the source is class II")
        for e, c in enumerate(xcol.colors):
            colors[t.matching_edge_ids[e]] = c
        for v, cl in enumerate(t.clusters):
            s = len(cl)
            pendant = [xcol.colors[lm.edge_of[y]] for y in cl]
            if s < 2:
                continue
            if s % 2:
                for j, m in enumerate(near_one_factorization(s)):
                    paint(v, m, pendant[j])
            else:
                perfect, small, _ = one_factorization_via_apex(s)
                for i, m in enumerate(small):
                    paint(v, m, pendant[i])
                absent = min(set(range(d)) - set(pendant))
                paint(v, perfect, absent)
    col = EdgeColoring(tuple(colors), d)
    assert is_proper_edge_coloring(t.graph, col)
    return col


def one_factorization_of_truncation(X: Multigraph, cancel: Cancel = None) -> list[tuple[int, ...]]:
    """The colour classes of :func:`class1_truncation_coloring`, each a perfect matching."""
    if not X.is_regular():
        raise ValueError("source is not regular")
    col = class1_truncation_coloring(X, cancel)
    Y = complete_truncation(X).graph
    classes = col.classes()
    for c in classes:
        if not is_perfect_matching(Y, c):
            raise AssertionError("colour class is not a perfect matching")
    return classes


# --- spectra ---------------------------------------------------------------


def _missing_edges(t: Truncation):
    """Absent constituent pairs: clusters in source order, pairs lexicographically."""
    for v, con in enumerate(t.constituents):
        have = set(con.edges)
        for p in combinations(sorted(con.vertices), 2):
            if p not in have:
                yield p


def _grow_until(X: Multigraph, k: int, measure, what: str) -> Truncation:
    t = spanning_path_truncation(X)
    value = measure(t.graph)
    while value < k:
        nxt = next(_missing_edges(t), None)
        if nxt is None:
            break
        t = truncation_with_extra_edges(t, [nxt])
        new = measure(t.graph)
        if new - value not in (0, 1):
            raise AssertionError(f"{what} jumped from {value} to {new} after adding one edge")
        value = new
    if value != k:
        raise ValueError(f"no truncation on this path has {what} {k} (reached {value})")
    return t


def chromatic_index_spectrum(X: Multigraph, k: int, cancel: Cancel = None) -> Truncation:
    """Cohesive truncation with chromatic index exactly k, for 3 <= k <= chi'(complete truncation)."""
    d = X.max_valency
    if d <= 2:
        raise ValueError("maximum valency must exceed 2")
    top, _ = chromatic_index_exact(complete_truncation(X).graph, cancel)
    if not 3 <= k <= top:
        raise ValueError(f"k must lie in [3, {top}]")
    return _grow_until(X, k, lambda G: chromatic_index_exact(G, cancel)[0], "chromatic index")


def chromatic_number_spectrum(X: Multigraph, k: int, cancel: Cancel = None) -> Truncation:
    """Cohesive truncation with chromatic number exactly k (k = 2 when d = 2, else 3 <= k <= d)."""
    d = X.max_valency
    if d < 2:
        raise ValueError("maximum valency must be at least 2")
    if d == 2:
        if k != 2:
            raise ValueError("with maximum valency 2 the only value is 2")
        return spanning_path_truncation(X)
    if not 3 <= k <= d:
        raise ValueError(f"k must lie in [3, {d}]")
    return _grow_until(X, k, lambda G: chromatic_number_exact(G, cancel), "chromatic number")


def check_chi_of_complete_truncation(X: Multigraph, cancel: Cancel = None) -> VerificationReport:
    """chi(complete truncation) equals the maximum valency d of X, for d > 1."""
    d = X.max_valency
    if d <= 1 or X.has_loops():
        return VerificationReport("chromatic_number", None, {"d": d}, note="needs maximum valency above 1 and no loops")
    chi = chromatic_number_exact(complete_truncation(X).graph, cancel)
    return VerificationReport("chromatic_number", chi == d, {"d": d, "chi": chi})


def check_class1_coloring(X: Multigraph, cancel: Cancel = None) -> VerificationReport:
    """The constructed colouring is proper with exactly d colours."""
    d = X.max_valency
    if d % 2 and classify(X, cancel) is EdgeClass.CLASS_II:
        return VerificationReport("class1_coloring", None, {"d": d}, note="odd maximum valency and source is class II")
    Y = complete_truncation(X).graph
    col = class1_truncation_coloring(X, cancel)
    holds = is_proper_edge_coloring(Y, col) and len(set(col.colors)) == d == Y.max_valency
    return VerificationReport("class1_coloring", holds, {"d": d, "colors_used": len(set(col.colors))})
