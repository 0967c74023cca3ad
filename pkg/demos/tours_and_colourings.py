"""Hamilton cycles, decompositions and colourings of complete truncations."""

from trunkit import catalog
from trunkit.coloring import chromatic_index_spectrum, class1_truncation_coloring
from trunkit.exact_coloring import chromatic_index_exact, chromatic_number_exact
from trunkit.tours import hamilton_cycle
from trunkit.traversal import (
    hamilton_cycle_of_complete_truncation,
    hamilton_decompose_truncation,
    is_hamilton_decomposition,
    spanning_eulerian_subgraph,
    walecki_cycle_decomposition,
)
from trunkit.truncation import complete_truncation

for name in ("K4", "Q3", "K2,3", "petersen"):
    X = catalog.get(name)
    S = spanning_eulerian_subgraph(X)
    w = hamilton_cycle_of_complete_truncation(X)
    print(f"{name}: spanning eulerian subgraph={S is not None}, built Hamilton cycle={w is not None}")

Y = complete_truncation(catalog.petersen()).graph
print("truncated Petersen, exhaustive Hamilton search:", hamilton_cycle(Y))

K5 = catalog.complete(5)
out = hamilton_decompose_truncation(K5, walecki_cycle_decomposition(5))
print(f"K5 truncation splits into {len(out.cycles)} Hamilton cycles:",
      is_hamilton_decomposition(complete_truncation(K5).graph, out))

col = class1_truncation_coloring(catalog.hypercube(3))
print("cube truncation coloured with", col.num_colors, "colours")
print("truncated Petersen chromatic index:", chromatic_index_exact(Y)[0])

for k in (3, 4):
    t = chromatic_index_spectrum(K5, k)
    print(f"K5, target index {k}: {t.graph.size} edges, index {chromatic_index_exact(t.graph)[0]},"
          f" chromatic number {chromatic_number_exact(t.graph)}")
