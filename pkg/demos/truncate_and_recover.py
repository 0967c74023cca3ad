"""Build truncations of a few catalog graphs and contract them back to their sources."""

from trunkit import catalog
from trunkit.canon import is_isomorphic
from trunkit.connectivity import project, spanning_tree_truncation
from trunkit.flow import edge_connectivity
from trunkit.graph import is_connected
from trunkit.sources import coarsened_sources, isolating_perfect_matchings, minimal_sources
from trunkit.truncation import complete_truncation, random_truncation

K4 = catalog.complete(4)
t = complete_truncation(K4)
print(f"complete truncation of K4: order {t.graph.order}, size {t.graph.size}, cubic={t.graph.is_regular()}")

# contracting Y along its isolating matchings gives the source back
for cert in minimal_sources(t.graph):
    print("  recovered a source isomorphic to K4:", is_isomorphic(cert.source, K4))

# a random truncation may fall apart; the projection onto the hat graph predicts when
X = catalog.petersen()
for seed in range(4):
    r = random_truncation(X, 0.6, seed)
    print(
        f"petersen seed {seed}: Y connected={is_connected(r.graph)}"
        f" projection connected={is_connected(project(r))}"
        f" edge connectivity {edge_connectivity(r.graph)} <= {edge_connectivity(X)}"
    )

tree = spanning_tree_truncation(K4)
print(f"tree truncation of K4: {tree.graph.order} vertices, {tree.graph.size} edges")

# the prism has a single source, the 4-cycle has two isolating matchings but one source
for name in ("prism", "C4", "P4xK2"):
    Y = catalog.get(name)
    srcs = minimal_sources(Y)
    print(f"{name}: {len(isolating_perfect_matchings(Y))} isolating matchings, {len(srcs)} source class(es)")
    for c in srcs:
        print(f"  source order {c.source.order}, edges {c.source.edges}, coarsenings {len(coarsened_sources(Y, c))}")
