"""Cohesive truncations of planar sources: when path constituents are not enough.

Swapping the order of one path constituent in a truncation of the octahedron
keeps every constituent outerplanar but makes Y non-planar.
"""

from trunkit import catalog
from trunkit.planarity import check_cohesive_planarity_theorem, cut_vertex_witness, is_outerplanar, is_planar
from trunkit.truncation import spanning_path_truncation, with_constituent

X = catalog.octahedron()
t = spanning_path_truncation(X)
print("cluster 0:", t.clusters[0], "path", t.constituents[0].edges)
print("Y planar:", is_planar(t.graph))

u = with_constituent(t, 0, [(0, 4), (4, 2), (2, 6)])
print("reordered path", u.constituents[0].edges)
print("all constituents outerplanar:", all(is_outerplanar(c.as_graph()) for c in u.constituents))
print("Y planar:", is_planar(u.graph))
print(check_cohesive_planarity_theorem(u).to_dict()["status"])

w = cut_vertex_witness()
hub = max(range(w.source.order), key=w.source.valency)
print("bowtie witness: Y planar", is_planar(w.graph), "hub constituent outerplanar",
      is_outerplanar(w.constituents[hub].as_graph()))
