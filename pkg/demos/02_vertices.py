# Vertices of GT_(5,4,2,0) and their equality graphs.
from collections import Counter

from gtbrion.polytope import enumerate_vertices

lam = (5, 4, 2, 0)
vertices = enumerate_vertices(lam)
print(len(vertices), "vertices")

simplicial = [v for v in vertices if v.simplicial]
print(len(simplicial), "simplicial, one per permutation")
for v in simplicial[:4]:
    print("  ", v.pattern, "mu =", v.mu, "w =", v.permutation.images)

# A cycle in some component of Gamma_v makes the vertex non-simplicial.
edges = Counter(len(v.graph.edges) for v in vertices)
print("edge counts:", dict(sorted(edges.items())))
v = next(v for v in vertices if not v.simplicial)
print("non-simplicial example:", v.pattern)
for comp in v.components():
    print("   component", sorted(comp))
