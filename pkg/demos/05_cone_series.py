# The rational function of a vertex cone, written as a sum over half-open
# simplicial pieces, expands to exactly the lattice points of the cone.
from gtbrion.cones import box_lattice_points, sigma_terms, tangent_cone, truncated_expansion
from gtbrion.polytope import make_vertex

v = make_vertex(((5, 4, 2, 0), (4, 4, 0), (4, 0), (4,)))
cone = tangent_cone(v)
print("rays:", len(cone.rays), "dimension:", cone.dim)
terms = sigma_terms(cone)
for term in terms:
    print("numerator points:", len(term.points), "denominator rays:", term.rays)

series = truncated_expansion(terms, cone.apex, 3)
box = box_lattice_points(cone, 3)
print("points with |y| <= 3:", len(box), "series agrees:", set(series) == box and max(series.values()) == 1)
