# Each vertex contributes the specialized integer-point transform of its
# tangent cone.  Simplicial vertices reproduce the Weyl summands one by one;
# every other vertex contributes exactly zero.
import random

from gtbrion.brion import all_vertex_rays, sample_x_point, vertex_contribution, weyl_summand
from gtbrion.polytope import enumerate_vertices

lam = (3, 1, 0)
x = sample_x_point(3, random.Random(7), all_vertex_rays(lam))
for v in enumerate_vertices(lam):
    value = vertex_contribution(v, x)
    note = f"weyl summand {weyl_summand(v.permutation, lam, x)}" if v.simplicial else "non-simplicial"
    print(v.pattern, value, "|", note)
