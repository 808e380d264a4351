# For a singular weight the surviving vertices are indexed by the orbit of
# lambda, and each one carries the sum of the Weyl summands that share its
# weight.  The degenerate polytope is also the image of a regular one.
import random

from gtbrion.brion import (
    all_vertex_rays,
    grouped_contribution,
    sample_t_point,
    sample_x_point,
    verify_degbri,
    vertex_contribution,
)
from gtbrion.polytope import enumerate_vertices, orbit

lam, lam_prime = (2, 2, 0), (3, 2, 0)
x = sample_x_point(3, random.Random(3), all_vertex_rays(lam))
print("orbit:", orbit(lam))
for v in enumerate_vertices(lam):
    value = vertex_contribution(v, x)
    if value:
        print(v.mu, value, value == grouped_contribution(v.mu, lam, x))
    else:
        print(v.mu, 0)

rays = set(all_vertex_rays(lam)) | set(all_vertex_rays(lam_prime))
t = sample_t_point(6, random.Random(4), rays)
print("degeneration identity holds:", verify_degbri(lam, lam_prime, t))
