# Three ways to the same character value.
#
# A GT pattern contributes the monomial x^mu of its weight, so summing over
# patterns gives the Schur polynomial.  Weyl's formula gives the same value
# as a sum over S_n, and Brion's theorem gives it as a sum over vertices.
import random

from gtbrion.brion import all_vertex_rays, brion_character, sample_x_point, weyl_character
from gtbrion.patterns import enumerate_patterns, schur_eval, schur_polynomial, weyl_dimension

lam = (2, 1, 0)
print("patterns:", len(enumerate_patterns(lam)), "dimension:", weyl_dimension(lam))
print("s_lambda =", schur_polynomial(lam))

# A point where no denominator of the vertex cones vanishes.
x = sample_x_point(len(lam), random.Random(1), all_vertex_rays(lam))
print("x =", [str(v) for v in x])
print("patterns:", schur_eval(lam, x))
print("weyl:    ", weyl_character(lam, x))
print("brion:   ", brion_character(lam, x))
