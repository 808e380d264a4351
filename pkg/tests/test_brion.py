import random
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gtbrion.algebra import Exponent, Permutation
from gtbrion.brion import (
    all_vertex_rays,
    apply_F,
    brion_character,
    brion_limit_character,
    brion_t_space,
    component_contribution,
    grouped_contribution,
    sample_perturbation,
    sample_t_point,
    sample_x_point,
    simplicial_closed_form,
    validate_x_point,
    verify_degbri,
    vertex_contribution,
    weyl_character,
    weyl_closed_form,
    weyl_summand,
)
from gtbrion.cones import NonGenericPointError, vertex_components
from gtbrion.patterns import flatten, positions, schur_eval
from gtbrion.polytope import OrdinarySubgraph, enumerate_vertices, make_vertex, orbit

from conftest import CYCLIC_VERTEX, SIMPLICIAL_VERTEX


def test_specialization():
    assert apply_F(flatten(SIMPLICIAL_VERTEX)) == (2, 5, 0, 4)
    assert apply_F(Exponent({"t_{1,1}": 1})) == Exponent({"x_1": -1, "x_2": 1})
    assert apply_F(Exponent({"t_{0,2}": 3})) == Exponent({"x_1": 3})
    assert apply_F((0,) * 6) == (0, 0, 0)


def test_fundamental_vertex_contributions(x23):
    low = make_vertex(((1, 0), (0,)))
    high = make_vertex(((1, 0), (1,)))
    # x1 * sum_k (x2/x1)^k and x2 * sum_k (x1/x2)^k
    assert vertex_contribution(low, x23) == Q(2) / (1 - Q(3, 2)) == -4
    assert vertex_contribution(high, x23) == Q(3) / (1 - Q(2, 3)) == 9
    assert vertex_contribution(low, x23) + vertex_contribution(high, x23) == 5


def test_weyl_summands(x23):
    assert weyl_summand(Permutation.identity(2), (1, 0), x23) == -4
    assert weyl_summand(Permutation([2, 1]), (1, 0), x23) == 9
    x = (Q(2), Q(5), Q(7, 3))
    assert sum(weyl_summand(w, (0, 0, 0), x) for w in Permutation.all(3)) == 1


def test_characters(x23):
    assert brion_character((1, 0), x23) == weyl_character((1, 0), x23) == 5
    assert brion_character((1, 1), x23) == weyl_character((1, 1), x23) == 6
    assert weyl_character((2, 1, 0), (1, 2, 3)) == schur_eval((2, 1, 0), (1, 2, 3))


def test_5420_character():
    x = sample_x_point(4, random.Random(5), all_vertex_rays((5, 4, 2, 0)))
    assert brion_character((5, 4, 2, 0), x) == schur_eval((5, 4, 2, 0), x) == weyl_character((5, 4, 2, 0), x)


def test_non_simplicial_vertex_vanishes():
    rng = random.Random(1)
    v = make_vertex(CYCLIC_VERTEX)
    for _ in range(3):
        x = sample_x_point(4, rng, all_vertex_rays((5, 4, 2, 0)))
        assert vertex_contribution(v, x) == 0


def test_simplicial_vertex_is_weyl_summand():
    v = make_vertex(SIMPLICIAL_VERTEX)
    x = sample_x_point(4, random.Random(2), all_vertex_rays((5, 4, 2, 0)))
    assert vertex_contribution(v, x) == weyl_summand(v.permutation, v.lam, x)
    assert simplicial_closed_form(v) == weyl_closed_form(v.permutation, v.lam)


def test_component_contributions(x23):
    edge = OrdinarySubgraph.from_nodes({(0, 1), (1, 1)})
    # single ray -e_(1,1) specializes to x1/x2
    assert component_contribution(edge, x23, n=2) == 1 / (1 - Q(2, 3))
    cyclic = OrdinarySubgraph.from_nodes({(0, 2), (1, 1), (1, 2), (2, 1), (3, 1)})
    x = sample_x_point(4, random.Random(4), all_vertex_rays((5, 4, 2, 0)))
    assert component_contribution(cyclic, x, n=4) == 0


@pytest.mark.parametrize("lam", [(2, 1, 0), (2, 2, 0), (3, 1, 1, 0)])
def test_component_product(lam):
    x = sample_x_point(len(lam), random.Random(6), all_vertex_rays(lam))
    for v in enumerate_vertices(lam):
        prod = Q(1)
        for comp in vertex_components(v):
            prod *= component_contribution(comp, x, n=len(lam))
        apex = 1
        for xi, e in zip(x, v.mu):
            apex *= xi**e
        assert apex * prod == vertex_contribution(v, x)
        assert vertex_contribution(v, x, method="components") == vertex_contribution(v, x)


def test_grouped_contributions(x23):
    assert grouped_contribution((1, 1), (1, 1), x23) == 6
    x = sample_x_point(3, random.Random(8), all_vertex_rays((2, 2, 0)))
    nonzero = {v.mu: vertex_contribution(v, x) for v in enumerate_vertices((2, 2, 0)) if vertex_contribution(v, x)}
    assert sorted(nonzero) == sorted(orbit((2, 2, 0)))
    for mu, val in nonzero.items():
        assert val == grouped_contribution(mu, (2, 2, 0), x)


def test_regular_group_is_single_summand():
    x = (Q(2), Q(5), Q(11))
    for w in Permutation.all(3):
        assert grouped_contribution(w.act((3, 1, 0)), (3, 1, 0), x) == weyl_summand(w, (3, 1, 0), x)


def test_perturbation_does_not_matter():
    rng = random.Random(9)
    lam = (2, 2, 0)
    rays = all_vertex_rays(lam)
    x = sample_x_point(3, rng, rays)
    c1 = sample_perturbation(rays, 6, rng)
    c2 = sample_perturbation(rays, 6, rng)
    for v in enumerate_vertices(lam):
        assert vertex_contribution(v, x, c1) == vertex_contribution(v, x, c2)


@pytest.mark.parametrize("lam,dim", [((1, 0), 2), ((1, 1), 1), ((2, 1, 0), 8), ((2, 2, 0), 6)])
def test_limit_at_degenerate_point(lam, dim):
    # all-ones kills every denominator; only the joint limit is finite
    assert brion_limit_character(lam, (1,) * len(lam)) == dim


def test_brion_in_t_space():
    rng = random.Random(12)
    lam = (2, 1, 0)
    t = sample_t_point(len(positions(3)), rng, all_vertex_rays(lam))
    lhs, rhs = brion_t_space(lam, t)
    assert lhs == rhs


@pytest.mark.parametrize("lam,lam_prime", [((1, 1), (1, 0)), ((2, 2, 0), (2, 1, 0)), ((2, 2, 0), (3, 2, 0)),
                                           ((2, 1, 0), (2, 1, 0))])
def test_degeneration_identity(lam, lam_prime):
    rng = random.Random(13)
    rays = set(all_vertex_rays(lam)) | set(all_vertex_rays(lam_prime))
    t = sample_t_point(len(positions(len(lam))), rng, rays)
    assert verify_degbri(lam, lam_prime, t)


def test_point_validation():
    with pytest.raises(NonGenericPointError):
        validate_x_point((2, 2))
    with pytest.raises(NonGenericPointError):
        validate_x_point((0, 3))
    assert validate_x_point(("1/2", 3)) == (Q(1, 2), Q(3))


_lams = st.lists(st.integers(-1, 2), min_size=2, max_size=3).map(lambda v: tuple(sorted(v, reverse=True)))


@settings(max_examples=15, deadline=None)
@given(_lams, st.integers(0, 10**6))
def test_three_routes_agree(lam, seed):
    x = sample_x_point(len(lam), random.Random(seed), all_vertex_rays(lam))
    assert brion_character(lam, x) == weyl_character(lam, x) == schur_eval(lam, x)
