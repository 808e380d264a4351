import itertools
import random
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gtbrion.cones import (
    box_lattice_points,
    delta_cone,
    evaluate_sigma,
    half_open_triangulate,
    order_cone_rays,
    parallelepiped_points,
    placing_triangulation,
    sigma_terms,
    simplicial_vertex_rays,
    t_monomial,
    tangent_cone,
    truncated_expansion,
)
from gtbrion.linalg import determinant, nullspace, primitive, rank, solve
from gtbrion.patterns import enumerate_patterns, flatten, position_index
from gtbrion.polytope import OrdinarySubgraph, enumerate_vertices, make_vertex

from conftest import CYCLIC_VERTEX, SIMPLICIAL_VERTEX


def brute_force_rays(c):
    """Extreme rays from scratch: every primitive solution of f-1 independent
    tight constraints that lies in the cone."""
    free = sorted(c.free)
    f = len(free)
    rows = []
    for hi, lo in c.inequalities:
        r = [0] * f
        if hi in c.free:
            r[free.index(hi)] += 1
        if lo in c.free:
            r[free.index(lo)] -= 1
        if any(r):
            rows.append(r)
    out = set()
    for combo in itertools.combinations(rows, f - 1) if f else []:
        if rank(list(combo)) != f - 1:
            continue
        (basis,) = nullspace(list(combo), f)
        for sign in (1, -1):
            v = [sign * b for b in primitive(basis)]
            y = [0] * c.ambient
            for k, val in zip(free, v):
                y[k] = val
            if c.contains(y):
                out.add(tuple(y))
    return out


def vec(n, values):
    idx = position_index(n)
    out = [0] * len(idx)
    for node, val in values.items():
        out[idx[node]] = val
    return tuple(out)


@pytest.mark.parametrize("lam", [(1, 0), (2, 1, 0), (2, 2, 0), (3, 1, 0), (1, 1, 0)])
def test_tangent_cone_rays_match_brute_force(lam):
    for v in enumerate_vertices(lam):
        c = tangent_cone(v)
        assert set(c.rays) == brute_force_rays(c)


def test_5420_rays_match_brute_force():
    for v in enumerate_vertices((5, 4, 2, 0)):
        c = tangent_cone(v)
        assert set(c.rays) == brute_force_rays(c)
        assert c.dim == 6
        assert c.is_simplicial() == v.simplicial


def test_fundamental_vertex_rays():
    c = tangent_cone(make_vertex(((1, 0), (1,))))
    assert c.rays == ((0, 0, -1),)
    c = tangent_cone(make_vertex(((1, 0), (0,))))
    assert c.rays == ((0, 0, 1),)


def test_example_vertices():
    c = tangent_cone(make_vertex(SIMPLICIAL_VERTEX))
    assert len(c.rays) == 6 and c.is_simplicial()
    c = tangent_cone(make_vertex(CYCLIC_VERTEX))
    assert len(c.rays) == 7 and c.dim == 6


# Components drawn in T with rows 0..3 of n = 4 and the top node pinned.
DIAMOND_CHAIN = {(0, 3), (1, 2), (2, 1), (2, 2), (3, 1)}
SIX_NODE = {(0, 2), (1, 1), (1, 2), (2, 1), (2, 2), (3, 1)}
FIVE_NODE = {(0, 2), (1, 1), (1, 2), (2, 1), (3, 1)}


def test_component_ray_examples():
    rays = order_cone_rays(DIAMOND_CHAIN, {(0, 3)}, 4)
    assert vec(4, {(1, 2): 1, (2, 1): 1, (2, 2): 1, (3, 1): 1}) in rays
    rays = order_cone_rays(SIX_NODE, {(0, 2)}, 4)
    assert vec(4, {(1, 2): -1, (2, 1): -1, (2, 2): -1, (3, 1): -1}) in rays
    rays = order_cone_rays(FIVE_NODE, {(0, 2)}, 4)
    assert vec(4, {(1, 2): -1, (2, 1): -1, (3, 1): -1}) in rays
    assert vec(4, {(1, 2): -1}) in rays
    assert order_cone_rays({(0, 1), (1, 1)}, {(0, 1)}, 2) == [(0, 0, -1)]


@pytest.mark.parametrize("nodes", [DIAMOND_CHAIN, SIX_NODE, FIVE_NODE,
                                   {(0, 2), (1, 1), (1, 2), (2, 1)},
                                   {(0, 1), (1, 1), (2, 1), (3, 1)}])
def test_component_rays_brute_force(nodes):
    delta = OrdinarySubgraph.from_nodes(nodes)
    c = delta_cone(delta.nodes, {delta.top}, 4)
    assert set(c.rays) == brute_force_rays(c)
    assert c.dim == len(nodes) - 1
    assert c.is_simplicial() == (not delta.has_cycle())
    for r in c.rays:
        assert set(r) <= {-1, 0, 1}


def test_simplicial_ray_indexing():
    v = make_vertex(SIMPLICIAL_VERTEX)
    rays = simplicial_vertex_rays(v)
    assert len(rays) == 6
    assert set(rays.values()) == set(tangent_cone(v).rays)
    idx = position_index(4)
    r = rays[(1, 3)]
    for i in (1, 2, 3):
        assert sum(abs(r[idx[(i, j)]]) for j in range(1, 5 - i)) == 1
    assert all(r[idx[(0, j)]] == 0 for j in range(1, 5))


def test_placing_triangulation_square_pyramid():
    rays = [(1, 0, 1), (0, 1, 1), (-1, 0, 1), (0, -1, 1)]
    simplices = placing_triangulation(rays)
    assert len(simplices) == 2
    shared = set(simplices[0]) & set(simplices[1])
    assert len(shared) == 2


def test_simplicial_cone_is_one_closed_piece():
    c = tangent_cone(make_vertex(SIMPLICIAL_VERTEX))
    (piece,) = half_open_triangulate(c)
    assert not any(piece.excluded)


def _box_parallelepiped(rays, excluded):
    d = len(rays)
    cols = [[rays[k][i] for k in range(d)] for i in range(d)]
    lo = [min(0, sum(min(0, r[i]) for r in rays)) for i in range(d)]
    hi = [max(0, sum(max(0, r[i]) for r in rays)) for i in range(d)]
    out = []
    for p in itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        coeffs = solve(cols, list(p))
        if all((0 < cf <= 1) if ex else (0 <= cf < 1) for cf, ex in zip(coeffs, excluded)):
            out.append(tuple(p))
    return sorted(out)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=3, max_size=3),
       st.lists(st.booleans(), min_size=3, max_size=3))
def test_parallelepiped_points(rays, excluded):
    if determinant(rays) == 0:
        return
    pts = parallelepiped_points(rays, excluded)
    assert len(pts) == abs(determinant(rays))
    assert pts == _box_parallelepiped(rays, excluded)


def test_unimodular_pieces_have_one_point():
    # simplicial vertex cones are unimodular: rays are +-1 on nested chains
    for v in enumerate_vertices((5, 4, 2, 0)):
        if v.simplicial:
            (term,) = sigma_terms(tangent_cone(v))
            assert term.points == (tuple(x for row in v.pattern for x in row),)


def test_fundamental_sigma():
    (term,) = sigma_terms(tangent_cone(make_vertex(((1, 0), (1,)))))
    assert term.points == ((1, 0, 1),) and term.rays == ((0, 0, -1),)
    t = (Q(5), Q(7), Q(2, 3))
    # t_{0,1} t_{1,1} / (1 - t_{1,1}^-1)
    assert evaluate_sigma([term], t) == Q(5) * Q(2, 3) / (1 - Q(3, 2))


@pytest.mark.parametrize("lam", [(1, 0), (2, 0), (1, 1), (2, 1, 0), (2, 2, 0), (3, 1, 0)])
def test_series_matches_box(lam):
    for v in enumerate_vertices(lam):
        c = tangent_cone(v)
        series = truncated_expansion(sigma_terms(c), c.apex, 4)
        assert max(series.values(), default=1) == 1
        assert set(series) == box_lattice_points(c, 4)


def test_half_open_pieces_partition_cyclic_cone():
    c = tangent_cone(make_vertex(CYCLIC_VERTEX))
    pieces = half_open_triangulate(c)
    assert len(pieces) > 1
    series = truncated_expansion(sigma_terms(c), c.apex, 3)
    assert max(series.values()) == 1
    assert set(series) == box_lattice_points(c, 3)


def test_sigma_brion_in_t_space():
    # the transform of the whole polytope is the sum over vertex cones
    rng = random.Random(11)
    for lam in [(1, 0), (2, 1, 0), (2, 2, 0)]:
        t = [Q(rng.randint(2, 40), rng.randint(1, 9)) for _ in range(len(position_index(len(lam))))]
        total = sum(evaluate_sigma(sigma_terms(tangent_cone(v)), t) for v in enumerate_vertices(lam))
        assert total == sum(t_monomial(t, flatten(p)) for p in enumerate_patterns(lam))
