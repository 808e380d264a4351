"""Exit criteria, one test each.  Every comparison is exact rational equality.

Run ``pytest tests/test_acceptance.py -v`` (the PASS/FAIL lines appear in
the terminal summary) or ``python3 tests/test_acceptance.py``.
"""
import random
import time
from fractions import Fraction as Q
from math import factorial

from gtbrion.algebra import Permutation
from gtbrion.brion import (
    all_vertex_rays,
    brion_character,
    component_contribution,
    grouped_contribution,
    sample_perturbation,
    sample_t_point,
    sample_x_point,
    verify_degbri,
    vertex_contribution,
    weyl_character,
    weyl_summand,
)
from gtbrion.cones import box_lattice_points, sigma_terms, tangent_cone, truncated_expansion, vertex_components
from gtbrion.patterns import enumerate_patterns, positions, schur_eval
from gtbrion.polytope import OrdinarySubgraph, enumerate_vertices, has_cycle, is_ordinary, orbit

CYCLIC_VERTEX = ((5, 4, 2, 0), (4, 4, 0), (4, 0), (4,))
SEED = 2024

RESULTS: list[str] = []


def record(number, title, ok, detail=""):
    line = f"{'PASS' if ok else 'FAIL'}  criterion {number}: {title}" + (f"  ({detail})" if detail else "")
    RESULTS.append(line)
    print(line)
    return ok


def x_points(lam, k, seed):
    rng = random.Random(seed)
    rays = all_vertex_rays(lam)
    return [sample_x_point(len(lam), rng, rays) for _ in range(k)]


def test_criterion_1_oracle_equivalence():
    lams = [(1, 0), (2, 0), (1, 1), (2, 1, 0), (2, 2, 0), (5, 4, 2, 0), (3, 2, 1, 0), (3, 1, 1, 0)]
    start = time.perf_counter()
    bad = []
    for lam in lams:
        for x in x_points(lam, 3, SEED):
            b, w, s = brion_character(lam, x), weyl_character(lam, x), schur_eval(lam, x)
            if not b == w == s:
                bad.append((lam, x, b, w, s))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 60
    record(1, "Brion = Weyl = Schur on 8 weights x 3 points", ok, f"{elapsed:.1f}s")
    assert not bad
    assert elapsed < 60


def test_criterion_2_simplicial_count():
    rng = random.Random(SEED)
    bad = []
    for k in range(10):
        n = (2, 3, 4)[k % 3]
        lam = tuple(sorted(rng.sample(range(-4, 9), n), reverse=True))
        simplicial = [v for v in enumerate_vertices(lam) if v.simplicial]
        perms = [v.permutation for v in simplicial]
        if len(simplicial) != factorial(n) or set(perms) != set(Permutation.all(n)):
            bad.append(lam)
    record(2, "n! simplicial vertices, v -> w_v onto S_n, 10 random regular weights", not bad)
    assert not bad


def test_criterion_3_simplicial_contributions():
    lam = (5, 4, 2, 0)
    xs = x_points(lam, 3, SEED + 3)
    bad = []
    cyclic_seen = False
    for v in enumerate_vertices(lam):
        for x in xs:
            value = vertex_contribution(v, x)
            expected = weyl_summand(v.permutation, lam, x) if v.simplicial else 0
            if value != expected:
                bad.append(v.pattern)
        cyclic_seen |= v.pattern == CYCLIC_VERTEX
    ok = not bad and cyclic_seen
    record(3, "simplicial vertex = Weyl summand, others 0, for (5,4,2,0)", ok)
    assert cyclic_seen and not bad


def test_criterion_4_cyclic_components():
    bad = []
    counts = {"cyclic": 0, "acyclic": 0}
    for lam in [(5, 4, 2, 0), (3, 2, 1, 0)]:
        n = len(lam)
        xs = x_points(lam, 3, SEED + 4)
        comps = set()
        for v in enumerate_vertices(lam):
            for x in xs:
                product = Q(1)
                for nodes, pinned in vertex_components(v):
                    product *= component_contribution((nodes, pinned), x, n=n)
                apex = Q(1)
                for xi, e in zip(x, v.mu):
                    apex *= xi**e
                if apex * product != vertex_contribution(v, x):
                    bad.append(("product", v.pattern))
            comps.update(nodes for nodes, _ in vertex_components(v))
        for nodes in comps:
            if not is_ordinary(nodes):
                bad.append(("not ordinary", sorted(nodes)))
                continue
            delta = OrdinarySubgraph.from_nodes(nodes)
            cyclic = has_cycle(nodes)
            counts["cyclic" if cyclic else "acyclic"] += 1
            for x in xs:
                value = component_contribution(delta, x, n=n)
                if (value == 0) != cyclic:
                    bad.append(("component", sorted(nodes)))
    ok = not bad and counts["cyclic"] > 0
    record(4, "cyclic components vanish, acyclic do not, product over components", ok,
           f"{counts['cyclic']} cyclic, {counts['acyclic']} acyclic")
    assert counts["cyclic"] > 0
    assert not bad


def test_criterion_5_singular_weights():
    bad = []
    for lam in [(1, 1), (2, 2, 0), (3, 1, 1, 0), (2, 2, 1, 0)]:
        xs = x_points(lam, 3, SEED + 5)
        nonzero = {}
        for v in enumerate_vertices(lam):
            values = [vertex_contribution(v, x) for x in xs]
            if any(values):
                nonzero.setdefault(v.mu, []).append(values)
        if sorted(nonzero) != sorted(orbit(lam)) or any(len(vals) != 1 for vals in nonzero.values()):
            bad.append((lam, "bijection"))
            continue
        for mu, (values,) in nonzero.items():
            if values != [grouped_contribution(mu, lam, x) for x in xs]:
                bad.append((lam, mu))
    record(5, "nonzero vertices of singular weights biject with the orbit", not bad)
    assert not bad


def test_criterion_6_degeneration_identity():
    bad = []
    rng = random.Random(SEED + 6)
    for lam, lam_prime in [((1, 1), (1, 0)), ((2, 2, 0), (3, 2, 0)), ((2, 2, 1, 0), (3, 2, 1, 0))]:
        rays = set(all_vertex_rays(lam)) | set(all_vertex_rays(lam_prime))
        for _ in range(2):
            t = sample_t_point(len(positions(len(lam))), rng, rays)
            if not verify_degbri(lam, lam_prime, t):
                bad.append((lam, lam_prime, t))
    record(6, "degenerate Brion identity for 3 weight pairs x 2 t-points", not bad)
    assert not bad


def test_criterion_7_counting():
    counts = [len(enumerate_patterns(lam)) for lam in [(1, 0), (2, 1, 0), (3, 2, 1, 0)]]
    value = schur_eval((3, 2, 1, 0), (1, 1, 1, 1))
    ok = counts == [2, 8, 64] and value == 64
    record(7, "pattern counts 2, 8, 64 and s_(3,2,1,0)(1,1,1,1) = 64", ok, f"{counts}, {value}")
    assert counts == [2, 8, 64]
    assert value == 64


def test_criterion_8_series_check():
    bound = 4
    bad = []
    cones = 0
    for lam in [(1, 0), (2, 0), (1, 1), (2, 1, 0), (2, 2, 0), (3, 1, 0), (3, 2, 0), (2, 1, 1)]:
        for v in enumerate_vertices(lam):
            c = tangent_cone(v)
            cones += 1
            series = truncated_expansion(sigma_terms(c), c.apex, bound)
            if max(series.values(), default=1) != 1 or set(series) != box_lattice_points(c, bound):
                bad.append(v.pattern)
    record(8, "sigma series agrees with box enumeration (L1 <= 4)", not bad, f"{cones} cones")
    assert not bad


def test_criterion_9_perturbation_invariance():
    bad = []
    rng = random.Random(SEED + 9)
    for lam in [(2, 1, 0), (2, 2, 0)]:
        rays = all_vertex_rays(lam)
        size = len(positions(len(lam)))
        c1 = sample_perturbation(rays, size, rng)
        c2 = sample_perturbation(rays, size, rng)
        while c2 == c1:
            c2 = sample_perturbation(rays, size, rng)
        for x in x_points(lam, 3, SEED + 9):
            for v in enumerate_vertices(lam):
                if vertex_contribution(v, x, c1) != vertex_contribution(v, x, c2):
                    bad.append((lam, v.pattern))
    record(9, "vertex contributions independent of the perturbation vector", not bad)
    assert not bad


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
