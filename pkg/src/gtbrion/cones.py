"""Tangent cones of GT vertices and their integer-point transforms.

Coordinates are the flattened pattern positions (row-major, row 0 first).
Every cone here is an "order cone": coordinates outside a free set are
zero and each remaining constraint has the form ``y[hi] >= y[lo]``.
Its extreme rays are +-1 indicator vectors of connected node sets.

``sigma_terms`` turns a cone into a disjoint sum of half-open simplicial
cones, each written as (parallelepiped lattice points) / prod(1 - t^ray).
"""
from __future__ import annotations

import itertools
import logging
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Iterable, Sequence

from .linalg import determinant, inverse, nullspace, rank, solve
from .patterns import flatten, position_index, positions
from .polytope import (
    Node,
    OrdinarySubgraph,
    PolytopeVertex,
    has_property_a,
    induced_edges,
    is_connected,
    orientation,
)

log = logging.getLogger(__name__)

TRIANGULATION_SEED = 20240229
_MAX_MINOR_SEARCH = 2000


class NonGenericPointError(ValueError):
    """An evaluation point lies on a denominator's zero locus."""


@dataclass(frozen=True)
class Cone:
    n: int
    apex: tuple
    rays: tuple
    inequalities: tuple  # (hi, lo) coordinate indices with y[hi] >= y[lo]
    free: frozenset  # coordinates allowed to be nonzero relative to the apex

    @property
    def ambient(self) -> int:
        return len(self.apex)

    @property
    def dim(self) -> int:
        return rank(self.rays) if self.rays else 0

    def is_simplicial(self) -> bool:
        return len(self.rays) == self.dim

    def contains(self, y: Sequence) -> bool:
        """Membership of an apex-relative vector, tested against the inequalities."""
        if any(y[k] != 0 for k in range(len(y)) if k not in self.free):
            return False
        return all(y[hi] >= y[lo] for hi, lo in self.inequalities)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "apex": [str(a) for a in self.apex],
            "rays": [list(r) for r in self.rays],
            "inequalities": [list(q) for q in self.inequalities],
        }


@dataclass(frozen=True)
class HalfOpenSimplicialCone:
    apex: tuple
    rays: tuple
    excluded: tuple  # excluded[k]: the facet opposite rays[k] is left out


@dataclass(frozen=True)
class SigmaTerm:
    points: tuple  # absolute lattice points (apex included)
    rays: tuple

    def to_json(self) -> dict:
        return {"numerator": [list(p) for p in self.points], "denominator": [list(r) for r in self.rays]}


# ---------------------------------------------------------------------------
# Extreme rays of order cones


def _connected_subsets(nodes: Iterable[Node]):
    nodes = set(nodes)
    adj = {v: [w for w in _adjacent(v) if w in nodes] for v in nodes}
    seen = set()
    stack = [frozenset([v]) for v in sorted(nodes)]
    while stack:
        s = stack.pop()
        if s in seen:
            continue
        seen.add(s)
        for v in s:
            for w in adj[v]:
                if w not in s:
                    stack.append(s | {w})
    return sorted(seen, key=lambda s: (len(s), sorted(s)))


def _adjacent(node: Node):
    i, j = node
    return [(i - 1, j), (i - 1, j + 1), (i + 1, j), (i + 1, j - 1)]


def _split_sign(subset: frozenset, edges) -> int | None:
    """Sign the subset must carry for the +-1 indicator to satisfy every crossing edge."""
    signs = set()
    for e in edges:
        hi, lo = orientation(e)
        if hi in subset and lo not in subset:
            signs.add(1)
        elif lo in subset and hi not in subset:
            signs.add(-1)
    return signs.pop() if len(signs) == 1 else None


def _tight_nullity(nodes, pinned, edges, subset) -> int:
    order = sorted(nodes)
    col = {v: k for k, v in enumerate(order)}
    rows = []
    for p in pinned:
        r = [0] * len(order)
        r[col[p]] = 1
        rows.append(r)
    for a, b in edges:
        if (a in subset) == (b in subset):
            r = [0] * len(order)
            r[col[a]] = 1
            r[col[b]] = -1
            rows.append(r)
    return len(order) - (rank(rows) if rows else 0)


def order_cone_rays(nodes: Iterable[Node], pinned: Iterable[Node], n: int) -> list[tuple]:
    """Extreme rays of {y : y = 0 off ``nodes`` and on ``pinned``, interlacing on T-edges inside ``nodes``}.

    Candidates are +-indicators of connected subsets avoiding the pinned
    nodes; the sign comes from the crossing edges, which must all agree, and
    a candidate is kept iff its tight constraints leave a one-dimensional
    solution space.
    """
    nodes = frozenset(nodes)
    pinned = frozenset(pinned)
    edges = induced_edges(nodes)
    idx = position_index(n)
    single_top = len(pinned) == 1
    rays = []
    for subset in _connected_subsets(nodes - pinned):
        sign = _split_sign(subset, edges)
        if sign is None:
            continue
        if _tight_nullity(nodes, pinned, edges, subset) != 1:
            rest = nodes - subset
            if single_top and has_property_a(subset) and is_connected(rest) and has_property_a(rest):
                log.debug("sign-consistent ordinary split %s dropped by rank filter", sorted(subset))
            continue
        ray = [0] * len(idx)
        for v in subset:
            ray[idx[v]] = sign
        rays.append(tuple(ray))
    return sorted(rays)


def _cone_inequalities(nodes, n) -> tuple:
    idx = position_index(n)
    return tuple(sorted((idx[hi], idx[lo]) for hi, lo in map(orientation, induced_edges(nodes))))


def delta_cone(nodes: Iterable[Node], pinned: Iterable[Node], n: int) -> Cone:
    """Cone of a component with apex at the origin."""
    nodes, pinned = frozenset(nodes), frozenset(pinned)
    idx = position_index(n)
    return Cone(
        n=n,
        apex=(0,) * len(idx),
        rays=tuple(order_cone_rays(nodes, pinned, n)),
        inequalities=_cone_inequalities(nodes, n),
        free=frozenset(idx[v] for v in nodes - pinned),
    )


def component_rays(delta: OrdinarySubgraph, n: int) -> list[tuple]:
    """Extreme rays of C_Delta: the top node is pinned to zero."""
    return order_cone_rays(delta.nodes, {delta.top}, n)


def component_cone(delta: OrdinarySubgraph, n: int) -> Cone:
    return delta_cone(delta.nodes, {delta.top}, n)


def vertex_components(v: PolytopeVertex) -> list[tuple[frozenset, frozenset]]:
    """Components of Gamma_v with their row-0 nodes (the pinned coordinates)."""
    return [(c, frozenset(p for p in c if p[0] == 0)) for c in v.components()]


def tangent_cone(v: PolytopeVertex) -> Cone:
    n = v.n
    idx = position_index(n)
    rays = []
    ineqs = []
    for nodes, pinned in vertex_components(v):
        rays.extend(order_cone_rays(nodes, pinned, n))
        ineqs.extend(_cone_inequalities(nodes, n))
    return Cone(
        n=n,
        apex=flatten(v.pattern),
        rays=tuple(sorted(rays)),
        inequalities=tuple(sorted(ineqs)),
        free=frozenset(idx[p] for p in positions(n) if p[0] > 0),
    )


def simplicial_vertex_rays(v: PolytopeVertex) -> dict[tuple[int, int], tuple]:
    """Rays of a simplicial vertex indexed by row ranges (a, b), 1 <= a <= b <= n-1.

    The ray for (a, b) is supported on rows a..b of the chain of Gamma_v that
    ends in row b; it is +1 there when w^-1(a) < w^-1(b+1) and -1 otherwise.
    """
    if v.permutation is None:
        raise ValueError("needs a simplicial vertex of a regular weight")
    n = v.n
    idx = position_index(n)
    winv = v.permutation.inverse()
    chains = {max(i for i, _ in c): c for c in v.components()}
    out = {}
    for a in range(1, n):
        for b in range(a, n):
            sign = 1 if winv(a) < winv(b + 1) else -1
            ray = [0] * len(idx)
            for node in chains[b]:
                if a <= node[0] <= b:
                    ray[idx[node]] = sign
            out[(a, b)] = tuple(ray)
    return out


# ---------------------------------------------------------------------------
# Triangulation and half-open decomposition


def _independent_columns(vectors, d) -> list[int]:
    cols = []
    for c in range(len(vectors[0])):
        trial = cols + [c]
        if rank([[v[k] for k in trial] for v in vectors]) == len(trial):
            cols = trial
            if len(cols) == d:
                break
    return cols


def _best_columns(vectors) -> list[int]:
    """Coordinate subset on which the (independent) vectors have the smallest nonzero minor."""
    d = len(vectors)
    support = [c for c in range(len(vectors[0])) if any(v[c] for v in vectors)]
    best, best_det = None, None
    for k, cols in enumerate(itertools.combinations(support, d)):
        if k >= _MAX_MINOR_SEARCH:
            break
        det = abs(determinant([[v[c] for c in cols] for v in vectors]))
        if det and (best_det is None or det < best_det):
            best, best_det = list(cols), det
            if det == 1:
                break
    return best if best is not None else _independent_columns(vectors, d)


def _facet_normal(vecs):
    d = len(vecs[0]) if vecs else 0
    basis = nullspace([list(v) for v in vecs], d) if vecs else None
    if basis is None:
        return None
    assert len(basis) == 1
    return basis[0]


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def placing_triangulation(vectors: Sequence[Sequence]) -> list[tuple[int, ...]]:
    """Triangulate the pointed full-dimensional cone spanned by ``vectors``
    (all extreme) by placing them in lexicographic order."""
    d = len(vectors[0])
    order = sorted(range(len(vectors)), key=lambda k: tuple(vectors[k]))
    start: list[int] = []
    for k in order:
        if rank([list(vectors[j]) for j in start + [k]]) > len(start):
            start.append(k)
            if len(start) == d:
                break
    if len(start) != d:
        raise ValueError("vectors do not span the ambient space")
    simplices = [tuple(sorted(start))]
    for k in order:
        if k in start:
            continue
        count: Counter = Counter()
        owner = {}
        for s in simplices:
            for drop in s:
                facet = tuple(x for x in s if x != drop)
                count[facet] += 1
                owner[facet] = drop
        new = []
        for facet, c in count.items():
            if c != 1:
                continue
            h = _facet_normal([vectors[j] for j in facet])
            if _dot(h, vectors[owner[facet]]) < 0:
                h = [-x for x in h]
            if _dot(h, vectors[k]) < 0:
                new.append(tuple(sorted(facet + (k,))))
        if not new:
            raise ValueError("placed vector lies inside the current cone; not an extreme ray")
        simplices.extend(new)
    return sorted(simplices)


def half_open_triangulate(c: Cone, seed: int = TRIANGULATION_SEED) -> list[HalfOpenSimplicialCone]:
    """Disjoint half-open simplicial decomposition of ``c``.

    A point x is assigned to the unique piece containing x + eps*q for a
    fixed generic interior q; piece facets with a negative q-coordinate are
    excluded.
    """
    d = c.dim
    if d == 0:
        return [HalfOpenSimplicialCone(c.apex, (), ())]
    if _has_line(c):
        raise ValueError("cone contains a line")
    cols = _independent_columns(c.rays, d)
    proj = [[r[k] for k in cols] for r in c.rays]
    if len(c.rays) == d:
        return [HalfOpenSimplicialCone(c.apex, tuple(c.rays), (False,) * d)]
    simplices = placing_triangulation(proj)
    rng = random.Random(seed)
    for _ in range(100):
        weights = [Fraction(rng.randint(1, 997), rng.randint(1, 991)) for _ in proj]
        q = [sum(w * v[i] for w, v in zip(weights, proj)) for i in range(d)]
        pieces = []
        for s in simplices:
            mat = [[proj[k][i] for k in s] for i in range(d)]
            beta = solve(mat, q)
            if any(b == 0 for b in beta):
                break
            pieces.append(
                HalfOpenSimplicialCone(c.apex, tuple(c.rays[k] for k in s), tuple(b < 0 for b in beta))
            )
        else:
            return pieces
    raise RuntimeError("failed to find a generic interior direction")


def _has_line(c: Cone) -> bool:
    # a line needs a nonzero y with y and -y both satisfying every inequality
    rows = []
    for hi, lo in c.inequalities:
        r = [0] * c.ambient
        r[hi], r[lo] = 1, -1
        rows.append(r)
    for k in range(c.ambient):
        if k not in c.free:
            r = [0] * c.ambient
            r[k] = 1
            rows.append(r)
    return rank(rows) < c.ambient


def parallelepiped_points(rays: Sequence[Sequence[int]], excluded: Sequence[bool]) -> list[tuple]:
    """Lattice points of the half-open fundamental parallelepiped of independent ``rays``.

    Coefficients run over [0, 1), or (0, 1] for excluded facets.
    """
    d = len(rays)
    ambient = len(rays[0]) if rays else 0
    if d == 0:
        return [(0,) * ambient] if ambient else [()]
    cols = _best_columns(rays)
    mat = [[rays[k][c] for k in range(d)] for c in cols]
    inv = inverse(mat)
    gens = [[inv[k][i] for k in range(d)] for i in range(d)]
    seen = {tuple([Fraction(0)] * d)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for cvec in frontier:
            for g in gens:
                new = tuple((a + b) % 1 for a, b in zip(cvec, g))
                if new not in seen:
                    seen.add(new)
                    nxt.append(new)
        frontier = nxt
    out = []
    for cvec in sorted(seen):
        coeffs = [Fraction(1) if (ex and cv == 0) else cv for cv, ex in zip(cvec, excluded)]
        point = [sum(cf * r[k] for cf, r in zip(coeffs, rays)) for k in range(ambient)]
        if all(p.denominator == 1 for p in point):
            out.append(tuple(int(p) for p in point))
    return sorted(out)


def sigma_terms(c: Cone) -> list[SigmaTerm]:
    if any(Fraction(a).denominator != 1 for a in c.apex):
        raise ValueError("apex must be integral")
    apex = tuple(int(a) for a in c.apex)
    terms = []
    for piece in half_open_triangulate(c):
        pts = parallelepiped_points(piece.rays, piece.excluded) if piece.rays else [(0,) * len(apex)]
        terms.append(
            SigmaTerm(tuple(tuple(a + p for a, p in zip(apex, pt)) for pt in pts), piece.rays)
        )
    return terms


# ---------------------------------------------------------------------------
# Evaluation in t-space and series checks


def t_monomial(point: Sequence[Fraction], exponent: Sequence[int]) -> Fraction:
    value = Fraction(1)
    for t, e in zip(point, exponent):
        if e:
            value *= t**e
    return value


def evaluate_sigma(terms: Sequence[SigmaTerm], t: Sequence) -> Fraction:
    """Exact value of sum of terms at a t-point."""
    t = [Fraction(v) for v in t]
    total = Fraction(0)
    for term in terms:
        den = Fraction(1)
        for r in term.rays:
            f = 1 - t_monomial(t, r)
            if f == 0:
                raise NonGenericPointError(f"t^{r} = 1 at the chosen point")
            den *= f
        total += sum((t_monomial(t, p) for p in term.points), Fraction(0)) / den
    return total


def truncated_expansion(terms: Sequence[SigmaTerm], apex: Sequence[int], bound: int) -> Counter:
    """Apex-relative lattice points (with multiplicity) produced by expanding the
    geometric series of every term, keeping those of L1 norm <= bound."""
    out: Counter = Counter()
    for term in terms:
        rel = [tuple(p - a for p, a in zip(pt, apex)) for pt in term.points]
        if not term.rays:
            for p in rel:
                if sum(map(abs, p)) <= bound:
                    out[p] += 1
            continue
        d = len(term.rays)
        cols = _independent_columns(term.rays, d)
        inv = inverse([[term.rays[k][c] for k in range(d)] for c in cols])
        kmax = [floor(sum(abs(x) for x in row) * bound) + 1 for row in inv]
        for p in rel:
            for ks in itertools.product(*(range(m + 1) for m in kmax)):
                y = tuple(p[i] + sum(k * r[i] for k, r in zip(ks, term.rays)) for i in range(len(p)))
                if sum(map(abs, y)) <= bound:
                    out[y] += 1
    return out


def box_lattice_points(c: Cone, bound: int) -> set:
    """Apex-relative integer points of the cone with L1 norm <= bound, by direct search."""
    free = sorted(c.free)
    out = set()

    def rec(k, budget, vec):
        if k == len(free):
            y = [0] * c.ambient
            for idx, val in zip(free, vec):
                y[idx] = val
            if c.contains(y):
                out.add(tuple(y))
            return
        for val in range(-budget, budget + 1):
            rec(k + 1, budget - abs(val), vec + [val])

    rec(0, bound, [])
    return out
