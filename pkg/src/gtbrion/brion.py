"""Specializing integer-point transforms to characters.

The specialization sends t_{0,j} to x_1 and t_{i,j} (i > 0) to
x_i^{-1} x_{i+1}, so the exponential of a GT pattern becomes the
exponential of its weight.  A cone's transform is specialized along the
curve t_{i,j} -> F(t_{i,j})(x) * s^{c_{i,j}} and the limit s -> 1 is taken
with exact univariate rational functions.
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import prod
from typing import Iterable, Sequence

from .algebra import Exponent, Permutation, UniPoly, UniRational, eval_at_one, x_var
from .cones import (
    NonGenericPointError,
    SigmaTerm,
    delta_cone,
    evaluate_sigma,
    sigma_terms,
    tangent_cone,
    vertex_components,
)
from .patterns import (
    check_dominant,
    flatten,
    is_regular,
    iter_patterns,
    positions,
    x_monomial_value,
)
from .polytope import OrdinarySubgraph, PolytopeVertex, enumerate_vertices, make_vertex, project_vertex

_T_NAME = re.compile(r"^t_\{(\d+),(\d+)\}$")


# ---------------------------------------------------------------------------
# The specialization


def apply_F(exponent: Exponent | Sequence[int], n: int | None = None):
    """Image of a t-exponent under the specialization.

    Accepts a named :class:`Exponent` over ``t_{i,j}`` (returns an Exponent
    over ``x_i``) or a flat vector over pattern positions (returns a tuple of
    length n).
    """
    if isinstance(exponent, Exponent):
        out: dict[str, int] = {}
        for var, e in exponent.items():
            m = _T_NAME.match(var)
            if not m:
                raise ValueError(f"{var} is not a pattern variable")
            i = int(m.group(1))
            if i == 0:
                out[x_var(1)] = out.get(x_var(1), 0) + e
            else:
                out[x_var(i)] = out.get(x_var(i), 0) - e
                out[x_var(i + 1)] = out.get(x_var(i + 1), 0) + e
        return Exponent(out)
    vec = tuple(exponent)
    if n is None:
        n = _n_from_size(len(vec))
    mu = [0] * n
    for (i, _), e in zip(positions(n), vec):
        if not e:
            continue
        if i == 0:
            mu[0] += e
        else:
            mu[i - 1] -= e
            mu[i] += e
    return tuple(mu)


def _n_from_size(size: int) -> int:
    n = 0
    while n * (n + 1) // 2 < size:
        n += 1
    if n * (n + 1) // 2 != size:
        raise ValueError(f"{size} is not a triangular number")
    return n


def specialized_value(vec: Sequence[int], x: Sequence[Fraction]) -> Fraction:
    return x_monomial_value(apply_F(vec, len(x)), x)


# ---------------------------------------------------------------------------
# Evaluation points


def validate_x_point(x: Sequence, rays: Iterable[Sequence[int]] = ()) -> tuple[Fraction, ...]:
    """Check that no denominator in play vanishes at ``x``; return it as Fractions."""
    x = tuple(Fraction(v) for v in x)
    n = len(x)
    if any(v == 0 for v in x):
        raise NonGenericPointError("x coordinates must be nonzero")
    if len(set(x)) != n:
        raise NonGenericPointError("x coordinates must be pairwise distinct")
    for r in rays:
        if specialized_value(r, x) == 1:
            raise NonGenericPointError(f"F(t^{tuple(r)}) = 1 at x = {x}")
    return x


def validate_t_point(t: Sequence, rays: Iterable[Sequence[int]] = ()) -> tuple[Fraction, ...]:
    t = tuple(Fraction(v) for v in t)
    if any(v == 0 for v in t):
        raise NonGenericPointError("t coordinates must be nonzero")
    for r in rays:
        value = Fraction(1)
        for tv, e in zip(t, r):
            value *= tv**e
        if value == 1:
            raise NonGenericPointError(f"t^{tuple(r)} = 1 at the chosen t-point")
    return t


def _random_rational(rng: random.Random, low: int, high: int) -> Fraction:
    den = rng.randint(1, 9)
    return Fraction(rng.randint(low * den, high * den), den)


def sample_x_point(n: int, rng: random.Random, rays: Iterable[Sequence[int]] = (), retries: int = 100):
    rays = list(rays)
    for _ in range(retries):
        try:
            return validate_x_point([_random_rational(rng, 2, 100) for _ in range(n)], rays)
        except NonGenericPointError:
            continue
    raise NonGenericPointError("could not sample a generic x-point")


def sample_t_point(size: int, rng: random.Random, rays: Iterable[Sequence[int]] = (), retries: int = 100):
    rays = list(rays)
    for _ in range(retries):
        try:
            return validate_t_point([_random_rational(rng, 2, 30) for _ in range(size)], rays)
        except NonGenericPointError:
            continue
    raise NonGenericPointError("could not sample a generic t-point")


def sample_perturbation(rays: Iterable[Sequence[int]], size: int, rng: random.Random, height: int = 3):
    """Integer vector c with <c, r> != 0 for every ray; the range widens on retry."""
    rays = list(rays)
    while True:
        for _ in range(50):
            c = tuple(rng.randint(-height, height) for _ in range(size))
            if all(sum(a * b for a, b in zip(c, r)) != 0 for r in rays):
                return c
        height *= 2


# ---------------------------------------------------------------------------
# Perturbed limit


def perturbed_limit(terms: Sequence[SigmaTerm], apex: Sequence[int], x: Sequence[Fraction], c: Sequence[int]) -> Fraction:
    """lim_{s->1} of the specialized transform along t -> F(t)(x) * s^c.

    All terms are put over the common denominator prod_r D_r(s), r running
    over the distinct rays, where D_r is 1 - X_r s^m or s^|m| - X_r for
    m = <c, r> negative.
    """
    rays = sorted({r for t in terms for r in t.rays})
    dens: dict[tuple, UniPoly] = {}
    shift_of: dict[tuple, int] = {}
    for r in rays:
        m = sum(a * b for a, b in zip(c, r))
        if m == 0:
            raise ValueError(f"perturbation is orthogonal to ray {r}")
        xr = specialized_value(r, x)
        if m > 0:
            dens[r] = UniPoly([1]) - UniPoly.monomial(m, xr)
            shift_of[r] = 0
        else:
            dens[r] = UniPoly.monomial(-m) - UniPoly([xr])
            shift_of[r] = -m
    num_laurent: dict[int, Fraction] = {}
    cofactor_cache: dict[frozenset, UniPoly] = {}
    for term in terms:
        key = frozenset(term.rays)
        if key not in cofactor_cache:
            cof = UniPoly([1])
            for r in rays:
                if r not in key:
                    cof = cof * dens[r]
            cofactor_cache[key] = cof
        cof = cofactor_cache[key]
        shift = sum(shift_of[r] for r in term.rays)
        for p in term.points:
            rel = [a - b for a, b in zip(p, apex)]
            e = sum(a * b for a, b in zip(c, rel)) + shift
            xp = specialized_value(rel, x)
            for k, coeff in enumerate(cof.coeffs):
                if coeff:
                    num_laurent[e + k] = num_laurent.get(e + k, 0) + xp * coeff
    low = min(num_laurent, default=0)
    lift = -low if low < 0 else 0
    top = max(num_laurent, default=0) + lift
    num = UniPoly([num_laurent.get(k - lift, 0) for k in range(top + 1)])
    den = prod(dens.values(), start=UniPoly([1])).shift(lift)
    return eval_at_one(UniRational(num, den)) * specialized_value(apex, x)


# ---------------------------------------------------------------------------
# Cached geometry


@lru_cache(maxsize=None)
def vertex_terms(pattern) -> tuple:
    cone = tangent_cone(make_vertex(pattern))
    return cone, tuple(sigma_terms(cone))


@lru_cache(maxsize=None)
def component_terms(nodes: frozenset, pinned: frozenset, n: int) -> tuple:
    cone = delta_cone(nodes, pinned, n)
    return cone, tuple(sigma_terms(cone))


def _default_perturbation(rays, size):
    return sample_perturbation(rays, size, random.Random(0))


def vertex_contribution(v: PolytopeVertex, x: Sequence, c: Sequence[int] | None = None, *, method: str = "cone") -> Fraction:
    """F(sigma(C_v)) evaluated at ``x``.

    ``method="cone"`` works on the whole tangent cone; ``method="components"``
    multiplies F(t^v) by the component factors.
    """
    if method == "components":
        x = tuple(Fraction(a) for a in x)
        value = specialized_value(flatten(v.pattern), x)
        for nodes, pinned in vertex_components(v):
            value *= component_contribution((nodes, pinned), x, c, n=v.n)
        return value
    if method != "cone":
        raise ValueError(f"unknown method {method!r}")
    cone, terms = vertex_terms(v.pattern)
    x = validate_x_point(x, cone.rays)
    if c is None:
        c = _default_perturbation(cone.rays, cone.ambient)
    return perturbed_limit(terms, cone.apex, x, c)


def component_contribution(delta, x: Sequence, c: Sequence[int] | None = None, *, n: int | None = None) -> Fraction:
    """F(sigma(C_Delta)) at ``x``.

    ``delta`` is an :class:`OrdinarySubgraph` (top node pinned) or a pair
    ``(nodes, pinned)`` for a component of a singular vertex.
    """
    if isinstance(delta, OrdinarySubgraph):
        nodes, pinned = delta.nodes, frozenset([delta.top])
    else:
        nodes, pinned = frozenset(delta[0]), frozenset(delta[1])
    if n is None:
        n = len(x)
    cone, terms = component_terms(nodes, pinned, n)
    x = validate_x_point(x, cone.rays)
    if c is None:
        c = _default_perturbation(cone.rays, cone.ambient)
    return perturbed_limit(terms, cone.apex, x, c)


# ---------------------------------------------------------------------------
# Weyl side


def weyl_denominator_exponents(w: Permutation) -> list[tuple]:
    """x-exponents of x_{w(j)}/x_{w(i)} for i < j."""
    n = w.n
    out = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            e = [0] * n
            e[w(j) - 1] += 1
            e[w(i) - 1] -= 1
            out.append(tuple(e))
    return out


def weyl_summand(w: Permutation, lam: Sequence[int], x: Sequence) -> Fraction:
    """w(e^lam / prod_{i<j}(1 - x_j/x_i)) at ``x``."""
    x = tuple(Fraction(a) for a in x)
    den = Fraction(1)
    for e in weyl_denominator_exponents(w):
        f = 1 - x_monomial_value(e, x)
        if f == 0:
            raise NonGenericPointError("Weyl denominator vanishes at x")
        den *= f
    return x_monomial_value(w.act(lam), x) / den


def weyl_character(lam: Sequence[int], x: Sequence) -> Fraction:
    lam = check_dominant(lam)
    return sum((weyl_summand(w, lam, x) for w in Permutation.all(len(lam))), Fraction(0))


def grouped_contribution(mu: Sequence[int], lam: Sequence[int], x: Sequence) -> Fraction:
    """Sum of Weyl summands over the permutations sending lam to mu."""
    mu, lam = tuple(mu), check_dominant(lam)
    group = [w for w in Permutation.all(len(lam)) if w.act(lam) == mu]
    if not group:
        raise ValueError(f"{mu} is not in the orbit of {lam}")
    return sum((weyl_summand(w, lam, x) for w in group), Fraction(0))


def simplicial_closed_form(v: PolytopeVertex):
    """(numerator x-exponent, sorted denominator x-exponents) of F(t^v)/prod(1 - F(t^ray)).

    Valid as the transform of C_v only when the cone is unimodular simplicial.
    """
    cone, terms = vertex_terms(v.pattern)
    if len(terms) != 1 or len(terms[0].points) != 1 or not cone.is_simplicial():
        raise ValueError("tangent cone is not unimodular simplicial")
    return apply_F(cone.apex, v.n), tuple(sorted(apply_F(r, v.n) for r in cone.rays))


def weyl_closed_form(w: Permutation, lam: Sequence[int]):
    return tuple(w.act(lam)), tuple(sorted(weyl_denominator_exponents(w)))


# ---------------------------------------------------------------------------
# Whole-character identities


def all_vertex_rays(lam: Sequence[int]) -> list[tuple]:
    rays = set()
    for v in enumerate_vertices(lam):
        rays.update(vertex_terms(v.pattern)[0].rays)
    return sorted(rays)


def brion_character(lam: Sequence[int], x: Sequence, c: Sequence[int] | None = None) -> Fraction:
    """Character at ``x`` as the sum of all vertex contributions."""
    lam = check_dominant(lam)
    vertices = enumerate_vertices(lam)
    if c is None:
        c = _default_perturbation(all_vertex_rays(lam), len(positions(len(lam))))
    return sum((vertex_contribution(v, x, c) for v in vertices), Fraction(0))


def brion_limit_character(lam: Sequence[int], x: Sequence, c: Sequence[int] | None = None) -> Fraction:
    """Character at an arbitrary nonzero ``x`` (e.g. all ones) by one joint limit.

    All vertex transforms are summed before s -> 1, so poles of individual
    vertex contributions cancel; no genericity is needed.
    """
    lam = check_dominant(lam)
    x = tuple(Fraction(a) for a in x)
    if any(a == 0 for a in x):
        raise NonGenericPointError("x coordinates must be nonzero")
    size = len(positions(len(lam)))
    terms = [t for v in enumerate_vertices(lam) for t in vertex_terms(v.pattern)[1]]
    if c is None:
        c = _default_perturbation({r for t in terms for r in t.rays}, size)
    return perturbed_limit(terms, (0,) * size, x, c)


def brion_t_space(lam: Sequence[int], t: Sequence) -> tuple[Fraction, Fraction]:
    """(sum over vertices of sigma(C_v), direct sum of t^A over patterns) at a t-point."""
    lam = check_dominant(lam)
    t = tuple(Fraction(a) for a in t)
    lhs = sum((evaluate_sigma(vertex_terms(v.pattern)[1], t) for v in enumerate_vertices(lam)), Fraction(0))
    rhs = Fraction(0)
    for a in iter_patterns(lam):
        value = Fraction(1)
        for tv, e in zip(t, flatten(a)):
            value *= tv**e
        rhs += value
    return lhs, rhs


@dataclass
class DegenerationCheck:
    pattern: tuple
    lhs: Fraction
    rhs: Fraction
    preimages: int

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


def degeneration_checks(lam: Sequence[int], lam_prime: Sequence[int], t: Sequence) -> list[DegenerationCheck]:
    """Both sides of sigma(C_v) = sum_{pi(v')=v} t^{v-v'} sigma(C_{v'}) for every vertex v."""
    lam, lam_prime = check_dominant(lam), check_dominant(lam_prime)
    if not is_regular(lam_prime):
        raise ValueError("the companion weight must be regular")
    if len(lam) != len(lam_prime):
        raise ValueError("weights must have the same length")
    t = tuple(Fraction(a) for a in t)
    fibres: dict[tuple, list] = {}
    for vp in enumerate_vertices(lam_prime):
        fibres.setdefault(project_vertex(vp, lam_prime, lam).pattern, []).append(vp)
    out = []
    for v in enumerate_vertices(lam):
        lhs = evaluate_sigma(vertex_terms(v.pattern)[1], t)
        rhs = Fraction(0)
        apex = flatten(v.pattern)
        for vp in fibres.get(v.pattern, []):
            shift = [a - b for a, b in zip(apex, flatten(vp.pattern))]
            factor = Fraction(1)
            for tv, e in zip(t, shift):
                factor *= tv**e
            rhs += factor * evaluate_sigma(vertex_terms(vp.pattern)[1], t)
        out.append(DegenerationCheck(v.pattern, lhs, rhs, len(fibres.get(v.pattern, []))))
    return out


def verify_degbri(lam: Sequence[int], lam_prime: Sequence[int], t: Sequence) -> bool:
    return all(chk.ok for chk in degeneration_checks(lam, lam_prime, t))

