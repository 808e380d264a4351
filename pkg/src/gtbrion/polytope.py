"""Vertices of the GT polytope and their equality graphs.

The triangle graph T joins every position (i, j), i >= 1, to its upper
neighbours (i-1, j) and (i-1, j+1).  For a vertex pattern v the graph
Gamma_v keeps exactly the T-edges whose endpoints carry equal entries.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .algebra import Permutation
from .linalg import rank
from .patterns import (
    Pattern,
    Weight,
    check_dominant,
    entry,
    is_gt_pattern,
    is_regular,
    position_index,
    positions,
    weight_of,
)

log = logging.getLogger(__name__)

Node = tuple[int, int]
Edge = tuple[Node, Node]  # (lower node, upper node)


class VertexError(RuntimeError):
    """An internal consistency check on a vertex failed."""


def triangle_edges(n: int) -> list[Edge]:
    edges = []
    for i, j in positions(n):
        if i >= 1:
            edges.append(((i, j), (i - 1, j)))
            edges.append(((i, j), (i - 1, j + 1)))
    return edges


def orientation(edge: Edge) -> tuple[Node, Node]:
    """Return (hi, lo) such that the interlacing inequality reads A[hi] >= A[lo]."""
    lower, upper = edge
    if upper[1] == lower[1]:
        return upper, lower
    return lower, upper


def t_neighbours(node: Node) -> list[Node]:
    i, j = node
    return [(i - 1, j), (i - 1, j + 1), (i + 1, j), (i + 1, j - 1)]


def induced_edges(nodes: Iterable[Node]) -> list[Edge]:
    nodes = set(nodes)
    out = []
    for i, j in sorted(nodes):
        for up in ((i - 1, j), (i - 1, j + 1)):
            if up in nodes:
                out.append(((i, j), up))
    return out


def connected_components(nodes: Iterable[Node], edges: Iterable[Edge]) -> list[frozenset]:
    parent = {v: v for v in nodes}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    groups: dict[Node, set] = {}
    for v in parent:
        groups.setdefault(find(v), set()).add(v)
    return sorted((frozenset(g) for g in groups.values()), key=min)


def is_connected(nodes: Iterable[Node]) -> bool:
    nodes = set(nodes)
    return bool(nodes) and len(connected_components(nodes, induced_edges(nodes))) == 1


def has_property_a(nodes: Iterable[Node]) -> bool:
    nodes = set(nodes)
    for i, j in nodes:
        if (i, j + 1) in nodes and not {(i - 1, j + 1), (i + 1, j)} <= nodes:
            return False
    return True


def is_ordinary(nodes: Iterable[Node]) -> bool:
    nodes = set(nodes)
    return is_connected(nodes) and has_property_a(nodes)


def has_cycle(nodes: Iterable[Node]) -> bool:
    """Cycle test for the induced subgraph of T on ``nodes`` (edges >= nodes - components)."""
    nodes = set(nodes)
    edges = induced_edges(nodes)
    return len(edges) > len(nodes) - len(connected_components(nodes, edges))


@dataclass(frozen=True)
class OrdinarySubgraph:
    nodes: frozenset
    top: Node

    @classmethod
    def from_nodes(cls, nodes: Iterable[Node]) -> OrdinarySubgraph:
        nodes = frozenset(nodes)
        if not is_ordinary(nodes):
            raise ValueError(f"{sorted(nodes)} is not an ordinary subgraph of T")
        top_row = min(i for i, _ in nodes)
        tops = [v for v in nodes if v[0] == top_row]
        if len(tops) != 1:
            raise ValueError("ordinary subgraph must have a single top node")
        return cls(nodes, tops[0])

    @property
    def edges(self) -> list[Edge]:
        return induced_edges(self.nodes)

    def has_cycle(self) -> bool:
        return has_cycle(self.nodes)


@dataclass(frozen=True)
class GammaGraph:
    n: int
    edges: tuple

    @property
    def nodes(self) -> list[Node]:
        return positions(self.n)

    def components(self) -> list[frozenset]:
        return connected_components(self.nodes, self.edges)

    def is_acyclic(self) -> bool:
        return len(self.edges) == len(self.nodes) - len(self.components())

    def to_json(self) -> list:
        return [[list(a), list(b)] for a, b in self.edges]


def gamma_graph(pattern: Pattern) -> GammaGraph:
    n = len(pattern)
    edges = tuple(e for e in triangle_edges(n) if entry(pattern, e[0]) == entry(pattern, e[1]))
    g = GammaGraph(n, edges)
    comps = g.components()
    if any(not any(v[0] == 0 for v in c) for c in comps):
        raise VertexError(f"component without a row-0 node in {pattern}; not a vertex")
    if is_regular(pattern[0]) and len(comps) != n:
        raise VertexError(f"expected {n} components, found {len(comps)} for {pattern}")
    return g


def tight_dimension(pattern: Pattern) -> int:
    """Dimension of the solution space of the tight constraints at ``pattern``.

    Row 0 is frozen and every interlacing inequality holding with equality is
    imposed as an equation.  A GT pattern is a vertex iff this is 0.
    """
    n = len(pattern)
    idx = position_index(n)
    size = len(idx)
    rows = []
    for j in range(1, n + 1):
        r = [0] * size
        r[idx[(0, j)]] = 1
        rows.append(r)
    for e in triangle_edges(n):
        if entry(pattern, e[0]) == entry(pattern, e[1]):
            hi, lo = orientation(e)
            r = [0] * size
            r[idx[hi]] += 1
            r[idx[lo]] -= 1
            rows.append(r)
    return size - rank(rows)


@dataclass(frozen=True)
class PolytopeVertex:
    lam: Weight
    pattern: Pattern
    graph: GammaGraph = field(compare=False)
    simplicial: bool = field(compare=False)
    permutation: Permutation | None = field(default=None, compare=False)

    @property
    def n(self) -> int:
        return len(self.lam)

    @property
    def regular(self) -> bool:
        return is_regular(self.lam)

    @property
    def mu(self) -> Weight:
        return weight_of(self.pattern)

    def components(self) -> list[frozenset]:
        return self.graph.components()

    def to_json(self) -> dict:
        out = {
            "pattern": [list(r) for r in self.pattern],
            "edges": self.graph.to_json(),
            "simplicial" if self.regular else "acyclic": self.simplicial,
            "mu": list(self.mu),
        }
        if self.permutation is not None:
            out["permutation"] = list(self.permutation.images)
        return out


def make_vertex(pattern: Pattern) -> PolytopeVertex:
    lam = tuple(pattern[0])
    graph = gamma_graph(pattern)
    acyclic = graph.is_acyclic()
    perm = _deletion_permutation(pattern) if acyclic and is_regular(lam) else None
    return PolytopeVertex(lam, pattern, graph, acyclic, perm)


def enumerate_vertices(lam: Sequence[int], check: bool = True) -> list[PolytopeVertex]:
    """Every pattern whose entries below row 0 equal an upper neighbour, deduplicated.

    With ``check`` each result is also confirmed to have a zero-dimensional
    tight-constraint set, independently of the neighbour rule.
    """
    lam = check_dominant(lam)
    n = len(lam)
    found: set[Pattern] = set()

    def rec(rows):
        last = rows[-1]
        if len(last) == 1:
            pattern = tuple(rows)
            if is_gt_pattern(pattern, lam):
                found.add(pattern)
            return
        choices = [sorted({last[j], last[j + 1]}) for j in range(len(last) - 1)]
        for nxt in itertools.product(*choices):
            if all(last[j] >= nxt[j] >= last[j + 1] for j in range(len(nxt))):
                rec(rows + [nxt])

    rec([lam])
    out = []
    for pattern in sorted(found):
        if check and tight_dimension(pattern) != 0:
            raise VertexError(f"neighbour rule accepted non-vertex {pattern}")
        out.append(make_vertex(pattern))
    if n == 1:
        assert len(out) == 1
    return out


def is_simplicial(v: PolytopeVertex) -> bool:
    return v.graph.is_acyclic()


def _deletion_permutation(pattern: Pattern) -> Permutation:
    lam = pattern[0]
    n = len(lam)
    inv = []
    for i in range(n):
        upper = list(pattern[i])
        lower = list(pattern[i + 1]) if i + 1 < n else []
        for val in lower:
            if val not in upper:
                raise VertexError(f"row {i + 1} is not a sub-multiset of row {i} in {pattern}")
            upper.remove(val)
        (deleted,) = upper
        if deleted not in lam:
            raise VertexError(f"deleted value {deleted} is not a coordinate of lambda")
        inv.append(lam.index(deleted) + 1)
    return Permutation(inv).inverse()


def vertex_permutation(v: PolytopeVertex) -> Permutation:
    """The permutation w_v: row i+1 is row i with lam[w_v^-1(i+1)] deleted."""
    if not v.regular:
        raise ValueError("vertex permutation needs a regular weight")
    if not v.simplicial:
        raise ValueError("vertex permutation needs a simplicial vertex")
    return _deletion_permutation(v.pattern)


def project_pattern(pattern: Pattern, lam_prime: Sequence[int], lam: Sequence[int]) -> Pattern:
    lam_prime, lam = tuple(lam_prime), tuple(lam)
    if not is_regular(lam_prime):
        raise ValueError("the companion weight must be regular")
    if len(lam_prime) != len(lam):
        raise ValueError("weights must have the same length")
    lookup = dict(zip(lam_prime, lam))
    try:
        return tuple(tuple(lookup[a] for a in row) for row in pattern)
    except KeyError as exc:
        raise ValueError(f"entry {exc.args[0]} is not a coordinate of {lam_prime}") from None


def project_vertex(vprime: PolytopeVertex | Pattern, lam_prime: Sequence[int], lam: Sequence[int]) -> PolytopeVertex:
    """Replace every entry equal to lam_prime[j] by lam[j]."""
    pattern = vprime.pattern if isinstance(vprime, PolytopeVertex) else vprime
    lam = check_dominant(lam)
    check_dominant(lam_prime)
    return make_vertex(project_pattern(pattern, lam_prime, lam))


def orbit(lam: Sequence[int]) -> list[Weight]:
    return sorted(set(itertools.permutations(tuple(lam))), reverse=True)
