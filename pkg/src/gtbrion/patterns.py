"""Gelfand-Tsetlin patterns as lattice points, their weights, and the
combinatorial Schur polynomial.

A pattern is a tuple of rows ``(row_0, row_1, ..., row_{n-1})`` where
``row_0`` is the highest weight and row ``i`` has ``n - i`` entries.
Positions are addressed as ``(i, j)`` with ``j`` starting at 1.
"""
from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction
from math import prod
from typing import Sequence

from .algebra import EvaluationError, Exponent, LaurentPolynomial, x_var

Weight = tuple[int, ...]
Pattern = tuple[tuple[int, ...], ...]

DEFAULT_PATTERN_CAP = 10**7


class NotDominantError(ValueError):
    pass


class PatternCapError(RuntimeError):
    def __init__(self, count: int, cap: int):
        super().__init__(f"pattern count {count} exceeds cap {cap}")
        self.count = count
        self.cap = cap


def as_weight(lam: Sequence[int]) -> Weight:
    return tuple(int(v) for v in lam)


def is_dominant(lam: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(lam, lam[1:]))


def is_regular(lam: Sequence[int]) -> bool:
    return len(set(lam)) == len(lam)


def check_dominant(lam: Sequence[int]) -> Weight:
    lam = as_weight(lam)
    if not lam:
        raise NotDominantError("weight must have at least one coordinate")
    if not is_dominant(lam):
        raise NotDominantError(f"weight {lam} is not dominant (entries must be non-increasing)")
    return lam


def positions(n: int) -> list[tuple[int, int]]:
    """All pattern positions (i, j) in row-major order."""
    return [(i, j) for i in range(n) for j in range(1, n - i + 1)]


def position_index(n: int) -> dict[tuple[int, int], int]:
    return {p: k for k, p in enumerate(positions(n))}


def flatten(pattern: Pattern) -> tuple[int, ...]:
    return tuple(v for row in pattern for v in row)


def unflatten(vec: Sequence[int], n: int) -> Pattern:
    rows, k = [], 0
    for i in range(n):
        rows.append(tuple(vec[k : k + n - i]))
        k += n - i
    return tuple(rows)


def entry(pattern: Pattern, pos: tuple[int, int]) -> int:
    i, j = pos
    return pattern[i][j - 1]


def is_gt_pattern(pattern: Sequence[Sequence[int]], lam: Sequence[int]) -> bool:
    """Check shape, top row, and the interlacing inequalities."""
    n = len(lam)
    if len(pattern) != n or tuple(pattern[0]) != tuple(lam):
        return False
    for i, row in enumerate(pattern):
        if len(row) != n - i:
            return False
    for i in range(n - 1):
        up, low = pattern[i], pattern[i + 1]
        for j in range(n - i - 1):
            if not up[j] >= low[j] >= up[j + 1]:
                return False
    return True


def weyl_dimension(lam: Sequence[int]) -> int:
    """Number of GT patterns with top row ``lam``."""
    n = len(lam)
    num = prod(lam[i] - lam[j] + j - i for i in range(n) for j in range(i + 1, n))
    den = prod(j - i for i in range(n) for j in range(i + 1, n))
    return num // den


def _next_rows(row):
    ranges = [range(row[j + 1], row[j] + 1) for j in range(len(row) - 1)]
    return itertools.product(*ranges)


def iter_patterns(lam: Sequence[int]):
    lam = check_dominant(lam)

    def rec(rows):
        if len(rows[-1]) == 1:
            yield tuple(rows)
            return
        for nxt in _next_rows(rows[-1]):
            yield from rec(rows + [nxt])

    yield from rec([lam])


def enumerate_patterns(lam: Sequence[int], cap: int = DEFAULT_PATTERN_CAP) -> list[Pattern]:
    """All GT patterns with top row ``lam`` in lexicographic order."""
    lam = check_dominant(lam)
    count = weyl_dimension(lam)
    if count > cap:
        raise PatternCapError(count, cap)
    return list(iter_patterns(lam))


def weight_of(pattern: Pattern) -> Weight:
    """(mu_A)_i = sum(row i-1) - sum(row i), with row n empty."""
    sums = [sum(row) for row in pattern] + [0]
    return tuple(sums[i - 1] - sums[i] for i in range(1, len(pattern) + 1))


def weight_multiplicities(lam: Sequence[int], cap: int = DEFAULT_PATTERN_CAP) -> Counter:
    lam = check_dominant(lam)
    if weyl_dimension(lam) > cap:
        raise PatternCapError(weyl_dimension(lam), cap)
    return Counter(weight_of(a) for a in iter_patterns(lam))


def weight_exponent(mu: Sequence[int]) -> Exponent:
    return Exponent({x_var(i): e for i, e in enumerate(mu, start=1)})


def schur_polynomial(lam: Sequence[int], cap: int = DEFAULT_PATTERN_CAP) -> LaurentPolynomial:
    mult = weight_multiplicities(lam, cap)
    return LaurentPolynomial({weight_exponent(mu): c for mu, c in mult.items()})


def x_monomial_value(mu: Sequence[int], x: Sequence[Fraction]) -> Fraction:
    value = Fraction(1)
    for xi, e in zip(x, mu):
        if xi == 0 and e < 0:
            raise EvaluationError("zero coordinate raised to a negative power")
        value *= Fraction(xi) ** e
    return value


def schur_eval(lam: Sequence[int], x: Sequence, cap: int = DEFAULT_PATTERN_CAP) -> Fraction:
    """Exact value of the Schur polynomial at the point ``x`` (brute-force oracle)."""
    lam = check_dominant(lam)
    if len(x) != len(lam):
        raise ValueError("point has wrong number of coordinates")
    x = [Fraction(v) for v in x]
    mult = weight_multiplicities(lam, cap)
    return sum((c * x_monomial_value(mu, x) for mu, c in mult.items()), Fraction(0))


def pattern_to_json(pattern: Pattern) -> dict:
    return {"lambda": list(pattern[0]), "rows": [list(r) for r in pattern]}


def pattern_from_json(data: dict) -> Pattern:
    pattern = tuple(tuple(int(v) for v in r) for r in data["rows"])
    if list(pattern[0]) != list(data["lambda"]):
        raise ValueError("row 0 does not match lambda")
    return pattern
