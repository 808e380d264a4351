"""Small exact linear algebra over the rationals.

Matrices are plain lists of rows; entries may be ints or Fractions.
"""
from fractions import Fraction


def _to_fraction_rows(rows):
    return [[Fraction(v) for v in row] for row in rows]


def row_echelon(rows):
    """Return (reduced echelon rows, pivot columns)."""
    m = _to_fraction_rows(rows)
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((k for k in range(r, len(m)) if m[k][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][col]
        m[r] = [v * inv for v in m[r]]
        for k in range(len(m)):
            if k != r and m[k][col] != 0:
                f = m[k][col]
                m[k] = [a - f * b for a, b in zip(m[k], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows):
    return len(row_echelon(rows)[1])


def nullspace(rows, ncols):
    """Basis of {y : rows @ y = 0} as a list of Fraction vectors."""
    if not rows:
        return [[Fraction(int(i == k)) for i in range(ncols)] for k in range(ncols)]
    red, pivots = row_echelon(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for row, p in zip(red, pivots):
            vec[p] = -row[f]
        basis.append(vec)
    return basis


def solve(matrix, rhs):
    """Solve a square nonsingular system exactly."""
    n = len(matrix)
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    red, pivots = row_echelon(aug)
    if pivots != list(range(n)):
        raise ValueError("singular system")
    return [row[n] for row in red]


def inverse(matrix):
    n = len(matrix)
    aug = [list(row) + [int(i == k) for k in range(n)] for i, row in enumerate(matrix)]
    red, pivots = row_echelon(aug)
    if pivots != list(range(n)):
        raise ValueError("singular matrix")
    return [row[n:] for row in red]


def determinant(matrix):
    m = _to_fraction_rows(matrix)
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        piv = next((k for k in range(col, n) if m[k][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        for k in range(col + 1, n):
            if m[k][col] != 0:
                f = m[k][col] / m[col][col]
                m[k] = [a - f * b for a, b in zip(m[k], m[col])]
    return det


def primitive(vec):
    """Scale a rational vector to the primitive integer vector with the same direction."""
    from math import gcd, lcm

    fr = [Fraction(v) for v in vec]
    den = lcm(*(v.denominator for v in fr)) if fr else 1
    ints = [int(v * den) for v in fr]
    g = gcd(*ints)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(v // g for v in ints)
