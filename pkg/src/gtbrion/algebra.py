"""Exact arithmetic: Laurent monomials and polynomials, univariate rational
functions in a perturbation variable ``s``, and permutations.

Rationals are :class:`fractions.Fraction` throughout; nothing here touches
floating point.
"""
from __future__ import annotations

import itertools
import re
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping


class EvaluationError(ValueError):
    """Raised when a Laurent polynomial cannot be evaluated at a point."""


class PoleError(ArithmeticError):
    """Raised when a reduced rational function has a pole at s = 1."""


def format_rational(q) -> str:
    """Serialize a rational as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    return str(Fraction(q))


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


# ---------------------------------------------------------------------------
# Variables and exponent vectors

_T_VAR = re.compile(r"^t_\{(-?\d+),(-?\d+)\}$")
_X_VAR = re.compile(r"^x_(\d+)$")


def x_var(i: int) -> str:
    return f"x_{i}"


def t_var(i: int, j: int) -> str:
    return "t_{%d,%d}" % (i, j)


def var_sort_key(name: str):
    m = _X_VAR.match(name)
    if m:
        return (0, int(m.group(1)))
    m = _T_VAR.match(name)
    if m:
        return (1, int(m.group(1)), int(m.group(2)))
    return (2, name)


def display_var(name: str) -> str:
    m = _X_VAR.match(name)
    return f"x{m.group(1)}" if m else name


class Exponent:
    """Immutable exponent vector ``{variable: integer}``; zero entries are dropped."""

    __slots__ = ("_items", "_hash")

    def __init__(self, mapping: Mapping[str, int] | Iterable[tuple[str, int]] = ()):
        items = mapping.items() if isinstance(mapping, Mapping) else mapping
        acc: dict[str, int] = {}
        for var, e in items:
            acc[var] = acc.get(var, 0) + int(e)
        self._items = tuple(
            sorted(((v, e) for v, e in acc.items() if e != 0), key=lambda ve: var_sort_key(ve[0]))
        )
        self._hash = hash(self._items)

    def items(self):
        return self._items

    def as_dict(self) -> dict[str, int]:
        return dict(self._items)

    def __getitem__(self, var: str) -> int:
        for v, e in self._items:
            if v == var:
                return e
        return 0

    def variables(self):
        return [v for v, _ in self._items]

    def __add__(self, other: Exponent) -> Exponent:
        return Exponent(self._items + other._items)

    def __neg__(self) -> Exponent:
        return Exponent((v, -e) for v, e in self._items)

    def __sub__(self, other: Exponent) -> Exponent:
        return self + (-other)

    def __eq__(self, other):
        return isinstance(other, Exponent) and self._items == other._items

    def __hash__(self):
        return self._hash

    def __bool__(self):
        return bool(self._items)

    def __repr__(self):
        return f"Exponent({dict(self._items)!r})"

    def __str__(self):
        if not self._items:
            return "1"
        parts = []
        for v, e in self._items:
            parts.append(display_var(v) if e == 1 else f"{display_var(v)}^{e}")
        return "*".join(parts)


class LaurentPolynomial:
    """Finite exact linear combination of Laurent monomials."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Exponent, object] | None = None):
        clean = {}
        if terms:
            for mono, c in terms.items():
                c = Fraction(c)
                if c != 0:
                    clean[mono] = c
        self._terms = clean

    @classmethod
    def monomial(cls, exponent: Mapping[str, int] | Exponent, coeff=1) -> LaurentPolynomial:
        mono = exponent if isinstance(exponent, Exponent) else Exponent(exponent)
        return cls({mono: coeff})

    @classmethod
    def constant(cls, c) -> LaurentPolynomial:
        return cls({Exponent(): c})

    @classmethod
    def variable(cls, name: str) -> LaurentPolynomial:
        return cls.monomial({name: 1})

    def terms(self) -> dict[Exponent, Fraction]:
        return dict(self._terms)

    def coefficient(self, exponent) -> Fraction:
        mono = exponent if isinstance(exponent, Exponent) else Exponent(exponent)
        return self._terms.get(mono, Fraction(0))

    def variables(self) -> set[str]:
        return {v for mono in self._terms for v in mono.variables()}

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def _coerce(self, other) -> LaurentPolynomial:
        if isinstance(other, LaurentPolynomial):
            return other
        return LaurentPolynomial.constant(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._terms)
        for mono, c in other._terms.items():
            out[mono] = out.get(mono, 0) + c
        return LaurentPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out: dict[Exponent, Fraction] = {}
        for (m1, c1), (m2, c2) in itertools.product(self._terms.items(), other._terms.items()):
            m = m1 + m2
            out[m] = out.get(m, 0) + c1 * c2
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, LaurentPolynomial):
            other = LaurentPolynomial.constant(other)
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def substitute_variables(self, perm: Mapping[str, str]) -> LaurentPolynomial:
        """Rename variables (e.g. permute x_i); unmapped names are kept."""
        out: dict[Exponent, Fraction] = {}
        for mono, c in self._terms.items():
            m = Exponent((perm.get(v, v), e) for v, e in mono.items())
            out[m] = out.get(m, 0) + c
        return LaurentPolynomial(out)

    def sorted_terms(self):
        """Terms in descending lexicographic order of exponent vectors."""
        names = sorted(self.variables(), key=var_sort_key)

        def key(item):
            mono = item[0]
            return tuple(mono[v] for v in names)

        return sorted(self._terms.items(), key=key, reverse=True)

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for k, (mono, c) in enumerate(self.sorted_terms()):
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if not mono:
                body = format_rational(mag)
            elif mag == 1:
                body = str(mono)
            else:
                body = f"{format_rational(mag)}*{mono}"
            if k == 0:
                out.append(body if sign == "+" else f"-{body}")
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def __repr__(self):
        return f"LaurentPolynomial({self})"


def monomial_value(exponent: Exponent, point: Mapping[str, Fraction]) -> Fraction:
    value = Fraction(1)
    for var, e in exponent.items():
        if var not in point:
            raise EvaluationError(f"no value assigned to variable {var}")
        base = Fraction(point[var])
        if base == 0 and e < 0:
            raise EvaluationError(f"{var} = 0 appears with negative exponent {e}")
        value *= base**e
    return value


def laurent_eval(p: LaurentPolynomial, point: Mapping[str, object]) -> Fraction:
    """Exact value of ``p`` at ``point``."""
    pt = {k: Fraction(v) for k, v in point.items()}
    return sum((c * monomial_value(m, pt) for m, c in p.terms().items()), Fraction(0))


# ---------------------------------------------------------------------------
# Univariate polynomials in s


class UniPoly:
    """Polynomial in one variable with Fraction coefficients, stored low degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> UniPoly:
        if degree < 0:
            raise ValueError("negative degree")
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, s) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * s + c
        return acc

    def __add__(self, other: UniPoly) -> UniPoly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return UniPoly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UniPoly(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> UniPoly:
        """Multiply by s**k, k >= 0."""
        return UniPoly([0] * k + list(self.coeffs)) if self.coeffs else self

    def divmod(self, other: UniPoly):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(0, len(rem) - len(other.coeffs) + 1)
        lead = other.leading()
        dd = other.degree
        while len(rem) - 1 >= dd and rem:
            shift = len(rem) - 1 - dd
            f = rem[-1] / lead
            q[shift] = f
            for i, c in enumerate(other.coeffs):
                rem[shift + i] -= f * c
            rem.pop()
            while rem and rem[-1] == 0:
                rem.pop()
        return UniPoly(q), UniPoly(rem)

    def monic(self) -> UniPoly:
        if self.is_zero():
            return self
        return self * (1 / self.leading())

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "UniPoly(0)"
        parts = [f"{format_rational(c)}*s^{i}" for i, c in enumerate(self.coeffs) if c != 0]
        return "UniPoly(" + " + ".join(parts) + ")"


def _integer_primitive(coeffs) -> list[int]:
    den = lcm(*(Fraction(c).denominator for c in coeffs))
    ints = [int(Fraction(c) * den) for c in coeffs]
    g = gcd(*ints)
    return [v // g for v in ints] if g else ints


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of integer polynomials (low degree first)."""
    a = list(a)
    lb = b[-1]
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        shift = len(a) - 1 - db
        la = a[-1]
        a = [x * lb for x in a]
        for i, c in enumerate(b):
            a[shift + i] -= la * c
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return a


def uni_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd via the primitive polynomial remainder sequence."""
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    p, q = _integer_primitive(a.coeffs), _integer_primitive(b.coeffs)
    if len(p) < len(q):
        p, q = q, p
    while q:
        r = _prem(p, q)
        p, q = q, (_integer_primitive(r) if r else [])
    return UniPoly(p).monic()


class UniRational:
    """Reduced quotient of UniPolys with monic denominator. Build via :func:`uni_reduce`."""

    __slots__ = ("num", "den")

    def __init__(self, num: UniPoly, den: UniPoly):
        self.num = num
        self.den = den

    @classmethod
    def constant(cls, c) -> UniRational:
        return cls(UniPoly([c]), UniPoly([1]))

    def __add__(self, other: UniRational) -> UniRational:
        g = uni_gcd(self.den, other.den)
        a, _ = self.den.divmod(g)
        b, _ = other.den.divmod(g)
        return uni_reduce(self.num * b + other.num * a, a * other.den)

    def __neg__(self):
        return UniRational(-self.num, self.den)

    def __mul__(self, other: UniRational) -> UniRational:
        return uni_reduce(self.num * other.num, self.den * other.den)

    def __eq__(self, other):
        return isinstance(other, UniRational) and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"UniRational({self.num!r} / {self.den!r})"


def uni_reduce(num: UniPoly, den: UniPoly) -> UniRational:
    """Cancel the common factor of ``num/den`` and normalize the denominator to be monic."""
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.is_zero():
        return UniRational(UniPoly(), UniPoly([1]))
    g = uni_gcd(num, den)
    n, r1 = num.divmod(g)
    d, r2 = den.divmod(g)
    assert r1.is_zero() and r2.is_zero()
    lead = d.leading()
    return UniRational(n * (1 / lead), d * (1 / lead))


def uni_rational_sum(terms: Iterable[UniRational]) -> UniRational:
    total = UniRational.constant(0)
    for t in terms:
        total = total + t
    return total


def eval_at_one(f: UniRational) -> Fraction:
    """Value at s = 1; reduces first if the stored denominator vanishes there."""
    d1 = f.den(1)
    if d1 == 0:
        f = uni_reduce(f.num, f.den)
        d1 = f.den(1)
        if d1 == 0:
            raise PoleError("rational function has a pole at s = 1")
    return f.num(1) / d1


# ---------------------------------------------------------------------------
# Permutations


class Permutation:
    """Bijection of {1..n} stored as its image tuple (one-line notation)."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(1, n + 1))

    @classmethod
    def all(cls, n: int) -> list[Permutation]:
        return [cls(p) for p in itertools.permutations(range(1, n + 1))]

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        """Composition: (self * other)(i) = self(other(i))."""
        return Permutation(self(other(i)) for i in range(1, self.n + 1))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, w in enumerate(self.images, start=1):
            inv[w - 1] = i
        return Permutation(inv)

    def act(self, weight) -> tuple:
        """Permute weight coordinates: (w mu)_i = mu_{w^-1(i)}."""
        inv = self.inverse()
        return tuple(weight[inv(i) - 1] for i in range(1, self.n + 1))

    def sign(self) -> int:
        s = 1
        seen = set()
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            length = 0
            i = start
            while i not in seen:
                seen.add(i)
                i = self(i)
                length += 1
            if length % 2 == 0:
                s = -s
        return s

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __lt__(self, other):
        return self.images < other.images

    def __repr__(self):
        return f"Permutation{self.images}"
