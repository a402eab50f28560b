"""Exact coefficients in Z[q], formal linear combinations, and exact rank.

Coefficients are integer polynomials in a formal parameter ``q``.  Linear
combinations are finite maps from basis keys to nonzero coefficients; a key
is a packed word, or a tuple of packed words for tensors.  Nothing here uses
floating point.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from itertools import product as _cartesian
from typing import Callable, Iterable, Mapping, Sequence

from .words import format_word, word_key

__all__ = [
    "QPoly", "LinearCombination", "ZERO", "ONE", "Q",
    "lc", "tensor", "bilinear", "rank", "symbolic_rank", "rank_at",
    "coefficient_matrix",
]


class QPoly:
    """Integer polynomial in ``q``; ``coeffs[k]`` is the coefficient of ``q**k``.

    >>> (1 + Q) * (1 - Q)
    QPoly('1-q^2')
    >>> (Q * Q)(0), QPoly(1)(0)
    (0, 1)
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: int | Sequence[int] = ()):
        if isinstance(coeffs, int):
            coeffs = (coeffs,)
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> QPoly:
        return cls((0,) * degree + (coeff,))

    @classmethod
    def coerce(cls, value) -> QPoly:
        if isinstance(value, QPoly):
            return value
        if isinstance(value, int):
            return cls(value)
        raise TypeError(f"cannot use {value!r} as a Z[q] coefficient")

    @property
    def degree(self) -> int:
        """Degree in ``q``; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QPoly(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> QPoly:
        return QPoly(tuple(-c for c in self.coeffs))

    def __add__(self, other) -> QPoly:
        try:
            other = QPoly.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return QPoly(tuple(x + y for x, y in zip(a, b)) + a[len(b):])

    __radd__ = __add__

    def __sub__(self, other) -> QPoly:
        try:
            other = QPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> QPoly:
        return QPoly.coerce(other) - self

    def __mul__(self, other) -> QPoly:
        try:
            other = QPoly.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> QPoly:
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, value):
        """Substitute ``q = value`` (Horner); ``q**0`` is 1 even at ``q = 0``."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def divexact(self, other: QPoly) -> QPoly:
        """Quotient of an exact division in Z[q]; raises if not exact."""
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = [Fraction(c) for c in self.coeffs]
        d = other.coeffs
        quot = [Fraction(0)] * max(len(rem) - len(d) + 1, 0)
        for k in range(len(quot) - 1, -1, -1):
            t = rem[k + len(d) - 1] / d[-1]
            quot[k] = t
            if t:
                for i, c in enumerate(d):
                    rem[k + i] -= t * c
        if any(rem) or any(t.denominator != 1 for t in quot):
            raise ArithmeticError(f"{self} is not divisible by {other} in Z[q]")
        return QPoly([int(t) for t in quot])

    def content(self) -> int:
        """Gcd of the coefficients, 0 for the zero polynomial."""
        return math.gcd(*self.coeffs) if self.coeffs else 0

    @staticmethod
    def gcd(a: QPoly, b: QPoly) -> QPoly:
        """Greatest common divisor in Z[q] with positive leading coefficient."""
        if not a:
            return b if not b or b.coeffs[-1] > 0 else -b
        if not b:
            return QPoly.gcd(b, a)
        c = math.gcd(a.content(), b.content())
        x = [Fraction(v) for v in a.coeffs]
        y = [Fraction(v) for v in b.coeffs]
        while any(y):
            while len(x) >= len(y):
                t = x[-1] / y[-1]
                shift = len(x) - len(y)
                for i, v in enumerate(y):
                    x[shift + i] -= t * v
                while x and x[-1] == 0:
                    x.pop()
                if not x:
                    break
            x, y = y, x
        den = math.lcm(*(v.denominator for v in x))
        ints = [int(v * den) for v in x]
        g = math.gcd(*ints)
        prim = [v // g for v in ints]
        if prim[-1] < 0:
            prim = [-v for v in prim]
        return QPoly([c * v for v in prim])

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        return text + "".join(s + b for s, b in parts[1:])

    def __repr__(self) -> str:
        return f"QPoly('{self}')"


ZERO = QPoly()
ONE = QPoly(1)
Q = QPoly((0, 1))


# -- linear combinations ----------------------------------------------------

def _sort_key(key):
    if key and isinstance(key[0], tuple):
        return (len(key), tuple(word_key(w) for w in key))
    return (1, word_key(key))


class LinearCombination:
    """Finite formal sum ``sum c_k * k`` with ``c_k`` in Z[q], zeros dropped.

    Keys are packed words, or tuples of packed words for elements of a
    tensor power.  Instances are treated as immutable values.

    >>> x = lc({(2, 1): 1, (1, 2): -1})
    >>> x - x == LinearCombination()
    True
    >>> print(x)
    -(1,2) + (2,1)
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for key, coeff in items:
            coeff = QPoly.coerce(coeff)
            if key in acc:
                acc[key] = acc[key] + coeff
            else:
                acc[key] = coeff
        self._terms = {k: c for k, c in acc.items() if c}

    @classmethod
    def _raw(cls, terms: dict) -> LinearCombination:
        # trusted constructor: values are nonzero QPoly already
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def from_monomials(cls, counts: Mapping) -> LinearCombination:
        """Build from ``{(key, q_exponent): integer}`` accumulators."""
        by_key: dict = {}
        for (key, e), c in counts.items():
            if c:
                by_key.setdefault(key, {})[e] = by_key.get(key, {}).get(e, 0) + c
        terms = {}
        for key, exps in by_key.items():
            coeffs = [0] * (max(exps) + 1)
            for e, c in exps.items():
                coeffs[e] += c
            poly = QPoly(coeffs)
            if poly:
                terms[key] = poly
        return cls._raw(terms)

    # mapping-like access
    def __getitem__(self, key) -> QPoly:
        return self._terms.get(key, ZERO)

    def __contains__(self, key) -> bool:
        return key in self._terms

    def __iter__(self):
        return iter(self.keys())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def keys(self) -> list:
        return sorted(self._terms, key=_sort_key)

    def items(self) -> list:
        return [(k, self._terms[k]) for k in self.keys()]

    def support(self) -> set:
        return set(self._terms)

    @property
    def degree(self) -> int | None:
        """Common length of the words (summed over tensor factors), if homogeneous."""
        lengths = {_key_length(k) for k in self._terms}
        return lengths.pop() if len(lengths) == 1 else None

    def is_homogeneous(self) -> bool:
        return len({_key_length(k) for k in self._terms}) <= 1

    # arithmetic
    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        if not isinstance(other, LinearCombination):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __neg__(self) -> LinearCombination:
        return LinearCombination._raw({k: -c for k, c in self._terms.items()})

    def __add__(self, other) -> LinearCombination:
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, LinearCombination):
            return NotImplemented
        terms = dict(self._terms)
        for k, c in other._terms.items():
            s = terms[k] + c if k in terms else c
            if s:
                terms[k] = s
            else:
                terms.pop(k, None)
        return LinearCombination._raw(terms)

    __radd__ = __add__

    def __sub__(self, other) -> LinearCombination:
        if not isinstance(other, LinearCombination):
            return NotImplemented
        return self + (-other)

    def scale(self, scalar) -> LinearCombination:
        scalar = QPoly.coerce(scalar)
        if not scalar:
            return LinearCombination()
        return LinearCombination._raw(
            {k: p for k, c in self._terms.items() if (p := c * scalar)})

    def __mul__(self, scalar) -> LinearCombination:
        if isinstance(scalar, (int, QPoly)):
            return self.scale(scalar)
        return NotImplemented

    __rmul__ = __mul__

    def combine(self, other: LinearCombination, scalar=1) -> LinearCombination:
        """``self + scalar * other``."""
        return self + other.scale(scalar)

    def map(self, f: Callable) -> LinearCombination:
        """Linear extension of ``f: key -> LinearCombination`` over the terms."""
        out: dict = {}
        for key, c in self._terms.items():
            image = f(key)
            if not isinstance(image, LinearCombination):
                image = lc(image)
            for k2, c2 in image._terms.items():
                p = c * c2
                s = out[k2] + p if k2 in out else p
                if s:
                    out[k2] = s
                else:
                    out.pop(k2, None)
        return LinearCombination._raw(out)

    def evaluate(self, value) -> dict:
        """Substitute ``q = value``; returns ``{key: number}`` without zeros."""
        out = {}
        for k, c in self._terms.items():
            v = c(value)
            if v:
                out[k] = v
        return out

    def specialize(self, value: int) -> LinearCombination:
        """Substitute an integer for ``q`` and keep the result in Z[q]."""
        return LinearCombination((k, c(value)) for k, c in self._terms.items())

    # output
    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for key, c in self.items():
            body = _format_key(key)
            if c == ONE:
                pieces.append(("+", body))
            elif c == -ONE:
                pieces.append(("-", body))
            elif c.is_constant():
                v = c.coeffs[0]
                pieces.append(("-" if v < 0 else "+", f"{abs(v)}{body}"))
            elif sum(1 for a in c.coeffs if a) == 1:
                # a single monomial prints without parentheses: q(1,2), -2q^3(1,2)
                v = c.coeffs[-1]
                mono = str(QPoly.monomial(c.degree, abs(v)))
                pieces.append(("-" if v < 0 else "+", f"{mono}{body}"))
            else:
                pieces.append(("+", f"({c}){body}"))
        text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        return text + "".join(f" {s} {b}" for s, b in pieces[1:])

    def __repr__(self) -> str:
        return f"LinearCombination({self})"

    def to_json(self) -> dict:
        """``{"degree": n, "terms": [{"coeff": [c0, ...], "word": [...]}]}``."""
        terms = []
        for key, c in self.items():
            entry = {"coeff": list(c.coeffs)}
            if key and isinstance(key[0], tuple):
                entry["words"] = [list(w) for w in key]
            else:
                entry["word"] = list(key)
            terms.append(entry)
        return {"degree": self.degree, "terms": terms}

    @classmethod
    def from_json(cls, data: dict | str) -> LinearCombination:
        if isinstance(data, str):
            data = json.loads(data)
        items = []
        for entry in data["terms"]:
            if "words" in entry:
                key = tuple(tuple(w) for w in entry["words"])
            else:
                key = tuple(entry["word"])
            items.append((key, QPoly(entry["coeff"])))
        out = cls(items)
        if data.get("degree") is not None and out and out.degree != data["degree"]:
            raise ValueError(f"declared degree {data['degree']} does not match the terms")
        return out


def _key_length(key) -> int:
    if key and isinstance(key[0], tuple):
        return sum(len(w) for w in key)
    return len(key)


def _format_key(key) -> str:
    if key and isinstance(key[0], tuple):
        return "⊗".join(format_word(w) if w else "1" for w in key)
    return format_word(key) if key else "1"


def lc(terms=None) -> LinearCombination:
    """Convenience constructor: ``lc((2,1))``, ``lc({(1,2): 1, (2,1): -1})``."""
    if terms is None:
        return LinearCombination()
    if isinstance(terms, LinearCombination):
        return terms
    if isinstance(terms, tuple):
        return LinearCombination._raw({terms: ONE})
    return LinearCombination(terms)


def tensor(*factors: LinearCombination) -> LinearCombination:
    """Tensor product; keys become tuples of words (nested tuples flatten)."""
    out: dict = {}
    for combo in _cartesian(*(f._terms.items() for f in factors)):
        key: tuple = ()
        coeff = ONE
        for k, c in combo:
            key += k if (k and isinstance(k[0], tuple)) else (k,)
            coeff = coeff * c
        out[key] = out[key] + coeff if key in out else coeff
    return LinearCombination({k: c for k, c in out.items() if c})


def bilinear(op: Callable) -> Callable:
    """Extend ``op(word, word) -> LinearCombination`` bilinearly."""
    def extended(a: LinearCombination, b: LinearCombination, *args, **kwargs):
        a, b = lc(a), lc(b)
        out: dict = {}
        for x, cx in a._terms.items():
            for y, cy in b._terms.items():
                c = cx * cy
                for k, ck in op(x, y, *args, **kwargs)._terms.items():
                    p = c * ck
                    s = out[k] + p if k in out else p
                    if s:
                        out[k] = s
                    else:
                        out.pop(k, None)
        return LinearCombination._raw(out)
    extended.__name__ = op.__name__
    extended.__doc__ = op.__doc__
    return extended


# -- rank -----------------------------------------------------------------

def coefficient_matrix(vectors: Sequence[LinearCombination]) -> tuple[list, list]:
    """Rows of Z[q] coefficients against the sorted union of the supports."""
    vectors = [lc(v) for v in vectors]
    degrees = {v.degree for v in vectors if v}
    if any(not v.is_homogeneous() for v in vectors) or len(degrees) > 1:
        raise ValueError("rank needs vectors homogeneous of one common degree")
    columns = sorted(set().union(*(v.support() for v in vectors)), key=_sort_key)
    return [[v[c] for c in columns] for v in vectors], columns


def _sparse_rank(rows: Iterable[dict], reduce_row: Callable[[dict], dict]) -> int:
    """Rank by incremental echelon form on sparse rows ``{column: value}``.

    Rows are combined fraction-free, ``row <- p[c] row - row[c] p``, and then
    divided by their content via ``reduce_row`` to keep entries small.
    """
    pivots: dict = {}
    for row in rows:
        row = reduce_row({k: v for k, v in row.items() if v})
        while row:
            lead = min(row)
            pivot = pivots.get(lead)
            if pivot is None:
                pivots[lead] = row
                break
            a, b = pivot[lead], row[lead]
            new = {}
            for k in row.keys() | pivot.keys():
                v = a * row.get(k, 0) - b * pivot.get(k, 0)
                if v:
                    new[k] = v
            row = reduce_row(new)
    return len(pivots)


def _integer_content(row: dict) -> dict:
    g = math.gcd(*row.values()) if row else 1
    return {k: v // g for k, v in row.items()} if g > 1 else row


def _poly_content(row: dict) -> dict:
    g = ZERO
    for v in row.values():
        g = QPoly.gcd(g, v)
        if g == ONE:
            return row
    return {k: v.divexact(g) for k, v in row.items()} if g else row


def _sparse_rows(vectors: Sequence[LinearCombination]) -> list[dict]:
    rows, _ = coefficient_matrix(vectors)
    return [{j: c for j, c in enumerate(r) if c} for r in rows]


def rank_at(vectors: Sequence[LinearCombination], value) -> int:
    """Exact rank over Q after substituting ``q = value`` (int or Fraction)."""
    value = Fraction(value)
    num_rows = []
    for r in _sparse_rows(vectors):
        vals = {j: c(value) for j, c in r.items()}
        den = math.lcm(*(v.denominator for v in vals.values())) if vals else 1
        num_rows.append({j: int(v * den) for j, v in vals.items() if v})
    return _sparse_rank(num_rows, _integer_content)


def symbolic_rank(vectors: Sequence[LinearCombination]) -> int:
    """Rank over Q(q), by fraction-free elimination in Z[q]."""
    return _sparse_rank(_sparse_rows(vectors), _poly_content)


def rank(vectors: Sequence[LinearCombination], at=None, check: bool = True) -> int:
    """Exact rank of homogeneous vectors.

    ``at=None`` gives the rank over the rational functions in ``q``; any
    other value is substituted first.  For the symbolic rank, ``check``
    also specializes at enough points that a maximal nonzero minor cannot
    vanish at all of them and insists the two routes agree.
    """
    if at is not None:
        return rank_at(vectors, at)
    result = symbolic_rank(vectors)
    if check:
        rows, _ = coefficient_matrix(vectors)
        max_deg = max((c.degree for r in rows for c in r), default=0)
        bound = result * max(max_deg, 0)
        best = 0
        for point in range(bound + 1):
            best = max(best, rank_at(vectors, point))
            if best == result:
                break
        if best != result:
            raise ArithmeticError(
                f"symbolic rank {result} disagrees with specializations ({best})")
    return result
