"""Coalgebra, (tri)dendriform, brace and GV operations on K[ST].

All products are computed by enumerating the relevant stuffles ``f`` and
summing ``f o (x x y)``.  Coefficients live in Z[q] with ``q`` symbolic
unless an :class:`OpFamily` is built for a specific integer.

The unit ``1_K`` is represented by the empty word ``()`` and only appears
in the augmented coproduct and in the unit conventions of the two-sided
dendriform operations.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from typing import Callable, Iterable, Sequence

from .algebra import ONE, Q, LinearCombination, QPoly, bilinear, lc, tensor
from .shuffles import shuffle_words, stuffle_words
from .words import (Word, _corestrict_range, arity, compose, concat,
                    value_split)

__all__ = [
    "OpFamily", "ST", "coproduct", "full_coproduct", "reduced_coproduct_power",
    "shuffle_product", "concat_product", "tridendriform", "dendriform",
    "eulerian_projector", "is_primitive", "omega", "brace", "multiply_tensor",
    "reconstruct", "dot_product", "perturbed_family",
]

UNIT: Word = ()


# -- coproduct ----------------------------------------------------------

def _word_coproduct(x: Word) -> LinearCombination:
    r = arity(x)
    return LinearCombination._raw({
        (_corestrict_range(x, 1, i), _corestrict_range(x, i + 1, r)): ONE
        for i in range(1, r)})


def coproduct(a) -> LinearCombination:
    """Sum of co-restriction pairs over the value cuts ``1..r-1``.

    This is the reduced coproduct of the augmented coalgebra: no ``1 (x) x``
    or ``x (x) 1`` terms.
    """
    return lc(a).map(_word_coproduct)


def full_coproduct(a) -> LinearCombination:
    """Augmented coproduct: ``1 (x) x + x (x) 1 + coproduct(x)``; ``1 -> 1 (x) 1``."""
    def one(x: Word) -> LinearCombination:
        if x == UNIT:
            return lc(((), ()))
        return _word_coproduct(x) + LinearCombination._raw(
            {((), x): ONE, (x, ()): ONE})
    return lc(a).map(one)


def reduced_coproduct_power(a, i: int) -> LinearCombination:
    """``i``-fold iterated reduced coproduct; ``i = 1`` is the identity.

    Keys are ``i``-tuples of words.
    """
    if i < 1:
        raise ValueError("the iterated coproduct starts at i = 1")
    current = lc(a).map(lambda x: LinearCombination._raw({(x,): ONE}))
    for _ in range(i - 1):
        current = current.map(
            lambda key: _word_coproduct(key[-1]).map(
                lambda pair: LinearCombination._raw({key[:-1] + pair: ONE})))
    return current


# -- products ---------------------------------------------------------------

def concat_product(a, b) -> LinearCombination:
    """Bilinear extension of concatenation ``x x y``."""
    return _bilinear(lambda x, y: LinearCombination._raw({concat(x, y): ONE}), a, b)


def _bilinear(op: Callable, a, b) -> LinearCombination:
    return bilinear(op)(a, b)


def _shuffle_sum(maps: Iterable[Word], x: Word, y: Word) -> LinearCombination:
    z = concat(x, y)
    counts: dict = defaultdict(int)
    for f in maps:
        counts[compose(f, z)] += 1
    return LinearCombination((k, c) for k, c in counts.items())


def shuffle_product(a, b) -> LinearCombination:
    """``x * y``: sum over ``Sh(r, s)`` of ``f o (x x y)``."""
    def word(x, y):
        return _shuffle_sum(shuffle_words((arity(x), arity(y))), x, y)
    return _bilinear(word, a, b)


class OpFamily:
    """The q-tridendriform structure and everything derived from it.

    ``q=None`` keeps ``q`` symbolic; an integer specializes every result.
    ``stuffles(parts, kind)`` supplies the stuffle sets (``kind`` one of
    ``"right"``, ``"merged"``, ``"left"``) and may be replaced to inject
    faults; the weak product, the associative product and the brace
    operations are derived from those three sets.
    """

    def __init__(self, q: int | None = None,
                 stuffles: Callable[[tuple, str], Iterable[Word]] = stuffle_words):
        self.q = q
        self.stuffles = stuffles
        self._cache: dict = {}
        self._qpoly = Q if q is None else QPoly(q)

    def __repr__(self) -> str:
        return f"OpFamily(q={'q' if self.q is None else self.q})"

    def _word_product(self, x: Word, y: Word, kind: str) -> LinearCombination:
        key = (x, y, kind)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        z = concat(x, y)
        shift = 1 if kind == "merged" else 0
        counts: dict = defaultdict(int)
        for f in self.stuffles((arity(x), arity(y)), kind):
            counts[(compose(f, z), len(f) - max(f) - shift)] += 1
        result = LinearCombination.from_monomials(counts)
        if self.q is not None:
            result = result.specialize(self.q)
        self._cache[key] = result
        return result

    def right(self, a, b) -> LinearCombination:
        """``a >_q b``."""
        return _bilinear(lambda x, y: self._word_product(x, y, "right"), a, b)

    def middle(self, a, b) -> LinearCombination:
        """``a ._q b``."""
        return _bilinear(lambda x, y: self._word_product(x, y, "merged"), a, b)

    def left(self, a, b) -> LinearCombination:
        """``a <_q b``."""
        return _bilinear(lambda x, y: self._word_product(x, y, "left"), a, b)

    def weak(self, a, b) -> LinearCombination:
        """``a >=_q b = q (a ._q b) + a >_q b``."""
        return self.right(a, b) + self.middle(a, b).scale(self._qpoly)

    def star(self, a, b) -> LinearCombination:
        """The associative product ``<_q + >=_q``."""
        return self.left(a, b) + self.weak(a, b)

    def product(self, a, b, which: str) -> LinearCombination:
        ops = {"right": self.right, "middle": self.middle, "left": self.left,
               "weak-right": self.weak, "weak": self.weak, "star": self.star}
        try:
            return ops[which](a, b)
        except KeyError:
            raise ValueError(f"unknown product {which!r}") from None

    # derived operations
    def omega(self, ys: Sequence, which: str) -> LinearCombination:
        """Nested folds: ``left`` is ``y1 < (y2 < (...))``; ``right`` and
        ``weak-right`` are ``((y1 >= y2) >= ...)``."""
        ys = [lc(y) for y in ys]
        if not ys:
            raise ValueError("omega needs at least one argument")
        if which == "left":
            acc = ys[-1]
            for y in reversed(ys[:-1]):
                acc = self.left(y, acc)
            return acc
        if which in ("right", "weak-right", "weak"):
            op = self.right if which == "right" else self.weak
            acc = ys[0]
            for y in ys[1:]:
                acc = op(acc, y)
            return acc
        raise ValueError(f"unknown omega kind {which!r}")

    def brace(self, x, ys: Sequence) -> LinearCombination:
        """``M_1n(x; y1..yn) = sum_r (-1)^r w<(y1..yr) >= x < w>=(y(r+1)..yn)``.

        With this sign ``M_11(x; y) = x < y - y >= x`` and the brace
        operations together with ``._q`` satisfy the q-weighted distributive
        law; the opposite sign only satisfies it with ``q`` replaced by ``-q``.
        """
        x = lc(x)
        n = len(ys)
        if n == 0:
            return x
        total = LinearCombination()
        for r in range(n + 1):
            term = x
            if r > 0:
                term = self.weak(self.omega(ys[:r], "left"), term)
            if r < n:
                term = self.left(term, self.omega(ys[r:], "weak-right"))
            total = total + (term if r % 2 == 0 else -term)
        return total

    def gv_product(self, *factors) -> LinearCombination:
        acc = lc(factors[0])
        for f in factors[1:]:
            acc = self.middle(acc, f)
        return acc


ST = OpFamily()


def perturbed_family(kind: str, parts: tuple, drop: Iterable[Word] = (),
                     add: Iterable[Word] = (), q: int | None = None) -> OpFamily:
    """A family whose stuffle set ``SH^kind(parts)`` has maps removed or added.

    Used to check that the axiom suites notice a wrong product.
    """
    drop, add = set(drop), tuple(add)
    parts = tuple(parts)

    def stuffles(p: tuple, k: str):
        words = stuffle_words(p, k)
        if k == kind and tuple(p) == parts:
            words = tuple(w for w in words if w not in drop) + add
        return words
    return OpFamily(q, stuffles)


_FAMILIES: dict = {None: ST}


def _family(q) -> OpFamily:
    # one shared family per parameter so the product caches are reused
    if isinstance(q, OpFamily):
        return q
    if q not in _FAMILIES:
        _FAMILIES[q] = OpFamily(q)
    return _FAMILIES[q]


def tridendriform(a, b, which: str, q=None) -> LinearCombination:
    """One of ``right``, ``middle``, ``left``, ``weak-right`` at parameter ``q``."""
    return _family(q).product(a, b, which)


def dot_product(a, b, q=None) -> LinearCombination:
    return _family(q).middle(a, b)


def dendriform(a, b, which: str) -> LinearCombination:
    """The shuffle-based pair ``>`` / ``<`` (the ``q = 0`` structure).

    Accepts the empty word as the unit: ``x < 1 = x = 1 > x`` and
    ``x > 1 = 0 = 1 < x``; ``1 > 1`` and ``1 < 1`` are undefined.
    """
    if which not in ("right", "left"):
        raise ValueError(f"unknown dendriform product {which!r}")

    def word(x, y):
        if x == UNIT and y == UNIT:
            raise ValueError(f"1 {'>' if which == 'right' else '<'} 1 is undefined")
        if y == UNIT:
            return lc(x) if which == "left" else LinearCombination()
        if x == UNIT:
            return lc(y) if which == "right" else LinearCombination()
        return _shuffle_sum(shuffle_words((arity(x), arity(y)), which), x, y)
    return _bilinear(word, a, b)


def omega(ys: Sequence, which: str, q=None) -> LinearCombination:
    return _family(q).omega(ys, which)


def brace(x, ys: Sequence, q=None) -> LinearCombination:
    return _family(q).brace(x, ys)


# -- primitives and the idempotent ----------------------------------------

def _word_projector(x: Word) -> LinearCombination:
    r = arity(x)
    out: dict = defaultdict(int)
    for p in range(r):
        sign = -1 if p % 2 else 1
        for cuts in itertools.combinations(range(1, r), p):
            out[value_split(x, cuts)] += sign
    return LinearCombination(out.items())


def eulerian_projector(a) -> LinearCombination:
    """``E(x) = sum over value cuts l of (-1)^#l x^l``; projects onto primitives.

    >>> print(eulerian_projector((2, 3, 1)))
    -(2,1,3) + (2,3,1)
    """
    return lc(a).map(_word_projector)


def is_primitive(a) -> bool:
    return not coproduct(a)


def multiply_tensor(t: LinearCombination) -> LinearCombination:
    """Concatenate the factors of every tensor key."""
    return t.map(lambda key: LinearCombination._raw({concat(*key): ONE}))


def reconstruct(a) -> LinearCombination:
    """``sum_j x^j o E^(x)j o reduced_coproduct_power(j)`` applied to ``a``."""
    a = lc(a)
    total = LinearCombination()
    j = 1
    while True:
        power = reduced_coproduct_power(a, j)
        if not power:
            return total
        projected = power.map(
            lambda key: tensor(*(eulerian_projector(w) for w in key)))
        total = total + multiply_tensor(projected)
        j += 1
