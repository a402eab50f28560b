"""Combinatorics of surjective maps written as packed words.

A surjection ``x: [n] -> [r]`` is stored as the plain tuple
``(x(1), ..., x(n))``.  Positions and values are 1-based throughout, as in
the usual one-line notation.  The empty tuple is the unit word.

>>> standardize((1, 5, 4, 7, 5))
(1, 3, 2, 4, 3)
>>> concat((2, 1, 1), (1, 2))
(2, 1, 1, 3, 4)
>>> dot((2, 3, 4, 1, 3), (1, 2))
(2, 3, 5, 1, 3, 4, 5)
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, NamedTuple, Sequence

__all__ = [
    "Word", "TopDecomposition", "GapVector",
    "parse_word", "format_word", "is_packed", "check_packed", "arity", "defect",
    "word_key", "standardize", "restrict", "corestrict", "compose", "concat",
    "irreducible_factorization", "is_irreducible", "top_decomposition",
    "insert_top", "gap_vector", "value_split", "backslash", "dot",
    "dot_cuts", "dot_factorization", "canonical_dot_factorization",
    "is_indecomposable", "surjections", "count_surjections", "bruhat_covers",
    "bruhat_leq", "bruhat_lt",
]

Word = tuple  # tuple[int, ...]


class TopDecomposition(NamedTuple):
    """``x`` seen as its maximal value inserted into a smaller word."""
    positions: tuple  # where x takes its maximal value, increasing
    lower: tuple      # co-restriction of x to the values below the maximum

    @property
    def lam(self) -> int:
        return len(self.positions)


class GapVector(NamedTuple):
    entries: tuple  # (M_lam, ..., M_1), compared lexicographically
    head_gap: int   # M_0, the number of letters before the first top


# -- construction and parsing ---------------------------------------------

def parse_word(text: str, packed: bool = True) -> Word:
    """Parse ``"3,4,2,5"`` into a word; whitespace is ignored.

    With ``packed=True`` (the default) the result must be a surjection.
    """
    cleaned = "".join(text.split()).strip(",")
    if not cleaned:
        raise ValueError("empty word literal")
    try:
        word = tuple(int(tok) for tok in cleaned.split(","))
    except ValueError:
        raise ValueError(f"not a comma-separated list of integers: {text!r}") from None
    if any(v < 1 for v in word):
        raise ValueError(f"letters must be positive integers: {text!r}")
    if packed:
        check_packed(word)
    return word


def format_word(word: Sequence[int]) -> str:
    return "(" + ",".join(map(str, word)) + ")"


def is_packed(word: Sequence[int]) -> bool:
    """True when the letters of ``word`` are exactly ``{1, ..., max}``."""
    return set(word) == set(range(1, len(set(word)) + 1))


def check_packed(word: Sequence[int]) -> Word:
    if not is_packed(word):
        raise ValueError(f"{format_word(word)} is not a packed word")
    return tuple(word)


def arity(word: Sequence[int]) -> int:
    return max(word, default=0)


def defect(word: Sequence[int]) -> int:
    """``n - r``: zero exactly for permutations."""
    return len(word) - arity(word)


def word_key(word: Sequence[int]) -> tuple:
    """Canonical total order: by length, then lexicographically."""
    return (len(word), tuple(word))


def surjections(n: int, r: int | None = None) -> list[Word]:
    """All packed words of length ``n`` (and arity ``r`` if given), sorted."""
    if n == 0:
        return [()] if r in (None, 0) else []
    arities = range(1, n + 1) if r is None else [r]
    out = []
    for k in arities:
        out.extend(_surjections_of_arity(n, k))
    return sorted(out)


@lru_cache(maxsize=None)
def _surjections_of_arity(n: int, r: int) -> tuple:
    if r < 1 or r > n:
        return ()
    return tuple(w for w in itertools.product(range(1, r + 1), repeat=n)
                 if len(set(w)) == r)


@lru_cache(maxsize=None)
def count_surjections(n: int) -> int:
    """Ordered Bell (Fubini) number: ``|ST_n|``."""
    if n == 0:
        return 1
    return sum(comb(n, k) * count_surjections(n - k) for k in range(1, n + 1))


# -- standardization, restrictions, composition ---------------------------

def standardize(seq: Sequence[int]) -> Word:
    """The packed word with the same strict comparisons as ``seq``."""
    if len(seq) == 0:
        return ()
    rank = {v: i for i, v in enumerate(sorted(set(seq)), start=1)}
    return tuple(rank[v] for v in seq)


def restrict(x: Sequence[int], positions: Iterable[int]) -> Word:
    """``x|_J``: standardized subword at the (1-based) positions ``J``."""
    J = sorted(set(positions))
    if not J:
        raise ValueError("restriction to an empty position set")
    if J[0] < 1 or J[-1] > len(x):
        raise ValueError(f"positions {J} out of range for a word of length {len(x)}")
    return standardize([x[j - 1] for j in J])


def corestrict(x: Sequence[int], values: Iterable[int]) -> Word:
    """``x|^K``: standardized subword of the letters lying in ``K``."""
    K = set(values)
    if not K:
        raise ValueError("co-restriction to an empty value set")
    r = arity(x)
    if min(K) < 1 or max(K) > r:
        raise ValueError(f"values {sorted(K)} out of range for arity {r}")
    return standardize([v for v in x if v in K])


def _corestrict_range(x: Sequence[int], lo: int, hi: int) -> Word:
    # co-restriction to the interval {lo..hi}: a shift suffices, no sorting
    return tuple(v - lo + 1 for v in x if lo <= v <= hi)


def compose(f: Sequence[int], x: Sequence[int]) -> Word:
    """``f o x``: relabel the letters of ``x`` through ``f``."""
    return tuple(f[v - 1] for v in x)


def concat(*words: Sequence[int]) -> Word:
    """``x1 x ... x xk``: juxtapose, shifting each factor above the previous ones."""
    out: list[int] = []
    shift = 0
    for w in words:
        out.extend(v + shift for v in w)
        shift += arity(w)
    return tuple(out)


# -- concatenation factorization ------------------------------------------

def _concat_cuts(x: Sequence[int]) -> list[int]:
    """Lengths ``i`` with ``x = std(x[:i]) x std(x[i:])``."""
    cuts = []
    running_max = 0
    suffix_min = [0] * (len(x) + 1)
    suffix_min[len(x)] = 1 << 62
    for i in range(len(x) - 1, -1, -1):
        suffix_min[i] = min(x[i], suffix_min[i + 1])
    for i in range(1, len(x)):
        running_max = max(running_max, x[i - 1])
        if running_max < suffix_min[i]:
            cuts.append(i)
    return cuts


def irreducible_factorization(x: Sequence[int]) -> list[Word]:
    """Unique factorization ``x = x1 x ... x xp`` into irreducibles.

    >>> irreducible_factorization((1, 2))
    [(1,), (1,)]
    >>> irreducible_factorization((2, 1))
    [(2, 1)]
    """
    if len(x) == 0:
        raise ValueError("the unit word has no factorization")
    bounds = [0, *_concat_cuts(x), len(x)]
    return [standardize(x[a:b]) for a, b in zip(bounds, bounds[1:])]


def is_irreducible(x: Sequence[int]) -> bool:
    return len(x) > 0 and not _concat_cuts(x)


# -- maximal value, gaps and value splits ---------------------------------

def top_decomposition(x: Sequence[int]) -> TopDecomposition:
    """Split off the maximal value: ``(3,1,2,5,1,4,3,5,4,2)`` has tops at 4, 8."""
    if len(x) == 0:
        raise ValueError("the unit word has no maximal value")
    r = arity(x)
    positions = tuple(i for i, v in enumerate(x, start=1) if v == r)
    lower = tuple(v for v in x if v != r)
    return TopDecomposition(positions, lower)


def insert_top(positions: Sequence[int], lower: Sequence[int]) -> Word:
    """Inverse of :func:`top_decomposition`."""
    n = len(lower) + len(positions)
    top = arity(lower) + 1
    tops = set(positions)
    if len(tops) != len(positions) or not tops or min(tops) < 1 or max(tops) > n:
        raise ValueError(f"invalid top positions {tuple(positions)} for length {n}")
    rest = iter(lower)
    return tuple(top if i in tops else next(rest) for i in range(1, n + 1))


def gap_vector(x: Sequence[int]) -> GapVector:
    """Gaps between consecutive tops, listed from the last one backwards."""
    positions, _ = top_decomposition(x)
    n = len(x)
    inner = [positions[i + 1] - positions[i] - 1 for i in range(len(positions) - 1)]
    entries = (n - positions[-1], *reversed(inner))
    return GapVector(tuple(entries), positions[0] - 1)


def value_split(x: Sequence[int], cuts: Sequence[int]) -> Word:
    """``x^l``: cut the values of ``x`` at ``l1 < ... < lp`` and concatenate.

    >>> value_split((2, 3, 1), (2,))
    (2, 1, 3)
    """
    r = arity(x)
    cuts = tuple(cuts)
    if any(b <= a for a, b in zip(cuts, cuts[1:])):
        raise ValueError(f"cuts must be strictly increasing: {cuts}")
    if cuts and (cuts[0] < 1 or cuts[-1] >= r):
        raise ValueError(f"cuts {cuts} must lie strictly between 0 and the arity {r}")
    bounds = [0, *cuts, r]
    return concat(*(_corestrict_range(x, a + 1, b) for a, b in zip(bounds, bounds[1:])))


# -- the products backslash and dot ----------------------------------------

def backslash(y: Sequence[int], z: Sequence[int]) -> Word:
    """``y \\ z = eps(r, s) o (y x z)``: ``y`` on top of ``z``, side by side."""
    if len(y) == 0 or len(z) == 0:
        raise ValueError("backslash needs two non-empty words")
    s = arity(z)
    return tuple(v + s for v in y) + tuple(z)


def dot(*words: Sequence[int]) -> Word:
    """Merge the maximal values: tops of each factor, lower words concatenated.

    >>> dot((1,), (1,))
    (1, 1)
    >>> dot((2, 3, 4, 1, 3), (1, 2), (1, 2, 3, 1))
    (2, 3, 7, 1, 3, 4, 7, 5, 6, 7, 5)
    """
    if not words or any(len(w) == 0 for w in words):
        raise ValueError("dot needs non-empty words")
    positions: list[int] = []
    lowers = []
    offset = 0
    for w in words:
        tops, lower = top_decomposition(w)
        positions.extend(j + offset for j in tops)
        lowers.append(lower)
        offset += len(w)
    return insert_top(positions, concat(*lowers))


def dot_cuts(x: Sequence[int]) -> list[int]:
    """Lengths ``i`` with ``x = std(x[:i]) . std(x[i:])``."""
    n = len(x)
    if n < 2:
        return []
    r = arity(x)
    cuts = []
    for i in range(1, n):
        left, right = x[:i], x[i:]
        if r not in left or r not in right:
            continue
        lo = [v for v in left if v != r]
        hi = [v for v in right if v != r]
        if lo and hi and max(lo) >= min(hi):
            continue
        cuts.append(i)
    return cuts


def _split_at(x: Sequence[int], cuts: Sequence[int]) -> list[Word]:
    bounds = [0, *cuts, len(x)]
    return [standardize(x[a:b]) for a, b in zip(bounds, bounds[1:])]


def _compatible_cut_sets(x: Sequence[int]) -> Iterator[tuple]:
    # every factor of a dot product must contain a top of x
    r = arity(x)
    tops = [i for i, v in enumerate(x, start=1) if v == r]
    valid = dot_cuts(x)

    def extend(prev: int, chosen: tuple):
        yield chosen
        for c in valid:
            if c > prev and any(prev < t <= c for t in tops):
                yield from extend(c, chosen + (c,))

    for cuts in extend(0, ()):
        if not cuts or any(t > cuts[-1] for t in tops):
            yield cuts


def dot_factorization(x: Sequence[int]) -> list[Word]:
    """A longest factorization into dot-indecomposables, cutting leftmost.

    Longest factorizations need not be unique: ``(2,1,2)`` is both
    ``(1).(1,2)`` and ``(2,1).(1)``; the leftmost cuts are taken.
    """
    if len(x) == 0:
        raise ValueError("the unit word has no factorization")
    r = arity(x)
    tops = [i for i, v in enumerate(x, start=1) if v == r]
    cuts: list[int] = []
    prev = 0
    for c in dot_cuts(x):
        if c > prev and any(prev < t <= c for t in tops) and any(t > c for t in tops):
            cuts.append(c)
            prev = c
    return _split_at(x, cuts)


def canonical_dot_factorization(x: Sequence[int]) -> list[Word]:
    """The factorization ``x = x1 . ... . xp`` into indecomposables with
    ``x2, ..., xp`` irreducible.

    >>> canonical_dot_factorization((2, 1, 2))
    [(2, 1), (1,)]
    """
    if len(x) == 0:
        raise ValueError("the unit word has no factorization")
    found = []
    for cuts in _compatible_cut_sets(x):
        factors = _split_at(x, cuts)
        if all(is_indecomposable(f) for f in factors) and all(
                is_irreducible(f) for f in factors[1:]):
            found.append(factors)
    if len(found) != 1:
        raise ArithmeticError(
            f"{format_word(x)} has {len(found)} canonical dot factorizations")
    return found[0]


def is_indecomposable(x: Sequence[int]) -> bool:
    return len(x) > 0 and not dot_cuts(x)


# -- weak Bruhat order ------------------------------------------------------

def bruhat_covers(x: Sequence[int], side: str = "values") -> list[Word]:
    """Words ``t_i o x`` with every ``i`` placed before every ``i+1`` in ``x``.

    ``side="positions"`` gives the other weak order instead: swap two
    adjacent letters ``x[j] < x[j+1]``.
    """
    if side == "positions":
        return [tuple(x[:j]) + (x[j + 1], x[j]) + tuple(x[j + 2:])
                for j in range(len(x) - 1) if x[j] < x[j + 1]]
    if side != "values":
        raise ValueError(f"unknown side {side!r}")
    r = arity(x)
    out = []
    for i in range(1, r):
        pos_i = [p for p, v in enumerate(x) if v == i]
        pos_j = [p for p, v in enumerate(x) if v == i + 1]
        if max(pos_i) < min(pos_j):
            out.append(tuple(i + 1 if v == i else i if v == i + 1 else v for v in x))
    return out


def _check_same_domain(x: Sequence[int], y: Sequence[int]) -> None:
    if len(x) != len(y) or arity(x) != arity(y):
        raise ValueError(
            f"{format_word(x)} and {format_word(y)} live in different sets ST_n^r")


def bruhat_leq(x: Sequence[int], y: Sequence[int], side: str = "values") -> bool:
    """Reflexive-transitive closure of :func:`bruhat_covers`.

    >>> bruhat_leq((1, 4, 1, 3, 4, 2), (2, 4, 2, 3, 4, 1))
    True
    """
    _check_same_domain(x, y)
    x, y = tuple(x), tuple(y)
    # every cover adds inversions, so the search is a finite DAG walk
    seen = {x}
    frontier = [x]
    while frontier:
        w = frontier.pop()
        if w == y:
            return True
        for c in bruhat_covers(w, side):
            if c not in seen:
                seen.add(c)
                frontier.append(c)
    return False


def bruhat_lt(x: Sequence[int], y: Sequence[int], side: str = "values") -> bool:
    return tuple(x) != tuple(y) and bruhat_leq(x, y, side)
