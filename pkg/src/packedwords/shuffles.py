"""Shuffles, stuffles and the block permutations epsilon.

For a composition ``(n1, ..., np)`` of ``n``, a stuffle is a packed word of
length ``n`` that increases strictly inside each block of consecutive
positions.  The bijective ones are the shuffles.  The refined subsets
compare the images of the block ends ``n1, n1 + n2, ..., n``:

========  =====================================
``all``   no condition
``right`` strictly increasing block ends (``>``-type products)
``left``  strictly decreasing block ends
``merged``  all block ends equal
``weak``  weakly increasing block ends
========  =====================================
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import NamedTuple, Sequence

from .words import Word, compose, concat, insert_top

__all__ = [
    "Stuffle", "KINDS", "check_composition", "epsilon", "block_ends",
    "stuffle_words", "shuffle_words", "enumerate_stuffles", "enumerate_shuffles",
    "identity", "compose_sets",
]

KINDS = ("all", "left", "right", "merged", "weak")


class Stuffle(NamedTuple):
    map: tuple
    composition: tuple

    @property
    def defect(self) -> int:
        return len(self.map) - max(self.map, default=0)

    def is_shuffle(self) -> bool:
        return self.defect == 0


def check_composition(parts: Sequence[int]) -> tuple:
    parts = tuple(parts)
    if not parts or any((not isinstance(p, int)) or p < 1 for p in parts):
        raise ValueError(f"not a composition: {parts}")
    return parts


def identity(n: int) -> Word:
    return tuple(range(1, n + 1))


def epsilon(*parts: int) -> Word:
    """Block permutation sending the blocks to reversed value ranges.

    >>> epsilon(2, 1)
    (2, 3, 1)
    >>> epsilon(1, 1, 1)
    (3, 2, 1)
    """
    parts = check_composition(parts)
    if len(parts) == 1:
        return identity(parts[0])
    if len(parts) == 2:
        n, m = parts
        return tuple(range(m + 1, m + n + 1)) + tuple(range(1, m + 1))
    head = epsilon(*parts[:-1])
    return compose(epsilon(sum(parts[:-1]), parts[-1]), concat(head, identity(parts[-1])))


def block_ends(parts: Sequence[int]) -> list[int]:
    return list(itertools.accumulate(parts))


@lru_cache(maxsize=None)
def _all_stuffles(parts: tuple) -> tuple:
    n = sum(parts)
    out = []
    for k in range(max(parts), n + 1):
        values = range(1, k + 1)
        for blocks in itertools.product(*(itertools.combinations(values, p) for p in parts)):
            used = set()
            for b in blocks:
                used.update(b)
            if len(used) == k:
                out.append(tuple(v for b in blocks for v in b))
    out.sort()
    return tuple(out)


def _keep(word: tuple, ends: list[int], kind: str) -> bool:
    e = [word[i - 1] for i in ends]
    pairs = list(zip(e, e[1:]))
    if kind == "all":
        return True
    if kind == "right":
        return all(a < b for a, b in pairs)
    if kind == "left":
        return all(a > b for a, b in pairs)
    if kind == "merged":
        return all(a == b for a, b in pairs)
    if kind == "weak":
        return all(a <= b for a, b in pairs)
    raise ValueError(f"unknown stuffle kind {kind!r}; expected one of {KINDS}")


@lru_cache(maxsize=None)
def stuffle_words(parts: tuple, kind: str = "all") -> tuple:
    """The maps of ``SH^kind(parts)`` as sorted words."""
    parts = check_composition(parts)
    ends = block_ends(parts)
    return tuple(w for w in _all_stuffles(parts) if _keep(w, ends, kind))


@lru_cache(maxsize=None)
def shuffle_words(parts: tuple, kind: str = "all") -> tuple:
    """The maps of ``Sh^kind(parts)`` as sorted words.

    ``merged`` shuffles put one common maximal value at every block end
    over a shuffle of the shortened blocks; they are stuffles of defect
    ``p - 1``, not permutations.
    """
    parts = check_composition(parts)
    if kind == "merged":
        ends = block_ends(parts)
        inner = tuple(p - 1 for p in parts)
        if all(p == 0 for p in inner):
            lowers = [()]
        else:
            lowers = _shuffles_with_empty_blocks(inner)
        return tuple(sorted(insert_top(ends, low) for low in lowers))
    n = sum(parts)
    return tuple(w for w in stuffle_words(parts, kind) if max(w) == n)


def _shuffles_with_empty_blocks(parts: tuple) -> list:
    nonempty = tuple(p for p in parts if p)
    return list(shuffle_words(nonempty, "all"))


def enumerate_stuffles(parts: Sequence[int], kind: str = "all") -> list[Stuffle]:
    """``SH^kind(parts)`` with block metadata, lexicographic on the map.

    >>> [s.map for s in enumerate_stuffles((1, 1))]
    [(1, 1), (1, 2), (2, 1)]
    """
    parts = check_composition(parts)
    return [Stuffle(w, parts) for w in stuffle_words(parts, kind)]


def enumerate_shuffles(parts: Sequence[int], kind: str = "all") -> list[Word]:
    """``Sh^kind(parts)``, lexicographic.

    >>> enumerate_shuffles((2, 2), "right")
    [(1, 2, 3, 4), (1, 3, 2, 4), (2, 3, 1, 4)]
    """
    if kind == "weak":
        raise ValueError("the weak refinement exists for stuffles only")
    return list(shuffle_words(check_composition(parts), kind))


def compose_sets(outer: Sequence[Word], inner: Sequence[Word]) -> set:
    """``{f o g}`` for all pairs, as a set of words."""
    return {compose(f, g) for f in outer for g in inner}
