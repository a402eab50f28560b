"""Generator sets, free brace / GV normal forms, eta, psi and rank reports.

Both free structures live on K[Irr].  A brace node ``M_1m(x; w1..wm)`` with
a generator ``x`` evaluates to ``x \\ (w1 x ... x wm)`` and a product node to
the dot product of its children.  Evaluating the same trees in ST, with
generators sent to ``E(x)``, gives the homomorphisms ``eta`` (brace
structure at ``q = 0``) and ``psi^q`` (braces and ``._q``).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from . import hopf
from .algebra import LinearCombination, rank
from .hopf import OpFamily
from .words import (Word, backslash, concat, count_surjections, dot,
                    format_word, is_indecomposable, is_irreducible,
                    is_packed, surjections)

__all__ = [
    "BasisTables", "BraceTerm", "GVTerm", "enumerate_bases", "brace_terms",
    "gv_terms", "evaluate_normal_form", "brace_normal_form", "gv_normal_form",
    "eta", "psi", "freeness_report", "backslash_splittings", "CEILING",
]

CEILING = 6


# -- generator tables ---------------------------------------------------------

def backslash_splittings(x: Sequence[int]) -> Iterator[tuple[Word, Word]]:
    """All ``(y, z)`` with ``x = y \\ z`` and both words nonempty."""
    x = tuple(x)
    for k in range(1, len(x)):
        z = x[k:]
        if not is_packed(z):
            continue
        s = max(z)
        if min(x[:k]) > s:
            yield tuple(v - s for v in x[:k]), z


@dataclass
class BasisTables:
    """Per-degree generator sets, each sorted in the canonical word order."""
    max_n: int
    irr: dict = field(default_factory=dict)
    indec: dict = field(default_factory=dict)
    D: dict = field(default_factory=dict)
    C: dict = field(default_factory=dict)
    B: dict = field(default_factory=dict)

    def counts(self, n: int) -> dict:
        return {"ST": count_surjections(n), "Irr": len(self.irr[n]),
                "Indec": len(self.indec[n]), "D": len(self.D[n]),
                "C": len(self.C[n]), "B": len(self.B[n])}


@lru_cache(maxsize=None)
def _tables(n: int) -> tuple:
    # (irr, indec, D, C) of degree n as tuples; lower degrees come from the cache
    words = surjections(n)
    irr = tuple(x for x in words if is_irreducible(x))
    indec = tuple(x for x in words if is_indecomposable(x))
    if n == 1:
        return irr, indec, irr, ()
    lower_D = {y for k in range(1, n) for y in _tables(k)[2]}
    lower_B = {y for k in range(1, n) for y in _b_set(k)}
    D = tuple(x for x in irr
              if not any(y in lower_D for y, _ in backslash_splittings(x)))
    C = tuple(x for x in irr
              if not is_indecomposable(x)
              or any(y in lower_B for y, _ in backslash_splittings(x)))
    return irr, indec, D, C


def _b_set(n: int) -> tuple:
    irr, _, _, C = _tables(n)
    c = set(C)
    return tuple(x for x in irr if x not in c)


def enumerate_bases(max_n: int) -> BasisTables:
    """Irr, Indec, D, C and B for degrees ``1..max_n``.

    >>> enumerate_bases(3).B[3]
    [(1, 2, 1), (2, 3, 1)]
    """
    if max_n > CEILING:
        raise ValueError(f"degree {max_n} exceeds the ceiling {CEILING}")
    tables = BasisTables(max_n)
    for n in range(1, max_n + 1):
        irr, indec, D, C = _tables(n)
        tables.irr[n], tables.indec[n] = list(irr), list(indec)
        tables.D[n], tables.C[n], tables.B[n] = list(D), list(C), list(_b_set(n))
    return tables


def generators(kind: str, n: int) -> tuple:
    if kind == "D":
        return _tables(n)[2]
    if kind == "B":
        return _b_set(n)
    raise ValueError(f"unknown generator set {kind!r}")


# -- normal forms -------------------------------------------------------------

@dataclass(frozen=True)
class BraceTerm:
    """``M_1m(root; children)``; a leaf when there are no children."""
    root: Word
    children: tuple = ()

    @property
    def degree(self) -> int:
        return len(self.root) + sum(c.degree for c in self.children)

    def __str__(self) -> str:
        if not self.children:
            return format_word(self.root)
        return f"M({format_word(self.root)}; {', '.join(map(str, self.children))})"


@dataclass(frozen=True)
class GVTerm:
    """A brace node (``root`` set) or an associative product of at least two
    non-product terms (``root`` is None)."""
    root: Word | None
    children: tuple = ()

    @property
    def degree(self) -> int:
        return len(self.root or ()) + sum(c.degree for c in self.children)

    @property
    def is_product(self) -> bool:
        return self.root is None

    def __str__(self) -> str:
        if self.root is None:
            return " . ".join(f"[{c}]" if c.children else str(c) for c in self.children)
        if not self.children:
            return format_word(self.root)
        return f"M({format_word(self.root)}; {', '.join(map(str, self.children))})"


def _sequences(total: int, parts_of, min_len: int = 0) -> Iterator[tuple]:
    """Sequences of terms from ``parts_of(d)`` with degrees summing to ``total``."""
    if total == 0:
        if min_len <= 0:
            yield ()
        return
    for d in range(1, total + 1):
        for head in parts_of(d):
            for tail in _sequences(total - d, parts_of, min_len - 1):
                yield (head,) + tail


@lru_cache(maxsize=None)
def brace_terms(n: int) -> tuple:
    """Normal forms of degree ``n`` in the free brace algebra on D."""
    out = []
    for k in range(1, n + 1):
        for root in generators("D", k):
            for kids in _sequences(n - k, brace_terms):
                out.append(BraceTerm(root, kids))
    return tuple(out)


@lru_cache(maxsize=None)
def _gv_atoms(n: int) -> tuple:
    out = []
    for k in range(1, n + 1):
        for root in generators("B", k):
            for kids in _sequences(n - k, gv_terms):
                out.append(GVTerm(root, kids))
    return tuple(out)


@lru_cache(maxsize=None)
def gv_terms(n: int) -> tuple:
    """Normal forms of degree ``n`` in the free GV algebra on B."""
    products = tuple(GVTerm(None, kids) for kids in _sequences(n, _gv_atoms, 2))
    return _gv_atoms(n) + products


@lru_cache(maxsize=None)
def _generator_set(kind: str, n: int) -> frozenset:
    return frozenset(generators(kind, n))


def _check_term(t, kind: str) -> None:
    if isinstance(t, GVTerm) and t.is_product:
        if len(t.children) < 2 or any(c.is_product for c in t.children):
            raise ValueError(f"malformed product node {t}")
        return
    if not t.root or t.root not in _generator_set(kind, len(t.root)):
        raise ValueError(f"decoration {t.root} is not a generator in {kind}")


def evaluate_normal_form(t: BraceTerm | GVTerm, target: str = "irr",
                         q: int | None | OpFamily = None) -> Word | LinearCombination:
    """Evaluate a tree in K[Irr] (``target="irr"``) or in ST (``target="st"``).

    In ST, generators map to ``E(x)``; brace trees use the ``q = 0``
    braces, GV trees the braces and ``._q`` at parameter ``q``.

    >>> evaluate_normal_form(BraceTerm((1,), (BraceTerm((1,)), BraceTerm((1,)))))
    (3, 1, 2)
    """
    kind = "D" if isinstance(t, BraceTerm) else "B"
    if isinstance(t, BraceTerm):
        family = hopf._family(0)
    else:
        family = hopf._family(q)
    if target not in ("irr", "st"):
        raise ValueError(f"unknown target {target!r}")
    return _evaluate(t, kind, target, family)


def _evaluate(t, kind: str, target: str, family: OpFamily):
    _check_term(t, kind)
    values = [_evaluate(c, kind, target, family) for c in t.children]
    if target == "irr":
        if t.root is None:
            return dot(*values)
        return backslash(t.root, concat(*values)) if values else t.root
    if t.root is None:
        return family.gv_product(*values)
    return family.brace(hopf.eulerian_projector(t.root), values)


@lru_cache(maxsize=None)
def _normal_form_table(kind: str, n: int) -> dict:
    terms = brace_terms(n) if kind == "brace" else gv_terms(n)
    gen = "D" if kind == "brace" else "B"
    table: dict = {}
    for t in terms:
        w = _evaluate(t, gen, "irr", hopf.ST)
        if w in table:
            raise ArithmeticError(f"{table[w]} and {t} both evaluate to {format_word(w)}")
        table[w] = t
    return table


def brace_normal_form(x: Sequence[int]) -> BraceTerm:
    """The unique brace tree over D evaluating to the irreducible ``x``."""
    return _lookup("brace", x)


def gv_normal_form(x: Sequence[int]) -> GVTerm:
    """The unique GV tree over B evaluating to the irreducible ``x``."""
    return _lookup("gv", x)


def _lookup(kind: str, x: Sequence[int]):
    x = tuple(x)
    if not is_packed(x) or not is_irreducible(x):
        raise ValueError(f"{format_word(x)} is not an irreducible packed word")
    if len(x) > CEILING:
        raise ValueError(f"degree {len(x)} exceeds the ceiling {CEILING}")
    try:
        return _normal_form_table(kind, len(x))[x]
    except KeyError:
        raise ArithmeticError(f"no normal form for {format_word(x)}") from None


# -- the homomorphisms ---------------------------------------------------------

@lru_cache(maxsize=None)
def _eta(x: Word) -> LinearCombination:
    t = brace_normal_form(x)
    if not t.children:
        return hopf.eulerian_projector(x)
    return hopf._family(0).brace(hopf.eulerian_projector(t.root),
                                 [_eta(_evaluate(c, "D", "irr", hopf.ST)) for c in t.children])


def eta(x: Sequence[int]) -> LinearCombination:
    """The brace morphism K[Irr] -> ST with ``eta = E`` on D.

    >>> print(eta((2, 1)))
    -(1,2) + (2,1)
    """
    return _eta(tuple(x))


_psi_cache: dict = {}


def psi(x: Sequence[int], q: int | None | OpFamily = None) -> LinearCombination:
    """The GV_q morphism K[Irr] -> ST with ``psi = E`` on B.

    >>> print(psi((2, 3, 1)))
    -(2,1,3) + (2,3,1)
    """
    return _psi(tuple(x), hopf._family(q))


def _psi(x: Word, family: OpFamily) -> LinearCombination:
    key = (x, family)
    if key in _psi_cache:
        return _psi_cache[key]
    t = gv_normal_form(x)
    children = [_psi(_evaluate(c, "B", "irr", hopf.ST), family) for c in t.children]
    if t.is_product:
        value = family.gv_product(*children)
    else:
        value = family.brace(hopf.eulerian_projector(t.root), children)
    _psi_cache[key] = value
    return value


# -- report -------------------------------------------------------------------

def _q_label(q) -> str:
    return "symbolic" if q is None else str(q)


def freeness_report(n: int, q_values: Iterable = (0, 1, -1, 2, None)) -> dict:
    """Ranks of ``E``, ``eta`` and ``psi^q`` in degree ``n`` against ``|Irr_n|``,
    together with the generator counts and the normal-form counts."""
    if n > CEILING:
        raise ValueError(f"degree {n} exceeds the ceiling {CEILING}")
    tables = enumerate_bases(n)
    irr = tables.irr[n]
    counts = tables.counts(n)
    brace_forms = len(brace_terms(n))
    gv_forms = len(gv_terms(n))
    try:
        bijective = (set(_normal_form_table("brace", n)) == set(irr)
                     and set(_normal_form_table("gv", n)) == set(irr))
    except ArithmeticError:
        bijective = False
    ranks: dict = {"E": rank([hopf.eulerian_projector(x) for x in surjections(n)])}
    ranks["eta"] = rank([eta(x) for x in irr]) if bijective else None
    ranks["psi"] = {}
    for q in q_values:
        family = hopf._family(q)
        vectors = [psi(x, family) for x in irr] if bijective else None
        ranks["psi"][_q_label(q)] = rank(vectors) if vectors else None
    target = len(irr)
    passed = (bijective and brace_forms == target and gv_forms == target
              and ranks["E"] == target and ranks["eta"] == target
              and all(v == target for v in ranks["psi"].values()))
    counts["brace_forms"] = brace_forms
    counts["gv_forms"] = gv_forms
    return {"n": n, "counts": counts, "ranks": ranks, "pass": passed}
