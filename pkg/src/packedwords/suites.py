"""Exhaustive axiom and property suites with minimal counterexamples.

A suite is a generator of checks ordered by total degree; :func:`run_suite`
evaluates them in that order and stops at the first failure, so a reported
counterexample always has the smallest degree among failures.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Iterator

from . import hopf
from .algebra import ONE, LinearCombination, QPoly, lc, tensor
from .hopf import OpFamily
from .shuffles import (compose_sets, enumerate_shuffles, epsilon, identity,
                       shuffle_words, stuffle_words)
from .words import (Word, arity, backslash, bruhat_covers, bruhat_leq,
                    bruhat_lt, canonical_dot_factorization, compose, concat,
                    dot, dot_factorization, format_word, gap_vector,
                    insert_top, irreducible_factorization, is_irreducible,
                    restrict, surjections, top_decomposition, value_split)

__all__ = ["Check", "Counterexample", "SuiteReport", "SUITES", "DEFAULT_BOUNDS",
           "run_suite", "axiom_suite", "word_tuples"]

UNIT: Word = ()


@dataclass(frozen=True)
class Check:
    relation: str
    inputs: tuple
    degree: int
    # returns the defect of the identity: a zero LinearCombination, True,
    # or an empty container mean the check passed
    evaluate: Callable[[], object]


@dataclass
class Counterexample:
    relation: str
    inputs: tuple
    degree: int
    difference: object = None

    def to_json(self) -> dict:
        diff = self.difference
        if isinstance(diff, LinearCombination):
            diff = diff.to_json()
        elif diff is not None and not isinstance(diff, (bool, int, str)):
            diff = repr(diff)
        return {"relation": self.relation, "degree": self.degree,
                "inputs": [_render(a) for a in self.inputs], "difference": diff}

    def __str__(self) -> str:
        args = ", ".join(_render(a) for a in self.inputs)
        text = f"{self.relation} fails at degree {self.degree} on ({args})"
        if isinstance(self.difference, LinearCombination):
            text += f": lhs - rhs = {self.difference}"
        elif self.difference not in (None, False):
            text += f": {self.difference}"
        return text


@dataclass
class SuiteReport:
    suite: str
    bound: int
    passed: bool
    checked: int
    relations: dict = field(default_factory=dict)
    counterexample: Counterexample | None = None

    def to_json(self) -> dict:
        return {"suite": self.suite, "bound": self.bound, "pass": self.passed,
                "checked": self.checked, "relations": dict(sorted(self.relations.items())),
                "counterexample": self.counterexample.to_json() if self.counterexample else None}

    def __str__(self) -> str:
        head = f"{self.suite} (bound {self.bound}): {'pass' if self.passed else 'FAIL'}, {self.checked} checks"
        if self.counterexample:
            head += f"\n  {self.counterexample}"
        return head


def _render(a) -> str:
    if isinstance(a, LinearCombination):
        return str(a)
    if isinstance(a, tuple) and all(isinstance(v, int) for v in a):
        return format_word(a) if a else "1"
    if isinstance(a, (list, tuple)):
        return "[" + ", ".join(_render(b) for b in a) + "]"
    return str(a)


def _failed(result) -> bool:
    if isinstance(result, bool):
        return not result
    return bool(result)


def run_suite(name: str, checks: Iterator[Check], bound: int) -> SuiteReport:
    report = SuiteReport(name, bound, True, 0)
    for check in checks:
        result = check.evaluate()
        report.checked += 1
        report.relations[check.relation] = report.relations.get(check.relation, 0) + 1
        if _failed(result):
            report.passed = False
            report.counterexample = Counterexample(
                check.relation, check.inputs, check.degree,
                None if isinstance(result, bool) else result)
            break
    return report


# -- enumeration ------------------------------------------------------------

def _compositions(total: int, parts: int) -> Iterator[tuple]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def word_tuples(k: int, bound: int, start: int = 1) -> Iterator[tuple[int, tuple]]:
    """``(total, (w1..wk))`` with nonempty words, by total degree then shape."""
    for total in range(max(start, k), bound + 1):
        for shape in _compositions(total, k):
            for ws in itertools.product(*(surjections(d) for d in shape)):
                yield total, ws


def _diff(lhs: LinearCombination, rhs: LinearCombination) -> LinearCombination:
    return lhs - rhs


# -- dendriform and tridendriform -------------------------------------------

def _dendriform_checks(left, right, tag: str, bound: int) -> Iterator[Check]:
    for d, (a, b, c) in word_tuples(3, bound):
        yield Check(f"{tag} (a<b)<c = a<(b<c + b>c)", (a, b, c), d,
                    lambda a=a, b=b, c=c: _diff(left(left(a, b), c),
                                               left(a, left(b, c) + right(b, c))))
        yield Check(f"{tag} (a>b)<c = a>(b<c)", (a, b, c), d,
                    lambda a=a, b=b, c=c: _diff(left(right(a, b), c), right(a, left(b, c))))
        yield Check(f"{tag} (a<b + a>b)>c = a>(b>c)", (a, b, c), d,
                    lambda a=a, b=b, c=c: _diff(right(left(a, b) + right(a, b), c),
                                               right(a, right(b, c))))


def dendriform_suite(bound: int, family: OpFamily | None = None) -> Iterator[Check]:
    """The three relations for the shuffle pair and for ``(>=_q, <_q)``."""
    fam = family or hopf.ST
    shuffle_right = lambda a, b: hopf.dendriform(a, b, "right")
    shuffle_left = lambda a, b: hopf.dendriform(a, b, "left")
    yield from _merge_by_degree(
        _dendriform_checks(shuffle_left, shuffle_right, "shuffle", bound),
        _dendriform_checks(fam.left, fam.weak, "q-weak", bound))


def _merge_by_degree(*streams: Iterator[Check]) -> Iterator[Check]:
    # each stream is sorted by degree; keep the merged stream sorted too
    return heapq.merge(*streams, key=lambda c: c.degree)


def tridendriform_suite(bound: int, family: OpFamily | None = None) -> Iterator[Check]:
    """Seven relations with symbolic ``q``, the weak-product partition and
    specialization coherence at ``q`` in {0, 1, -1, 2}."""
    F = family or hopf.ST
    qp = F._qpoly
    L, M, R = F.left, F.middle, F.right
    relations = [
        ("(a<b)<c = a<(b<c + b>c + q b.c)",
         lambda a, b, c: _diff(L(L(a, b), c), L(a, L(b, c) + R(b, c) + M(b, c).scale(qp)))),
        ("(a>b)<c = a>(b<c)", lambda a, b, c: _diff(L(R(a, b), c), R(a, L(b, c)))),
        ("(a<b + a>b + q a.b)>c = a>(b>c)",
         lambda a, b, c: _diff(R(L(a, b) + R(a, b) + M(a, b).scale(qp), c), R(a, R(b, c)))),
        ("(a.b).c = a.(b.c)", lambda a, b, c: _diff(M(M(a, b), c), M(a, M(b, c)))),
        ("(a>b).c = a>(b.c)", lambda a, b, c: _diff(M(R(a, b), c), R(a, M(b, c)))),
        ("(a<b).c = a.(b>c)", lambda a, b, c: _diff(M(L(a, b), c), M(a, R(b, c)))),
        ("(a.b)<c = a.(b<c)", lambda a, b, c: _diff(L(M(a, b), c), M(a, L(b, c)))),
    ]
    specialized = {v: OpFamily(v) for v in (0, 1, -1, 2)} if F.q is None else {}
    pairs = word_tuples(2, bound)
    triples = word_tuples(3, bound)
    pending_pairs = next(pairs, None)
    for d, (a, b, c) in itertools.chain(triples, [(bound + 1, (None,) * 3)]):
        while pending_pairs is not None and pending_pairs[0] <= d:
            pd, (x, y) = pending_pairs
            yield Check(">=_q = sum over weak stuffles", (x, y), pd,
                        lambda x=x, y=y: _diff(F.weak(x, y), _weak_direct(F, x, y)))
            for v, G in specialized.items():
                yield Check(f"specialization at q={v}", (x, y), pd,
                            lambda x=x, y=y, v=v, G=G: _specialization_gap(F, G, x, y, v))
            pending_pairs = next(pairs, None)
        if a is None:
            break
        for name, rel in relations:
            yield Check(name, (a, b, c), d, lambda rel=rel, a=a, b=b, c=c: rel(a, b, c))


def _weak_direct(F: OpFamily, x: Word, y: Word) -> LinearCombination:
    z = concat(x, y)
    counts: dict = {}
    for f in stuffle_words((arity(x), arity(y)), "weak"):
        key = (compose(f, z), len(f) - max(f))
        counts[key] = counts.get(key, 0) + 1
    out = LinearCombination.from_monomials(counts)
    return out if F.q is None else out.specialize(F.q)


def _specialization_gap(F: OpFamily, G: OpFamily, x: Word, y: Word, v: int):
    for which in ("left", "middle", "right"):
        gap = F.product(x, y, which).specialize(v) - G.product(x, y, which)
        if gap:
            return gap
    return LinearCombination()


# -- coproduct compatibilities ------------------------------------------------

def _unit_star(star, x: Word, y: Word) -> LinearCombination:
    if x == UNIT:
        return lc(y)
    if y == UNIT:
        return lc(x)
    return star(x, y)


def _unit_op(op, kind: str, x: Word, y: Word) -> LinearCombination:
    if x == UNIT and y == UNIT:
        raise ValueError("1 op 1 is handled by the bialgebra convention")
    if kind == "middle" and (x == UNIT or y == UNIT):
        return LinearCombination()
    if y == UNIT:
        return lc(x) if kind == "left" else LinearCombination()
    if x == UNIT:
        return lc(y) if kind == "right" else LinearCombination()
    return op(x, y)


def _compatibility(op, kind: str, star, x: Word, y: Word) -> LinearCombination:
    """``D+(x op y) - sum (x1 * y1) (x) (x2 op y2)`` with the unit conventions."""
    lhs = hopf.full_coproduct(op(x, y))
    rhs = LinearCombination()
    for (x1, x2), cx in hopf.full_coproduct(x).items():
        for (y1, y2), cy in hopf.full_coproduct(y).items():
            c = cx * cy
            if x2 == UNIT and y2 == UNIT:
                term = tensor(op(x1, y1), lc(UNIT))
            elif kind == "star":
                term = tensor(_unit_star(star, x1, y1), _unit_star(star, x2, y2))
            else:
                term = tensor(_unit_star(star, x1, y1), _unit_op(op, kind, x2, y2))
            rhs = rhs + term.scale(c)
    return lhs - rhs


def bialgebra_suite(bound: int, family: OpFamily | None = None) -> Iterator[Check]:
    """Coassociativity and the compatibilities of ``>=_q``, ``<_q``, ``._q``
    (with ``*_q``) and of the shuffle pair (with the shuffle product)."""
    F = family or hopf.ST
    shuffle = hopf.shuffle_product
    cases = [
        ("D(x >=_q y)", F.weak, "right", F.star),
        ("D(x <_q y)", F.left, "left", F.star),
        ("D(x ._q y)", F.middle, "middle", F.star),
        ("D(x *_q y)", F.star, "star", F.star),
        ("D(x > y)", lambda a, b: hopf.dendriform(a, b, "right"), "right", shuffle),
        ("D(x < y)", lambda a, b: hopf.dendriform(a, b, "left"), "left", shuffle),
        ("D(x * y)", shuffle, "star", shuffle),
    ]
    singles = ((d, ws[0]) for d, ws in word_tuples(1, bound + 1))
    pairs = word_tuples(2, bound)
    pending = next(singles, None)
    for d, (x, y) in itertools.chain(pairs, [(bound + 2, (None, None))]):
        while pending is not None and pending[0] <= d:
            pd, w = pending
            yield Check("coassociativity", (w,), pd, lambda w=w: _coassociativity_gap(w))
            pending = next(singles, None)
        if x is None:
            break
        for name, op, kind, star in cases:
            yield Check(name, (x, y), d,
                        lambda op=op, kind=kind, star=star, x=x, y=y:
                        _compatibility(op, kind, star, x, y))


def _coassociativity_gap(w: Word) -> LinearCombination:
    delta = hopf.coproduct(w)
    left = delta.map(lambda k: tensor(hopf.coproduct(k[0]), lc(k[1])))
    right = delta.map(lambda k: tensor(lc(k[0]), hopf.coproduct(k[1])))
    return left - right


# -- unital infinitesimal bialgebra and the idempotent ----------------------

def _infinitesimal_gap(x: Word, y: Word) -> LinearCombination:
    lhs = hopf.full_coproduct(concat(x, y))
    rhs = LinearCombination()
    for (a, b), c in hopf.full_coproduct(x).items():
        rhs = rhs + lc({(a, concat(b, y)): c})
    for (a, b), c in hopf.full_coproduct(y).items():
        rhs = rhs + lc({(concat(x, a), b): c})
    rhs = rhs - lc({(x, y): 1})
    return lhs - rhs


def infinitesimal_suite(bound: int, family: OpFamily | None = None) -> Iterator[Check]:
    """The unital infinitesimal relation for ``(x, D+)`` and the calculus of
    ``E``: idempotence, vanishing on products, primitivity, reconstruction."""
    E = hopf.eulerian_projector
    pairs = word_tuples(2, bound)
    singles = word_tuples(1, bound)
    pending = next(pairs, None)
    for d, (x,) in itertools.chain(singles, [(bound + 1, (None,))]):
        while pending is not None and pending[0] <= d:
            pd, (a, b) = pending
            yield Check("D+(x*y) infinitesimal", (a, b), pd,
                        lambda a=a, b=b: _infinitesimal_gap(a, b))
            yield Check("E(x*y) = 0", (a, b), pd, lambda a=a, b=b: E(concat(a, b)))
            pending = next(pairs, None)
        if x is None:
            break
        yield Check("E(E(x)) = E(x)", (x,), d, lambda x=x: E(E(x)) - E(x))
        yield Check("E(x) primitive", (x,), d, lambda x=x: hopf.coproduct(E(x)))
        yield Check("reconstruction", (x,), d, lambda x=x: hopf.reconstruct(x) - lc(x))


# -- brace and GV -----------------------------------------------------------

def _interval_choices(n: int, m: int) -> Iterator[tuple]:
    # 0 <= i1 <= j1 <= i2 <= ... <= jn <= m
    return itertools.combinations_with_replacement(range(m + 1), 2 * n)


def brace_relation_gap(F: OpFamily, x, ys: tuple, zs: tuple) -> LinearCombination:
    n, m = len(ys), len(zs)
    lhs = F.brace(F.brace(x, ys), zs)
    rhs = LinearCombination()
    for cuts in _interval_choices(n, m):
        args: list = []
        prev = 0
        for k in range(n):
            i, j = cuts[2 * k], cuts[2 * k + 1]
            args.extend(lc(z) for z in zs[prev:i])
            args.append(F.brace(ys[k], zs[i:j]))
            prev = j
        args.extend(lc(z) for z in zs[prev:])
        rhs = rhs + F.brace(x, args)
    return lhs - rhs


def gv_distributivity_gap(F: OpFamily, x, y, zs: tuple) -> LinearCombination:
    lhs = F.brace(F.middle(x, y), zs)
    rhs = LinearCombination()
    n = len(zs)
    for i in range(n + 1):
        for j in range(i, n + 1):
            weight = QPoly.monomial(j - i) if F.q is None else QPoly(F.q ** (j - i))
            if not weight:
                continue
            term = F.brace(x, zs[:i])
            for z in zs[i:j]:
                term = F.middle(term, z)
            term = F.middle(term, F.brace(y, zs[j:]))
            rhs = rhs + term.scale(weight)
    return lhs - rhs


def brace_suite(bound: int, family: OpFamily | None = None) -> Iterator[Check]:
    """The brace composition relation and closure of primitives."""
    F = family or hopf.ST
    E = hopf.eulerian_projector
    for total in range(1, bound + 1):
        for arity_count in range(2, total + 1):
            for d, ws in word_tuples(arity_count, total, start=total):
                x, rest = ws[0], ws[1:]
                yield Check("brace primitive closure", ws, d,
                            lambda x=x, rest=rest: hopf.coproduct(
                                F.brace(E(x), [E(w) for w in rest])))
                for n in range(1, len(rest)):
                    ys, zs = rest[:n], rest[n:]
                    yield Check(f"M1{len(zs)}(M1{n}(x;y);z) composition", (x, ys, zs), d,
                                lambda x=x, ys=ys, zs=zs: brace_relation_gap(F, x, ys, zs))


def gv_suite(bound: int, family: OpFamily | None = None) -> Iterator[Check]:
    """Distributivity of the braces over ``._q`` (symbolic ``q``)."""
    F = family or hopf.ST
    for total in range(2, bound + 1):
        for count in range(2, total + 1):
            for d, ws in word_tuples(count, total, start=total):
                x, y, zs = ws[0], ws[1], ws[2:]
                yield Check(f"M1{len(zs)}(x.y;z) distributivity", (x, y, zs), d,
                            lambda x=x, y=y, zs=zs: gv_distributivity_gap(F, x, y, zs))


# -- combinatorial suites ---------------------------------------------------

def order_suite(bound: int, family: OpFamily | None = None) -> Iterator[Check]:
    """Word-level invariants: top insertion round trip, grading, associativity,
    restriction of shuffled products, gap and Bruhat monotonicity,
    factorization uniqueness and dot closure on irreducibles."""
    for d, (x,) in word_tuples(1, bound):
        yield Check("top insertion round trip", (x,), d,
                    lambda x=x: insert_top(*top_decomposition(x)) == x)
        yield Check("gap vector monotone under value splits", (x,), d,
                    lambda x=x: _gap_monotone(x))
        yield Check("factorizations unique", (x,), d, lambda x=x: _factorizations_ok(x))
    for d, (x, y) in word_tuples(2, bound):
        yield Check("grading", (x, y), d, lambda x=x, y=y: _grading_ok(x, y))
        yield Check("restriction of shuffled products", (x, y), d,
                    lambda x=x, y=y: _restriction_ok(x, y))
        if is_irreducible(x) and is_irreducible(y):
            yield Check("dot closure on Irr", (x, y), d,
                        lambda x=x, y=y: is_irreducible(dot(x, y)))
        yield Check("Bruhat monotonicity", (x, y), d, lambda x=x, y=y: _bruhat_monotone(x, y))
    for d, (x, y, z) in word_tuples(3, bound):
        yield Check("associativity of concat, backslash, dot", (x, y, z), d,
                    lambda x=x, y=y, z=z: concat(concat(x, y), z) == concat(x, concat(y, z))
                    and backslash(backslash(x, y), z) == backslash(x, backslash(y, z))
                    and dot(dot(x, y), z) == dot(x, dot(y, z)))


def _gap_monotone(x: Word):
    g = gap_vector(x).entries
    r = arity(x)
    for p in range(1, r):
        for cuts in itertools.combinations(range(1, r), p):
            if gap_vector(value_split(x, cuts)).entries > g:
                return f"cuts {cuts}"
    return True


def _factorizations_ok(x: Word) -> bool:
    parts = irreducible_factorization(x)
    if concat(*parts) != x or not all(is_irreducible(p) for p in parts):
        return False
    canon = canonical_dot_factorization(x)
    return dot(*canon) == x and dot(*dot_factorization(x)) == x


def _grading_ok(x: Word, y: Word) -> bool:
    n, m, r, s = len(x), len(y), arity(x), arity(y)
    return (len(concat(x, y)) == n + m and arity(concat(x, y)) == r + s
            and len(backslash(x, y)) == n + m and arity(backslash(x, y)) == r + s
            and len(dot(x, y)) == n + m and arity(dot(x, y)) == r + s - 1)


def _restriction_ok(x: Word, y: Word) -> bool:
    n, m = len(x), len(y)
    z = concat(x, y)
    for f in shuffle_words((arity(x), arity(y))):
        w = compose(f, z)
        if restrict(w, range(1, n + 1)) != x or restrict(w, range(n + 1, n + m + 1)) != y:
            return False
    return True


def _bruhat_monotone(x: Word, y: Word):
    # sigma < tau in Sh(r, s) transports to the products in the value order;
    # growing a factor transports to the products in the position order
    r, s = arity(x), arity(y)
    z = concat(x, y)
    sh = shuffle_words((r, s))
    for sigma in sh:
        for tau in sh:
            if bruhat_lt(sigma, tau) and not bruhat_lt(compose(sigma, z), compose(tau, z)):
                return f"shuffles {sigma} < {tau}"
    for x2 in bruhat_upper_set(x, "positions"):
        for y2 in bruhat_upper_set(y, "positions"):
            strict = x2 != x or y2 != y
            for sigma in sh:
                a, b = compose(sigma, z), compose(sigma, concat(x2, y2))
                if not (bruhat_lt(a, b, "positions") if strict else a == b):
                    return f"factors {x2}, {y2} under {sigma}"
    return True


def bruhat_upper_set(x: Word, side: str = "values") -> set:
    seen = {x}
    stack = [x]
    while stack:
        for c in bruhat_covers(stack.pop(), side):
            if c not in seen:
                seen.add(c)
                stack.append(c)
    return seen


def shuffle_sets_suite(bound: int, family: OpFamily | None = None) -> Iterator[Check]:
    """Set identities for shuffles: composition, its three refined halves,
    the interval characterization, the stuffle partition and counting."""
    for total in range(2, bound + 1):
        for r in range(1, total):
            s = total - r
            yield Check("partition SH = SH> + SH< + SH.", (r, s), total,
                        lambda r=r, s=s: _partition_ok(r, s))
            yield Check("|Sh(n,m)| = binomial", (r, s), total,
                        lambda r=r, s=s: len(shuffle_words((r, s))) == comb(r + s, r))
        for p in range(1, total + 1):
            for parts in _compositions(total, p):
                if total <= 4:
                    yield Check("Sh = Bruhat interval [1, epsilon]", parts, total,
                                lambda parts=parts: _interval_ok(parts))
                if p == 3 and max(parts) <= 3:
                    yield Check("shuffle composition identities", parts, total,
                                lambda parts=parts: _composition_ok(*parts))


def _partition_ok(r: int, s: int) -> bool:
    pieces = [set(stuffle_words((r, s), k)) for k in ("right", "left", "merged")]
    union = set().union(*pieces)
    return (sum(map(len, pieces)) == len(union)
            and union == set(stuffle_words((r, s), "all")))


def _interval_ok(parts: tuple) -> bool:
    n = sum(parts)
    top = epsilon(*parts)
    interval = {w for w in surjections(n, n) if bruhat_leq(identity(n), w) and bruhat_leq(w, top)}
    return interval == set(shuffle_words(parts))


def _composition_ok(n: int, m: int, r: int) -> bool:
    def sh(parts, kind="all"):
        return shuffle_words(parts, kind)

    def ext_right(ws, k):
        return [concat(w, identity(k)) for w in ws]

    def ext_left(k, ws):
        return [concat(identity(k), w) for w in ws]
    whole = set(sh((n, m, r)))
    checks = [
        compose_sets(sh((n + m, r)), ext_right(sh((n, m)), r)) == whole,
        compose_sets(sh((n, m + r)), ext_left(n, sh((m, r)))) == whole,
        compose_sets(sh((n + m, r), "right"), ext_right(sh((n, m)), r))
        == compose_sets(sh((n, m + r), "right"), ext_left(n, sh((m, r), "right"))),
        compose_sets(sh((n + m, r), "left"), ext_right(sh((n, m), "right"), r))
        == compose_sets(sh((n, m + r), "right"), ext_left(n, sh((m, r), "left"))),
        compose_sets(sh((n + m, r), "left"), ext_right(sh((n, m), "left"), r))
        == compose_sets(sh((n, m + r), "left"), ext_left(n, sh((m, r)))),
    ]
    return all(checks)


# -- registry ---------------------------------------------------------------

SUITES: dict[str, Callable[..., Iterator[Check]]] = {
    "dendriform": dendriform_suite,
    "tridendriform": tridendriform_suite,
    "bialgebra": bialgebra_suite,
    "infinitesimal": infinitesimal_suite,
    "brace": brace_suite,
    "gv": gv_suite,
    "order": order_suite,
    "shuffle-sets": shuffle_sets_suite,
}

DEFAULT_BOUNDS = {"dendriform": 6, "tridendriform": 6, "bialgebra": 5,
                  "infinitesimal": 5, "brace": 5, "gv": 6, "order": 5,
                  "shuffle-sets": 6}

CEILING = 8


def axiom_suite(which: str, bound: int | None = None,
                family: OpFamily | None = None) -> SuiteReport:
    """Run one suite exhaustively up to total degree ``bound``."""
    if which not in SUITES:
        raise ValueError(f"unknown suite {which!r}; expected one of {sorted(SUITES)}")
    bound = DEFAULT_BOUNDS[which] if bound is None else bound
    if bound > CEILING:
        raise ValueError(f"bound {bound} exceeds the ceiling {CEILING}")
    return run_suite(which, SUITES[which](bound, family), bound)
