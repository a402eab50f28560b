from __future__ import annotations

import itertools
import json
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from packedwords.algebra import (ONE, Q, ZERO, LinearCombination, QPoly, lc,
                                 rank, symbolic_rank, tensor)
from packedwords.words import surjections

polys = st.lists(st.integers(-3, 3), max_size=4).map(QPoly)


# -- QPoly ------------------------------------------------------------------------

def test_qpoly_examples():
    assert (1 + Q) * (1 - Q) == 1 - Q * Q
    assert str((1 + Q) * (1 - Q)) == "1-q^2"
    assert (Q ** 2)(0) == 0 and QPoly(1)(0) == 1
    assert Q + (-Q) == ZERO and not (Q - Q)
    assert QPoly((1, 2, -1)).degree == 2 and ZERO.degree == -1


def test_qpoly_ring_axioms_small_exhaustive():
    linear = [QPoly((a, b)) for a in range(-2, 3) for b in range(-2, 3)]
    for a, b, c in itertools.product(linear, repeat=3):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


@given(polys, polys, polys)
def test_qpoly_ring_axioms(a, b, c):
    assert a + b == b + a and a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a and a * ONE == a and a - a == ZERO
    for v in (0, 1, -1, 2, Fraction(1, 3)):
        assert (a * b + c)(v) == a(v) * b(v) + c(v)


@given(polys, polys)
def test_qpoly_divexact_and_gcd(a, b):
    if b:
        assert (a * b).divexact(b) == a
    g = QPoly.gcd(a, b)
    if a or b:
        assert not a or (a.divexact(g) * g == a)
        assert not b or (b.divexact(g) * g == b)


# -- linear combinations ----------------------------------------------------------

def test_linear_combination_basics():
    x = lc((2, 1))
    assert x + (-1) * x == LinearCombination()
    assert lc({(1, 2): 1, (2, 1): -1}).combine(lc((1, 2)), -1) == lc({(2, 1): -1})
    count = lc({(1, 2): 3}).map(lambda w: lc({(len(w),): 1}))
    assert count == lc({(2,): 3})
    a = lc({(2, 1): 1, (1, 2): -1})
    assert a.evaluate(1) == {(2, 1): 1, (1, 2): -1}


def test_linear_combination_printing():
    assert str(lc({(2, 1): Q, (1, 2): -1})) == "-(1,2) + q(2,1)"
    assert str(lc({(1,): QPoly((0, 0, -2))})) == "-2q^2(1)"
    assert str(lc({(2, 1): 1 + Q})) == "(1+q)(2,1)"
    assert str(LinearCombination()) == "0"


def test_json_round_trip():
    a = lc({(2, 1, 1, 1, 2): Q, (3, 2, 2, 1, 3): 1, (3, 1, 1, 2, 3): 1})
    data = a.to_json()
    assert data["degree"] == 5
    assert [t["word"] for t in data["terms"]] == [[2, 1, 1, 1, 2], [3, 1, 1, 2, 3], [3, 2, 2, 1, 3]]
    assert data["terms"][0]["coeff"] == [0, 1]
    assert LinearCombination.from_json(json.dumps(data)) == a
    t = tensor(lc((1,)), lc((2, 1)))
    assert LinearCombination.from_json(t.to_json()) == t


def test_canonical_order_is_length_then_lex():
    a = lc({(1, 1, 1): 1, (2, 1): 1, (1, 2): 1, (1,): 1})
    assert a.keys() == [(1,), (1, 2), (2, 1), (1, 1, 1)]


# -- rank ---------------------------------------------------------------------------

def test_rank_examples():
    assert rank([lc({(2, 1): 1, (1, 2): -1}), lc((1, 2))]) == 2
    assert rank([lc((1, 2)), lc({(1, 2): 2})]) == 1
    assert rank([lc({(1, 2): Q}), lc((1, 2))]) == 1
    assert rank([]) == 0
    with pytest.raises(ValueError):
        rank([lc((1, 2)), lc((1,))])


def test_symbolic_rank_dominates_specializations():
    # rows (1, q) and (q, 1): independent except at q = 1 and q = -1
    u, v = (1, 2), (2, 1)
    rows = [lc({u: 1, v: Q}), lc({u: Q, v: 1})]
    assert rank(rows) == 2
    assert rank(rows, at=1) == 1 and rank(rows, at=-1) == 1
    assert rank(rows, at=2) == 2 and rank(rows, at=Fraction(1, 2)) == 2


def _rank_mod_p(matrix: list[list[int]], p: int) -> int:
    m = [[v % p for v in row] for row in matrix]
    r = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        pivot = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = pow(m[r][c], -1, p)
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c] * inv % p
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        r += 1
    return r


def test_rank_matches_modular_elimination():
    # entries at most 4 in absolute value on at most 6 columns keep every
    # minor far below both primes, so the modular ranks are exact
    words = surjections(3)[:6]
    rng = random.Random(20240601)
    for _ in range(200):
        rows = rng.randint(1, 7)
        matrix = [[rng.choice([0, 0, 0, 1, -1, 2, -3, 4]) for _ in words] for _ in range(rows)]
        vectors = [lc(dict(zip(words, row))) for row in matrix]
        expected = {_rank_mod_p(matrix, p) for p in (998_244_353, 2**61 - 1)}
        assert len(expected) == 1
        assert rank(vectors) == expected.pop()


@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=5),
       st.integers(1, 5), st.randoms(use_true_random=False))
def test_rank_invariant_under_scaling_and_permutation(matrix, k, rnd):
    words = surjections(3)[:4]
    vectors = [lc(dict(zip(words, row))) for row in matrix]
    base = rank(vectors)
    scaled = [v.scale(k * (-1) ** i) for i, v in enumerate(vectors)]
    rnd.shuffle(scaled)
    assert rank(scaled) == base
    assert rank(vectors, at=3) == base


def test_symbolic_rank_with_polynomial_entries():
    u, v, w = surjections(2)
    rows = [lc({u: 1 + Q, v: Q * Q}), lc({u: 1 - Q * Q, v: Q * Q * (1 - Q)}), lc({w: Q})]
    assert symbolic_rank(rows) == 2
    assert rank(rows) == 2
