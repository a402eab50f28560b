from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from packedwords.words import (arity, backslash, bruhat_covers, bruhat_leq,
                               bruhat_lt, canonical_dot_factorization, compose,
                               concat, corestrict, count_surjections, defect,
                               dot, dot_factorization, gap_vector, insert_top,
                               irreducible_factorization, is_indecomposable,
                               is_irreducible, is_packed, parse_word, restrict,
                               standardize, surjections, top_decomposition,
                               value_split)


@st.composite
def packed(draw, min_size=1, max_size=7):
    raw = draw(st.lists(st.integers(1, 9), min_size=min_size, max_size=max_size))
    return standardize(raw)


# -- frozen values -------------------------------------------------------------

@pytest.mark.parametrize("raw, expected", [
    ((1, 5, 4, 7, 5), (1, 3, 2, 4, 3)),
    ((1, 2, 3), (1, 2, 3)),
    ((9, 3), (2, 1)),
])
def test_standardize(raw, expected):
    assert standardize(raw) == expected


def test_restrict():
    assert restrict((2, 1, 3), {1, 3}) == (1, 2)
    assert restrict((3, 1, 2, 5, 1, 4, 3, 5, 4, 2), {4, 8}) == (1, 1)
    with pytest.raises(ValueError):
        restrict((2, 1, 3), {4})


def test_corestrict():
    x = (3, 4, 2, 5, 1, 1, 3, 5)
    assert corestrict(x, {1, 2}) == (2, 1, 1)
    assert corestrict(x, {3, 4, 5}) == (1, 2, 3, 1, 3)
    assert corestrict(x, range(1, 6)) == x
    with pytest.raises(ValueError):
        corestrict(x, {6})


def test_concat():
    assert concat((1,), (1,)) == (1, 2)
    assert concat((2, 1, 1), (1, 2)) == (2, 1, 1, 3, 4)
    assert concat((), (2, 1)) == (2, 1)


@pytest.mark.parametrize("x, factors", [
    ((1, 2), [(1,), (1,)]),
    ((2, 1), [(2, 1)]),
    ((1, 2, 3, 1), [(1, 2, 3, 1)]),
])
def test_irreducible_factorization(x, factors):
    assert irreducible_factorization(x) == factors


def test_top_decomposition():
    t = top_decomposition((3, 1, 2, 5, 1, 4, 3, 5, 4, 2))
    assert t.positions == (4, 8)
    assert t.lower == (3, 1, 2, 1, 4, 3, 4, 2)
    assert top_decomposition((1, 1)) == ((1, 2), ())
    assert top_decomposition((2, 1)) == ((1,), (1,))


def test_gap_vector():
    assert gap_vector((3, 1, 2, 5, 1, 4, 3, 5, 4, 2)) == ((2, 3), 3)
    assert gap_vector((1, 1)) == ((0, 0), 0)
    assert gap_vector((2, 1)) == ((1,), 0)


def test_value_split():
    assert value_split((2, 3, 1), (2,)) == (2, 1, 3)
    assert value_split((2, 4, 3, 1), (1, 3)) == (1, 2, 3, 4)
    assert value_split((2, 4, 3, 1), ()) == (2, 4, 3, 1)
    with pytest.raises(ValueError):
        value_split((2, 3, 1), (3,))


def test_backslash():
    assert backslash((3, 4, 1, 2), (1,)) == (4, 5, 2, 3, 1)
    assert backslash((1,), (1,)) == (2, 1)
    assert backslash((1,), (1, 1)) == (2, 1, 1)


def test_dot():
    assert dot((1,), (1,)) == (1, 1)
    assert dot(dot((2, 3, 4, 1, 3), (1, 2)), (1, 2, 3, 1)) == (2, 3, 7, 1, 3, 4, 7, 5, 6, 7, 5)
    assert dot((2, 4, 1, 3, 2), (1, 2, 1)) == (2, 5, 1, 3, 2, 4, 5, 4)


def test_dot_factorizations():
    x = (2, 3, 7, 1, 3, 4, 7, 5, 6, 7, 5)
    assert dot_factorization(x) == [(2, 3, 4, 1, 3), (1, 2), (1, 2, 3, 1)]
    # the last factors must be irreducible, which forces (1,2) to split
    assert canonical_dot_factorization(x) == [(2, 3, 5, 1, 3, 4), (1,), (1, 2, 3, 1)]
    assert not is_indecomposable((2, 3, 5, 1, 3, 4, 5))
    assert canonical_dot_factorization((1, 1)) == [(1,), (1,)]
    assert canonical_dot_factorization((2, 1)) == [(2, 1)]


def test_bruhat_examples():
    assert bruhat_lt((1, 4, 1, 3, 4, 2), (2, 4, 2, 3, 4, 1))
    a, b = (1, 4, 1, 3, 4, 2), (1, 3, 1, 4, 3, 2)
    assert not bruhat_leq(a, b) and not bruhat_leq(b, a)
    assert bruhat_leq(a, a)
    with pytest.raises(ValueError):
        bruhat_leq((1, 2), (1, 1))


def test_parse_word():
    assert parse_word("3, 4,2,5,1,1,3,5") == (3, 4, 2, 5, 1, 1, 3, 5)
    with pytest.raises(ValueError):
        parse_word("1,3")
    assert parse_word("1,3", packed=False) == (1, 3)
    with pytest.raises(ValueError):
        parse_word("")


def test_surjection_counts():
    assert [len(surjections(n)) for n in range(1, 6)] == [1, 3, 13, 75, 541]
    assert [count_surjections(n) for n in range(1, 8)] == [1, 3, 13, 75, 541, 4683, 47293]


# -- properties -----------------------------------------------------------------

@given(st.lists(st.integers(1, 20), min_size=1, max_size=9))
def test_standardize_keeps_comparisons(raw):
    s = standardize(raw)
    assert is_packed(s)
    assert standardize(s) == s
    for i, j in itertools.combinations(range(len(raw)), 2):
        assert (raw[i] < raw[j]) == (s[i] < s[j])
        assert (raw[i] == raw[j]) == (s[i] == s[j])


@given(packed())
def test_top_round_trip_and_gaps(x):
    t = top_decomposition(x)
    assert insert_top(t.positions, t.lower) == x
    g = gap_vector(x)
    assert g.head_gap + t.lam + sum(g.entries) == len(x)
    assert all(e >= 0 for e in g.entries)


@given(packed())
def test_irreducible_factorization_round_trip(x):
    parts = irreducible_factorization(x)
    assert concat(*parts) == x
    assert all(is_irreducible(p) for p in parts)


@settings(max_examples=200)
@given(packed(max_size=4), packed(max_size=4), packed(max_size=4))
def test_products_associative_and_graded(x, y, z):
    for op in (concat, backslash, dot):
        assert op(op(x, y), z) == op(x, op(y, z))
    assert len(dot(x, y)) == len(x) + len(y)
    assert arity(dot(x, y)) == arity(x) + arity(y) - 1
    assert arity(backslash(x, y)) == arity(x) + arity(y)
    assert defect(concat(x, y)) == defect(x) + defect(y)


@given(packed(max_size=6))
def test_canonical_dot_factorization(x):
    factors = canonical_dot_factorization(x)
    assert dot(*factors) == x
    assert all(is_indecomposable(f) for f in factors)
    assert all(is_irreducible(f) for f in factors[1:])


@given(packed(max_size=6))
def test_bruhat_covers_stay_in_domain(x):
    for side in ("values", "positions"):
        for c in bruhat_covers(x, side):
            assert len(c) == len(x) and arity(c) == arity(x)
            assert bruhat_lt(x, c, side) and not bruhat_leq(c, x, side)


def test_factor_monotonicity_needs_the_position_order():
    # (1,2) < (2,1) in both orders, but under the shuffle (1,3,2) the products
    # are only comparable in the order that swaps adjacent positions
    x, x2, y, sigma = (1, 2), (2, 1), (1,), (1, 3, 2)
    a, b = compose(sigma, concat(x, y)), compose(sigma, concat(x2, y))
    assert (a, b) == ((1, 3, 2), (3, 1, 2))
    assert bruhat_lt(x, x2) and bruhat_lt(x, x2, "positions")
    assert not bruhat_leq(a, b)
    assert bruhat_lt(a, b, "positions")


def test_shuffle_monotonicity_needs_the_value_order():
    # sigma < tau among shuffles transports in the value order only
    x, y = (1,), (1, 1)
    z = concat(x, y)
    sigma, tau = (1, 2), (2, 1)
    assert bruhat_lt(sigma, tau)
    assert bruhat_lt(compose(sigma, z), compose(tau, z))
    assert not bruhat_leq(compose(sigma, z), compose(tau, z), "positions")
