from __future__ import annotations

import json

import pytest

from packedwords.hopf import perturbed_family
from packedwords.suites import (CEILING, DEFAULT_BOUNDS, SUITES, Check,
                                axiom_suite, run_suite, word_tuples)


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suite_passes_at_small_bound(name):
    report = axiom_suite(name, 4)
    assert report.passed, str(report)
    assert report.checked > 0 and report.counterexample is None


@pytest.mark.parametrize("name", ["brace", "gv", "order"])
def test_suite_passes_at_default_bound(name):
    report = axiom_suite(name)
    assert report.bound == DEFAULT_BOUNDS[name]
    assert report.passed, str(report)


def test_relation_coverage():
    tri = axiom_suite("tridendriform", 3).relations
    assert sum(1 for name in tri if name.startswith("(")) == 7
    dend = axiom_suite("dendriform", 3).relations
    assert sum(1 for name in dend if name.startswith("shuffle")) == 3
    assert sum(1 for name in dend if name.startswith("q-weak")) == 3
    bi = axiom_suite("bialgebra", 3).relations
    assert {"D(x > y)", "D(x < y)", "D(x >=_q y)", "D(x <_q y)", "D(x ._q y)"} <= set(bi)


def test_bound_limits():
    with pytest.raises(ValueError):
        axiom_suite("dendriform", CEILING + 1)
    with pytest.raises(ValueError):
        axiom_suite("no-such-suite", 3)


def test_word_tuples_ordered_by_degree():
    degrees = [d for d, _ in word_tuples(2, 4)]
    assert degrees == sorted(degrees)
    assert sum(1 for _ in word_tuples(1, 3)) == 1 + 3 + 13


def test_run_suite_stops_at_first_failure():
    checks = [Check("ok", ((1,),), 1, lambda: True),
              Check("bad", ((1, 1),), 2, lambda: "reason"),
              Check("never", ((1, 2),), 2, lambda: False)]
    report = run_suite("toy", iter(checks), 2)
    assert not report.passed and report.checked == 2
    assert report.counterexample.relation == "bad"
    assert "reason" in str(report.counterexample)
    json.dumps(report.to_json())


def test_perturbed_middle_product_is_caught_early():
    family = perturbed_family("merged", (1, 1), drop=[(1, 1)])
    report = axiom_suite("tridendriform", 4, family)
    assert not report.passed
    assert report.counterexample.degree <= 3
    data = report.to_json()
    assert data["pass"] is False and data["counterexample"]["degree"] <= 3


@pytest.mark.parametrize("kind, parts, change", [
    ("right", (1, 1), {"drop": [(1, 2)]}),
    ("left", (2, 1), {"drop": [(2, 3, 1)]}),
    ("right", (2, 2), {"add": [(2, 3, 1, 2)]}),
    ("merged", (1, 2), {"add": [(1, 1, 2)]}),
    ("left", (1, 3), {"drop": [(4, 1, 2, 3)]}),
])
def test_fault_injection_samples(kind, parts, change):
    family = perturbed_family(kind, parts, **change)
    reports = [axiom_suite(s, 4, family) for s in ("tridendriform", "dendriform", "bialgebra")]
    failing = [r for r in reports if not r.passed]
    assert failing
    assert min(r.counterexample.degree for r in failing) <= 4
