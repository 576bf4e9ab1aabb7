import json

import pytest

from qtensor.harness import (
    FAIL,
    OUT_OF_SCOPE,
    REGISTRY,
    SKIPPED,
    HarnessConfig,
    _item,
    registry_complete,
    run_all,
    run_lemma_suite,
    run_oracle_suite,
    run_theorem_suite,
    statements,
)


def _by_statement(report):
    out = {}
    for it in report.items:
        out.setdefault(it.statement, []).append(it)
    return out


def test_registry_partition():
    suites = {s for s, _ in REGISTRY.values()}
    assert suites == {"lemma", "theorem", "oracle"}
    assert len(statements("lemma")) == 13
    assert not set(OUT_OF_SCOPE) & set(REGISTRY)


def test_lemma_c2_q2():
    r = run_lemma_suite(["C2"], [2])
    assert r.ok
    assert {it.statement for it in r.items} == set(statements("lemma"))
    assert all(it.status == "pass" for it in r.items if it.statement != "hat-multiplicative-odd-q")


def test_lemma_even_q_skips_hat():
    r = run_lemma_suite(["S3"], [2])
    hat = _by_statement(r)["hat-multiplicative-odd-q"]
    assert [it.status for it in hat] == [SKIPPED]


def test_lemma_trivial_group():
    r = run_lemma_suite(["1"], [0, 1, 2, 3])
    assert r.ok and not any(it.status == FAIL for it in r.items)


def test_theorem_small():
    r = run_theorem_suite(["C4", "D4", "Q8"], [0])
    assert r.ok
    items = _by_statement(r)
    assert any(it.groups == ("C4",) and it.status == "pass" for it in items["wedge-quotient-invariance"])
    assert any(it.groups[0] == "Q8" and it.status == "pass" for it in items["epicenter-in-frattini"])
    assert any(set(it.groups) == {"D4", "Q8"} and it.status == "pass" for it in items["bogomolov-invariance"])


def test_oracle_examples():
    r = run_oracle_suite(["C2xC2", "C6"], [0, 1, 2, 3], cohomology_corpus=["D4"])
    assert r.ok
    items = _by_statement(r)
    assert len(items["abelian-snf-oracle"]) == 8
    assert "[2, 2, 2, 2]" in items["abelian-snf-oracle"][0].detail
    assert "cohomology [2] ker eta [2]" in items["schur-cohomology-oracle"][0].detail


def test_failure_carries_counterexample():
    it = _item("eta-image", ("S3",), 0, False, "forced")
    assert it.status == FAIL and it.counterexample == ["S3", 0]


def test_deterministic_json():
    cfg = HarnessConfig(corpus=("C2", "S3", "Q8"), qs=(0, 3))
    a = json.dumps([r.to_json() for r in run_all(cfg)])
    b = json.dumps([r.to_json() for r in run_all(cfg)])
    assert a == b and "wall_time" not in a


def test_parallel_matches_serial():
    base = HarnessConfig(corpus=("C2", "C4", "S3"), qs=(0, 2))
    par = HarnessConfig(corpus=("C2", "C4", "S3"), qs=(0, 2), jobs=2)
    assert [r.to_json() for r in run_all(base, ("lemma",))] == [r.to_json() for r in run_all(par, ("lemma",))]


@pytest.mark.slow
def test_default_registry_complete():
    reports = run_all(HarnessConfig())
    assert registry_complete(reports) == []
    assert all(r.ok for r in reports)
