import json

import pytest

from yablo.graph import build, parse_edge_list
from yablo.verify import (
    CapError,
    CheckResult,
    Report,
    check_fixtures,
    check_lemma,
    check_russell,
    check_scheme_y1,
    check_theorem_thetas,
    compactness_demo,
    run_suite,
)


def test_fixture_values():
    report = check_fixtures()
    assert report.ok
    assert report.checks["graph1"].details["observed"] == {"Y": True, "A1": False, "A2": True}
    assert report.checks["graph2"].details["observed"] == {"Y": True, "A1": True, "A2": False}
    assert report.checks["graph3"].details["observed"] == {"A": True, "A2": False}
    assert report.checks["yablo_not_implies_theta0"].ok


def test_thetas_small():
    report = check_theorem_thetas(max_n=2, exhaustive_nodes=2, samples=10, seed=1)
    assert report.ok
    # 2 + 16 exhaustive graphs plus the samples
    assert report.checks["theta0_implies_Y"].passed == 18 + 10
    assert report.checks["theta1_not_implies_theta0"].passed == 3


def test_thetas_deterministic():
    a = check_theorem_thetas(max_n=1, exhaustive_nodes=2, samples=25, seed=7).to_json()
    b = check_theorem_thetas(max_n=1, exhaustive_nodes=2, samples=25, seed=7).to_json()
    assert a == b


@pytest.mark.parametrize("kwargs", [{"max_n": 9}, {"exhaustive_nodes": 5}, {"max_n": -1}])
def test_thetas_caps(kwargs):
    with pytest.raises(CapError):
        check_theorem_thetas(**kwargs)


def test_lemma_small():
    report = check_lemma(6)
    assert report.ok
    assert report.checks["solver_matches_no_odd_cycle"].details["structures"] == 1 + 1 + 2 + 3 + 5 + 7 + 11
    with pytest.raises(CapError):
        check_lemma(13)


@pytest.mark.parametrize("N, solver", [(0, True), (1, True), (10, True), (14, True), (15, False)])
def test_compactness(N, solver):
    report = compactness_demo(N)
    assert report.ok
    m = 2 * N + 3
    assert report.checks[f"C{m}.no_kernel"].details["solver_used"] is solver
    assert report.header


def test_compactness_evaluator_counts():
    # N=1: S once by classify and once by evaluator; fragment: 2 arithmetic + (k=0,1 and k=2 fails)
    report = compactness_demo(1)
    assert report.checks["C5.satisfies_S"].passed == 2
    assert report.checks["C5.satisfies_fragment"].passed == 5


def test_compactness_cap():
    with pytest.raises(CapError):
        compactness_demo(101)


def test_scheme_y1():
    report = check_scheme_y1(2)
    assert report.ok
    assert len(report.checks) == 12
    with pytest.raises(CapError):
        check_scheme_y1(4)


def test_russell():
    assert check_russell(3).ok


def test_failure_carries_replayable_witness():
    res = CheckResult()
    g = build(2, [(0, 1)])
    res.record(False, "demo", g)
    res.record(True)
    report = Report("demo", checks={"c": res})
    assert not report.ok
    data = json.loads(report.to_json())
    assert data["checks"]["c"] == {"pass": 1, "fail": 1, "witnesses": [{"what": "demo", "graph": "digraph 2\n0 1\n"}]}
    assert parse_edge_list(data["checks"]["c"]["witnesses"][0]["graph"]) == g
    text = report.to_text()
    assert "FAIL c pass=1 fail=1" in text and "    0 1" in text


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nope")


def test_suite_all_defaults():
    report = run_suite("all")
    assert report.ok, report.to_text()
    prefixes = {name.split(".")[0] for name in report.checks}
    assert prefixes == {"fixtures", "thetas", "lemma", "compactness", "y1"}
