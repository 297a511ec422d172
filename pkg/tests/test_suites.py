"""Report assembly, exit semantics, and reproducibility of suite runs."""

import json

import pytest

from symposet.homology import ConnectivityVerdict
from symposet.suites import (SUITE_NAMES, SuiteConfig, VerificationReport,
                             exit_status, make_record, run_suite)


def rec(verdict):
    return make_record("c", "s", verdict, 0.0)


def report(*verdicts):
    return VerificationReport("um", SuiteConfig(),
                              [rec(v) for v in verdicts])


def test_exit_status_pure():
    assert exit_status(report("verified", "verified")) == 0
    assert exit_status(report("verified", "refuted")) == 1
    assert exit_status(report("inconclusive", "verified")) == 2
    # refutation outranks starvation
    assert exit_status(report("inconclusive", "refuted", "verified")) == 1
    assert exit_status(report()) == 0


def test_make_record_from_bool():
    r = make_record("a.b", "words", True, 1.2345, items=3)
    assert r["verdict"] == "verified"
    assert r["basis"] == "exact"
    assert r["seconds"] == 1.234 or r["seconds"] == 1.235
    assert r["counts"] == {"items": 3}
    assert make_record("a", "s", False, 0.0)["verdict"] == "refuted"


def test_make_record_from_verdict():
    v = ConnectivityVerdict(1, "verified", "homology", {"spheres": 4})
    r = make_record("a", "s", v, 0.0)
    assert r["verdict"] == "verified"
    assert r["basis"] == "homology"
    assert r["level"] == 1
    assert r["detail"] == {"spheres": 4}


def test_make_record_from_string():
    r = make_record("a", "s", "inconclusive", 0.0, basis="budget")
    assert r["verdict"] == "inconclusive"
    assert r["basis"] == "budget"


def test_payload_strips_timings():
    rep = report("verified")
    assert all("seconds" not in r for r in rep.payload()["records"])
    kept = rep.payload(include_timings=True)["records"]
    assert all("seconds" in r for r in kept)


def test_report_json_is_canonical():
    rep = report("verified")
    text = rep.to_json()
    assert text.endswith("\n")
    assert json.loads(text)["suite"] == "um"
    assert ": " not in text.split('"statement"')[0]


def test_run_suite_unknown_name():
    with pytest.raises(ValueError):
        run_suite("nope", SuiteConfig())


def test_run_suite_byte_reproducible():
    cfg = SuiteConfig(seed=5)
    a = run_suite("core-props", cfg).to_json()
    b = run_suite("core-props", SuiteConfig(seed=5)).to_json()
    assert a == b
    c = run_suite("core-props", SuiteConfig(seed=6)).to_json()
    assert c != a


def test_run_suite_budget_starvation_is_inconclusive():
    rep = run_suite("um", SuiteConfig(budget=10))
    assert exit_status(rep) == 2
    starved = [r for r in rep.records if r["verdict"] == "inconclusive"]
    assert starved and all(r["basis"] == "budget" for r in starved)


def test_genus_gating():
    base = run_suite("um", SuiteConfig())
    deep = run_suite("um", SuiteConfig(genus=3))
    assert len(deep.records) > len(base.records)
    assert any(r["claim"].startswith("um.g3") for r in deep.records)
    assert not any(r["claim"].startswith("um.g3") for r in base.records)


def test_suite_names_cover_registry():
    for name in SUITE_NAMES:
        assert isinstance(name, str) and name
    assert len(set(SUITE_NAMES)) == 7


def test_summary_lines_mention_verdicts():
    rep = report("verified", "refuted")
    lines = rep.summary_lines()
    assert len(lines) == 2
    assert lines[0].startswith("[verified")
    assert "refuted" in lines[1]
