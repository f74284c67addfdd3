"""Corpus sweep wiring: gating, report shape, failure plumbing."""

import json

import cbp.verify as verify
from cbp.corpus import CorpusEntry, path_graph
from cbp.errors import AssertionFailure
from cbp.verify import (
    GraphContext,
    VerifyOptions,
    default_workers,
    run_verification,
    verify_graph,
)


def test_option_defaults():
    opts = VerifyOptions()
    assert opts.max_blocks == 5
    assert opts.seed == 7
    assert opts.facet_max_blocks == 7
    assert opts.adjacency_max_blocks == 5
    assert opts.hstar_max_blocks == 5
    assert opts.groebner_max_blocks == 4
    assert opts.optimizer_trials == 50
    assert opts.workers is None


def test_checks_pass_on_path3():
    ctx = GraphContext(path_graph(3))
    assert verify.check_blocks(ctx) is None
    assert verify.check_dimension(ctx) is None
    assert verify.check_facets(ctx) is None
    assert verify.check_ibis(ctx) is None
    assert verify.check_adjacency(ctx) is None
    assert verify.check_hstar(ctx) is None


def test_block_count_gates_skip_expensive_checks():
    report = verify_graph(CorpusEntry("path-6", path_graph(6)), VerifyOptions())
    status = {c.name: c.status for c in report.checks}
    assert status["facets"] == "pass"  # 6 blocks is under the facet gate
    assert status["adjacency"] == "skip"
    assert status["hstar"] == "skip"
    assert status["groebner"] == "skip"
    assert status["triangulation"] == "skip"
    assert status["optimizer"] == "pass"
    assert report.passed()


def test_sweep_passes_and_reports_deterministically():
    opts = VerifyOptions(max_blocks=3, workers=1)
    report = run_verification(opts)
    assert report.passed()
    payload = report.to_json()
    assert payload["seed"] == 7
    assert payload["max_blocks"] == 3
    assert payload["graph_count"] == 18
    assert payload["all_passed"] is True
    assert [g["id"] for g in payload["graphs"]][:2] == ["path-1", "path-2"]
    json.dumps(payload, sort_keys=True)

    again = run_verification(opts).to_json()
    strip = lambda p: json.dumps(p, sort_keys=True, default=str)
    without_times = [
        {**g, "checks": [{**c, "seconds": 0} for c in g["checks"]]}
        for g in payload["graphs"]
    ]
    again_without = [
        {**g, "checks": [{**c, "seconds": 0} for c in g["checks"]]}
        for g in again["graphs"]
    ]
    assert strip(without_times) == strip(again_without)


def test_default_workers_env_cap(monkeypatch):
    monkeypatch.setenv("CBP_THREADS", "1")
    assert default_workers() == 1
    monkeypatch.setenv("CBP_THREADS", "notanumber")
    assert default_workers() >= 1
    monkeypatch.delenv("CBP_THREADS")
    assert 1 <= default_workers() <= 8


def test_failure_is_reported_with_context(monkeypatch):
    def boom(*args, **kwargs):
        raise AssertionFailure("forced failure", {"clause": "unit-test"})

    monkeypatch.setattr(verify, "hstar_checks", boom)
    report = verify_graph(CorpusEntry("path-2", path_graph(2)), VerifyOptions())
    status = {c.name: c for c in report.checks}
    assert status["hstar"].status == "fail"
    assert not report.passed()
    detail = status["hstar"].detail
    assert detail["error"] == "AssertionFailure"
    assert detail["clause"] == "unit-test"
    assert "graph" in detail
    assert detail["seed"] == 7
