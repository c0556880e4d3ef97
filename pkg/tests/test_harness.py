import json

from wlcheck import harness


def small_corpus():
    return harness.standard_corpus(seeds=24)


def test_random_corpus_is_reproducible():
    a = harness.random_corpus(10)
    b = harness.random_corpus(10)
    assert a.ids == b.ids
    assert a.graphs == b.graphs


def test_oracle_equivalence_passes():
    report = harness.check_oracle_equivalence(small_corpus())
    assert report.passed and report.violations == []


def test_positive_checks_pass_on_corpus():
    corpus = small_corpus()
    for algo in harness.POSITIVE_ALGOS:
        report = harness.check_positive_expressivity(algo, corpus)
        assert report.passed, (algo, report.violations[:3])


def test_positive_check_detects_planted_violation():
    # 1-WL is not expressive for cut vertices; the counterexample family
    # must surface as violations when checked under the same machinery
    corpus = harness._table_corpus("1wl")
    violations = harness._expressivity_violations("1wl", corpus, harness.ALL_COLUMNS)
    assert any(v["column"] == "cut_vertex" for v in violations)
    assert any(v["column"] == "cut_edge" for v in violations)
    assert any(v["column"] == "bcv_tree" for v in violations)
    assert any(v["column"] == "bce_tree" for v in violations)


def test_negative_suite_passes():
    report = harness.check_negative_suite()
    assert report.passed, report.violations


def test_negative_check_is_parametrized():
    from wlcheck import generators as gen

    pair = ("example1(1,4)", *gen.example1(1, 4))
    assert harness.check_negative_expressivity("spdwl", pair).passed
    assert harness.check_negative_expressivity("dswl:nm", pair, node=8).passed
    # a separating algorithm on the same pair must be reported as a failure
    report = harness.check_negative_expressivity("gdwl", pair)
    assert not report.passed and report.violations[0]["observed"] == "distinguished"


def test_distance_regular_suite_passes():
    report = harness.check_distance_regular_suite()
    assert report.passed, report.violations[:3]


def test_wl_condition_passes():
    report = harness.check_wl_condition(small_corpus())
    assert report.passed, report.violations[:3]


def test_rd_properties_pass():
    report = harness.check_rd_properties(small_corpus(), harness.tree_corpus(12))
    assert report.passed, report.violations[:3]


def test_expressivity_table_matches_expected_pattern():
    report, table = harness.build_expressivity_table()
    assert report.passed, report.violations
    assert table["rows"]["spdwl"]["cut_edge"] == "expressive"
    assert table["rows"]["spdwl"]["cut_vertex"] == "not_expressive"
    assert table["rows"]["dswl:nm"]["cut_vertex"] == "not_expressive"
    assert table["rows"]["gdwl"] == {
        "cut_vertex": "expressive",
        "cut_edge": "expressive",
        "bcv_tree": "expressive",
        "bce_tree": "expressive",
    }


def test_report_json_shape_and_determinism():
    report = harness.check_negative_suite()
    d = report.to_json_dict()
    assert set(d) == {"check_id", "population", "verdict", "violations", "elapsed_ms"}
    assert d["elapsed_ms"] is None  # wall time never leaks into the JSON
    again = harness.check_negative_suite().to_json_dict()
    assert json.dumps(d, sort_keys=True) == json.dumps(again, sort_keys=True)


def test_verdict_iff_no_violations():
    report = harness.check_negative_suite()
    assert (report.verdict == "pass") == (not report.violations)


def test_run_suite_composition():
    reports, table = harness.run_suite("negative", seeds=8)
    assert [r.check_id for r in reports] == ["negative_counterexamples"]
    assert table is None
    reports, table = harness.run_suite("drg", seeds=8)
    assert [r.check_id for r in reports] == ["distance_regular"]


def test_run_suite_rejects_unknown_name():
    try:
        harness.run_suite("everything")
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")
