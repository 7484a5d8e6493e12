from semiringlab import builtin, run_pair, run_suite, self_module, weakly_prime_forward_probe
from semiringlab.theorems import CHECKS, FAIL, NA, GridCell, default_grid


def test_check_registry_ids_are_unique():
    ids = [theorem for theorem, _stmt, _fn in CHECKS]
    assert len(ids) == len(set(ids))


def test_boolean_pair_passes_every_check():
    b = builtin("boolean").structure
    records, _census = run_pair("E(boolean, boolean)", b, self_module(b))
    assert [r.theorem for r in records] == [theorem for theorem, _s, _f in CHECKS]
    assert all(r.status != FAIL for r in records)


def test_zmod4_pair_statuses():
    z4 = builtin("zmod_4").structure
    records, _census = run_pair("E(zmod_4, zmod_4)", z4, self_module(z4))
    by_id = {r.theorem: r for r in records}
    assert all(r.status != FAIL for r in records)
    # the scalars are not a semifield, so the locality transfer is out of scope here
    assert by_id["Prop-3.5"].status == NA
    assert by_id["Prop-3.1"].status == "pass"
    assert by_id["Thm-3.3-1"].status == "pass"


def test_suite_report_shape_and_uniqueness():
    b = builtin("boolean").structure
    z2 = builtin("zmod_2").structure
    cells = [
        GridCell("E(boolean, boolean)", b, self_module(b)),
        GridCell("E(zmod_2, zmod_2)", z2, self_module(z2)),
    ]
    report = run_suite(cells, seed=0)
    grid_records = [r for r in report.records if not r.theorem.startswith("numeric")]
    seen = {(r.theorem, r.instance) for r in grid_records}
    assert len(seen) == len(grid_records) == len(CHECKS) * len(cells)
    assert not report.failures()
    payload = report.to_dict()
    assert payload["schema"] == "semiringlab/verification-report/1"
    assert set(payload["summary"]) == {"pass", "fail", "not-applicable"}
    assert "Thm-2.6-3" in payload["checks"]


def test_numeric_sections_present():
    b = builtin("boolean").structure
    report = run_suite([GridCell("E(boolean, zero)", b, self_module(b))], seed=5)
    ids = {r.theorem for r in report.records}
    assert "numeric-weight-laws" in ids and "numeric-oracle" in ids


def test_forward_probe_confirms_counterexample():
    probe = weakly_prime_forward_probe()
    assert probe["box_weakly_prime"] is True
    assert probe["annihilator_condition_holds"] is False
    assert probe["condition_witness"] == [2, 2]
    assert probe["counterexample_exists"] is True


def test_probe_is_informational_not_a_failure():
    b = builtin("boolean").structure
    report = run_suite([GridCell("E(boolean, boolean)", b, self_module(b))], seed=0)
    ids = {note["id"] for note in report.informational}
    assert "weakly-prime-forward-probe" in ids
    assert "strongly-associate-not-presimplifiable-census" in ids
    assert not report.failures()


def test_parallel_run_matches_sequential():
    cells = default_grid(max_order=2, include_builtins=False)
    sequential = run_suite(cells, seed=0, include_numeric=False)
    parallel = run_suite(cells, seed=0, jobs=2, include_numeric=False)
    key = lambda report: [(r.theorem, r.instance, r.status, r.witness) for r in report.records]
    assert key(sequential) == key(parallel)


def test_matrix_rendering_mentions_totals():
    b = builtin("boolean").structure
    report = run_suite([GridCell("E(boolean, boolean)", b, self_module(b))], seed=0)
    text = report.format_matrix()
    assert "instances: 1" in text and "fail: 0" in text
