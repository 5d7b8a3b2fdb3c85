"""Report formatting and the config-driven sweep runner."""
import numpy as np
import pytest

from berglab.report import CSV_HEADER, ReportRow, VerificationReport, fmt_value
from berglab.sweep import parse_sweep_config, run_sweep


def make_row(**kw):
    base = dict(
        check_id="demo",
        params="a=1",
        computed=1.0,
        target=1.0,
        status="pass",
    )
    base.update(kw)
    return ReportRow(**base)


def test_fmt_value_round_trip_precision():
    assert fmt_value(None) == ""
    assert fmt_value(True) == "true"
    assert fmt_value(False) == "false"
    assert fmt_value(3) == "3"
    assert fmt_value(0.1) == "0.1"
    assert float(fmt_value(1.0 / 3.0)) == 1.0 / 3.0
    assert fmt_value(np.float64(0.25)) == "0.25"


def test_report_row_status_validated():
    with pytest.raises(ValueError):
        make_row(status="maybe")


def test_report_sorting_and_counts():
    rep = VerificationReport()
    rep.add(make_row(check_id="b", params="x=2"))
    rep.add(make_row(check_id="a", params="x=9"))
    rep.add(make_row(check_id="a", params="x=1", status="fail"))
    ordered = [(r.check_id, r.params) for r in rep.sorted_rows()]
    assert ordered == [("a", "x=1"), ("a", "x=9"), ("b", "x=2")]
    counts = rep.counts()
    assert counts["pass"] == 2 and counts["fail"] == 1
    assert not rep.aggregate_pass


def test_aggregate_ignores_out_of_hypothesis_but_not_errors():
    rep = VerificationReport()
    rep.add(make_row(status="pass"))
    rep.add(make_row(params="a=2", status="out-of-hypothesis", hypothesis_ok=False))
    assert rep.aggregate_pass
    rep.add(make_row(params="a=3", status="error", note="boom"))
    assert not rep.aggregate_pass


def test_csv_schema_and_runtime_exclusion():
    r1 = make_row(runtime_s=1.25)
    r2 = make_row(runtime_s=77.0)
    rep1, rep2 = VerificationReport(), VerificationReport()
    rep1.add(r1)
    rep2.add(r2)
    csv1, csv2 = rep1.to_csv(), rep2.to_csv()
    assert csv1 == csv2
    assert csv1.splitlines()[0] == ",".join(CSV_HEADER)


def test_write_csv_deterministic(tmp_path):
    rep = VerificationReport()
    rep.add(make_row(computed=1.0 / 3.0, est_error=2e-16))
    p1, p2 = tmp_path / "a.csv", tmp_path / "b.csv"
    rep.write_csv(p1)
    rep.write_csv(p2)
    assert p1.read_bytes() == p2.read_bytes()


BASE_CONFIG = """
# demo sweep
[sweep]
checks = hyper, nikolskii
seed = 5

[grid]
tuples = 2 2 2 4, 2 3 2 4
r = auto

[corpus]
polys = 1,1 ; (0):1 (2):0.5
"""


def test_parse_config_round_trip():
    cfg = parse_sweep_config(BASE_CONFIG)
    assert cfg.checks == ("hyper", "nikolskii")
    assert cfg.seed == 5
    assert cfg.tuples == ((2.0, 2.0, 2.0, 4.0), (2.0, 3.0, 2.0, 4.0))
    assert cfg.radii == "auto"
    assert len(cfg.polys) == 2
    assert cfg.polys[1].coeff((2,)) == 0.5


def test_parse_config_axis_cross_product():
    cfg = parse_sweep_config(
        "[grid]\nalpha = 2, 3\nbeta = 2\np = 2\nq = 4\n"
    )
    assert cfg.tuples == ((2.0, 2.0, 2.0, 4.0), (3.0, 2.0, 2.0, 4.0))


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("[nope]\n", "line 1"),
        ("[sweep]\nchecks = hyper\nchecks = hyper\n", "line 3"),
        ("[sweep]\nbogus = 1\n", "line 2"),
        ("key = 1\n", "line 1"),
        ("[grid]\ntuples = 2 2 2\n", "four numbers"),
        ("[grid]\ntuples = 2 2 2 4\nalpha = 2\n", "not both"),
        ("[grid]\neps = 2\n", "eps"),
        ("[grid]\nr = 1.5\n", "outside"),
        ("[sweep]\nchecks = sideways\n", "unknown check"),
        ("[corpus]\npolys = ((\n", "bad polynomial"),
    ],
)
def test_parse_config_failures_carry_line_numbers(text, fragment):
    with pytest.raises(ValueError, match=fragment):
        parse_sweep_config(text)


def test_empty_grid_gives_empty_passing_report():
    cfg = parse_sweep_config("[sweep]\nchecks = hyper\n")
    rep = run_sweep(cfg)
    assert rep.aggregate_pass
    assert sum(rep.counts().values()) == 0


def test_sweep_deterministic_and_parallel_identical():
    cfg = parse_sweep_config(BASE_CONFIG)
    a = run_sweep(cfg).to_csv()
    b = run_sweep(cfg).to_csv()
    c = run_sweep(cfg, jobs=4).to_csv()
    assert a == b == c
    assert a.count("\n") == 1 + 2 * 2 * 2  # header + checks x tuples x polys


def test_sweep_positive_grid_passes():
    cfg = parse_sweep_config(BASE_CONFIG)
    rep = run_sweep(cfg)
    assert rep.aggregate_pass
    assert all(r.status == "pass" for r in rep.sorted_rows())


def test_sweep_records_error_rows_without_dying():
    cfg = parse_sweep_config(
        "[sweep]\nchecks = kulikov\n[grid]\ntuples = 2 2 4 2\n[corpus]\npolys = 1,1\n"
    )
    rep = run_sweep(cfg)
    rows = rep.sorted_rows()
    assert len(rows) == 1
    assert rows[0].status == "error"
    assert "ValueError" in rows[0].note
    assert not rep.aggregate_pass


def test_sweep_threshold_rows_need_no_polys():
    cfg = parse_sweep_config("[sweep]\nchecks = threshold\n[grid]\ntuples = 2 2 2 4\n")
    rep = run_sweep(cfg)
    rows = rep.sorted_rows()
    assert len(rows) == 1
    assert rows[0].status == "pass"
