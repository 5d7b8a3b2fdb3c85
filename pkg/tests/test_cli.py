"""Exit codes, output formats, and plumbing of the command line interface."""
import json
import math

import pytest

from berglab.cli import main


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_norm_json_output(capsys):
    code, out, _ = run(["norm", "--space", "alpha=2,p=4", "--poly", "1,1"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["method"] == "quadrature"
    assert data["value"] == pytest.approx((10.0 / 3.0) ** 0.25, rel=1e-12)
    assert data["est_error"] == 0.0


def test_norm_exact_and_mc_methods(capsys):
    code, out, _ = run(
        ["norm", "--space", "alpha=2,p=2", "--poly", "1,1", "--method", "exact"],
        capsys,
    )
    assert code == 0
    assert json.loads(out)["value"] == pytest.approx(math.sqrt(1.5), rel=1e-14)
    code, out, _ = run(
        ["--seed", "4", "norm", "--space", "alpha=2,p=2", "--poly", "1,1",
         "--method", "mc", "--samples", "20000"],
        capsys,
    )
    assert code == 0
    data = json.loads(out)
    assert data["est_error"] > 0.0
    assert abs(data["value"] - math.sqrt(1.5)) < 5.0 * data["est_error"]


def test_norm_bad_space_is_usage_error(capsys):
    code, _, err = run(["norm", "--space", "alpha=2", "--poly", "1,1"], capsys)
    assert code == 2
    assert "error" in err


def test_unknown_subcommand_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_hyper_check_pass_fail_and_out_of_hypothesis(capsys):
    base = ["hyper-check", "--alpha", "2", "--beta", "2", "--p", "2", "--q", "4",
            "--poly", "1,1", "--quiet"]
    code, out, _ = run(base, capsys)
    assert code == 0
    row = json.loads(out)[0]
    assert row["status"] == "pass"

    fail = ["hyper-check", "--alpha", "2", "--beta", "3", "--p", "2", "--q", "4",
            "--poly", "(0):1 (1):0.001", "--r", "0.88", "--quiet"]
    code, out, _ = run(fail, capsys)
    assert code == 1
    assert json.loads(out)[0]["status"] == "fail"

    sideways = ["hyper-check", "--alpha", "2", "--beta", "2", "--p", "4", "--q", "2",
                "--poly", "1,1", "--quiet"]
    code, out, _ = run(sideways, capsys)
    assert code == 0
    row = json.loads(out)[0]
    assert row["status"] == "out-of-hypothesis"
    assert row["hypothesis_ok"] == "false"


def test_threshold_command(capsys):
    code, out, _ = run(
        ["threshold", "--alpha", "2", "--beta", "2", "--p", "2", "--q", "4",
         "--quiet"],
        capsys,
    )
    assert code == 0
    row = json.loads(out)[0]
    assert float(row["computed"]) == pytest.approx(math.sqrt(0.5), abs=5e-3)


def test_phi_csv_output(capsys):
    code, out, _ = run(
        ["phi", "--poly", "1,1", "--q", "4", "--ymin", "0.1", "--ymax", "0.5",
         "--count", "5", "--quiet"],
        capsys,
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "y,phi,phi2"
    assert len(lines) == 6
    y, phi, phi2 = (float(v) for v in lines[1].split(","))
    assert phi == pytest.approx(1.0 + 4.0 * y + y * y, rel=1e-12)
    assert phi2 == pytest.approx(2.0, abs=1e-6)


def test_kulikov_usage_error_on_bad_exponents(capsys):
    code, _, err = run(
        ["kulikov", "--poly", "1,1", "--alpha", "2", "--p", "4", "--q", "2"],
        capsys,
    )
    assert code == 2
    assert "error" in err


def test_weissler_default_radius(capsys):
    code, out, _ = run(
        ["weissler", "--poly", "1,1", "--p", "2", "--q", "4", "--quiet"], capsys
    )
    assert code == 0
    row = json.loads(out)[0]
    assert "r=0.7071067811865476" in row["params"]


def test_stirling_and_gamma_ratio(capsys):
    code, out, _ = run(["stirling", "--quiet", "--out", "csv"], capsys)
    assert code == 0
    assert out.splitlines()[1].startswith("stirling,")
    code, out, _ = run(
        ["gamma-ratio", "--p", "2", "--q", "4", "--quiet", "--out", "csv"], capsys
    )
    assert code == 0
    assert "gamma-ratio" in out


def test_dump_rule_csv(capsys):
    code, out, _ = run(["dump-rule", "--alpha", "2", "--nodes", "5"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "component,index,node,weight"
    weights = [float(line.split(",")[3]) for line in lines[1:]]
    assert sum(weights) == pytest.approx(1.0, abs=1e-13)


def test_sweep_cli_round_trip(tmp_path, capsys):
    out_csv = tmp_path / "rows.csv"
    cfg = tmp_path / "demo.cfg"
    cfg.write_text(
        "[sweep]\nchecks = hyper\n[grid]\ntuples = 2 2 2 4\n"
        f"[corpus]\npolys = 1,1\n[output]\npath = {out_csv}\n"
    )
    code, _, err = run(["sweep", "--config", str(cfg), "--quiet"], capsys)
    assert code == 0
    first = out_csv.read_bytes()
    code, _, _ = run(["sweep", "--config", str(cfg), "--quiet"], capsys)
    assert code == 0
    assert out_csv.read_bytes() == first

    bad = tmp_path / "bad.cfg"
    bad.write_text("[grid]\ntuples = 1 2\n")
    code, _, err = run(["sweep", "--config", str(bad), "--quiet"], capsys)
    assert code == 2
    assert "line 2" in err


def test_sweep_stdout_csv(capsys):
    # without an output path rows go to stdout in the report schema
    import tempfile, os

    with tempfile.TemporaryDirectory() as d:
        cfg = os.path.join(d, "c.cfg")
        with open(cfg, "w") as fh:
            fh.write("[sweep]\nchecks = threshold\n[grid]\ntuples = 2 2 2 4\n")
        code, out, _ = run(["sweep", "--config", cfg, "--quiet"], capsys)
    assert code == 0
    assert out.splitlines()[0].startswith("check_id,")


def test_verify_suite_filter_no_match_is_usage_error(capsys, tmp_path):
    code, _, err = run(
        ["verify-suite", "--filter", "zzz", "--csv", str(tmp_path / "x.csv")],
        capsys,
    )
    assert code == 2
    assert "matches no criterion" in err
