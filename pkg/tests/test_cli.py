"""End-to-end command tests, run in-process via main(argv)."""

import contextlib
import io
import json

import pytest

from mublocks.cli import main


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()


def run_json(argv):
    code, out, err = run(argv)
    assert out, f"no stdout (stderr: {err!r})"
    return code, json.loads(out)


def test_check_interior_f_point():
    code, doc = run_json(["check", "f", "(0,0,0.25,0)"])
    assert code == 0
    assert doc["domain"] == "f"
    assert doc["region"] == "Interior"
    assert doc["margin"] == pytest.approx(0.5625)
    assert doc["tol"] == 1e-9
    assert doc["shilov"] is None
    assert not doc["indeterminate"]
    assert doc["point"][2] == {"re": 0.25, "im": 0.0}


def test_check_exit_code_encodes_region():
    assert run(["check", "f", "(0,0.5,0,1)"])[0] == 2
    assert run(["check", "g2", "(0,0)"])[0] == 0
    assert run(["check", "g2", "(2,1)"])[0] == 1
    assert run(["check", "tetra", "(0,0,2)"])[0] == 2
    assert run(["check", "penta", "(0.99,0,0)"])[0] == 0
    assert run(["check", "l4", "(0.6,0.8,0,0)"])[0] == 1


def test_check_hn_reports_set_flags_not_margin():
    code, doc = run_json(["check", "hn", "(0,0,0,0.25)"])
    assert code == 2
    assert doc["region"] == "Outside"
    assert doc["in_open"] is False
    assert doc["in_closure"] is False
    assert doc["in_interior_of_hn"] is False
    assert doc["margin"] is None

    code, doc = run_json(["check", "hn", "(0.3,0.2,0.1,0.05)"])
    assert code == 0
    assert doc["region"] == "Interior"
    assert doc["in_open"] and doc["in_interior_of_hn"]


def test_check_indeterminate_maps_to_boundary_exit():
    code, doc = run_json(["check", "h", "(0.5,1,0,0)"])
    assert code == 1
    assert doc["region"] == "ClosureBoundary"
    assert doc["indeterminate"] is True


def test_check_complex_input_forms():
    base = run_json(["check", "g2", "(0.5+0.25i,0.1)"])
    for text in ("(0.5+0.25j, 0.1)",
                 "[\"0.5+0.25i\", 0.1]",
                 '[{"re": 0.5, "im": 0.25}, 0.1]',
                 '{"coords": ["0.5+0.25i", 0.1], "domain": "g2"}',
                 "(0.5+0.25i, 0.1)".replace("-", "−")):
        assert run_json(["check", "g2", text]) == base


def test_check_parse_failures_exit_64():
    assert run(["check", "f", "(0,0"])[0] == 64
    assert run(["check", "f", "(1,2,3)"])[0] == 64        # arity
    assert run(["check", "f", '{"coords": [0,0,0,0], "domain": "g2"}'])[0] == 64
    assert run(["check", "f"])[0] == 64                   # missing point
    assert run(["check", "nosuchdomain", "(0,0)"])[0] == 64


def test_check_round_trip_through_output_doc():
    code, doc = run_json(["check", "f", "(0.1+0.2i,0.05,-0.02,0.3)"])
    redoc = {"coords": doc["point"], "domain": "f"}
    code2, doc2 = run_json(["check", "f", json.dumps(redoc)])
    assert (code, doc) == (code2, doc2)


def test_mu_infeasible_and_exact():
    code, doc = run_json(["mu", "diag", "[[0,1],[0,0]]"])
    assert code == 0
    assert doc["value"] == 0.0
    assert doc["status"] == "Infeasible"
    assert doc["minimizer"] is None

    code, doc = run_json(["mu", "full", "[[2,0],[0,0]]"])
    assert doc["value"] == pytest.approx(2.0)
    assert doc["status"] == "Exact"
    assert doc["minimizer"][0][0]["re"] == pytest.approx(0.5)

    code, doc = run_json(["mu", "e_theta:0", "[[0,1],[0,0]]"])
    assert doc["value"] == pytest.approx(1.0)
    m = doc["minimizer"]
    assert m[0][1]["re"] == pytest.approx(1.0, abs=1e-6)
    assert m[1][0]["re"] == pytest.approx(1.0, abs=1e-6)


def test_mu_unknown_structure_exit_65():
    code, out, err = run(["mu", "bogus", "[[1,0],[0,1]]"])
    assert code == 65
    assert "bogus" in err


def test_mu_matrix_parse_failures():
    assert run(["mu", "full", "[[1,0],[0]]"])[0] == 64
    assert run(["mu", "full", "not json"])[0] == 64


def test_verify_named_suite():
    code, out, err = run(["verify", "lemma21_gram", "--n", "50"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("suite=lemma21_gram n=50 ")
    assert lines[0].endswith("status=pass")
    assert lines[-1] == "total: suites=1 failures=0 status=pass"


def test_verify_counterexamples_and_grid_flag():
    code, out, _ = run(["verify", "counterexamples", "--r", "0.5", "--r", "0.25"])
    assert code == 0
    assert "suite=counterexamples n=2" in out
    # --r only makes sense there; --n only for sized suites
    assert run(["verify", "lemma21_gram", "--r", "0.5"])[0] == 64
    assert run(["verify", "all", "--n", "10"])[0] == 64


def test_verify_unknown_suite_exit_66():
    code, _, err = run(["verify", "nosuchsuite"])
    assert code == 66
    assert "nosuchsuite" in err


def test_verify_out_aggregate(tmp_path):
    path = tmp_path / "report.json"
    code, out, _ = run(["verify", "prop22_vs_oracle", "--n", "100",
                        "--out", str(path)])
    assert code == 0
    data = json.loads(path.read_text())
    assert isinstance(data, list) and len(data) == 1
    assert data[0]["suite"] == "prop22_vs_oracle"
    assert data[0]["passed"] is True
    assert data[0]["n_samples"] == 100


def test_slice_grid_layout_and_values():
    code, out, _ = run(["slice", "f", "--fixed", "x=0,s=0",
                        "--axes", "Re(a),Im(a)", "--range", "-1:1,-1:1",
                        "--grid", "5"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "Re(a)\tIm(a)\tcode\tmargin"
    assert len(lines) == 1 + 25
    rows = {tuple(l.split("\t")[:2]): l.split("\t")[2:] for l in lines[1:]}
    assert rows[("0", "0")] == ["0", "1"]           # the origin, margin 1
    assert rows[("-1", "-1")][0] == "2"             # corner outside
    assert rows[("-1", "0")][0] == "1"              # |a| = 1 boundary
    codes = {r[0] for r in rows.values()}
    assert codes == {"0", "1", "2"}


def test_slice_deterministic_and_out_file(tmp_path):
    argv = ["slice", "g2", "--grid", "8"]
    a = run(argv)
    b = run(argv)
    assert a == b
    assert a[1].splitlines()[0] == "Re(s)\tRe(p)\tcode\tmargin"
    path = tmp_path / "cells.tsv"
    code, out, _ = run(argv + ["--out", str(path)])
    assert code == 0 and out == ""
    assert path.read_text() == a[1]


def test_slice_indeterminate_cells_use_code_9():
    code, out, _ = run(["slice", "h", "--fixed", "x1=1,x2=0,x3=0",
                        "--axes", "Re(a),Im(a)",
                        "--range", "-0.5:0.5,-0.5:0.5", "--grid", "3"])
    assert code == 0
    codes = {l.split("\t")[2] for l in out.strip().splitlines()[1:]}
    assert "9" in codes


def test_slice_argument_validation():
    # an axis that is also fixed
    assert run(["slice", "f", "--fixed", "x=0", "--axes", "Re(x),Im(x)"])[0] == 64
    assert run(["slice", "f", "--axes", "Re(nope),Im(x)"])[0] == 64
    assert run(["slice", "f", "--range", "1:2:3"])[0] == 64
    assert run(["slice", "f", "--grid", "1"])[0] == 64
    assert run(["slice", "f", "--fixed", "x=notanumber"])[0] == 64


def test_tol_env_and_flag(monkeypatch):
    monkeypatch.setenv("MUBLOCKS_TOL", "0.3")
    code, doc = run_json(["check", "g2", "(0,0.9)"])
    assert doc["tol"] == 0.3
    assert doc["region"] == "ClosureBoundary"  # 0.19 margin inside wide band
    # explicit flag wins over the environment
    code, doc = run_json(["check", "g2", "(0,0.9)", "--tol", "1e-9"])
    assert doc["tol"] == 1e-9
    assert doc["region"] == "Interior"
    monkeypatch.setenv("MUBLOCKS_TOL", "abc")
    assert run(["check", "g2", "(0,0)"])[0] == 64
    monkeypatch.setenv("MUBLOCKS_TOL", "-1")
    assert run(["check", "g2", "(0,0)"])[0] == 64


def test_usage_errors():
    assert run([])[0] == 64
    assert run(["frobnicate"])[0] == 64
    assert run(["check"])[0] == 64
