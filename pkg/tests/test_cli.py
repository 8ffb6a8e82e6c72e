"""Command-line interface: parsing, report schema, exit codes, determinism."""

import json

import numpy as np
import pytest

from pseudoherm.cli import (
    AnalysisReport,
    MatrixFile,
    MatrixFormatError,
    build_analysis_report,
    main,
)


def _write(tmp_path, text):
    path = tmp_path / "matrix.txt"
    path.write_text(text)
    return str(path)


def _run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def _split_model_output(out):
    head, _, tail = out.partition("\n\n")
    lines = [line for line in tail.splitlines() if line]
    return json.loads(head), lines[0], lines[1:]


# ---------------------------------------------------------------- parsing

def test_matrix_file_token_forms():
    parsed = MatrixFile.parse("2  1+2i  -3i  2.5  4j")
    assert parsed.dim == 2
    assert parsed.entries == [1 + 2j, -3j, 2.5 + 0j, 4j]
    assert np.array_equal(parsed.to_matrix(),
                          np.array([[1 + 2j, -3j], [2.5, 4j]]))
    scientific = MatrixFile.parse("1 1e-3+2e2I")
    assert scientific.entries == [0.001 + 200j]


def test_matrix_file_row_major_order():
    parsed = MatrixFile.parse("2\n1 2\n3 4\n")
    assert np.array_equal(parsed.to_matrix(), np.array([[1, 2], [3, 4]]))


def test_matrix_file_rejections():
    for text in ("", "x 1", "0", "-1 1", "2 1 2 3", "2 1 2 3 4 5",
                 "1 1+bogus", "1 nan", "1 inf+2i"):
        with pytest.raises(MatrixFormatError):
            MatrixFile.parse(text)


# ---------------------------------------------------------------- analyze

def test_analyze_even_degenerate_matrix(tmp_path, capsys):
    path = _write(tmp_path, "2 2 0 0 2")
    code, out, _ = _run(capsys, ["analyze", path])
    assert code == 0
    report = json.loads(out)
    assert report["pseudohermitian"] is True
    assert report["all_even"] is True
    assert report["admits_symmetry"] is True
    assert report["spectrum"] == [
        {"value": [2.0, 0.0], "multiplicity": 2, "kind": "real"}]
    assert report["real_degeneracies"] == [[2.0, 2]]
    assert report["intertwiner"]["residual"] <= 1e-9
    assert report["witness_residuals"]["commutator"] <= 1e-9
    assert report["witness_residuals"]["square"] <= 1e-9


def test_analyze_odd_degeneracies(tmp_path, capsys):
    path = _write(tmp_path, "2 1 0 0 2")
    code, out, _ = _run(capsys, ["analyze", path])
    assert code == 0
    report = json.loads(out)
    assert report["pseudohermitian"] is True
    assert report["all_even"] is False
    assert report["admits_symmetry"] is False
    assert report["witness_residuals"] is None
    assert report["intertwiner"] is not None


def test_analyze_unpaired_complex_spectrum(tmp_path, capsys):
    path = _write(tmp_path, "2 1i 0 0 2i")
    code, out, _ = _run(capsys, ["analyze", path])
    assert code == 0
    report = json.loads(out)
    assert report["pseudohermitian"] is False
    assert report["intertwiner"] is None
    assert report["witness_residuals"] is None


def test_analyze_defective_matrix_exits_2(tmp_path, capsys):
    path = _write(tmp_path, "2 1 1 0 1")
    code, _, err = _run(capsys, ["analyze", path])
    assert code == 2
    assert "numeric error" in err


def test_analyze_input_failures_exit_3(tmp_path, capsys):
    bad = _write(tmp_path, "2 1 2 3 oops")
    assert _run(capsys, ["analyze", bad])[0] == 3
    assert _run(capsys, ["analyze", str(tmp_path / "missing.txt")])[0] == 3


def test_analyze_report_round_trip():
    for matrix in (np.diag([2.0, 2.0]), np.diag([1j, 2j]),
                   np.array([[1.0, 0.4j], [-0.15j, 1.0]])):
        report = build_analysis_report(matrix)
        assert AnalysisReport.from_json(report.to_json()) == report


def test_analyze_output_is_deterministic(tmp_path, capsys):
    rng = np.random.default_rng(11)
    z = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
    h = z + z.conj().T
    tokens = " ".join(f"{v.real!r}+{v.imag!r}i".replace("+-", "-")
                      for v in h.ravel())
    path = _write(tmp_path, f"3 {tokens}")
    first = _run(capsys, ["analyze", path])
    second = _run(capsys, ["analyze", path])
    assert first == second


# ---------------------------------------------------------------- model

def test_model_reference_point(capsys):
    code, out, _ = _run(capsys, [
        "model", "--muB", "0.1", "--k2", "0.5",
        "--t-start", "1", "--t-stop", "1", "--t-count", "1"])
    assert code == 0
    summary, header, rows = _split_model_output(out)
    assert header == "t,spin_flip,probe_forward,probe_backward,asymmetry"
    assert abs(summary["coupling_ratio"] - 8.0 / 3.0) <= 1e-11
    assert abs(summary["level_splitting"][0] - 0.244948974278) <= 1e-11
    assert summary["level_splitting"][1] == 0.0
    assert summary["real_spectrum_regime"] is True
    assert summary["hermitian"] is False
    assert summary["intertwiner_diag"] == [0.375, 1.0]
    assert summary["regime_note"] is None
    values = [float(x) for x in rows[0].split(",")]
    assert values[0] == 1.0
    assert abs(values[1] - 0.156825490578) <= 1e-11
    assert abs(values[2] - 0.933198872312) <= 1e-11
    assert abs(values[3] - 0.164817059299) <= 1e-11
    assert abs(values[4] - 0.768381813013) <= 1e-11


def test_model_hermitian_defaults(capsys):
    code, out, _ = _run(capsys, ["model", "--t-count", "11"])
    assert code == 0
    summary, _, rows = _split_model_output(out)
    assert summary["hermitian"] is True
    assert summary["coupling_ratio"] == 1.0
    assert summary["exceeds_unit_probability"] is False
    assert len(rows) == 11


def test_model_flags_probability_excursions(capsys):
    code, out, _ = _run(capsys, ["model", "--muB", "0.1", "--k2", "0.5"])
    assert code == 0
    summary, _, rows = _split_model_output(out)
    assert summary["exceeds_unit_probability"] is True
    flips = [float(row.split(",")[1]) for row in rows]
    assert max(flips) > 1.0  # raw values stay unclamped in the CSV


def test_model_complex_regime(capsys):
    code, out, _ = _run(capsys, [
        "model", "--muB", "0.3", "--k2", "0.5", "--t-count", "3"])
    assert code == 0
    summary, _, _ = _split_model_output(out)
    assert summary["real_spectrum_regime"] is False
    assert summary["coupling_ratio"] == -4.0
    assert summary["eigenvalues"] == [[1.0, -0.1], [1.0, 0.1]]
    assert summary["intertwiner_diag"] is None
    assert "metric undefined" in summary["regime_note"]


def test_model_degenerate_regimes_exit_4(capsys):
    code, _, err = _run(capsys, ["model", "--muB", "0.25", "--k2", "0.5"])
    assert code == 4 and "model regime" in err
    code, _, err = _run(capsys, ["model", "--muB", "0.5", "--k2", "0.6"])
    assert code == 4 and "model regime" in err


def test_model_bad_time_grid_exits_3(capsys):
    assert _run(capsys, ["model", "--t-start", "5", "--t-stop", "1"])[0] == 3
    assert _run(capsys, ["model", "--t-count", "0"])[0] == 3


# ---------------------------------------------------------------- scan

def test_scan_single_point(capsys):
    argv = ["scan", "--k1", "1", "--k2", "0.5", "--muB", "0.1",
            "--t-start", "0", "--t-stop", "5", "--t-count", "51"]
    code, out, _ = _run(capsys, argv)
    assert code == 0
    header, row = out.strip().splitlines()
    assert header == ("k1,k2,muB,real_spectrum_regime,"
                      "kramers_all_even,max_abs_asymmetry")
    cells = row.split(",")
    assert cells[:5] == ["1", "0.5", "0.1", "true", "false"]
    from pseudoherm import ModelParams, probe_asymmetry
    params = ModelParams(E=1.0, muB=0.1, omega2=1.0, k1=1.0, k2=0.5)
    expected = max(abs(probe_asymmetry(params, t))
                   for t in np.linspace(0.0, 5.0, 51))
    assert abs(float(cells[5]) - expected) <= 1e-9


def test_scan_grid_straddles_regime_boundary(capsys):
    argv = ["scan", "--k1", "1", "--k2", "0.5", "--muB=-0.4:0.4:3",
            "--t-count", "11"]
    code, out, _ = _run(capsys, argv)
    assert code == 0
    rows = [line.split(",") for line in out.strip().splitlines()[1:]]
    assert [r[2] for r in rows] == ["-0.4", "0", "0.4"]
    assert [r[3] for r in rows] == ["true", "true", "false"]
    # real-regime points have two simple real levels; the complex-regime
    # point has no real levels at all, so evenness holds vacuously
    assert [r[4] for r in rows] == ["false", "false", "true"]
    assert all(float(r[5]) > 0 for r in rows)


def test_scan_blank_cells_at_defective_point(capsys):
    argv = ["scan", "--k1", "1", "--k2", "0.5", "--muB", "0.25",
            "--t-count", "5"]
    code, out, _ = _run(capsys, argv)
    assert code == 0
    cells = out.strip().splitlines()[1].split(",")
    assert cells[3] == "false"
    assert cells[4] == ""  # Jordan block, no Kramers verdict
    assert cells[5] == ""  # degenerate denominator, no asymmetry curve


def test_scan_bad_range_exits_3(capsys):
    assert _run(capsys, ["scan", "--k1", "1:2"])[0] == 3
    assert _run(capsys, ["scan", "--k1", "oops"])[0] == 3


# ---------------------------------------------------------------- parser

def test_missing_subcommand_exits_3(capsys):
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == 3


def test_unknown_flag_exits_3(capsys):
    with pytest.raises(SystemExit) as info:
        main(["analyze", "--bogus"])
    assert info.value.code == 3


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as info:
        main(["--version"])
    assert info.value.code == 0
    assert "pseudoherm" in capsys.readouterr().out
