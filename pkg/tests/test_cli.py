import json
import re
import sys

import pytest

from seidelspectra.cli import N_CAP_ENV, main, run

CSV_HEADER = "h,p,k,n,exact_match,max_dev,elapsed_ms"


def test_spectrum_human_output(capsys):
    code = main(["spectrum", "--h", "3", "--p", "1", "--k", "2"])
    out = capsys.readouterr().out
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "h=3 p=1 k=2 n=4"
    assert lines[1] == "eigenvalues:"
    assert "  2.2360679775  x1" in lines
    assert "  1  x1" in lines
    assert "  -1  x1" in lines
    assert "  -2.2360679775  x1" in lines
    assert lines[-1] == "cubic coefficients (ascending): [5, 5, -1, -1]"


def test_spectrum_json_output(capsys):
    code = main(["spectrum", "--h", "2", "--p", "1", "--k", "3",
                 "--format", "json"])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["h"] == 2 and payload["p"] == 1 and payload["k"] == 3
    assert payload["n"] == 4
    assert payload["eigenvalues"] == [
        {"value": 3, "multiplicity": 1},
        {"value": -1, "multiplicity": 3},
    ]
    assert payload["cubic"] == [3, 5, 1, -1]


def test_invalid_params_exit_code(capsys):
    code = main(["spectrum", "--h", "3", "--p", "4", "--k", "2"])
    captured = capsys.readouterr()
    assert code == 2
    assert captured.out == ""
    assert "p must satisfy 1 <= p <= h" in captured.err


def test_degenerate_family_exit_code(capsys):
    code = main(["charpoly", "--h", "3", "--p", "1", "--k", "1"])
    captured = capsys.readouterr()
    assert code == 2
    assert "factored form needs k >= 2" in captured.err


def test_charpoly_human_expanded(capsys):
    code = main(["charpoly", "--h", "3", "--p", "1", "--k", "2", "--expanded"])
    out = capsys.readouterr().out
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "(1 - x)^1 * (-x^3 - x^2 + 5*x + 5)"
    assert lines[1] == "degree: 4"
    assert lines[2] == "coefficients (ascending): [5, 0, -6, 0, 1]"


def test_charpoly_star_factorization(capsys):
    code = main(["charpoly", "--h", "2", "--p", "1", "--k", "3"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.splitlines()[0] == "(-1 - x)^1 * (-x^3 + x^2 + 5*x + 3)"


def test_charpoly_json(capsys):
    code = main(["charpoly", "--h", "2", "--p", "1", "--k", "3",
                 "--expanded", "--format", "json"])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["degree"] == 4
    assert payload["factors"] == [
        {"root": -1, "exponent": 1},
        {"root": 1, "exponent": 0},
    ]
    assert payload["cubic"] == [3, 5, 1, -1]
    assert payload["coefficients"] == [-3, -8, -6, 0, 1]


def test_verify_human_passes(capsys):
    code = main(["verify", "--h", "2", "--p", "1", "--k", "3"])
    out = capsys.readouterr().out
    assert code == 0
    assert "charpoly exact match: yes" in out
    assert "  -1  x3" in out
    assert "max numeric deviation:" in out
    assert "invariants: trace_zero=pass sum_squares=pass degree=pass vieta_trace=pass" in out
    assert "notes:" in out


def test_verify_json_payload(capsys):
    code = main(["verify", "--h", "3", "--p", "1", "--k", "2",
                 "--format", "json"])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["charpoly_exact_match"] is True
    assert payload["coefficient_diffs"] == []
    assert payload["spectrum_max_deviation"] <= 1e-9
    assert all(payload["invariants"].values())
    assert len(payload["eigenvalues"]) == 4
    assert len(payload["notes"]) == 3


def test_sweep_csv_file(tmp_path, capsys):
    out_path = tmp_path / "grid.csv"
    code = main(["sweep", "--h-max", "3", "--k-max", "3",
                 "--out", str(out_path)])
    captured = capsys.readouterr()
    assert code == 0
    assert captured.out.strip() == "10 passed, 0 failed, 0 skipped"
    lines = out_path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == CSV_HEADER
    assert len(lines) == 11
    row = re.compile(r"^\d+,\d+,\d+,\d+,true,[0-9.e+-]+,\d+\.\d{3}$")
    assert all(row.match(line) for line in lines[1:])


def test_sweep_csv_deterministic_columns(tmp_path, capsys):
    paths = (tmp_path / "a.csv", tmp_path / "b.csv")
    for path in paths:
        assert main(["sweep", "--h-max", "3", "--k-max", "3",
                     "--out", str(path)]) == 0
    capsys.readouterr()
    stable = lambda p: [
        line.rsplit(",", 1)[0]
        for line in p.read_text(encoding="utf-8").splitlines()
    ]
    assert stable(paths[0]) == stable(paths[1])


def test_sweep_stdout_and_stderr_split(capsys):
    code = main(["sweep", "--h-max", "2", "--k-max", "2"])
    captured = capsys.readouterr()
    assert code == 0
    body = captured.out.splitlines()
    assert body[0] == CSV_HEADER
    assert len(body) == 3
    assert captured.err.strip() == "2 passed, 0 failed, 0 skipped"


def test_sweep_unwritable_path(capsys):
    code = main(["sweep", "--h-max", "2", "--k-max", "2",
                 "--out", "/nonexistent-dir/grid.csv"])
    captured = capsys.readouterr()
    assert code == 3
    assert captured.err.startswith("error:")


def test_sweep_n_cap_from_environment(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv(N_CAP_ENV, "4")
    out_path = tmp_path / "capped.csv"
    code = main(["sweep", "--h-max", "3", "--k-max", "3",
                 "--out", str(out_path)])
    captured = capsys.readouterr()
    assert code == 0
    assert captured.out.strip() == "4 passed, 0 failed, 6 skipped"
    assert len(out_path.read_text(encoding="utf-8").splitlines()) == 5


def test_sweep_n_cap_flag_beats_environment(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv(N_CAP_ENV, "4")
    out_path = tmp_path / "full.csv"
    code = main(["sweep", "--h-max", "3", "--k-max", "3",
                 "--n-cap", "40", "--out", str(out_path)])
    captured = capsys.readouterr()
    assert code == 0
    assert captured.out.strip() == "10 passed, 0 failed, 0 skipped"


def test_sweep_bad_environment_value(capsys, monkeypatch):
    monkeypatch.setenv(N_CAP_ENV, "zap")
    code = main(["sweep", "--h-max", "2", "--k-max", "2"])
    captured = capsys.readouterr()
    assert code == 2
    assert N_CAP_ENV in captured.err


def test_sweep_json_rows(capsys, monkeypatch):
    monkeypatch.setenv(N_CAP_ENV, "4")
    code = main(["sweep", "--h-max", "3", "--k-max", "3",
                 "--format", "json"])
    captured = capsys.readouterr()
    assert code == 0
    rows = json.loads(captured.out)
    ran = [r for r in rows if not r.get("skipped")]
    skipped = [r for r in rows if r.get("skipped")]
    assert len(ran) == 4 and len(skipped) == 6
    assert all(r["exact_match"] is True for r in ran)
    assert all(r["n"] > 4 for r in skipped)


def test_export_dot(capsys):
    code = main(["export", "--h", "3", "--p", "1", "--k", "2"])
    out = capsys.readouterr().out
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "graph G {"
    assert lines[-1] == "}"
    assert '  0 [label="v1_1"];' in lines
    assert '  1 [label="u1"];' in lines
    assert out.count('sign="-"') == 5
    assert out.count('sign="+"') == 1


def test_export_json_edge_lists(capsys):
    assert main(["export", "--h", "3", "--p", "1", "--k", "2",
                 "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload == {
        "n": 4,
        "negative_edges": [[0, 1], [0, 2], [1, 2], [1, 3], [2, 3]],
    }
    assert main(["export", "--h", "2", "--p", "1", "--k", "3",
                 "--format", "json"]) == 0
    star = json.loads(capsys.readouterr().out)
    assert len(star["negative_edges"]) == 3
    assert all(2 in edge for edge in star["negative_edges"])
    assert main(["export", "--h", "2", "--p", "2", "--k", "1",
                 "--format", "json"]) == 0
    single = json.loads(capsys.readouterr().out)
    assert single == {"n": 2, "negative_edges": [[0, 1]]}


def test_run_entry_point(capsys, monkeypatch):
    monkeypatch.setattr(
        sys, "argv",
        ["seidelspectra", "spectrum", "--h", "2", "--p", "1", "--k", "2"],
    )
    with pytest.raises(SystemExit) as excinfo:
        run()
    assert excinfo.value.code == 0
    assert "eigenvalues:" in capsys.readouterr().out


def test_missing_subcommand_is_usage_error(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main([])
    assert excinfo.value.code == 2
