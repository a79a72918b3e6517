"""End-to-end CLI behavior through main(), including exit codes.

Exit code contract: 0 success, 2 validation failures (criterion, row
or certificate mismatches), 3 resource caps, 4 argument problems.
"""

import json

import pytest

from bchcert.cli import main
from bchcert.locator import load_certificate
from bchcert.tables import generate_family, write_golden


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_info_human(capsys):
    code, out, err = run(capsys, "info", "--q", "3", "--n", "26",
                         "--delta", "5")
    assert code == 0
    assert "[26,17,5]_3" in out
    assert "bose distance: 5" in out


def test_info_json(capsys):
    code, out, _ = run(capsys, "info", "--q", "2", "--n", "15",
                       "--delta", "5", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["k"] == 7
    assert data["bose_distance"] == 5
    assert data["k_closed_form"] is None  # outside the lemma window
    assert data["field"]["p"] == 2


def test_info_rejects_bad_code(capsys):
    code, _, err = run(capsys, "info", "--q", "3", "--n", "12", "--delta", "3")
    assert code == 4
    assert "NotCoprime" in err


def test_missing_required_option(capsys):
    code, _, err = run(capsys, "info", "--n", "26", "--delta", "5")
    assert code == 4
    assert "error" in err


def test_unknown_subcommand(capsys):
    code, _, _ = run(capsys, "frobnicate")
    assert code == 4


def test_help_exits_zero(capsys):
    assert run(capsys, "--help")[0] == 0
    assert run(capsys, "certify", "--help")[0] == 0


def test_certify_qt_output_revalidates(capsys):
    code, out, _ = run(capsys, "certify", "qt", "--q", "2", "--t", "2",
                       "--m", "4")
    assert code == 0
    data = json.loads(out)
    cert = load_certificate(data)  # full recomputation
    assert cert.code.params_str() == "[15,7,5]_2"
    assert data["s_values"] == [0, 0, 0, 0]
    assert data["unit_coefficient"] == -1


def test_certify_nonprimitive(capsys):
    code, out, _ = run(capsys, "certify", "nonprimitive", "--p", "3",
                       "--e", "1", "--lambda", "2")
    assert code == 0
    data = json.loads(out)
    assert data["code"]["n"] == 13
    assert load_certificate(data).codeword.weight() == 4


def test_certify_small_delta(capsys):
    code, out, _ = run(capsys, "certify", "small-delta", "--q", "5",
                       "--m", "2", "--delta", "4")
    assert code == 0
    assert json.loads(out)["weight"] == 4


def test_certify_search_hit(capsys):
    code, out, _ = run(capsys, "certify", "search", "--q", "3", "--n", "26",
                       "--delta", "5")
    assert code == 0
    assert json.loads(out)["locator_exponents"] == [1, 3, 9, 13]


def test_certify_search_exhausted(capsys):
    code, out, _ = run(capsys, "certify", "search", "--q", "3", "--n", "13",
                       "--delta", "3")
    assert code == 2
    assert json.loads(out) == {
        "found": False,
        "message": "support space exhausted: d > delta"}


def test_certify_search_budget_exceeded(capsys):
    code, _, err = run(capsys, "certify", "search", "--q", "3", "--n", "26",
                       "--delta", "5", "--budget", "3")
    assert code == 3
    assert json.loads(err)["error"] == "BudgetExceeded"


def test_certify_missing_family_options(capsys):
    code, _, err = run(capsys, "certify", "qt", "--q", "2", "--t", "2")
    assert code == 4
    assert "--m" in json.loads(err)["message"]


def test_certify_invalid_family_parameters(capsys):
    code, _, err = run(capsys, "certify", "qt", "--q", "2", "--t", "1",
                       "--m", "3")
    assert code == 4
    assert json.loads(err)["error"] == "BadParameters"


def test_oracle_auto_picks_full_for_small_codes(capsys):
    code, out, _ = run(capsys, "oracle", "--q", "3", "--n", "13",
                       "--delta", "4", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["d"] == 4
    assert data["method"] == "full-enumeration"


def test_oracle_auto_picks_support_for_large_codes(capsys):
    code, out, _ = run(capsys, "oracle", "--q", "3", "--n", "26",
                       "--delta", "5", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["d"] == 5
    assert data["method"] == "support-enumeration"


def test_oracle_lower_bound_output(capsys):
    code, out, _ = run(capsys, "oracle", "--q", "3", "--n", "13",
                       "--delta", "3", "--method", "support")
    assert code == 0
    assert "d > 3" in out


def test_oracle_too_large(capsys):
    code, _, err = run(capsys, "oracle", "--q", "2", "--n", "255",
                       "--delta", "3", "--method", "full")
    assert code == 3
    assert json.loads(err)["error"] == "TooLarge"


def test_oracle_budget(capsys):
    code, _, err = run(capsys, "oracle", "--q", "3", "--n", "26",
                       "--delta", "5", "--method", "support",
                       "--budget", "5")
    assert code == 3
    assert json.loads(err)["error"] == "BudgetExceeded"


def test_bound_human_and_json(capsys):
    code, out, _ = run(capsys, "bound", "--n", "26", "--k", "17", "--d", "5",
                       "--q", "3")
    assert code == 0
    assert "almost-distance-optimal" in out
    code, out, _ = run(capsys, "bound", "--n", "15", "--k", "8", "--d", "6",
                       "--q", "4", "--json")
    assert json.loads(out)["class"] == "near-distance-optimal"


def test_bound_impossible_parameters(capsys):
    code, _, err = run(capsys, "bound", "--n", "15", "--k", "11", "--d", "5",
                       "--q", "2")
    assert code == 4
    assert json.loads(err)["error"] == "BadParameters"


def test_table_text_output(capsys):
    code, out, _ = run(capsys, "table", "small-delta")
    assert code == 0
    assert "[15,11,3]_4" in out
    assert "sphere-packing-optimal" in out


def test_table_json_output(capsys):
    code, out, _ = run(capsys, "table", "nonprimitive", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["family"] == "nonprimitive"
    assert len(data["rows"]) == 6


def test_table_qt_alias(capsys):
    code, out, _ = run(capsys, "table", "qt")
    assert code == 0
    assert "[3124,3104,6]_5" in out


def test_table_golden_mismatch_exits_2(tmp_path, capsys):
    rows = generate_family("small-delta")
    write_golden("small-delta", rows, seed_dir=tmp_path)
    path = tmp_path / "small-delta.json"
    data = json.loads(path.read_text())
    data["rows"][0]["d"] = 3
    path.write_text(json.dumps(data))
    code, _, err = run(capsys, "table", "small-delta",
                       "--seed-dir", str(tmp_path))
    assert code == 2
    assert json.loads(err)["error"] == "RowMismatch"


def test_table_update_golden_then_compare(tmp_path, capsys):
    code, _, err = run(capsys, "table", "small-delta", "--seed-dir",
                       str(tmp_path), "--update-golden")
    assert code == 0
    assert "wrote" in err
    code, _, _ = run(capsys, "table", "small-delta", "--seed-dir",
                     str(tmp_path))
    assert code == 0


def test_table_out_dir_writes_artifacts(tmp_path, capsys):
    out_dir = tmp_path / "report"
    code, _, _ = run(capsys, "table", "small-delta", "--out-dir",
                     str(out_dir))
    assert code == 0
    json_file = out_dir / "small-delta.json"
    csv_file = out_dir / "small-delta.csv"
    png_file = out_dir / "small-delta.png"
    assert json_file.exists() and csv_file.exists() and png_file.exists()
    assert png_file.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
    payload = json.loads(json_file.read_text())
    assert len(payload["rows"]) == 4
    assert csv_file.read_text().startswith("family,")
