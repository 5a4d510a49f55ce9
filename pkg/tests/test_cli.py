"""Command-line behavior: output layout, exit codes, determinism."""

import csv
import io
import json
import subprocess
import sys

import pytest

from ahpq.cli import run

GOAL_ROW = "Select Between Old and New Chatbots  100.0%  66.2%  33.8%  18.4%"
TRANSPARENT_ROW = "  Transparent  0.4%  0.2%  0.2%  0.0%"

BROKEN_MISSING_PAIR = """\
Version: 2.0
Alternatives: &alternatives
  A:
  B:
Goal:
  name: Broken
  preferences:
    pairwise:
      - [X, Y, 3]
  children:
    X:
      preferences:
        pairwise:
          - [A, B, 1]
      children: *alternatives
    Y:
      children: *alternatives
    Z:
      preferences:
        pairwise:
          - [A, B, 3]
      children: *alternatives
"""


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestAnalyze:
    def test_table_golden_rows(self, capsys, example_file):
        code, out, err = invoke(capsys, "analyze", str(example_file))
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "  Weight  OLD  NEW  Consistency"
        assert lines[1] == GOAL_ROW
        assert TRANSPARENT_ROW in lines
        assert len(lines) == 1 + 14  # header + goal + 4 categories + 9 attributes

    def test_goal_row_percentages_sum(self, capsys, example_file):
        _code, out, _err = invoke(capsys, "analyze", str(example_file))
        cells = out.splitlines()[1].split("  ")
        alt_sum = sum(float(c.rstrip("%")) for c in cells[2:4])
        assert abs(alt_sum - 100.0) <= 0.2

    def test_table_is_deterministic(self, capsys, example_file):
        _c, first, _e = invoke(capsys, "analyze", str(example_file))
        _c, second, _e = invoke(capsys, "analyze", str(example_file))
        assert first == second

    def test_json_payload(self, capsys, example_file):
        code, out, _err = invoke(capsys, "analyze", str(example_file), "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["alternative_totals"]["OLD"] == pytest.approx(0.662, abs=0.0015)
        assert payload["ranking"][0]["alternative"] == "OLD"
        assert payload["rows"][0]["path"] == ["Goal"]
        assert payload["rows"][0]["consistency"]["status"] == "ACCEPTABLE"

    def test_csv_payload(self, capsys, example_file):
        code, out, _err = invoke(capsys, "analyze", str(example_file), "--format", "csv")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert len(rows) == 14
        goal = rows[0]
        assert goal["path"] == "Goal"
        assert float(goal["OLD"]) == pytest.approx(0.662, abs=0.0015)
        assert goal["global_weight_pct"] == "100.0"
        # raw weights are full precision, not the rounded percents
        assert len(goal["OLD"]) > 6

    def test_strict_passes_at_18_percent(self, capsys, example_file):
        code, _out, _err = invoke(capsys, "analyze", str(example_file), "--strict")
        assert code == 0

    def test_strict_fails_above_20_percent(self, capsys, tmp_path):
        # 3x3 with a circular preference: badly inconsistent.
        text = """\
Version: 2.0
Alternatives: &alternatives
  A:
  B:
Goal:
  name: Circular
  preferences:
    pairwise:
      - [X, Y, 9]
      - [Y, Z, 9]
      - [X, Z, 1/9]
  children:
    X:
      preferences: {pairwise: [[A, B, 1]]}
      children: *alternatives
    Y:
      preferences: {pairwise: [[A, B, 1]]}
      children: *alternatives
    Z:
      preferences: {pairwise: [[A, B, 1]]}
      children: *alternatives
"""
        path = tmp_path / "circular.yaml"
        path.write_text(text, encoding="utf-8")
        code, _out, err = invoke(capsys, "analyze", str(path), "--strict")
        assert code == 3
        assert "exceeds 20%" in err

    def test_warn_threshold(self, capsys, example_file):
        _code, _out, err = invoke(capsys, "analyze", str(example_file))
        assert "Goal: consistency ratio 18.4% exceeds 10.0%" in err
        _code, _out, err = invoke(capsys, "analyze", str(example_file),
                                  "--warn-threshold", "19")
        assert err == ""


class TestValidate:
    def test_valid_file(self, capsys, example_file):
        code, out, _err = invoke(capsys, "validate", str(example_file))
        assert code == 0
        assert out.startswith("OK")

    def test_missing_pair_lists_errors(self, capsys, tmp_path):
        path = tmp_path / "broken.yaml"
        path.write_text(BROKEN_MISSING_PAIR, encoding="utf-8")
        code, out, _err = invoke(capsys, "validate", str(path))
        assert code == 1
        assert "MISSING_PAIR" in out

    def test_parse_error_exit_code(self, capsys, tmp_path):
        path = tmp_path / "bad.yaml"
        path.write_text("Version: 2.0\nAlternatives:\n  A:\nGoal:\n  children: *nope\n",
                        encoding="utf-8")
        code, _out, err = invoke(capsys, "validate", str(path))
        assert code == 2
        assert "UNRESOLVED_ALIAS" in err

    def test_missing_file_is_usage_error(self, capsys, tmp_path):
        code, _out, err = invoke(capsys, "validate", str(tmp_path / "absent.yaml"))
        assert code == 4
        assert "cannot read" in err


class TestVisualize:
    def test_ascii_tree_counts(self, capsys, example_file):
        code, out, _err = invoke(capsys, "visualize", str(example_file))
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "Select Between Old and New Chatbots"
        assert len(lines) == 1 + 4 + 9 + 9 * 2  # goal, categories, leaves, alt rows
        assert sum("(OLD)" in line for line in lines) == 9

    def test_dot_vertices(self, capsys, example_file):
        code, out, _err = invoke(capsys, "visualize", str(example_file),
                                 "--format", "dot")
        assert code == 0
        assert out.startswith("digraph")
        assert out.count("[label=") == 14 + 2
        assert out.count("->") == 13 + 9 * 2

    def test_dot_minimal_model(self, capsys, tmp_path):
        path = tmp_path / "mini.yaml"
        path.write_text("Version: 2.0\nAlternatives: &alternatives\n  A:\n  B:\n"
                        "Goal:\n  name: Mini\n  preferences:\n    pairwise:\n"
                        "      - [A, B, 1]\n  children: *alternatives\n",
                        encoding="utf-8")
        code, out, _err = invoke(capsys, "visualize", str(path), "--format", "dot")
        assert code == 0
        assert out.count("[label=") == 1 + 2
        assert out.count("->") == 2


class TestWhatIf:
    def test_text_output(self, capsys, example_file):
        code, out, _err = invoke(
            capsys, "whatif", str(example_file),
            "--node", "Goal/Performance/Escalation",
            "--pair", "OLD,NEW", "--value", "1/7")
        assert code == 0
        assert "1/7" in out.splitlines()[0]
        assert any(line.startswith("OLD  66.2%  63.2%") for line in out.splitlines())

    def test_json_output(self, capsys, example_file):
        code, out, _err = invoke(
            capsys, "whatif", str(example_file),
            "--node", "Goal/Performance/Escalation",
            "--pair", "OLD,NEW", "--value", "1/7", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["after"]["alternative_totals"]["OLD"] == \
            pytest.approx(0.633, abs=0.002)
        assert payload["changed"]["old_value"] == "7"

    def test_unknown_node(self, capsys, example_file):
        code, _out, err = invoke(
            capsys, "whatif", str(example_file),
            "--node", "Goal/Nowhere", "--pair", "OLD,NEW", "--value", "3")
        assert code == 4
        assert "UNKNOWN_PATH" in err

    def test_bad_ratio_argument(self, capsys, example_file):
        code, _out, err = invoke(
            capsys, "whatif", str(example_file),
            "--node", "Goal/Performance/Escalation",
            "--pair", "OLD,NEW", "--value", "zero")
        assert code == 4
        assert "usage error" in err


class TestInit:
    def test_scaffold_to_stdout_parses(self, capsys):
        code, out, _err = invoke(
            capsys, "init",
            "--attribute", "Performance:UnexpectedInput",
            "--attribute", "Accessibility:MeaningIntent",
            "--alternatives", "OLD,NEW")
        assert code == 0
        from ahpq import parse_model, validate_model
        model = parse_model(out)
        assert validate_model(model).ok
        assert model.alternative_names == ("OLD", "NEW")

    def test_scaffold_to_file(self, capsys, tmp_path):
        target = tmp_path / "scaffold.yaml"
        code, _out, _err = invoke(
            capsys, "init", "--attribute", "Affect:Entertaining",
            "--alternatives", "A,B", "-o", str(target))
        assert code == 0
        assert target.exists()

    def test_no_attributes_usage_error(self, capsys):
        code, _out, err = invoke(capsys, "init", "--alternatives", "A,B")
        assert code == 4
        assert "usage error" in err

    def test_one_alternative_usage_error(self, capsys):
        code, _out, err = invoke(
            capsys, "init", "--attribute", "Affect:Entertaining",
            "--alternatives", "A")
        assert code == 4

    def test_malformed_attribute(self, capsys):
        code, _out, err = invoke(
            capsys, "init", "--attribute", "NoColonHere", "--alternatives", "A,B")
        assert code == 4


class TestDispatch:
    def test_unknown_command(self, capsys):
        code, _out, err = invoke(capsys, "frobnicate")
        assert code == 4
        assert "usage error" in err

    def test_no_command(self, capsys):
        code, _out, _err = invoke(capsys)
        assert code == 4

    @pytest.mark.parametrize("argv", [
        ["--help"], ["analyze", "--help"], ["validate", "--help"],
        ["visualize", "--help"], ["whatif", "--help"], ["init", "--help"],
        ["serve", "--help"],
    ])
    def test_help_exits_zero(self, capsys, argv):
        code = run(argv)
        out = capsys.readouterr().out
        assert code == 0
        assert "usage" in out.lower()

    def test_console_entry_point(self, example_file):
        proc = subprocess.run(
            [sys.executable, "-m", "ahpq.cli", "analyze", str(example_file)],
            capture_output=True, text=True)
        assert proc.returncode == 0
        assert GOAL_ROW in proc.stdout
