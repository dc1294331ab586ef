import pytest

from ibsest.cli import main
from ibsest.io import (
    ObservationParseError,
    parse_observation_text,
    serialize_observation_set,
)

VALID_TEXT = """\
frame: a, b

obs: 1
  {a} 0.3, 0.4
  {b} 0.2, 0.3
  {a, b} 0.1, 0.5
obs: 2
  {a} 1.0
"""

INVALID_TEXT = """\
frame: a, b

obs: 1
  {a} 0.3, 0.4
  {b} 0.3, 0.4
"""


class TestParser:
    def test_parses_frame_and_observations(self):
        obs = parse_observation_text(VALID_TEXT)
        assert obs.frame.hypotheses == ("a", "b")
        assert obs.size == 2
        assert obs.observations[0].label == "1"

    def test_single_number_means_crisp_mass(self):
        obs = parse_observation_text(VALID_TEXT)
        entry = obs.observations[1].entries[0]
        assert entry.lower == entry.upper == 1.0

    def test_round_trip(self):
        obs = parse_observation_text(VALID_TEXT)
        again = parse_observation_text(serialize_observation_set(obs))
        assert again == obs

    def test_missing_frame_is_located(self):
        with pytest.raises(ObservationParseError, match="line 1"):
            parse_observation_text("obs: 1\n  {a} 1.0\n")

    def test_bad_mass_is_located(self):
        with pytest.raises(ObservationParseError, match="line 4"):
            parse_observation_text("frame: a\n\nobs: 1\n  {a} zero\n")

    def test_unknown_hypothesis_is_located(self):
        with pytest.raises(ObservationParseError, match="line 4"):
            parse_observation_text("frame: a\n\nobs: 1\n  {c} 1.0\n")

    def test_duplicate_focal_element_rejected(self):
        text = "frame: a, b\n\nobs: 1\n  {a} 0.5\n  {a} 0.5\n"
        with pytest.raises(ObservationParseError, match="duplicate"):
            parse_observation_text(text)

    def test_empty_observation_list_rejected(self):
        with pytest.raises(ObservationParseError):
            parse_observation_text("frame: a, b\n")

    def test_comments_and_blanks_ignored(self):
        text = "# header\nframe: a  # trailing\n\nobs: 1\n  {a} 1.0\n"
        assert parse_observation_text(text).size == 1


class TestValidateCommand:
    def test_valid_file_exits_zero(self, tmp_path, capsys):
        f = tmp_path / "good.obs"
        f.write_text(VALID_TEXT)
        assert main(["validate", str(f)]) == 0
        assert "ok" in capsys.readouterr().out

    def test_invalid_file_exits_one_and_names_violation(self, tmp_path, capsys):
        f = tmp_path / "bad.obs"
        f.write_text(INVALID_TEXT)
        assert main(["validate", str(f)]) == 1
        assert "below 1" in capsys.readouterr().out

    def test_parse_error_exits_two(self, tmp_path):
        f = tmp_path / "broken.obs"
        f.write_text("obs: 1\n")
        assert main(["validate", str(f)]) == 2

    def test_missing_file_exits_two(self, tmp_path):
        assert main(["validate", str(tmp_path / "nope.obs")]) == 2


class TestEstimateCommand:
    def test_crisp_fixture_alpha_one(self, fixtures, capsys):
        code = main([
            "estimate", str(fixtures / "table1.obs"),
            "--alpha", "1", "--restarts", "16", "--workers", "1",
        ])
        assert code == 0
        out = capsys.readouterr().out
        assert "[0.6000, 0.6000]" in out
        assert "[0.4000, 0.4000]" in out

    def test_report_is_byte_identical_across_runs(self, fixtures, tmp_path, capsys):
        args = [
            "estimate", str(fixtures / "table1.obs"),
            "--alpha", "1,2", "--restarts", "8", "--workers", "1", "--seed", "5",
        ]
        out1 = tmp_path / "r1.txt"
        out2 = tmp_path / "r2.txt"
        assert main(args + ["--out", str(out1)]) == 0
        assert main(args + ["--out", str(out2)]) == 0
        capsys.readouterr()
        assert out1.read_bytes() == out2.read_bytes()
        report = out1.read_text()
        assert "tool_version:" in report
        assert "input_digest: sha256:" in report
        assert report.count("row: alpha=") == 2

    def test_invalid_observations_exit_one(self, tmp_path, capsys):
        f = tmp_path / "bad.obs"
        f.write_text(INVALID_TEXT)
        assert main(["estimate", str(f), "--restarts", "1"]) == 1

    def test_table_matches_report_rounding(self, fixtures, tmp_path, capsys):
        out = tmp_path / "r.txt"
        main([
            "estimate", str(fixtures / "table1.obs"),
            "--alpha", "1", "--restarts", "8", "--workers", "1",
            "--out", str(out),
        ])
        table = capsys.readouterr().out
        # structured report values, rounded half-even to 4 decimals, must
        # appear verbatim in the printed table
        row = [l for l in out.read_text().splitlines() if l.startswith("row:")][0]
        for token in row.split():
            if token.startswith("a=["):
                lo, hi = token[3:-1].split(",")
                assert f"[{float(lo):.4f}, {float(hi):.4f}]" in table

    def test_bad_alpha_flag_exits_two(self, fixtures):
        assert main(["estimate", str(fixtures / "table1.obs"), "--alpha", "0.5"]) == 2


class TestVerifyCommand:
    def test_corrupted_fixture_fails_by_name(self, fixtures, tmp_path, capsys):
        # copy fixtures, then break table1 so the crisp check cannot pass
        import shutil

        work = tmp_path / "fx"
        shutil.copytree(fixtures, work)
        (work / "table1.obs").write_text(
            "frame: a, b\n\nobs: 1\n  {a} 0.3\n  {b} 0.7\n"
        )
        code = main([
            "verify", "--fixtures", str(work),
            "--restarts", "4", "--workers", "1",
        ])
        out = capsys.readouterr().out
        assert code == 1
        assert "FAIL crisp-reproduction" in out
