import io
import json
from contextlib import redirect_stderr, redirect_stdout

import pytest

from bisector_words import cli
from bisector_words.geometry import PointConfig, occupancy_word
from bisector_words import words


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = cli.main(list(argv))
    return code, out.getvalue(), err.getvalue()


class TestCheck:
    def test_realizable_word(self):
        code, out, _ = run_cli("check", "101100")
        assert code == 0
        assert out.strip() == "realizable=true signature=201"

    def test_unrealizable_word(self):
        code, out, _ = run_cli("check", "010101")
        assert code == 0
        assert "realizable=false" in out

    def test_invalid_word(self):
        code, _, err = run_cli("check", "10a100")
        assert code == 1 and "error" in err


class TestRealize:
    def test_roundtrip_through_serialization(self):
        code, out, _ = run_cli("realize", "101100")
        assert code == 0
        payload = json.loads(out)
        cfg = PointConfig.from_strings(payload["positions"])
        got = words.canonical_bracelet(occupancy_word(cfg))
        assert got == words.canonical_bracelet(words.word_from_string("101100"))

    def test_unrealizable_exits_1(self):
        code, _, err = run_cli("realize", "010101")
        assert code == 1 and "interlace" in err


class TestCountAndEnumerate:
    def test_count_csv(self):
        code, out, _ = run_cli("count", "--n", "3..5")
        assert code == 0
        assert out.splitlines() == ["n,words,bracelets", "3,12,1", "4,50,5", "5,180,9"]

    def test_count_json(self):
        code, out, _ = run_cli("count", "--n", "4", "--format", "json")
        assert json.loads(out) == [{"n": 4, "words": 50, "bracelets": 5}]

    def test_enumerate_words(self):
        code, out, _ = run_cli("enumerate", "--n", "3")
        lines = out.splitlines()
        assert code == 0 and len(lines) == 12
        assert all(words.is_realizable(words.word_from_string(s)) for s in lines)

    def test_enumerate_bracelets(self):
        code, out, _ = run_cli("enumerate", "--n", "4", "--bracelets")
        assert code == 0 and len(out.splitlines()) == 5

    def test_bad_range(self):
        code, _, err = run_cli("count", "--n", "nope")
        assert code == 1


class TestSample:
    def test_words_deterministic(self):
        a = run_cli("sample", "--n", "4", "--count", "5", "--kind", "word", "--seed", "9")
        b = run_cli("sample", "--n", "4", "--count", "5", "--kind", "word", "--seed", "9")
        assert a == b
        for line in a[1].splitlines():
            assert words.is_realizable(words.word_from_string(line))

    def test_bracelets(self):
        code, out, _ = run_cli("sample", "--n", "3", "--count", "3", "--kind", "bracelet")
        assert code == 0
        assert out.splitlines() == ["001011"] * 3

    def test_points(self):
        code, out, _ = run_cli("sample", "--n", "5", "--count", "2", "--kind", "points")
        assert code == 0
        for line in out.splitlines():
            positions = json.loads(line)
            assert len(positions) == 5
            assert positions == sorted(positions)


class TestEstimate:
    def test_json_payload(self):
        code, out, _ = run_cli(
            "estimate", "--n", "4", "--stat", "pb", "--trials", "20000", "--seed", "7"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["stat"] == "pb" and payload["n"] == 4
        assert payload["target"] == pytest.approx(1 / 3)
        assert abs(payload["z"]) <= 4

    def test_csv_format(self):
        code, out, _ = run_cli(
            "estimate", "--n", "3", "--stat", "h2", "--trials", "5000", "--format", "csv"
        )
        header, row = out.splitlines()
        assert header.split(",")[:3] == ["stat", "n", "estimate"]
        assert row.split(",")[0] == "h2"

    def test_worker_count_invisible(self):
        args = ["estimate", "--n", "3", "--stat", "le", "--trials", "50000", "--seed", "3"]
        a = run_cli(*args, "--workers", "1")
        b = run_cli(*args, "--workers", "4")
        assert a == b


class TestStats:
    def test_worked_example(self):
        code, out, _ = run_cli("stats", "--positions", "0,1/10,3/10", "--t-grid", "1/2,1")
        assert code == 0
        payload = json.loads(out)
        assert payload["types"] == [2, 1, 0, 2, 1, 0]
        assert payload["H"] == [2, 2, 2]
        assert payload["Le"] == pytest.approx(0.2)

    def test_nongeneric_exits_1(self):
        code, _, err = run_cli("stats", "--positions", "0,1/2,3/4")
        assert code == 1


class TestVerify:
    def test_single_fast_criterion(self):
        code, out, _ = run_cli("verify", "--criteria", "13")
        assert code == 0
        assert "PASS criterion 13" in out
        assert out.strip().endswith("OK: 0 criteria failed")
