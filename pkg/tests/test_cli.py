import json

import pytest

from mstdkit import IntSet, mstd_delta
from mstdkit.cli import main

A1 = [0, 2, 3, 4, 7, 11, 12, 14]
A2 = [0, 2, 3, 4, 7, 9, 13, 14, 16]


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestConstruct:
    def test_t1(self, capsys):
        code, out, _ = run_cli(
            capsys, "construct", "--family", "t1",
            "--params", '{"m": 4, "d": 1, "k": 3}',
        )
        assert code == 0
        data = json.loads(out)
        assert data["set"] == A1
        assert data["delta"] == 1
        assert data["a_star"] == 14
        assert data["family"] == "t1"

    def test_t2(self, capsys):
        code, out, _ = run_cli(capsys, "construct", "--family", "t2", "--params", '{"k": 2}')
        data = json.loads(out)
        assert code == 0
        assert data["set"] == A2
        assert data["a_star"] == 16

    def test_t3(self, capsys):
        code, out, _ = run_cli(
            capsys, "construct", "--family", "t3",
            "--params", '{"m": 4, "d": 1, "k": 3}',
        )
        data = json.loads(out)
        assert code == 0
        assert data["a_star"] == 20
        assert data["delta"] >= 1

    def test_hr(self, capsys):
        code, out, _ = run_cli(capsys, "construct", "--family", "hr", "--params", '{"k": 3}')
        assert json.loads(out)["set"] == A1

    def test_gap_families(self, capsys):
        params = '{"m": 6, "k": 2, "r": 2, "s": 3, "p": {"base": 0, "dims": []}}'
        code, out, _ = run_cli(capsys, "construct", "--family", "gap", "--params", params)
        data = json.loads(out)
        assert code == 0 and data["delta"] >= 1
        assert data["a_star"] == 26

        params2 = '{"m": 8, "k": 2, "r": 2, "s": 3, "p": {"base": 0, "dims": []}}'
        code, out, _ = run_cli(capsys, "construct", "--family", "gap2", "--params", params2)
        data = json.loads(out)
        assert code == 0 and data["delta"] >= 1

    def test_validation_error_reported(self, capsys):
        code, out, err = run_cli(
            capsys, "construct", "--family", "t1",
            "--params", '{"m": 4, "d": 2, "k": 3}',
        )
        assert code == 2
        assert "m/2" in err

    def test_missing_param_reported(self, capsys):
        code, _, err = run_cli(capsys, "construct", "--family", "t1", "--params", "{}")
        assert code == 2 and "needs parameter" in err


class TestCount:
    def test_basic(self, capsys):
        code, out, _ = run_cli(capsys, "count", "--n", "7")
        data = json.loads(out)
        assert code == 0
        assert data == {"n": 7, "covering": 28, "bound": 16, "meets_bound": True}

    def test_table(self, capsys):
        code, out, _ = run_cli(capsys, "count", "--n", "6", "--table")
        data = json.loads(out)
        assert code == 0
        assert len(data["misses"]) == 12
        by_g = {tuple(row["g"]): row["count"] for row in data["misses"]}
        assert by_g[(1, 0)] == 8 and by_g[(0, 1)] == 16 and by_g[(0, 0)] == 0


class TestGroupSearchAndEmbed:
    def test_search_then_embed(self, capsys, tmp_path):
        code, out, _ = run_cli(capsys, "group-search", "--n", "7")
        assert code == 0
        data = json.loads(out)
        assert data["moduli"] == [7, 2]
        assert len(data["elements"]) == 7

        path = tmp_path / "witness.json"
        path.write_text(out)
        code, out, _ = run_cli(capsys, "embed", "--input", str(path), "--t-max", "16")
        assert code == 0
        result = json.loads(out)
        assert result["delta"] >= 1
        assert result["t_used"] >= 1
        image = IntSet(result["set"])
        assert mstd_delta(image).delta == result["delta"]

    def test_search_random_seeded(self, capsys):
        code1, out1, _ = run_cli(
            capsys, "group-search", "--n", "8", "--strategy", "random", "--seed", "5"
        )
        code2, out2, _ = run_cli(
            capsys, "group-search", "--n", "8", "--strategy", "random", "--seed", "5"
        )
        assert code1 == code2 == 0 and out1 == out2

    def test_no_witness_error(self, capsys):
        code, _, err = run_cli(capsys, "group-search", "--n", "4")
        assert code == 2 and "no covering" in err

    def test_embed_rejects_non_mstd(self, capsys, tmp_path):
        path = tmp_path / "sym.json"
        path.write_text('{"moduli": [5], "elements": [[0], [1], [4]]}')
        code, _, err = run_cli(capsys, "embed", "--input", str(path))
        assert code == 2 and "not an MSTD subset" in err

    def test_embed_missing_file(self, capsys):
        code, _, err = run_cli(capsys, "embed", "--input", "/nonexistent.json")
        assert code == 2


class TestSpectrum:
    def test_json_output(self, capsys):
        code, out, _ = run_cli(
            capsys, "spectrum", "--range-max", "8", "--min-size", "1", "--max-size", "9"
        )
        data = json.loads(out)
        assert code == 0
        assert data["enumerated"] == 2**9 - 1
        assert sum(data["spectrum"].values()) == data["enumerated"]

    def test_csv_output(self, capsys):
        code, out, _ = run_cli(
            capsys, "spectrum", "--range-max", "6", "--min-size", "1",
            "--max-size", "7", "--format", "csv",
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "delta,count,witness"
        assert len(lines) > 1

    def test_threads_match_serial(self, capsys):
        code, serial, _ = run_cli(
            capsys, "spectrum", "--range-max", "10", "--min-size", "0", "--max-size", "11"
        )
        code2, parallel, _ = run_cli(
            capsys, "spectrum", "--range-max", "10", "--min-size", "0",
            "--max-size", "11", "--threads", "4",
        )
        assert code == code2 == 0 and serial == parallel

    def test_budget_flag(self, capsys):
        code, _, err = run_cli(
            capsys, "spectrum", "--range-max", "12", "--min-size", "0",
            "--max-size", "13", "--budget", "100",
        )
        assert code == 2 and "budget" in err
