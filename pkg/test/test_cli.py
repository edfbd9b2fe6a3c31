"""
test_cli contains tests for py_qpp/cli.py
"""
import csv
import io
import json

import pytest

from py_qpp import cli


def run(capsys: pytest.CaptureFixture, *argv: str):
    """
    run calls the command line entry point and captures its output.

    Args:
        capsys (pytest.CaptureFixture): The capture fixture.

    Returns:
        Tuple[int, str, str]: The exit status, stdout and stderr.
    """
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestSeries:
    """
    TestSeries is the collection of tests of the series command.
    """

    def test_spt(self, capsys) -> None:
        code, out, _ = run(capsys, "series", "--name", "spt", "--order", "4")
        assert code == cli.EXIT_OK
        assert out.strip() == "0, 1, 3, 5, 10"

    def test_euler(self, capsys) -> None:
        code, out, _ = run(capsys, "series", "--name", "euler", "--order", "12")
        assert code == cli.EXIT_OK
        assert out.strip() == "1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1"

    def test_default_order_from_env(self, capsys, monkeypatch) -> None:
        monkeypatch.setenv("QPP_DEFAULT_ORDER", "5")
        _, out, _ = run(capsys, "series", "--name", "partition")
        assert out.strip() == "1, 1, 2, 3, 5, 7"

    def test_bivariate_csv(self, capsys) -> None:
        code, out, _ = run(capsys, "series", "--name", "S", "--order", "1", "--format", "csv")
        assert code == cli.EXIT_OK
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["m", "n", "num", "den"]
        assert rows[1:] == [["0", "0", "1", "1"], ["-2", "1", "-1", "1"], ["0", "1", "2", "1"], ["2", "1", "-1", "1"]]

    def test_eta_json(self, capsys) -> None:
        code, out, _ = run(capsys, "series", "--name", "eta:1^1", "--order", "2", "--format", "json")
        assert code == cli.EXIT_OK
        record = json.loads(out)
        assert record["offset"] == "1/24"
        assert [(r["n"], r["num"]) for r in record["body"]] == [(0, "1"), (1, "-1"), (2, "-1")]

    def test_unknown_name(self, capsys) -> None:
        code, _, err = run(capsys, "series", "--name", "nosuch")
        assert code == cli.EXIT_USAGE
        assert "nosuch" in err
        code, _, _ = run(capsys, "series", "--name", "eta:1x1")
        assert code == cli.EXIT_USAGE


class TestVerify:
    """
    TestVerify is the collection of tests of the verify command.
    """

    def test_json(self, capsys) -> None:
        code, out, _ = run(capsys, "verify", "--id", "pentagonal", "--id", "psi", "--order", "10", "--format", "json")
        assert code == cli.EXIT_OK
        records = json.loads(out)
        assert [r["id"] for r in records] == ["pentagonal", "psi"]
        assert all(r["pass"] and r["order"] == 10 and r["first_mismatch"] is None for r in records)

    def test_text(self, capsys) -> None:
        code, out, _ = run(capsys, "verify", "--id", "gordon", "--order", "8")
        assert code == cli.EXIT_OK
        assert out.splitlines()[-1] == "1/1 checks passed"

    def test_csv(self, capsys) -> None:
        _, out, _ = run(capsys, "verify", "--id", "jtp", "--order", "8", "--format", "csv")
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["id", "pass", "order", "m", "n", "lhs", "rhs", "elapsed_ms"]
        assert rows[1][:3] == ["jtp", "True", "8"]

    def test_unknown_id(self, capsys) -> None:
        code, out, err = run(capsys, "verify", "--id", "nosuch")
        assert code == cli.EXIT_USAGE
        assert out == ""
        assert "nosuch" in err


class TestNTable:
    """
    TestNTable is the collection of tests of the ntable command.
    """

    def test_csv_of_one(self, capsys) -> None:
        code, out, _ = run(capsys, "ntable", "--n", "1", "--format", "csv")
        assert code == cli.EXIT_OK
        rows = list(csv.DictReader(io.StringIO(out)))
        assert len(rows) == 4
        assert sum(int(r["count"]) for r in rows) == 4

    def test_json(self, capsys) -> None:
        _, out, _ = run(capsys, "ntable", "--n", "2", "--format", "json")
        records = json.loads(out)
        assert sum(r["count"] for r in records if r["n"] == 2) == 12

    def test_budget(self, capsys, monkeypatch) -> None:
        monkeypatch.setenv("QPP_NTABLE_LIMIT", "2")
        code, _, err = run(capsys, "ntable", "--n", "3")
        assert code == cli.EXIT_USAGE
        assert "--force" in err
        code, _, _ = run(capsys, "ntable", "--n", "3", "--force")
        assert code == cli.EXIT_OK


class TestCoeff:
    """
    TestCoeff is the collection of tests of the coeff command.
    """

    def test_origin(self, capsys) -> None:
        code, out, _ = run(capsys, "coeff", "--m", "0", "--n", "0", "--format", "json")
        assert code == cli.EXIT_OK
        assert json.loads(out) == {
            "m": 0,
            "n": 0,
            "order": 0,
            "series": "1",
            "prediction": "1",
            "multisum": "1",
            "agree": True,
        }

    def test_off_pentagonal(self, capsys) -> None:
        code, out, _ = run(capsys, "coeff", "--m", "5", "--n", "3")
        assert code == cli.EXIT_OK
        assert out.strip() == "z^5 q^3: series 0, prediction 0, multisum 0, agree"

    def test_beyond_limit(self, monkeypatch) -> None:
        monkeypatch.setenv("QPP_NTABLE_LIMIT", "0")
        report = cli.coefficient_report(-2, 1)
        assert report["multisum"] is None
        assert report["series"] == "-1"
        assert report["agree"]

    def test_order_builds_series(self) -> None:
        wide = cli.coefficient_report(-3, 2, order=6)
        assert wide["order"] == 6
        assert {k: v for k, v in wide.items() if k != "order"} == {
            k: v for k, v in cli.coefficient_report(-3, 2).items() if k != "order"
        }

    def test_order_below_n(self, capsys) -> None:
        code, _, err = run(capsys, "coeff", "--m", "0", "--n", "5", "--order", "3")
        assert code == cli.EXIT_USAGE
        assert "exceeds" in err


class TestParsing:
    """
    TestParsing is the collection of tests of argument handling and exit statuses.
    """

    def test_list(self, capsys) -> None:
        code, out, _ = run(capsys, "list", "--format", "json")
        assert code == cli.EXIT_OK
        assert [r["id"] for r in json.loads(out)] == cli.registry.CheckMap.ids()

    @pytest.mark.parametrize(
        "argv",
        [
            [],
            ["nosuch"],
            ["verify", "--order", "0"],
            ["series"],
            ["ntable", "--n", "-1"],
            ["coeff", "--m", "x", "--n", "1"],
            ["list", "--format", "xml"],
            ["verify", "--id", ""],
        ],
    )
    def test_usage_errors(self, capsys, argv) -> None:
        code, _, _ = run(capsys, *argv)
        assert code == cli.EXIT_USAGE

    def test_help(self, capsys) -> None:
        code, out, _ = run(capsys, "--help")
        assert code == cli.EXIT_OK
        assert "verify" in out

    def test_internal_error(self, capsys, monkeypatch) -> None:
        def boom(args):
            raise RuntimeError("boom")

        monkeypatch.setattr(cli, "cmd_list", boom)
        code, _, err = run(capsys, "list")
        assert code == cli.EXIT_INTERNAL
        assert "boom" in err

    def test_non_integer_env(self, monkeypatch) -> None:
        monkeypatch.setenv("QPP_DEFAULT_ORDER", "many")
        assert cli.default_order() == cli.DEFAULT_ORDER
