"""Command-line interface: outputs, formats, and exit codes."""

import json

import pytest
from click.testing import CliRunner

from denumerant import QuasiPoly, quasipoly
from denumerant.cli import main


@pytest.fixture()
def runner():
    return CliRunner()


class TestEval:
    def test_single_value(self, runner):
        res = runner.invoke(main, ["eval", "--parts", "1,2,3", "--n", "5"])
        assert res.exit_code == 0
        assert res.output.strip() == "5"

    def test_zero_count(self, runner):
        res = runner.invoke(main, ["eval", "--parts", "2,4", "--n", "5"])
        assert res.exit_code == 0
        assert res.output.strip() == "0"

    def test_range_plain(self, runner):
        res = runner.invoke(
            main, ["eval", "--parts", "1,2", "--n", "0..4", "--method", "explicit"]
        )
        assert res.exit_code == 0
        assert res.output.strip() == "1 1 2 2 3"

    def test_methods_agree(self, runner):
        outputs = set()
        for method in ["explicit", "recursive", "oracle"]:
            res = runner.invoke(
                main, ["eval", "--parts", "2,3", "--n", "0..20", "--method", method]
            )
            assert res.exit_code == 0
            outputs.add(res.output)
        assert len(outputs) == 1

    def test_caret_notation(self, runner):
        res = runner.invoke(
            main, ["eval", "--parts", "1,2", "--n", "10^3", "--method", "oracle"]
        )
        assert res.exit_code == 0
        assert res.output.strip() == "501"

    def test_csv_format(self, runner):
        res = runner.invoke(
            main, ["eval", "--parts", "1,2", "--n", "0..2", "--format", "csv"]
        )
        assert res.exit_code == 0
        assert res.output == "n,count\n0,1\n1,1\n2,2\n"

    def test_json_format(self, runner):
        res = runner.invoke(
            main, ["eval", "--parts", "1,2", "--n", "0..2", "--format", "json"]
        )
        assert res.exit_code == 0
        data = json.loads(res.output)
        assert data == {"parts": [1, 2], "method": "explicit", "n": [0, 1, 2], "counts": [1, 1, 2]}

    @pytest.mark.parametrize(
        "args",
        [
            ["eval", "--parts", "0", "--n", "1"],
            ["eval", "--parts", "1,x", "--n", "1"],
            ["eval", "--parts", "", "--n", "1"],
            ["eval", "--parts", "1,2", "--n", "5..1"],
            ["eval", "--parts", "1,2", "--n", "-3"],
            ["eval", "--parts", "1,2", "--n", "2..4", "--method", "fast"],
        ],
    )
    def test_usage_errors_exit_2(self, runner, args):
        res = runner.invoke(main, args)
        assert res.exit_code == 2, res.output


class TestCert:
    def test_deterministic_output(self, runner):
        a = runner.invoke(main, ["cert", "--parts", "2,3"])
        b = runner.invoke(main, ["cert", "--parts", "2,3"])
        assert a.exit_code == 0 and b.exit_code == 0
        assert a.output == b.output

    def test_round_trip_and_counts(self, runner):
        res = runner.invoke(main, ["cert", "--parts", "1,2"])
        assert res.exit_code == 0
        cert = QuasiPoly.from_json(res.output)
        assert [cert.count(n) for n in range(9)] == [n // 2 + 1 for n in range(9)]

    def test_methods_produce_same_function(self, runner):
        outs = {}
        for method in ["explicit", "recursive"]:
            res = runner.invoke(main, ["cert", "--parts", "2,3", "--method", method])
            assert res.exit_code == 0
            outs[method] = QuasiPoly.from_json(res.output)
        assert outs["explicit"] == outs["recursive"]


class TestVerify:
    def test_pass_exit_zero(self, runner):
        res = runner.invoke(main, ["verify", "--parts", "1,2,3"])
        assert res.exit_code == 0
        assert "all properties passed" in res.output

    def test_props_subset(self, runner):
        res = runner.invoke(main, ["verify", "--parts", "2,3", "--props", "zeros,parity"])
        assert res.exit_code == 0
        assert "oracle" not in res.output

    def test_json_format(self, runner):
        res = runner.invoke(main, ["verify", "--parts", "1,2", "--format", "json"])
        assert res.exit_code == 0
        data = json.loads(res.output)
        assert data["passed"] is True

    def test_unknown_prop_exit_2(self, runner):
        res = runner.invoke(main, ["verify", "--parts", "1,2", "--props", "oracle,magic"])
        assert res.exit_code == 2

    def test_failure_exit_1(self, runner, monkeypatch):
        real = quasipoly.build_explicit

        def sabotaged(parts):
            cert = real(parts)
            fns = list(cert.coeffs)
            vals = list(fns[-1].values)
            vals[1] += 1  # odd residue class: the one counts actually visit
            fns[-1] = quasipoly.PeriodicFn(fns[-1].period, vals)
            return QuasiPoly(cert.parts, tuple(fns), cert.master_period)

        monkeypatch.setattr(quasipoly, "build_explicit", sabotaged)
        res = runner.invoke(main, ["verify", "--parts", "1,2", "--props", "oracle"])
        assert res.exit_code == 1
        assert "FAIL" in res.output


class TestBench:
    def test_reports_and_agrees(self, runner):
        res = runner.invoke(
            main, ["bench", "--parts", "1,2,3", "--n", "500", "--repeat", "3"]
        )
        assert res.exit_code == 0
        assert "agree          yes" in res.output
        assert "count          " in res.output

    def test_csv(self, runner):
        res = runner.invoke(
            main,
            ["bench", "--parts", "1,2", "--n", "10^2", "--format", "csv", "--repeat", "2"],
        )
        assert res.exit_code == 0
        lines = res.output.strip().splitlines()
        assert lines[0] == "metric,value"
        row = dict(l.split(",", 1) for l in lines[1:])
        assert row["count"] == "51"
        assert row["agree"] == "yes"


class TestCorpus:
    def test_tiny_sweep(self, runner):
        res = runner.invoke(main, ["corpus", "--max-m", "1", "--max-part", "2"])
        assert res.exit_code == 0
        assert "2 sets checked, 0 failing" in res.output

    def test_props_subset_sweep(self, runner):
        res = runner.invoke(
            main,
            ["corpus", "--max-m", "2", "--max-part", "3", "--props", "oracle,zeros"],
        )
        assert res.exit_code == 0
        assert "9 sets checked, 0 failing" in res.output

    def test_json(self, runner):
        res = runner.invoke(
            main,
            ["corpus", "--max-m", "1", "--max-part", "3", "--props", "zeros", "--format", "json"],
        )
        assert res.exit_code == 0
        data = json.loads(res.output)
        assert data["sets"] == 3 and data["failures"] == 0

    def test_bad_bounds_exit_2(self, runner):
        res = runner.invoke(main, ["corpus", "--max-m", "0", "--max-part", "2"])
        assert res.exit_code == 2
