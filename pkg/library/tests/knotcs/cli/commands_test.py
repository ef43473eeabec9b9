"""Tests for the alpha0, cs, cover, knot, table and verify commands."""

import json
from fractions import Fraction
from pathlib import Path
from unittest.mock import patch

from click.testing import CliRunner

from knotcs.cli import cli
from knotcs.csinv import CSValue
from knotcs.errors import NonHyperbolicError
from knotcs.scripting.knotcs_table import CellResult, TableName, TableResult
from knotcs.scripting.knotcs_verify import CheckResult, VerifyResult

_ORBIFOLD = CSValue(value=0.1, modulus=Fraction(1, 4))


class TestAlpha0:
    """knotcs alpha0 prints the Euclidean angle."""

    def test_text(self) -> None:
        with patch("knotcs.cli.alpha0.find_alpha0", return_value=2.4076) as find:
            result = CliRunner().invoke(cli, ["alpha0", "-n", "1"])
        assert result.exit_code == 0
        assert result.stdout.strip() == "2.40760"
        assert find.call_args[0][0] == 1

    def test_csv(self) -> None:
        with patch("knotcs.cli.alpha0.find_alpha0", return_value=2.4076):
            result = CliRunner().invoke(cli, ["alpha0", "-n", "1", "--format", "csv"])
        assert result.exit_code == 0
        assert result.stdout.splitlines() == ["2n,alpha0", "2,2.40760"]

    def test_zero_n_rejected(self) -> None:
        result = CliRunner().invoke(cli, ["alpha0", "-n", "0"])
        assert result.exit_code == 2
        assert "unknot" in result.output

    def test_odd_intervals_rejected(self) -> None:
        result = CliRunner().invoke(cli, ["alpha0", "-n", "1", "--intervals", "3"])
        assert result.exit_code == 2


class TestCs:
    """knotcs cs and knotcs cover print orbifold and covering values."""

    def test_cs_text(self) -> None:
        with (
            patch("knotcs.cli.cs.orbifold_cs", return_value=_ORBIFOLD),
            patch("knotcs.cli.cs.geometric_branch") as branch,
        ):
            branch.return_value.alpha0 = 2.4
            result = CliRunner().invoke(cli, ["cs", "-n", "1", "-k", "4"])
        assert result.exit_code == 0
        assert result.stdout.strip() == "0.100000 (mod 1/4)"

    def test_cover_json(self) -> None:
        with (
            patch("knotcs.cli.cs.orbifold_cs", return_value=_ORBIFOLD),
            patch("knotcs.cli.cs.geometric_branch") as branch,
        ):
            branch.return_value.alpha0 = 2.4
            result = CliRunner().invoke(cli, ["cover", "-n", "1", "-k", "4", "--format", "json"])
        assert result.exit_code == 0
        record = json.loads(result.stdout)
        assert record["covering_cs"] == 0.4
        assert record["k"] == 4

    def test_small_k_rejected(self) -> None:
        result = CliRunner().invoke(cli, ["cs", "-n", "1", "-k", "2"])
        assert result.exit_code == 2

    def test_non_hyperbolic_exit_code(self) -> None:
        with (
            patch("knotcs.cli.cs.orbifold_cs", side_effect=NonHyperbolicError("not hyperbolic")),
            patch("knotcs.scripting.knotcs_exception.log") as log,
        ):
            result = CliRunner().invoke(cli, ["cs", "-n", "-1", "-k", "3"])
        assert result.exit_code == 3
        log.error.assert_called_once()

    def test_knot_text(self) -> None:
        value = CSValue(value=0.3, modulus=Fraction(1, 2))
        with patch("knotcs.cli.cs.knot_cs", return_value=value):
            result = CliRunner().invoke(cli, ["knot", "-n", "1", "--precision", "3"])
        assert result.exit_code == 0
        assert result.stdout.strip() == "0.300 (mod 1/2)"

    def test_config_file(self, tmp_path: Path) -> None:
        path = tmp_path / "run.yaml"
        path.write_text("intervals: 2000\nprecision: 3\n")
        with (
            patch("knotcs.cli.cs.orbifold_cs", return_value=_ORBIFOLD) as orbifold,
            patch("knotcs.cli.cs.geometric_branch") as branch,
        ):
            branch.return_value.alpha0 = 2.4
            result = CliRunner().invoke(cli, ["cs", "-n", "1", "-k", "4", "--config", str(path)])
        assert result.exit_code == 0
        assert orbifold.call_args[0][2].intervals == 2000
        assert result.stdout.strip() == "0.100 (mod 1/4)"


class TestTable:
    """knotcs table writes every row and reports failures on stderr."""

    def _result(self) -> TableResult:
        return TableResult(
            table=TableName.KNOTS,
            rows=(
                CellResult(
                    n=1,
                    k=None,
                    alpha0=2.4076,
                    cs=CSValue(value=0.3, modulus=Fraction(1, 2)),
                ),
                CellResult(n=-1, k=None, alpha0=2.0944, error="tracking lost"),
            ),
            elapsed=0.1,
        )

    def test_csv_with_failure(self) -> None:
        with patch("knotcs.scripting.knotcs_table.run", return_value=self._result()) as run:
            result = CliRunner().invoke(cli, ["table", "2", "--format", "csv", "-j", "2"])
        assert result.exit_code == 0
        assert result.stdout.splitlines() == [
            "2n,alpha0,cs",
            "2,2.40760,0.300000",
            "-2,2.09440,",
        ]
        assert "1 cell(s) failed:" in result.stderr
        assert "n=-1: tracking lost" in result.stderr
        assert run.call_args.kwargs["jobs"] == 2

    def test_unknown_table(self) -> None:
        result = CliRunner().invoke(cli, ["table", "3"])
        assert result.exit_code == 2


class TestVerify:
    """knotcs verify exits 1 when a check fails."""

    def test_pass(self) -> None:
        verdict = VerifyResult(
            checks=(CheckResult(name="degree", passed=True, detail="ok"),),
            elapsed=0.0,
        )
        with patch("knotcs.scripting.knotcs_verify.run", return_value=verdict) as run:
            result = CliRunner().invoke(cli, ["verify", "--quick"])
        assert result.exit_code == 0
        assert "1/1 check(s) passed" in result.stdout
        assert run.call_args.kwargs["quick"] is True

    def test_fail(self) -> None:
        verdict = VerifyResult(
            checks=(
                CheckResult(name="degree", passed=True, detail="ok"),
                CheckResult(name="relation", passed=False, detail="max 1e-3"),
            ),
            elapsed=0.0,
        )
        with patch("knotcs.scripting.knotcs_verify.run", return_value=verdict):
            result = CliRunner().invoke(cli, ["verify", "--perturb", "1e-3"])
        assert result.exit_code == 1
        assert "1/2 check(s) passed" in result.stdout
