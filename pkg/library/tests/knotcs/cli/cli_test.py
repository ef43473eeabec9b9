"""Tests for the top-level knotcs CLI (version, help)."""

from click.testing import CliRunner

from knotcs.cli import cli


class TestCliVersionFlag:
    """--version prints just the version number."""

    def test_prints_version_number(self) -> None:
        runner = CliRunner()
        result = runner.invoke(cli, ["--version"])
        assert result.exit_code == 0
        assert "knotcs" not in result.output.lower()
        assert result.output.strip() != ""


class TestCliVersionSubcommand:
    """knotcs version prints just the version number."""

    def test_same_as_flag(self) -> None:
        runner = CliRunner()
        flag_result = runner.invoke(cli, ["--version"])
        cmd_result = runner.invoke(cli, ["version"])
        assert cmd_result.exit_code == 0
        assert flag_result.output.strip() == cmd_result.output.strip()


class TestCliHelpSubcommand:
    """knotcs help prints guidance to use --help."""

    def test_mentions_subcommand_help(self) -> None:
        runner = CliRunner()
        result = runner.invoke(cli, ["help"])
        assert result.exit_code == 0
        assert "<command> --help" in result.output

    def test_lists_commands(self) -> None:
        runner = CliRunner()
        result = runner.invoke(cli, ["-h"])
        assert result.exit_code == 0
        for name in ("alpha0", "cs", "cover", "knot", "table", "verify"):
            assert name in result.output
