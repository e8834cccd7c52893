"""Tests for the gammalab command line: output formats, files and exit codes."""

import csv
import io
import math
from fractions import Fraction

import pytest

from gammalab import __version__
from gammalab.cli import (
    EXIT_DOMAIN,
    EXIT_OK,
    EXIT_USAGE,
    OutputFormat,
    format_complex,
    format_float,
    format_rational,
    render_table,
)
from gammalab.stirling import smallest_term_index


def _csv_rows(text):
    return list(csv.reader(io.StringIO(text)))


def _complex_cell(cell):
    return complex(cell.replace("i", "j"))


# ---------------------------------------------------------------------------
# Rendering helpers
# ---------------------------------------------------------------------------

def test_format_rational():
    assert format_rational(Fraction(-1, 2)) == "-1/2"
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(Fraction(0)) == "0"


def test_format_float_round_trips_in_csv():
    value = 0.1 + 0.2
    assert float(format_float(value, OutputFormat.CSV)) == value
    assert format_float(value, OutputFormat.PLAIN) == "0.3"


def test_format_complex_signs():
    assert format_complex(complex(1.5, -2), OutputFormat.CSV) == "1.5-2.0i"
    assert format_complex(complex(1.5, 0), OutputFormat.CSV) == "1.5+0.0i"
    assert _complex_cell(format_complex(complex(-3, 4), OutputFormat.CSV)) == complex(-3, 4)


def test_render_table_plain_is_right_aligned():
    text = render_table(["n", "value"], [["1", "10"], ["20", "3"]], OutputFormat.PLAIN)
    lines = text.splitlines()
    assert [line.split() for line in lines] == [["n", "value"], ["1", "10"], ["20", "3"]]
    assert len({len(line.rstrip()) for line in lines}) == 1
    assert text.endswith("\n")


def test_render_table_csv_keeps_cells_verbatim():
    rows = [["1", "-1/2", "0.1"], ["2", "1e-20", "1.5-2.0i"]]
    text = render_table(["n", "a", "b"], rows, OutputFormat.CSV)
    assert text == "n,a,b\n1,-1/2,0.1\n2,1e-20,1.5-2.0i\n"


def test_render_table_without_rows():
    assert render_table(["n", "a"], [], OutputFormat.CSV) == "n,a\n"
    assert render_table(["n", "a"], [], OutputFormat.PLAIN).split() == ["n", "a"]


# ---------------------------------------------------------------------------
# bernoulli / coeffs
# ---------------------------------------------------------------------------

def test_bernoulli_csv_exact_output(cli, runner):
    result = runner.invoke(cli, ["bernoulli", "--max", "1", "--format", "csv"])
    assert result.exit_code == EXIT_OK
    assert result.output == "j,c,B\n0,1,1\n1,-1/2,-1/2\n"


def test_bernoulli_plain_output(cli, runner):
    result = runner.invoke(cli, ["bernoulli", "--max", "4"])
    assert result.exit_code == EXIT_OK
    lines = result.output.splitlines()
    assert lines[0].split() == ["j", "c", "B"]
    assert lines[3].split() == ["2", "1/12", "1/6"]
    assert lines[5].split() == ["4", "-1/720", "-1/30"]


def test_bernoulli_rejects_negative_max(cli, runner):
    result = runner.invoke(cli, ["bernoulli", "--max", "-1"])
    assert result.exit_code == EXIT_USAGE


def test_coeffs_csv(cli, runner):
    result = runner.invoke(cli, ["coeffs", "--max", "3", "--format", "csv"])
    assert result.exit_code == EXIT_OK
    assert result.output == "n,a,B_2n\n1,1/12,1/6\n2,-1/360,-1/30\n3,1/1260,1/42\n"


def test_coeffs_needs_a_term(cli, runner):
    assert runner.invoke(cli, ["coeffs", "--max", "0"]).exit_code == EXIT_USAGE


# ---------------------------------------------------------------------------
# eval / table
# ---------------------------------------------------------------------------

def test_eval_half(cli, runner):
    result = runner.invoke(cli, ["eval", "--z", "0.5", "--format", "csv"])
    assert result.exit_code == EXIT_OK
    header, row = _csv_rows(result.output)
    assert header == ["z", "log_gamma", "gamma", "error_estimate", "terms_used", "shift_applied"]
    assert _complex_cell(row[0]) == complex(0.5, 0)
    assert _complex_cell(row[1]).real == pytest.approx(0.5 * math.log(math.pi), abs=1e-14)
    assert _complex_cell(row[2]).real == pytest.approx(math.sqrt(math.pi), rel=1e-13)
    assert float(row[3]) >= 0
    assert int(row[5]) == 8


def test_eval_complex_argument_with_fixed_terms(cli, runner):
    result = runner.invoke(cli, ["eval", "--z", "2,3", "--terms", "5", "--format", "csv"])
    assert result.exit_code == EXIT_OK
    _, row = _csv_rows(result.output)
    assert _complex_cell(row[0]) == complex(2, 3)
    assert int(row[4]) == 5
    assert int(row[5]) == 6


def test_eval_plain_output(cli, runner):
    result = runner.invoke(cli, ["eval", "--z", "5"])
    assert result.exit_code == EXIT_OK
    lines = result.output.splitlines()
    assert len(lines) == 2
    assert lines[0].split()[0] == "z"
    assert lines[1].split()[2] == "24+0i"


@pytest.mark.parametrize("z", ["0", "-1", "-2.5", "-1,2", "0,3"])
def test_eval_outside_domain_exits_2(cli, runner, z):
    result = runner.invoke(cli, ["eval", "--z", z])
    assert result.exit_code == EXIT_DOMAIN
    assert "outside supported domain" in result.output


@pytest.mark.parametrize(
    "args",
    [
        ["eval"],
        ["eval", "--z", "abc"],
        ["eval", "--z", "1,2,3"],
        ["eval", "--z", "2", "--terms", "-1"],
        ["eval", "--z", "2", "--terms", "many"],
        ["eval", "--z", "2", "--terms", "31"],
        ["eval", "--z", "2", "--shift-threshold", "0.5"],
        ["eval", "--z", "2", "--shift-threshold", "1e12"],
        ["table", "--shift-threshold", "nan"],
        ["eval", "--z", "2", "--format", "json"],
        ["no-such-command"],
    ],
)
def test_usage_errors_exit_1(cli, runner, args):
    assert runner.invoke(cli, args).exit_code == EXIT_USAGE


def test_table_csv(cli, runner):
    result = runner.invoke(cli, ["table", "--from", "1", "--to", "5", "--step", "1", "--format", "csv"])
    assert result.exit_code == EXIT_OK
    header, *rows = _csv_rows(result.output)
    assert header[0] == "x"
    assert [float(row[0]) for row in rows] == [1.0, 2.0, 3.0, 4.0, 5.0]
    for row, expected in zip(rows, [1, 1, 2, 6, 24]):
        assert _complex_cell(row[2]).real == pytest.approx(expected, rel=1e-13)


def test_table_reports_overflow_as_infinity(cli, runner):
    result = runner.invoke(cli, ["table", "--from", "170", "--to", "172", "--format", "csv"])
    assert result.exit_code == EXIT_OK
    assert "inf+0.0i" in result.output


def test_table_through_a_pole_exits_2(cli, runner):
    result = runner.invoke(cli, ["table", "--from", "0", "--to", "2"])
    assert result.exit_code == EXIT_DOMAIN


@pytest.mark.parametrize("args", [["--step", "0"], ["--from", "3", "--to", "2"]])
def test_table_bad_grid_exits_1(cli, runner, args):
    assert runner.invoke(cli, ["table", *args]).exit_code == EXIT_USAGE


# ---------------------------------------------------------------------------
# cestimate / error-profile
# ---------------------------------------------------------------------------

def test_cestimate_csv(cli, runner):
    result = runner.invoke(cli, ["cestimate", "--n", "5,10", "--n", "20", "--terms", "0", "--format", "csv"])
    assert result.exit_code == EXIT_OK
    header, *rows = _csv_rows(result.output)
    assert header == ["n", "C_estimate", "deviation"]
    assert [row[0] for row in rows] == ["5", "10", "20"]
    deviations = [float(row[2]) for row in rows]
    assert deviations[0] > deviations[1] > deviations[2]
    assert float(rows[0][1]) == pytest.approx(2.5449, abs=1e-3)


def test_cestimate_default_points(cli, runner):
    result = runner.invoke(cli, ["cestimate", "--format", "csv"])
    assert result.exit_code == EXIT_OK
    assert [row[0] for row in _csv_rows(result.output)[1:]] == ["5", "10", "20", "40"]


@pytest.mark.parametrize("args", [["--n", "0"], ["--n", "x"], ["--terms", "31"], ["--terms", "-2"]])
def test_cestimate_usage_errors(cli, runner, args):
    assert runner.invoke(cli, ["cestimate", *args]).exit_code == EXIT_USAGE


def test_error_profile_csv(cli, runner):
    result = runner.invoke(cli, ["error-profile", "--z", "2", "--max", "10"])
    assert result.exit_code == EXIT_OK
    header, *rows = _csv_rows(result.output)
    assert header == ["terms", "abs_error", "first_omitted_term_estimate"]
    assert len(rows) == 11
    errors = [float(row[1]) for row in rows]
    assert min(errors) == errors[7]


def test_error_profile_half_integer(cli, runner):
    result = runner.invoke(cli, ["error-profile", "--z", "7/2", "--max", "3"])
    assert result.exit_code == EXIT_OK
    assert len(_csv_rows(result.output)) == 5


def test_error_profile_without_exact_reference_exits_2(cli, runner):
    result = runner.invoke(cli, ["error-profile", "--z", "1/3", "--max", "5"])
    assert result.exit_code == EXIT_DOMAIN


@pytest.mark.parametrize("args", [["--z", "abc"], ["--z", "2", "--max", "31"], ["--max", "3"]])
def test_error_profile_usage_errors(cli, runner, args):
    assert runner.invoke(cli, ["error-profile", *args]).exit_code == EXIT_USAGE


# ---------------------------------------------------------------------------
# Files, determinism, root options
# ---------------------------------------------------------------------------

def test_output_file_matches_stdout(cli, runner, tmp_path):
    target = tmp_path / "coeffs.csv"
    to_file = runner.invoke(cli, ["coeffs", "--max", "6", "--format", "csv", "--output", str(target)])
    to_stdout = runner.invoke(cli, ["coeffs", "--max", "6", "--format", "csv"])
    assert to_file.exit_code == EXIT_OK
    assert to_file.output == ""
    content = target.read_bytes()
    assert b"\r\n" not in content
    assert content.decode("utf-8") == to_stdout.output


def test_repeated_runs_are_identical(cli, runner):
    args = ["table", "--from", "0.5", "--to", "3", "--step", "0.5", "--format", "csv"]
    first = runner.invoke(cli, args)
    second = runner.invoke(cli, args)
    assert first.exit_code == second.exit_code == EXIT_OK
    assert first.output == second.output


def test_csv_values_round_trip(cli, runner):
    result = runner.invoke(cli, ["eval", "--z", "3.7,-1.2", "--format", "csv"])
    _, row = _csv_rows(result.output)
    value = _complex_cell(row[1])
    assert format_complex(value, OutputFormat.CSV) == row[1]


def test_version(cli, runner):
    result = runner.invoke(cli, ["--version"])
    assert result.exit_code == EXIT_OK
    assert __version__ in result.output


def test_help_lists_commands(cli, runner):
    result = runner.invoke(cli, ["--help"])
    assert result.exit_code == EXIT_OK
    for name in ["bernoulli", "coeffs", "eval", "table", "cestimate", "error-profile"]:
        assert name in result.output


def test_verbose_flag_is_accepted(cli, runner):
    result = runner.invoke(cli, ["-vv", "coeffs", "--max", "2"])
    assert result.exit_code == EXIT_OK


def test_bernoulli_single_row_plain(cli, runner):
    result = runner.invoke(cli, ["bernoulli", "--max", "0"])
    assert result.exit_code == EXIT_OK
    assert len(result.output.splitlines()) == 2


def test_bernoulli_csv_row_four(cli, runner):
    result = runner.invoke(cli, ["bernoulli", "--max", "4", "--format", "csv"])
    assert result.output.splitlines()[-1] == "4,-1/720,-1/30"


def test_cestimate_single_point(cli, runner):
    result = runner.invoke(cli, ["cestimate", "--n", "1", "--terms", "0", "--format", "csv"])
    assert result.exit_code == EXIT_OK
    assert len(_csv_rows(result.output)) == 2


def test_error_profile_shape_at_two(cli, runner):
    result = runner.invoke(cli, ["error-profile", "--z", "2", "--max", "20"])
    errors = [float(row[1]) for row in _csv_rows(result.output)[1:]]
    best = errors.index(min(errors))
    assert 0 < best < 20
    assert all(a > b for a, b in zip(errors[:best], errors[1:best + 1]))
    assert all(a < b for a, b in zip(errors[best:], errors[best + 1:]))


def test_error_profile_at_ten(cli, runner):
    result = runner.invoke(cli, ["error-profile", "--z", "10", "--max", "5"])
    assert result.exit_code == EXIT_OK
    assert float(_csv_rows(result.output)[-1][1]) < 1e-10


def test_error_profile_at_non_half_integer_exits_2(cli, runner):
    result = runner.invoke(cli, ["error-profile", "--z", "2.3", "--max", "5"])
    assert result.exit_code == EXIT_DOMAIN
    assert "exact reference" in result.output


def test_error_profile_minimum_at_smallest_term_index(cli, runner, series):
    result = runner.invoke(cli, ["error-profile", "--z", "2", "--max", "20"])
    errors = [float(row[1]) for row in _csv_rows(result.output)[1:]]
    best = errors.index(min(errors))
    assert abs(best - smallest_term_index(series, 2, cap=20)) <= 1
    assert all(a < b for a, b in zip(errors[best:best + 3], errors[best + 1:best + 4]))


def test_output_into_missing_directory_exits_1(cli, runner, tmp_path):
    target = tmp_path / "missing" / "out.csv"
    result = runner.invoke(cli, ["eval", "--z", "2", "--output", str(target)])
    assert result.exit_code == EXIT_USAGE
    assert "Could not open file" in result.output
    assert not target.exists()


def test_eval_where_gamma_underflows(cli, runner, tmp_path):
    # The underflow warning goes to stderr, so read the table from a file
    target = tmp_path / "underflow.csv"
    result = runner.invoke(cli, ["eval", "--z", "0.5,500", "--format", "csv", "--output", str(target)])
    assert result.exit_code == EXIT_OK
    _, row = _csv_rows(target.read_text(encoding="utf-8"))
    assert _complex_cell(row[1]).real < -700
    assert _complex_cell(row[2]) == 0


def test_eval_beyond_double_range_exits_2(cli, runner):
    result = runner.invoke(cli, ["eval", "--z", "1e308"])
    assert result.exit_code == EXIT_DOMAIN
