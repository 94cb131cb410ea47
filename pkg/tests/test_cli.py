import json

import pytest

from apps.main import build_parser, dispatch


def run(capsys, *argv):
    status = dispatch(list(argv))
    return status, capsys.readouterr().out


def test_field_info(capsys):
    status, out = run(capsys, "field", "info", "--q", "9")
    document = json.loads(out)
    assert status == 0
    assert document["header"]["q"] == 9
    assert document["header"]["modulus"] == [1, 0, 1]
    assert document["payload"]["q"] == 9


def test_unknown_subcommand(capsys):
    assert dispatch(["frobnicate"]) == 2


def test_missing_required_option(capsys):
    assert dispatch(["search", "wieferich", "--q", "3"]) == 2


def test_wieferich_search(capsys):
    status, out = run(capsys, "search", "wieferich", "--q", "4", "--d", "2", "--seed", "7")
    payload = json.loads(out)["payload"]
    assert status == 0
    assert payload["M"] == 2
    assert payload["seed"] == 7
    assert "timing" not in payload


def test_q_two_is_refused_without_flag(capsys):
    status, out = run(capsys, "field", "info", "--q", "2")
    assert status == 3
    assert json.loads(out)["error"]["error"] == "QTooSmall"


def test_q_two_with_flag(capsys):
    status, out = run(capsys, "field", "info", "--q", "2", "--allow-q2")
    assert status == 0
    assert json.loads(out)["header"]["outsideHypotheses"]


def test_not_a_prime_power(capsys):
    status, out = run(capsys, "field", "info", "--q", "6")
    assert status == 2
    assert json.loads(out)["error"]["error"] == "UsageError"


def test_counts_table_as_csv(capsys):
    status, out = run(capsys, "table", "counts", "--q", "3", "--dmax", "2", "--format", "csv")
    lines = out.splitlines()
    assert status == 0
    assert lines[0] == "d,Nq,M,N,bound"
    assert lines[2] == "2,3,0,3,3/4"


def test_norm_over_quadratic_extension(capsys):
    status, out = run(capsys, "poly", "norm", "--q", "3", "--n", "2", "--f", "T + [0,1]")
    assert status == 0
    assert json.loads(out)["payload"]["norm"] == "1 + T^2"


def test_phi_coefficients(capsys):
    status, out = run(capsys, "carlitz", "phi", "--q", "3", "--a", "T^2 + 1")
    assert status == 0
    assert json.loads(out)["payload"]["coeffs"] == ["1 + T^2", "T + T^3", "1"]


def test_non_prime_is_a_usage_error(capsys):
    status, _ = run(capsys, "padic", "lemma4", "--q", "3", "--P", "T^2")
    assert status == 2


def test_report_to_file(capsys, tmp_path):
    path = tmp_path / "lemma3.json"
    status, out = run(capsys, "carlitz", "lemma3", "--q", "3", "--dmax", "1", "--out", str(path))
    assert status == 0
    assert out == ""
    assert json.loads(path.read_text())["payload"]["pass"]


def test_parser_lists_every_command():
    parser = build_parser()
    args = parser.parse_args(["zeta", "an", "--n", "2", "--q", "3"])
    assert (args.command, args.action, args.cap) == ("zeta", "an", 3)


@pytest.mark.slow
def test_verify_all(capsys):
    status, out = run(capsys, "verify", "all", "--q", "3", "--dmax", "2")
    assert status == 0
    assert json.loads(out)["payload"]["pass"]


@pytest.mark.parametrize("argv", [
    ("padic", "lemma4", "--q", "3", "--P", "T^2 + 1", "--n", "1"),
    ("field", "roots", "--q", "3", "--m", "0"),
    ("poly", "irreducibles", "--q", "3", "--d", "0"),
    ("search", "question1", "--q", "3", "--dmin", "3", "--dmax", "2"),
    ("sums", "bg", "--q", "3", "--i", "-1"),
])
def test_out_of_range_arguments_are_usage_errors(capsys, argv):
    status, out = run(capsys, *argv)
    assert status == 2
    assert json.loads(out)["error"]["error"] == "UsageError"


def test_irreducibles_over_budget(capsys):
    status, out = run(capsys, "poly", "irreducibles", "--q", "9", "--d", "12")
    assert status == 3
    assert json.loads(out)["error"]["error"] == "BudgetExceeded"


def test_error_header_carries_run_settings(capsys):
    status, out = run(capsys, "field", "info", "--q", "2", "--prec", "17", "--seed", "5")
    header = json.loads(out)["header"]
    assert status == 3
    assert (header["q"], header["p"], header["e"]) == (2, 2, 1)
    assert (header["precision"], header["seed"]) == (17, 5)
    assert "tool_version" in header


def test_error_header_before_q_is_parsed(capsys):
    status, out = run(capsys, "field", "info", "--q", "6")
    header = json.loads(out)["header"]
    assert status == 2
    assert header["q"] == "6"
    assert "p" not in header
