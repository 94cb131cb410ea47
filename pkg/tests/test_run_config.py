import pytest

from config.run_config import DEFAULT_PRECISION, TOOL_VERSION, RunConfig, parse_q
from utils import errors
from utils.errors import CarlitzError, UsageError


@pytest.mark.parametrize("text, expected", [("3", (3, 1)), ("4", (2, 2)), ("9", (3, 2)), (" 8 ", (2, 3)), ("2", (2, 1))])
def test_parse_q(text, expected):
    assert parse_q(text) == expected


@pytest.mark.parametrize("text", ["6", "1", "0", "-3", "nine", "12"])
def test_parse_q_rejects(text):
    with pytest.raises(UsageError):
        parse_q(text)


def test_defaults_and_dict():
    config = RunConfig(3, 2)
    assert config.q == 9
    assert config.precision == DEFAULT_PRECISION
    record = config.to_dict()
    assert record["q"] == 9
    assert record["p"] == 3 and record["e"] == 2
    assert not record["include_timing"]
    assert TOOL_VERSION == "1.0.0"


def test_validation():
    with pytest.raises(UsageError):
        RunConfig(3, 1, output_format="xml")
    with pytest.raises(UsageError):
        RunConfig(3, 1, precision=0)


def test_exit_statuses():
    assert UsageError.exit_status == 2
    assert errors.VerificationFailure.exit_status == 1
    assert errors.QTooSmall.exit_status == 3
    assert errors.BudgetExceeded("x").code == "BudgetExceeded"


def test_every_error_is_a_carlitz_error():
    names = [name for name in dir(errors) if isinstance(getattr(errors, name), type)
             and issubclass(getattr(errors, name), Exception)]
    for name in names:
        cls = getattr(errors, name)
        assert issubclass(cls, CarlitzError)
        assert cls.code == name


def test_record_without_details():
    record = errors.NotPrime("T^2 is not prime").to_record()
    assert record == {"success": False, "error": "NotPrime", "message": "T^2 is not prime"}
