import pytest

from apps.verification_suite import REGULATOR_DEGREES, VerificationSuite
from apps.workbench import CarlitzWorkbench
from config.run_config import RunConfig
from utils.errors import BudgetExceeded, NotMonic


@pytest.fixture(scope="module")
def suite3() -> VerificationSuite:
    return VerificationSuite(CarlitzWorkbench(RunConfig(p=3, e=1, precision=20)))


def test_regulator_degrees():
    assert REGULATOR_DEGREES == (2, 3)


@pytest.mark.parametrize("n", REGULATOR_DEGREES)
def test_regulator_identity(suite3, n):
    assert suite3._regulator_identity(n, 20)


def test_budget_becomes_a_skipped_row(suite3):
    def over_budget():
        raise BudgetExceeded("too many terms")

    suite3.rows = []
    suite3._run("zetaAnEqualsRegulator", {"n": 3}, over_budget)
    row, = suite3.rows
    assert row["pass"]
    assert row["skipped"] == "too many terms"


def test_domain_error_becomes_a_failed_row(suite3):
    def not_monic():
        raise NotMonic("2*T is not monic")

    suite3.rows = []
    suite3._run("lemma3", {"P": "2*T"}, not_monic)
    row, = suite3.rows
    assert not row["pass"]
    assert row["error"] == "NotMonic"
