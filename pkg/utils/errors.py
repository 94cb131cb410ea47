"""
Error hierarchy for the workbench.

Every error carries a machine-readable ``code`` and the process exit status the
CLI uses when the error escapes a subcommand.
"""

from typing import Dict


class CarlitzError(Exception):
    """Base class for all domain errors."""

    code = "CarlitzError"
    exit_status = 3

    def __init__(self, message: str = "", **details):
        super().__init__(message or self.code)
        self.message = message or self.code
        self.details = details

    def to_record(self) -> Dict:
        """Machine-readable error record."""
        record = {
            "success": False,
            "error": self.code,
            "message": self.message
        }
        if self.details:
            record["details"] = {k: str(v) for k, v in sorted(self.details.items())}
        return record


class UsageError(CarlitzError):
    code = "UsageError"
    exit_status = 2


class VerificationFailure(CarlitzError):
    code = "VerificationFailure"
    exit_status = 1


# field-tower
class NonPrimeP(CarlitzError):
    code = "NonPrimeP"


class QTooSmall(CarlitzError):
    code = "QTooSmall"


class NoEmbedding(CarlitzError):
    code = "NoEmbedding"


class MNotCoprimeToP(CarlitzError):
    code = "MNotCoprimeToP"


# poly-ring
class DivideByZeroPoly(CarlitzError):
    code = "DivideByZeroPoly"


class FieldMismatch(CarlitzError):
    code = "FieldMismatch"


class ConstantPolynomial(CarlitzError):
    code = "ConstantPolynomial"


class NotMonic(CarlitzError):
    code = "NotMonic"


# carlitz-core
class InexactDivision(CarlitzError):
    code = "InexactDivision"


class AlgebraMismatch(CarlitzError):
    code = "AlgebraMismatch"


class NotPrime(CarlitzError):
    code = "NotPrime"


# power-sums
class BudgetExceeded(CarlitzError):
    code = "BudgetExceeded"


class NonIntegralResult(CarlitzError):
    code = "NonIntegralResult"


class COutOfRange(CarlitzError):
    code = "COutOfRange"


# infinity-analytics
class OutsideConvergenceDomain(CarlitzError):
    code = "OutsideConvergenceDomain"


class DescentFailure(CarlitzError):
    code = "DescentFailure"


# p-adic
class NotInDomain(CarlitzError):
    code = "NotInDomain"


class UnexpectedValuation(CarlitzError):
    code = "UnexpectedValuation"
