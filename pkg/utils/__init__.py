"""
Shared utilities: the error hierarchy and report emission.
"""

from .errors import CarlitzError, UsageError, VerificationFailure
from .report_writer import ReportWriter

__all__ = [
    'CarlitzError',
    'UsageError',
    'VerificationFailure',
    'ReportWriter'
]
