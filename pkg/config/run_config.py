"""
Run configuration and default budgets.
"""

from dataclasses import asdict, dataclass
from typing import Dict, Optional, Tuple

from sympy import factorint

from utils.errors import UsageError

TOOL_VERSION = "1.0.0"

DEFAULT_PRECISION = 20
DEFAULT_SEED = 0
DEFAULT_TERM_BUDGET = 10 ** 5
DEFAULT_CANDIDATE_BUDGET = 10 ** 4
# |A/P^n| above this switches the Lemma 8 check to annihilator-only mode
EXHAUSTIVE_MODULE_BUDGET = 3 ** 8
# exhaustive M(d) confirmation only when N_q(d) is at most this
EXHAUSTIVE_PRIME_LIMIT = 10 ** 4
DEFAULT_SAMPLE_COUNT = 200

OUTPUT_FORMATS = ("json", "csv", "text")


def parse_q(text: str) -> Tuple[int, int]:
    """
    Parse a ``--q`` literal such as ``9`` into ``(p, e)``.

    Args:
        text (str): decimal prime power

    Returns:
        Tuple[int, int]: characteristic and degree over F_p
    """
    try:
        q = int(str(text).strip())
    except ValueError:
        raise UsageError(f"--q expects an integer prime power, got {text!r}")
    if q < 2:
        raise UsageError(f"--q must be a prime power, got {q}")
    factors = factorint(q)
    if len(factors) != 1:
        raise UsageError(f"--q must be a prime power, got {q}")
    (p, e), = factors.items()
    return int(p), int(e)


@dataclass(frozen=True)
class RunConfig:
    """Everything that determines a report; serialized into every report header."""

    p: int
    e: int
    precision: int = DEFAULT_PRECISION
    seed: int = DEFAULT_SEED
    term_budget: int = DEFAULT_TERM_BUDGET
    candidate_budget: int = DEFAULT_CANDIDATE_BUDGET
    output_format: str = "json"
    output_path: Optional[str] = None
    allow_q2: bool = False
    include_timing: bool = False

    def __post_init__(self):
        if self.output_format not in OUTPUT_FORMATS:
            raise UsageError(f"unknown output format {self.output_format!r}")
        if self.precision < 1:
            raise UsageError("--prec must be at least 1")

    @property
    def q(self) -> int:
        return self.p ** self.e

    def to_dict(self) -> Dict:
        record = asdict(self)
        record["q"] = self.q
        return record
