from dataclasses import dataclass
from typing import List

from paritygames.branching.extinction import (
    DEFAULT_TOLERANCE,
    BranchingSpec,
    extinction_probability,
)

# each successor of a node is, independently, owned by the same player and
# has a priority of the winning parity with probability 1/4
SAME_OWNER_WINNING_PARITY = 0.25

FIXED_POINT = "fixed_point"
CLOSED_FORM = "closed_form"
DEFAULT_SCAN_MAX = 64


@dataclass(frozen=True, eq=True)
class ThresholdCheck:
    """
    Both forms of the sufficient degree condition at degree ``d``:
    ``d * eta(d - 1, 1/4) < 1`` (fixed point) and
    ``d * (3/4 + 1/(4d))^(d-1) <= 1`` (closed form).
    """

    d: int
    eta: float
    lhs_fixed_point: float
    lhs_closed_form: float

    @property
    def condition_holds(self) -> bool:
        return self.lhs_fixed_point < 1

    @property
    def closed_form_holds(self) -> bool:
        return self.lhs_closed_form <= 1

    @property
    def verdicts_agree(self) -> bool:
        return self.condition_holds == self.closed_form_holds


def threshold_check(d: int, tolerance: float = DEFAULT_TOLERANCE) -> ThresholdCheck:
    if d < 2:
        raise ValueError(f"threshold_check needs d >= 2, got {d}")
    eta = extinction_probability(
        BranchingSpec(d - 1, SAME_OWNER_WINNING_PARITY, tolerance)
    ).eta
    closed = d * (0.75 + 1 / (4 * d)) ** (d - 1)
    return ThresholdCheck(d, eta, d * eta, closed)


def threshold_table(
    d_min: int = 2, d_max: int = DEFAULT_SCAN_MAX, tolerance: float = DEFAULT_TOLERANCE
) -> List[ThresholdCheck]:
    return [threshold_check(d, tolerance) for d in range(d_min, d_max + 1)]


def verdict_disagreements(table: List[ThresholdCheck]) -> List[int]:
    """
    Degrees at which the two forms of the condition give different verdicts.
    """
    return [row.d for row in table if not row.verdicts_agree]


def min_sufficient_degree(
    form: str = FIXED_POINT,
    d_max: int = DEFAULT_SCAN_MAX,
    tolerance: float = DEFAULT_TOLERANCE,
) -> int:
    """
    Smallest degree ``d >= 2`` satisfying the sufficient condition, scanning
    up to ``d_max``. ``form`` selects which form of the condition decides.
    This degree is sufficient for SWCP, not claimed to be tight.
    """
    if form not in (FIXED_POINT, CLOSED_FORM):
        raise ValueError(
            f"form must be {FIXED_POINT!r} or {CLOSED_FORM!r}, got {form!r}"
        )
    for row in threshold_table(2, d_max, tolerance):
        holds = row.condition_holds if form == FIXED_POINT else row.closed_form_holds
        if holds:
            return row.d
    raise ValueError(f"no degree in [2, {d_max}] satisfies the {form} condition")
