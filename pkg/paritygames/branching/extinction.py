import warnings
from dataclasses import dataclass

DEFAULT_TOLERANCE = 1e-12
ITERATION_CAP = 10**6


@dataclass(frozen=True, eq=True)
class BranchingSpec:
    """
    A Galton-Watson process whose offspring count is Binomial(trials_d, q).
    ``tolerance`` is the stopping threshold of the fixed-point iteration.
    """

    trials_d: int
    q: float
    tolerance: float = DEFAULT_TOLERANCE

    def __post_init__(self):
        if self.trials_d < 0:
            raise ValueError(
                f"offspring trials must be non-negative, got {self.trials_d}"
            )
        if not 0 <= self.q <= 1:
            raise ValueError(f"q must lie in [0, 1], got {self.q}")
        if self.tolerance <= 0:
            raise ValueError(f"tolerance must be positive, got {self.tolerance}")

    @property
    def mean_offspring(self) -> float:
        return self.trials_d * self.q

    def generating_function(self, s: float) -> float:
        return (1 - self.q + self.q * s) ** self.trials_d


@dataclass(frozen=True, eq=True)
class ExtinctionResult:
    eta: float
    iterations: int
    converged: bool


def extinction_probability(
    spec: BranchingSpec, iteration_cap: int = ITERATION_CAP
) -> ExtinctionResult:
    """
    Extinction probability of the process: the smallest fixed point of
    ``eta = (1 - q + q eta)^d``.

    Iterates ``eta_{k+1} = f(eta_k)`` from ``eta_0 = 0``. The iterates
    increase monotonically to the smallest fixed point in [0, 1]; iteration
    stops once consecutive iterates differ by less than the tolerance.
    Processes with mean offspring ``d q <= 1`` (and ``q < 1``) die out
    surely, so ``eta = 1`` is returned without iterating; the iteration
    would only creep towards 1 at rate 1/k in the critical case. If the cap
    is hit, ``converged`` is False and a warning is issued.
    """
    if spec.trials_d == 0 or (spec.q < 1 and spec.mean_offspring <= 1):
        return ExtinctionResult(1.0, 0, True)
    eta = 0.0
    for iteration in range(1, iteration_cap + 1):
        updated = min(1.0, max(0.0, spec.generating_function(eta)))
        if abs(updated - eta) < spec.tolerance:
            return ExtinctionResult(updated, iteration, True)
        eta = updated
    warnings.warn(
        f"extinction iteration for d={spec.trials_d}, q={spec.q} did not converge"
        f" within {iteration_cap} iterations"
    )
    return ExtinctionResult(eta, iteration_cap, False)
