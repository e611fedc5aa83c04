from .exploration import (
    ExplorationResult,
    explore_self_winning_subgraph,
    in_winning_parity_subgraph,
)
from .extinction import (
    DEFAULT_TOLERANCE,
    ITERATION_CAP,
    BranchingSpec,
    ExtinctionResult,
    extinction_probability,
)
from .simulate import BranchingEstimate, simulate_branching
from .threshold import (
    CLOSED_FORM,
    FIXED_POINT,
    ThresholdCheck,
    min_sufficient_degree,
    threshold_check,
    threshold_table,
    verdict_disagreements,
)
