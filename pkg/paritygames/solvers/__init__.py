from .attractor import attractor, attractor_with_strategy
from .brute_force import (
    DEFAULT_STRATEGY_BOUND,
    StrategySpaceTooLargeError,
    brute_force_solve,
    strategy_space_size,
)
from .d1 import DegreeMismatchError, cycle_winners, solve_d1, solve_d1_memoized
from .dfs import Direction, dfs_reachable
from .propagate import PropagationTrace, propagate, propagate_round_robin
from .self_reach import (
    SelfReachLabel,
    certified_fraction,
    owner_wins_solution,
    self_reach_labels,
)
from .self_winning import (
    SelfWinningReport,
    anchors,
    cycle_through_anchor,
    find_self_winning,
)
from .solution import (
    UNDECIDED,
    PartialSolution,
    Solution,
    parse_solution,
    read_solution,
    render_solution,
    write_solution,
)
from .strategy_check import (
    beaten_strategy_nodes,
    disagreements,
    play_winner,
    strategy_violations,
    witness_closure_violations,
)
from .swcp import seeds_from_report, swcp_solve
from .zielonka import SinkNodeError, zielonka_solve
