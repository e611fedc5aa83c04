from . import branching, cli, experiments, game, generator, solvers, utils
from .branching.exploration import (
    ExplorationResult,
    explore_self_winning_subgraph,
    in_winning_parity_subgraph,
)
from .branching.extinction import (
    BranchingSpec,
    ExtinctionResult,
    extinction_probability,
)
from .branching.simulate import BranchingEstimate, simulate_branching
from .branching.threshold import (
    CLOSED_FORM,
    FIXED_POINT,
    ThresholdCheck,
    min_sufficient_degree,
    threshold_check,
    threshold_table,
    verdict_disagreements,
)
from .experiments.csv_output import read_sweep_csv, render_sweep_csv, write_sweep_csv
from .experiments.plotting import plot_sweep
from .experiments.sweep_spec import SweepCell, SweepKind, SweepSpec
from .experiments.sweeps import (
    run_sweep,
    sweep_nonsparse,
    sweep_self_winning,
    sweep_success_prob,
    sweep_timing,
    trial_seed,
)
from .game.bipartite import BipartiteConversion, to_bipartite, to_bipartite_with_origin
from .game.example_game import example_game
from .game.parity_game import ParityGame, transpose, transpose_adjacency
from .game.pgsolver_format import (
    GameFormatError,
    parse_pgsolver,
    read_game,
    render_pgsolver,
    write_game,
)
from .game.player import Player, par
from .game.validation import InvalidGameError, Violation, assert_valid, validate
from .generator.config import (
    GenConfig,
    InvalidConfigError,
    load_gen_config,
    parse_gen_config,
)
from .generator.degree import (
    ConstantDegree,
    DegreeFunction,
    FractionDegree,
    LogDegree,
    SqrtDegree,
    degree_of,
    parse_degree,
)
from .generator.generate import generate, generate_many, node_rng
from .solvers.attractor import attractor, attractor_with_strategy
from .solvers.brute_force import (
    StrategySpaceTooLargeError,
    brute_force_solve,
    strategy_space_size,
)
from .solvers.d1 import DegreeMismatchError, cycle_winners, solve_d1, solve_d1_memoized
from .solvers.dfs import Direction, dfs_reachable
from .solvers.propagate import PropagationTrace, propagate, propagate_round_robin
from .solvers.self_reach import (
    SelfReachLabel,
    certified_fraction,
    owner_wins_solution,
    self_reach_labels,
)
from .solvers.self_winning import SelfWinningReport, find_self_winning
from .solvers.solution import (
    UNDECIDED,
    PartialSolution,
    Solution,
    parse_solution,
    read_solution,
    render_solution,
    write_solution,
)
from .solvers.strategy_check import (
    beaten_strategy_nodes,
    disagreements,
    play_winner,
    strategy_violations,
    witness_closure_violations,
)
from .solvers.swcp import seeds_from_report, swcp_solve
from .solvers.zielonka import SinkNodeError, zielonka_solve
