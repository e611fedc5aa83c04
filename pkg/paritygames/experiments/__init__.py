from .csv_output import read_sweep_csv, render_sweep_csv, sweep_header, write_sweep_csv
from .plotting import plot_sweep
from .sweep_spec import (
    COMMON_COLUMNS,
    DEFAULT_ORACLE_MAX_NODES,
    EXTRA_COLUMNS,
    SweepCell,
    SweepKind,
    SweepSpec,
    parse_degree_grid,
    parse_node_grid,
)
from .sweeps import (
    nonsparse_trial,
    run_sweep,
    self_winning_trial,
    success_trial,
    sweep_nonsparse,
    sweep_self_winning,
    sweep_success_prob,
    sweep_timing,
    timing_trial,
    trial_seed,
)
