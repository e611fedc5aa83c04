import logging
import math
import time
import warnings
from concurrent.futures import Executor, ProcessPoolExecutor
from contextlib import nullcontext
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
import tqdm.auto as tqdm
from frozendict import frozendict

from paritygames.experiments.sweep_spec import SweepCell, SweepKind, SweepSpec
from paritygames.generator.config import GenConfig
from paritygames.generator.degree import ConstantDegree, DegreeFunction
from paritygames.generator.generate import generate
from paritygames.solvers.self_reach import (
    certified_fraction,
    owner_wins_solution,
    self_reach_labels,
)
from paritygames.solvers.self_winning import find_self_winning
from paritygames.solvers.strategy_check import disagreements
from paritygames.solvers.swcp import swcp_solve
from paritygames.solvers.zielonka import zielonka_solve
from paritygames.utils.seeding import derived_seed_sequence

logger = logging.getLogger(__name__)


def trial_seed(base_seed: int, n: int, d: int, trial: int) -> int:
    """
    Game seed of one trial, a function of the sweep seed, the cell and the
    trial index only.
    """
    state = derived_seed_sequence(base_seed, n, d, trial).generate_state(1, np.uint64)
    return int(state[0])


def _game(n: int, d: int, priority_count: int, seed: int):
    return generate(GenConfig(n, ConstantDegree(d), priority_count, seed=seed))


def success_trial(n: int, d: int, priority_count: int, seed: int) -> Tuple[float, bool]:
    result = swcp_solve(_game(n, d, priority_count, seed))
    return result.decided_fraction, result.fully_solved


def self_winning_trial(n: int, d: int, priority_count: int, seed: int) -> float:
    return find_self_winning(_game(n, d, priority_count, seed)).fraction


def nonsparse_trial(
    n: int, d: int, priority_count: int, seed: int, oracle_max_nodes: int
) -> Tuple[float, bool]:
    """
    Fraction of nodes not won by their owner, and whether it is exact. Above
    ``oracle_max_nodes`` only nodes certified by self-reach are known to be
    won by their owner, so one minus their fraction is an upper bound.
    """
    game = _game(n, d, priority_count, seed)
    if n <= oracle_max_nodes:
        truth = zielonka_solve(game)
        guess = owner_wins_solution(game).as_partial()
        return len(disagreements(truth, guess)) / n, True
    return 1 - certified_fraction(self_reach_labels(game)), False


def timing_trial(n: int, d: int, priority_count: int, seed: int) -> float:
    game = _game(n, d, priority_count, seed)
    start = time.perf_counter()
    swcp_solve(game)
    return time.perf_counter() - start


def _mean_and_stderr(values: Sequence[float]) -> Tuple[float, float]:
    values = np.asarray(values, dtype=float)
    if len(values) < 2:
        return float(values.mean()), 0.0
    return float(values.mean()), float(values.std(ddof=1) / math.sqrt(len(values)))


def _cells(spec: SweepSpec):
    for n in spec.n_grid:
        for degree in spec.d_grid:
            d = degree.evaluate(n)
            if not 1 <= d <= n - 1:
                warnings.warn(
                    f"skipping cell n={n}, d={degree} (degree {d} out of range)"
                )
                continue
            yield n, degree, d


def _run_trials(
    pool: Optional[Executor], function: Callable, argument_lists: List[tuple]
) -> list:
    if pool is None:
        return [function(*args) for args in argument_lists]
    return list(pool.map(function, *zip(*argument_lists)))


def run_sweep(
    spec: SweepSpec, workers: int = 1, progress: bool = False
) -> List[SweepCell]:
    """
    Evaluate every cell of ``spec``, n-major and d-minor. Trials may run on
    ``workers`` processes; results are reduced in trial order, so every
    metric except wall-clock time is identical for any worker count.
    """
    spec.check()
    cells = list(_cells(spec))
    pool_context = (
        ProcessPoolExecutor(max_workers=workers) if workers > 1 else nullcontext()
    )
    results = []
    with pool_context as pool:
        for n, degree, d in tqdm.tqdm(
            cells, desc=spec.kind.value, disable=not progress
        ):
            seeds = [trial_seed(spec.base_seed, n, d, t) for t in range(spec.trials)]
            cell = _CELL_RUNNERS[spec.kind](spec, pool, n, degree, d, seeds)
            logger.info(
                "%s n=%d d=%d: %.4g +- %.2g",
                spec.kind.value,
                n,
                d,
                cell.metric_value,
                cell.stderr,
            )
            results.append(cell)
    return results


def _success_cell(spec, pool, n, degree, d, seeds) -> SweepCell:
    del degree
    outcomes = _run_trials(
        pool, success_trial, [(n, d, spec.priority_count, s) for s in seeds]
    )
    decided, decided_stderr = _mean_and_stderr([o[0] for o in outcomes])
    solved_fraction = sum(o[1] for o in outcomes) / len(outcomes)
    solved_stderr = math.sqrt(solved_fraction * (1 - solved_fraction) / len(outcomes))
    return SweepCell(
        n,
        d,
        len(seeds),
        decided,
        decided_stderr,
        frozendict(solved_fraction=solved_fraction, solved_stderr=solved_stderr),
    )


def _self_winning_cell(spec, pool, n, degree, d, seeds) -> SweepCell:
    del degree
    fractions = _run_trials(
        pool, self_winning_trial, [(n, d, spec.priority_count, s) for s in seeds]
    )
    return SweepCell(n, d, len(seeds), *_mean_and_stderr(fractions))


def _nonsparse_cell(spec, pool, n, degree: DegreeFunction, d, seeds) -> SweepCell:
    outcomes = _run_trials(
        pool,
        nonsparse_trial,
        [(n, d, spec.priority_count, s, spec.oracle_max_nodes) for s in seeds],
    )
    exact = all(o[1] for o in outcomes)
    return SweepCell(
        n,
        d,
        len(seeds),
        *_mean_and_stderr([o[0] for o in outcomes]),
        frozendict(degree_tag=degree.tag, bound="exact" if exact else "upper"),
    )


def _timing_cell(spec, pool, n, degree, d, seeds) -> SweepCell:
    del degree
    # warm-up, discarded
    timing_trial(n, d, spec.priority_count, seeds[0])
    times = _run_trials(
        pool, timing_trial, [(n, d, spec.priority_count, s) for s in seeds]
    )
    return SweepCell(
        n,
        d,
        len(seeds),
        *_mean_and_stderr(times),
        frozendict(n_squared=n * n, n_times_m=n * n * d),
    )


_CELL_RUNNERS = {
    SweepKind.SUCCESS_PROB: _success_cell,
    SweepKind.SELF_WINNING_FRAC: _self_winning_cell,
    SweepKind.NONSPARSE_LOSS: _nonsparse_cell,
    SweepKind.TIMING: _timing_cell,
}


def _require_kind(spec: SweepSpec, kind: SweepKind) -> None:
    if spec.kind is not kind:
        raise ValueError(f"expected a {kind.value} sweep, got {spec.kind.value}")


def sweep_success_prob(spec: SweepSpec, workers: int = 1, progress: bool = False):
    """
    Per cell: mean fraction of nodes decided by SWCP (``metric``), and the
    fraction of games SWCP solves completely (``solved_fraction``).
    """
    _require_kind(spec, SweepKind.SUCCESS_PROB)
    return run_sweep(spec, workers, progress)


def sweep_self_winning(spec: SweepSpec, workers: int = 1, progress: bool = False):
    _require_kind(spec, SweepKind.SELF_WINNING_FRAC)
    return run_sweep(spec, workers, progress)


def sweep_nonsparse(spec: SweepSpec, workers: int = 1, progress: bool = False):
    """
    Per cell: mean fraction of nodes not won by their owner.
    """
    _require_kind(spec, SweepKind.NONSPARSE_LOSS)
    return run_sweep(spec, workers, progress)


def sweep_timing(spec: SweepSpec, workers: int = 1, progress: bool = False):
    """
    Per cell: mean wall-clock seconds of one SWCP solve.
    """
    _require_kind(spec, SweepKind.TIMING)
    return run_sweep(spec, workers, progress)
