import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import List

import numpy as np
import tqdm.auto as tqdm

from paritygames.branching.extinction import BranchingSpec
from paritygames.utils.seeding import derived_rng

BLOCK_SIZE = 10_000
# a population this large dies out with probability at most eta^cap,
# which is negligible for every supercritical process
POPULATION_CAP = 10**6


@dataclass(frozen=True, eq=True)
class BranchingEstimate:
    estimate: float
    stderr: float
    trials: int
    generations: int


def _extinct_in_block(
    spec: BranchingSpec, generations: int, trials: int, seed: int, block: int
) -> int:
    rng = derived_rng(seed, block)
    population = np.ones(trials, dtype=np.int64)
    for _ in range(generations):
        alive = population > 0
        if not alive.any():
            break
        population[alive] = rng.binomial(population[alive] * spec.trials_d, spec.q)
        np.minimum(population, POPULATION_CAP, out=population)
    return int((population == 0).sum())


def simulate_branching(
    spec: BranchingSpec,
    generations: int,
    trials: int,
    seed: int,
    workers: int = 1,
    progress: bool = False,
) -> BranchingEstimate:
    """
    Monte Carlo estimate of the probability that the process started from a
    single individual is extinct after ``generations`` generations.

    Trials are split into fixed blocks of ``BLOCK_SIZE``, each with its own
    derived random stream, so the estimate does not depend on ``workers``.
    The estimate approaches the extinction probability from below as the
    horizon grows.
    """
    if trials < 1:
        raise ValueError(f"need at least one trial, got {trials}")
    sizes = [
        min(BLOCK_SIZE, trials - start) for start in range(0, trials, BLOCK_SIZE)
    ]
    args = [
        (spec, generations, size, seed, block) for block, size in enumerate(sizes)
    ]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            extinct: List[int] = list(pool.map(_extinct_in_block, *zip(*args)))
    else:
        extinct = [
            _extinct_in_block(*a)
            for a in tqdm.tqdm(args, desc="branching", disable=not progress)
        ]
    estimate = sum(extinct) / trials
    return BranchingEstimate(
        estimate, math.sqrt(estimate * (1 - estimate) / trials), trials, generations
    )
