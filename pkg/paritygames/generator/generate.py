import logging
from typing import List

import numpy as np

from paritygames.game.parity_game import ParityGame
from paritygames.game.player import Player
from paritygames.generator.config import GenConfig
from paritygames.utils.seeding import derived_rng

logger = logging.getLogger(__name__)


def node_rng(seed: int, node: int) -> np.random.Generator:
    """
    The random stream of one node. Each node's owner, priority and successor
    set are drawn from its own stream, so generation could be split across
    workers without changing the output.
    """
    return derived_rng(seed, node)


def sample_node(config: GenConfig, node: int, degree: int):
    """
    Draw ``(owner, priority, successors)`` for one node. Successors are a
    uniform ``degree``-subset of the candidate nodes, sorted ascending.
    """
    rng = node_rng(config.seed, node)
    owner = Player.ODD if rng.integers(2) else Player.EVEN
    priority = int(rng.integers(config.priority_count))
    if config.allow_self_loops:
        succ = rng.choice(config.node_count, size=degree, replace=False)
    else:
        succ = rng.choice(config.node_count - 1, size=degree, replace=False)
        # shift ids at or above the node itself to skip it
        succ = succ + (succ >= node)
    return owner, priority, sorted(int(w) for w in succ)


def generate(config: GenConfig) -> ParityGame:
    """
    Sample a random parity game. The result is a deterministic function of
    ``config`` (seed included).

    Raises:
        InvalidConfigError: if the configuration cannot be sampled.
    """
    config.check()
    degree = config.effective_degree
    logger.debug(
        "generating n=%d d=%d c=%d seed=%d",
        config.node_count,
        degree,
        config.priority_count,
        config.seed,
    )
    owners, priorities, successors = [], [], []
    for v in range(config.node_count):
        owner, priority, succ = sample_node(config, v, degree)
        owners.append(owner)
        priorities.append(priority)
        successors.append(tuple(succ))
    return ParityGame(tuple(successors), tuple(owners), tuple(priorities))


def generate_many(config: GenConfig, count: int) -> List[ParityGame]:
    """
    ``count`` games for the consecutive seeds ``config.seed, config.seed + 1, ...``.
    """
    return [generate(config.with_seed(config.seed + i)) for i in range(count)]
