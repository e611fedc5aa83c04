import itertools
import math
from typing import List, Tuple

import numpy as np

from paritygames.game.parity_game import ParityGame
from paritygames.game.player import Player
from paritygames.solvers.d1 import cycle_winners
from paritygames.solvers.solution import Solution
from paritygames.solvers.zielonka import SinkNodeError

DEFAULT_STRATEGY_BOUND = 10**6


class StrategySpaceTooLargeError(ValueError):
    pass


def strategy_space_size(game: ParityGame) -> int:
    """
    Number of pairs of memoryless strategies, one per player.
    """
    return math.prod(len(succ) for succ in game.successors)


def _strategies(
    game: ParityGame, player: Player
) -> Tuple[List[int], List[Tuple[int, ...]]]:
    owned = game.nodes_owned_by(player)
    return owned, list(itertools.product(*(game.successors[v] for v in owned)))


def brute_force_solve(
    game: ParityGame, bound: int = DEFAULT_STRATEGY_BOUND
) -> Solution:
    """
    Solve ``game`` by trying every pair of memoryless strategies. Under a
    fixed pair the play from each node is rho-shaped and won by the parity of
    the largest priority on its cycle. Odd wins from ``v`` iff some Odd
    strategy wins from ``v`` against every Even strategy (and symmetrically
    for Even); memoryless determinacy makes the two regions a partition.

    Raises:
        StrategySpaceTooLargeError: if there are more than ``bound`` pairs.
    """
    if any(not succ for succ in game.successors):
        raise SinkNodeError("brute force needs every node to have a successor")
    size = strategy_space_size(game)
    if size > bound:
        raise StrategySpaceTooLargeError(
            f"{size} strategy pairs exceed the brute-force bound {bound}"
        )
    odd_nodes, odd_strategies = _strategies(game, Player.ODD)
    even_nodes, even_strategies = _strategies(game, Player.EVEN)
    n = game.node_count

    # odd_wins[i, j, v]: Odd wins from v when Odd plays strategy i and Even j
    odd_wins = np.zeros((len(odd_strategies), len(even_strategies), n), dtype=bool)
    next_node = [succ[0] if succ else v for v, succ in enumerate(game.successors)]
    for i, odd_choice in enumerate(odd_strategies):
        for v, w in zip(odd_nodes, odd_choice):
            next_node[v] = w
        for j, even_choice in enumerate(even_strategies):
            for v, w in zip(even_nodes, even_choice):
                next_node[v] = w
            odd_wins[i, j] = [
                x is Player.ODD for x in cycle_winners(next_node, game.priority)
            ]

    # guaranteed[i, v]: strategy i of Odd wins from v whatever Even does
    odd_guaranteed = odd_wins.all(axis=1)
    even_guaranteed = (~odd_wins).all(axis=0)
    odd_region = odd_guaranteed.any(axis=0)
    even_region = even_guaranteed.any(axis=0)
    assert not (odd_region & even_region).any(), "both players win somewhere"
    assert (odd_region | even_region).all(), "memoryless determinacy violated"

    winner = tuple(Player.ODD if odd_region[v] else Player.EVEN for v in range(n))
    strategy: List[int] = [None] * n
    for nodes, strategies, guaranteed, player in (
        (odd_nodes, odd_strategies, odd_guaranteed, Player.ODD),
        (even_nodes, even_strategies, even_guaranteed, Player.EVEN),
    ):
        for k, v in enumerate(nodes):
            if winner[v] is player:
                best = int(np.argmax(guaranteed[:, v]))
                strategy[v] = strategies[best][k]
    return Solution(winner, tuple(strategy))
