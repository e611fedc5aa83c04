import logging
from typing import AbstractSet, Dict, FrozenSet, Tuple

from increase_recursionlimit import increase_recursionlimit

from paritygames.game.parity_game import Adjacency, ParityGame, transpose
from paritygames.game.player import Player, par
from paritygames.game.validation import validate
from paritygames.solvers.attractor import attractor_with_strategy
from paritygames.solvers.solution import Solution

logger = logging.getLogger(__name__)

Regions = Dict[Player, FrozenSet[int]]
Strategy = Dict[int, int]


class SinkNodeError(ValueError):
    pass


def zielonka_solve(game: ParityGame) -> Solution:
    """
    Solve ``game`` exactly with Zielonka's recursive algorithm. Subgames are
    node masks over the original game, never re-indexed.

    Raises:
        SinkNodeError: if some node has no successor.
    """
    sinks = [v.node for v in validate(game) if v.kind == "sink node"]
    if sinks:
        raise SinkNodeError(
            f"Zielonka's algorithm needs every node to move, sinks: {sinks}"
        )
    predecessors = transpose(game)
    with increase_recursionlimit():
        regions, strategy = _solve(game, predecessors, frozenset(game.nodes()))
    winner = tuple(
        Player.ODD if v in regions[Player.ODD] else Player.EVEN for v in game.nodes()
    )
    return Solution(
        winner,
        tuple(
            strategy.get(v) if game.owner[v] is winner[v] else None
            for v in game.nodes()
        ),
    )


def _any_successor_in(game: ParityGame, v: int, region: AbstractSet[int]) -> int:
    return next(w for w in game.successors[v] if w in region)


def _solve(
    game: ParityGame, predecessors: Adjacency, nodes: FrozenSet[int]
) -> Tuple[Regions, Strategy]:
    """
    Winning regions and winning moves of the subgame induced by ``nodes``,
    which must be a trap for both players (every node keeps a successor).
    """
    if not nodes:
        return {Player.EVEN: frozenset(), Player.ODD: frozenset()}, {}
    top = max(game.priority[v] for v in nodes)
    player = par(top)
    opponent = player.opponent
    tops = [v for v in nodes if game.priority[v] == top]
    pulled, pull_strategy = attractor_with_strategy(
        game, player, tops, nodes, predecessors
    )
    sub_regions, sub_strategy = _solve(game, predecessors, nodes - pulled)

    if not sub_regions[opponent]:
        strategy = {v: w for v, w in sub_strategy.items() if game.owner[v] is player}
        strategy.update(pull_strategy)
        for v in tops:
            if game.owner[v] is player:
                strategy[v] = _any_successor_in(game, v, nodes)
        return {player: nodes, opponent: frozenset()}, strategy

    escaped, escape_strategy = attractor_with_strategy(
        game, opponent, sub_regions[opponent], nodes, predecessors
    )
    rest_regions, rest_strategy = _solve(game, predecessors, nodes - escaped)
    strategy = dict(rest_strategy)
    strategy.update(
        {
            v: w
            for v, w in sub_strategy.items()
            if v in sub_regions[opponent] and game.owner[v] is opponent
        }
    )
    strategy.update(escape_strategy)
    logger.debug("priority %d: opponent escapes with %d nodes", top, len(escaped))
    return {
        player: rest_regions[player],
        opponent: rest_regions[opponent] | frozenset(escaped),
    }, strategy
