from enum import Enum
from typing import Optional, Tuple

from paritygames.game.parity_game import Adjacency, ParityGame, transpose
from paritygames.solvers.dfs import Direction, dfs_reachable
from paritygames.solvers.self_winning import SelfWinningReport, find_self_winning
from paritygames.solvers.solution import Solution


class SelfReachLabel(Enum):
    OWNER_CERTIFIED = "owner_certified"
    UNKNOWN = "unknown"


def self_reach_labels(
    game: ParityGame,
    report: Optional[SelfWinningReport] = None,
    predecessors: Optional[Adjacency] = None,
) -> Tuple[SelfReachLabel, ...]:
    """
    Certify nodes whose owner can walk, through nodes of its own, to one of
    its self-winning nodes. Such nodes are won by their owner; for the rest
    nothing is claimed.
    """
    if predecessors is None:
        predecessors = transpose(game)
    if report is None:
        report = find_self_winning(game, predecessors)
    certified = set()
    for source in report.nodes():
        if source in certified:
            continue
        player = game.owner[source]
        certified |= dfs_reachable(
            game,
            lambda v, player=player: game.owner[v] is player and v not in certified,
            source,
            Direction.BACKWARD,
            predecessors=predecessors,
        )
    return tuple(
        SelfReachLabel.OWNER_CERTIFIED if v in certified else SelfReachLabel.UNKNOWN
        for v in game.nodes()
    )


def certified_fraction(labels: Tuple[SelfReachLabel, ...]) -> float:
    certified = sum(label is SelfReachLabel.OWNER_CERTIFIED for label in labels)
    return certified / len(labels)


def owner_wins_solution(game: ParityGame) -> Solution:
    """
    The O(|V|) rule for dense games: declare the owner of every node its
    winner. Exact only with high probability on large non-sparse games.
    """
    return Solution(
        game.owner,
        tuple(succ[0] if succ else None for succ in game.successors),
    )
