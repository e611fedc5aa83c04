import logging

from paritygames.game.parity_game import ParityGame, transpose
from paritygames.solvers.propagate import propagate, propagate_round_robin
from paritygames.solvers.self_winning import SelfWinningReport, find_self_winning
from paritygames.solvers.solution import UNDECIDED, PartialSolution

logger = logging.getLogger(__name__)


def seeds_from_report(report: SelfWinningReport) -> PartialSolution:
    """
    Self-winning nodes are won by their owner, everything else is undecided.
    """
    return PartialSolution(
        tuple(
            UNDECIDED if winner is None else int(winner)
            for winner in report.winner_if_self_winning
        ),
        report.cycle_successor,
    )


def swcp_solve(game: ParityGame, round_robin: bool = False) -> PartialSolution:
    """
    Self-winning cycles propagation: find all self-winning nodes, then
    decide as many other nodes as possible by backwards induction. Every
    decided value is the true winner; nodes may remain undecided.

    Runs in O(|V|^2 + |V||E|).

    :param round_robin: Use the |V|-pass reference propagation instead of
        the worklist one. Both give the same values.
    """
    predecessors = transpose(game)
    report = find_self_winning(game, predecessors)
    seeds = seeds_from_report(report)
    if round_robin:
        result = propagate_round_robin(game, seeds).solution
    else:
        result = propagate(game, seeds, predecessors)
    logger.debug(
        "swcp: %d seeds, %d/%d decided",
        seeds.decided_count,
        result.decided_count,
        game.node_count,
    )
    return result
