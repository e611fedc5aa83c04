import itertools
from typing import List, Sequence

from paritygames.game.parity_game import ParityGame
from paritygames.game.player import Player, par
from paritygames.solvers.d1 import cycle_winners
from paritygames.solvers.solution import UNDECIDED, PartialSolution, Solution


def play_winner(game: ParityGame, choice: Sequence[int], start: int) -> Player:
    """
    Winner of the play from ``start`` when every node ``v`` moves to
    ``choice[v]``. The play is a path into a cycle; the largest priority on
    the cycle decides.
    """
    seen = {}
    v = start
    while v not in seen:
        seen[v] = len(seen)
        v = choice[v]
    first = seen[v]
    return par(max(game.priority[u] for u, k in seen.items() if k >= first))


def strategy_violations(game: ParityGame, solution: Solution) -> List[int]:
    """
    Nodes breaking the closure of the winning regions: a node whose owner
    wins must have a strategy move that is an edge staying in the region;
    a node whose owner loses must have every successor in the region.
    """
    bad = []
    for v in game.nodes():
        region = solution.winning_region(solution.winner[v])
        if game.owner[v] is solution.winner[v]:
            move = solution.strategy[v]
            ok = move in game.successors[v] and move in region
        else:
            ok = all(w in region for w in game.successors[v])
        if not ok:
            bad.append(v)
    return bad


def witness_closure_violations(game: ParityGame, partial: PartialSolution) -> List[int]:
    """
    Decided nodes whose value is not backed up by their successors: owners
    winning a node need a witness decided the same way, owners losing it
    need every successor decided against them.
    """
    bad = []
    for v in partial.decided_nodes():
        value = partial.value[v]
        if int(game.owner[v]) == value:
            move = partial.witness[v]
            ok = move in game.successors[v] and partial.value[move] == value
        else:
            ok = all(partial.value[w] == value for w in game.successors[v])
        if not ok:
            bad.append(v)
    return bad


def beaten_strategy_nodes(game: ParityGame, solution: Solution) -> List[int]:
    """
    Nodes from which the winner's strategy loses against some memoryless
    strategy of the opponent. Exhaustive over the opponent's strategies, so
    only for small games; an empty result certifies the strategies.
    """
    beaten = set()
    for player in Player:
        region = solution.winning_region(player)
        if not region:
            continue
        base = [
            solution.strategy[v]
            if game.owner[v] is player and v in region
            else game.successors[v][0]
            for v in game.nodes()
        ]
        opponent_nodes = game.nodes_owned_by(player.opponent)
        for counter in itertools.product(*(game.successors[v] for v in opponent_nodes)):
            choice = list(base)
            for v, w in zip(opponent_nodes, counter):
                choice[v] = w
            winners = cycle_winners(choice, game.priority)
            beaten.update(v for v in region if winners[v] is not player)
    return sorted(beaten)


def disagreements(reference: Solution, partial: PartialSolution) -> List[int]:
    """
    Decided nodes of ``partial`` whose value differs from ``reference``.
    """
    return [
        v
        for v, value in enumerate(partial.value)
        if value != UNDECIDED and value != int(reference.winner[v])
    ]
