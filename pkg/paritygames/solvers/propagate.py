import logging
from collections import deque
from dataclasses import dataclass
from typing import List, Optional, Tuple

from paritygames.game.parity_game import Adjacency, ParityGame, transpose
from paritygames.solvers.solution import UNDECIDED, PartialSolution

logger = logging.getLogger(__name__)


def _decide(
    game: ParityGame, value: List[int], v: int
) -> Tuple[int, Optional[int]]:
    """
    Backwards induction step at an undecided node ``v``: the owner wins if a
    successor is already won by the owner, loses if every successor is won
    by the opponent, and otherwise ``v`` stays undecided.
    """
    owner = int(game.owner[v])
    losing = True
    for w in game.successors[v]:
        if owner * value[w] == 1:
            return owner, w
        if owner * value[w] != -1:
            losing = False
    if losing:
        return -owner, None
    return UNDECIDED, None


@dataclass(frozen=True, eq=True)
class PropagationTrace:
    """
    Outcome of :func:`propagate_round_robin`. ``decided_per_pass[k]`` is the
    number of decided nodes after pass ``k + 1``.
    """

    solution: PartialSolution
    passes: int
    decided_per_pass: Tuple[int, ...]


def propagate_round_robin(game: ParityGame, seeds: PartialSolution) -> PropagationTrace:
    """
    Reference backwards induction: sweep over all nodes in id order, at most
    ``|V|`` times, stopping early once a full pass changes nothing. Decided
    nodes are never revisited, so the decided set only grows.
    """
    value = list(seeds.value)
    witness = list(seeds.witness)
    decided = [sum(1 for x in value if x != UNDECIDED)]
    passes = 0
    for _ in range(game.node_count):
        passes += 1
        changed = False
        for v in game.nodes():
            if value[v] != UNDECIDED:
                continue
            value[v], witness[v] = _decide(game, value, v)
            changed = changed or value[v] != UNDECIDED
        decided.append(sum(1 for x in value if x != UNDECIDED))
        if not changed:
            break
    return PropagationTrace(
        PartialSolution(tuple(value), tuple(witness)), passes, tuple(decided[1:])
    )


def propagate(
    game: ParityGame,
    seeds: PartialSolution,
    predecessors: Optional[Adjacency] = None,
) -> PartialSolution:
    """
    Backwards induction from ``seeds`` with a worklist: a node is only
    re-examined when one of its successors becomes decided. Computes the
    same values as :func:`propagate_round_robin` in O(|V| + |E|).

    Seeds must be correct winners; they are never modified.
    """
    if predecessors is None:
        predecessors = transpose(game)
    value = list(seeds.value)
    witness = list(seeds.witness)
    # remaining[v]: successors of v not yet known to be won by v's opponent
    remaining = [len(succ) for succ in game.successors]
    for v in game.nodes():
        if value[v] == UNDECIDED and not remaining[v]:
            # the owner of a sink cannot move and loses
            value[v] = -int(game.owner[v])
    queue = deque(v for v in game.nodes() if value[v] != UNDECIDED)
    while queue:
        w = queue.popleft()
        for v in predecessors[w]:
            if value[v] != UNDECIDED:
                continue
            owner = int(game.owner[v])
            if owner * value[w] == 1:
                value[v], witness[v] = owner, w
                queue.append(v)
                continue
            remaining[v] -= 1
            if remaining[v] == 0:
                value[v] = -owner
                queue.append(v)
    result = PartialSolution(tuple(value), tuple(witness))
    logger.debug(
        "propagation decided %d -> %d of %d nodes",
        seeds.decided_count,
        result.decided_count,
        game.node_count,
    )
    return result
