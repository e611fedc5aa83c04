import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Set, Tuple

from paritygames.game.parity_game import Adjacency, ParityGame, transpose
from paritygames.game.player import Player, par
from paritygames.solvers.dfs import Direction, dfs_reachable

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=True)
class SelfWinningReport:
    """
    Nodes lying on a self-winning cycle, i.e. a cycle of nodes owned by a
    single player whose largest priority has that player's parity.

    ``cycle_successor[v]`` is, for self-winning ``v``, a successor on such a
    cycle; repeatedly following it never leaves the self-winning nodes of
    the owner and ends up circling a winning cycle.
    """

    self_winning: Tuple[bool, ...]
    winner_if_self_winning: Tuple[Optional[Player], ...]
    cycle_successor: Tuple[Optional[int], ...]

    def nodes(self) -> List[int]:
        return [v for v, marked in enumerate(self.self_winning) if marked]

    @property
    def fraction(self) -> float:
        return sum(self.self_winning) / len(self.self_winning)


def anchors(game: ParityGame) -> List[int]:
    """
    Nodes whose priority favours their owner, highest priority first.
    """
    candidates = [v for v in game.nodes() if par(game.priority[v]) is game.owner[v]]
    return sorted(candidates, key=lambda v: (-game.priority[v], v))


def cycle_through_anchor(
    game: ParityGame, anchor: int, predecessors: Adjacency
) -> Set[int]:
    """
    Nodes on a cycle through ``anchor`` that uses only nodes of the anchor's
    owner with priority at most the anchor's. Empty if there is no such cycle.
    """
    player, top = game.owner[anchor], game.priority[anchor]

    def allowed(v):
        return game.owner[v] is player and game.priority[v] <= top

    forward = dfs_reachable(game, allowed, anchor, Direction.FORWARD)
    backward = dfs_reachable(
        game, allowed, anchor, Direction.BACKWARD, predecessors=predecessors
    )
    both = forward & backward
    if len(both) == 1 and anchor not in game.successors[anchor]:
        # the anchor alone, with no self-loop, is not a cycle
        return set()
    return both


def _distances_to(anchor: int, region: Set[int], predecessors: Adjacency):
    distance = {anchor: 0}
    queue = deque([anchor])
    while queue:
        v = queue.popleft()
        for u in predecessors[v]:
            if u in region and u not in distance:
                distance[u] = distance[v] + 1
                queue.append(u)
    return distance


def _successor_towards(
    game: ParityGame, v: int, anchor: int, distance: Dict[int, int]
) -> int:
    inside = [w for w in game.successors[v] if w in distance]
    if v == anchor:
        return min(inside, key=lambda w: distance[w])
    return next(w for w in inside if distance[w] == distance[v] - 1)


def find_self_winning(
    game: ParityGame, predecessors: Optional[Adjacency] = None
) -> SelfWinningReport:
    """
    Find every self-winning node with two depth-first searches per anchor,
    in O(|V|^2 + |V||E|) time.
    """
    if predecessors is None:
        predecessors = transpose(game)
    marked: List[bool] = [False] * game.node_count
    successor: List[Optional[int]] = [None] * game.node_count
    for anchor in anchors(game):
        cycle = cycle_through_anchor(game, anchor, predecessors)
        fresh = [v for v in cycle if not marked[v]]
        if not fresh:
            continue
        distance = _distances_to(anchor, cycle, predecessors)
        for v in fresh:
            marked[v] = True
            successor[v] = _successor_towards(game, v, anchor, distance)
    logger.debug("%d of %d nodes are self-winning", sum(marked), game.node_count)
    return SelfWinningReport(
        tuple(marked),
        tuple(game.owner[v] if marked[v] else None for v in game.nodes()),
        tuple(successor),
    )
