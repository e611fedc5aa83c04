from collections import deque
from typing import AbstractSet, Dict, Iterable, Optional, Set, Tuple

from paritygames.game.parity_game import Adjacency, ParityGame, transpose
from paritygames.game.player import Player


def attractor_with_strategy(
    game: ParityGame,
    player: Player,
    target: Iterable[int],
    within: Optional[AbstractSet[int]] = None,
    predecessors: Optional[Adjacency] = None,
) -> Tuple[Set[int], Dict[int, int]]:
    """
    The set of nodes from which ``player`` can force the token into
    ``target``, inside the subgame ``within`` (the whole game if None).

    Uses per-node counters of successors not yet attracted, so it runs in
    O(|V| + |E|). Also returns, for each of the player's nodes that was
    pulled in (not in ``target``), the successor that pulls it in.
    """
    if predecessors is None:
        predecessors = transpose(game)

    def inside(v):
        return within is None or v in within

    attracted = {v for v in target if inside(v)}
    strategy = {}
    remaining = {}
    queue = deque(attracted)
    while queue:
        w = queue.popleft()
        for v in predecessors[w]:
            if v in attracted or not inside(v):
                continue
            if game.owner[v] is player:
                attracted.add(v)
                strategy[v] = w
                queue.append(v)
                continue
            if v not in remaining:
                remaining[v] = sum(1 for x in game.successors[v] if inside(x))
            remaining[v] -= 1
            if remaining[v] == 0:
                attracted.add(v)
                queue.append(v)
    return attracted, strategy


def attractor(
    game: ParityGame,
    player: Player,
    target: Iterable[int],
    within: Optional[AbstractSet[int]] = None,
    predecessors: Optional[Adjacency] = None,
) -> Set[int]:
    return attractor_with_strategy(game, player, target, within, predecessors)[0]
