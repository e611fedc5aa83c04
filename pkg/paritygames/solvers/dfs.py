from enum import Enum
from typing import Callable, Optional, Sequence, Set

from paritygames.game.parity_game import Adjacency, ParityGame, transpose


class Direction(Enum):
    FORWARD = "forward"
    BACKWARD = "backward"


def dfs_reachable(
    game: ParityGame,
    node_filter: Callable[[int], bool],
    start: int,
    direction: Direction = Direction.FORWARD,
    predecessors: Optional[Adjacency] = None,
) -> Set[int]:
    """
    Performs an iterative depth-first search from ``start`` inside the nodes
    accepted by ``node_filter``, returning every node visited (``start``
    included). Runs in O(|V| + |E|).

    :param game: Game whose edges are followed.
    :param node_filter: Predicate restricting the search; must accept ``start``.
    :param start: Node to search from.
    :param direction: FORWARD follows edges, BACKWARD follows them reversed.
    :param predecessors: Precomputed ``transpose(game)``, to avoid rebuilding
        it on every backward search.
    """
    assert node_filter(start), f"start node {start} is filtered out"
    if direction is Direction.FORWARD:
        adjacency: Sequence[Sequence[int]] = game.successors
    else:
        adjacency = predecessors if predecessors is not None else transpose(game)
    visited = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adjacency[v]:
            if w not in visited and node_filter(w):
                visited.add(w)
                stack.append(w)
    return visited
