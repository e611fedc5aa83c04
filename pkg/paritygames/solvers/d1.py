from typing import List, Sequence

from paritygames.game.parity_game import ParityGame
from paritygames.game.player import Player, par
from paritygames.solvers.solution import Solution


class DegreeMismatchError(ValueError):
    pass


def _check_degree_one(game: ParityGame) -> None:
    bad = [v for v in game.nodes() if len(game.successors[v]) != 1]
    if bad:
        raise DegreeMismatchError(
            f"solve_d1 needs out-degree 1 everywhere, nodes {bad[:10]} differ"
        )


def _cycle_max_from(
    start: int, next_node: Sequence[int], priority: Sequence[int]
) -> int:
    position = {}
    path = []
    v = start
    while v not in position:
        position[v] = len(path)
        path.append(v)
        v = next_node[v]
    return max(priority[u] for u in path[position[v] :])


def solve_d1(game: ParityGame) -> Solution:
    """
    Solve a game where every node has exactly one successor. The only play
    from ``v`` is a path followed by a cycle; the winner is the parity of the
    largest priority on the cycle. Walks from every node, O(|V|^2).
    """
    _check_degree_one(game)
    next_node = [succ[0] for succ in game.successors]
    winner = tuple(
        par(_cycle_max_from(v, next_node, game.priority)) for v in game.nodes()
    )
    return _with_forced_moves(game, winner)


def cycle_winners(next_node: Sequence[int], priority: Sequence[int]) -> List[Player]:
    """
    Winner of the unique play from every node of a functional graph, in
    O(|V|): each node is walked once, and nodes on a discovered cycle or on a
    path into an already resolved node inherit its result.
    """
    n = len(next_node)
    result: List[Player] = [None] * n
    # 0 unvisited, 1 on the current walk, 2 resolved
    state = [0] * n
    for start in range(n):
        if state[start]:
            continue
        path = []
        v = start
        while state[v] == 0:
            state[v] = 1
            path.append(v)
            v = next_node[v]
        if state[v] == 1:
            cycle = path[path.index(v) :]
            winner = par(max(priority[u] for u in cycle))
        else:
            winner = result[v]
        for u in path:
            result[u] = winner
            state[u] = 2
    return result


def solve_d1_memoized(game: ParityGame) -> Solution:
    _check_degree_one(game)
    next_node = [succ[0] for succ in game.successors]
    return _with_forced_moves(game, tuple(cycle_winners(next_node, game.priority)))


def _with_forced_moves(game: ParityGame, winner) -> Solution:
    return Solution(
        winner,
        tuple(
            game.successors[v][0] if game.owner[v] is winner[v] else None
            for v in game.nodes()
        ),
    )
