from dataclasses import dataclass
from typing import Tuple

from paritygames.game.parity_game import ParityGame

# Priority of inserted nodes. Anything <= min(p(v), p(v')) leaves every
# cycle maximum unchanged; 0 is the smallest such value.
INTERMEDIATE_PRIORITY = 0


@dataclass(frozen=True, eq=True)
class BipartiteConversion:
    """
    Result of :func:`to_bipartite_with_origin`. Original nodes keep their ids;
    inserted node ``game.node_count - len(replaced_edges) + k`` stands for
    ``replaced_edges[k]``.
    """

    game: ParityGame
    replaced_edges: Tuple[Tuple[int, int], ...]

    @property
    def original_node_count(self) -> int:
        return self.game.node_count - len(self.replaced_edges)


def to_bipartite_with_origin(game: ParityGame) -> BipartiteConversion:
    """
    Split every edge between two nodes of the same owner with a fresh node
    owned by the opponent, so that play strictly alternates between the
    players. Winners of the original nodes are preserved.
    """
    n = game.node_count
    successors = [list(succ) for succ in game.successors]
    owner = list(game.owner)
    priority = list(game.priority)
    replaced = []
    for v in range(n):
        for position, w in enumerate(game.successors[v]):
            if game.owner[v] is not game.owner[w]:
                continue
            middle = n + len(replaced)
            replaced.append((v, w))
            successors[v][position] = middle
            successors.append([w])
            owner.append(game.owner[v].opponent)
            priority.append(INTERMEDIATE_PRIORITY)
    return BipartiteConversion(
        ParityGame.create(successors, owner, priority), tuple(replaced)
    )


def to_bipartite(game: ParityGame) -> ParityGame:
    return to_bipartite_with_origin(game).game
