from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, List, Sequence, Tuple, Union

from paritygames.game.player import Player

Adjacency = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True, eq=True)
class ParityGame:
    """
    A parity game on the dense node ids ``0 .. node_count - 1``.

    ``successors[v]`` is the ordered adjacency list of ``v``, ``owner[v]``
    the player moving the token at ``v`` and ``priority[v]`` its priority.
    Games are never mutated; use :func:`validate` to check the structural
    invariants (no sinks, ids in range, no duplicate successors).
    """

    successors: Adjacency
    owner: Tuple[Player, ...]
    priority: Tuple[int, ...]

    @classmethod
    def create(
        cls,
        successors: Sequence[Sequence[int]],
        owner: Sequence[Union[Player, int]],
        priority: Sequence[int],
    ) -> "ParityGame":
        """
        Build a game from plain sequences. Owners may be given as
        :class:`Player` values or as PGSolver codes (0 = Even, 1 = Odd).
        """
        return cls(
            tuple(tuple(int(x) for x in succ) for succ in successors),
            tuple(_as_player(o) for o in owner),
            tuple(int(p) for p in priority),
        )

    @property
    def node_count(self) -> int:
        return len(self.successors)

    @cached_property
    def edge_count(self) -> int:
        return sum(len(succ) for succ in self.successors)

    @property
    def max_priority(self) -> int:
        return max(self.priority)

    def nodes(self) -> range:
        return range(self.node_count)

    def edges(self) -> Iterator[Tuple[int, int]]:
        for v, succ in enumerate(self.successors):
            for w in succ:
                yield v, w

    def out_degrees(self) -> List[int]:
        return [len(succ) for succ in self.successors]

    def is_regular(self, degree: int) -> bool:
        return all(len(succ) == degree for succ in self.successors)

    def nodes_owned_by(self, player: Player) -> List[int]:
        return [v for v in self.nodes() if self.owner[v] is player]


def _as_player(owner: Union[Player, int]) -> Player:
    if isinstance(owner, Player):
        return owner
    return Player.from_code(owner)


def transpose_adjacency(adjacency: Sequence[Sequence[int]]) -> Adjacency:
    """
    Reverse every edge of an adjacency structure. Predecessor lists come out
    sorted by source id. Ids pointing outside the structure are ignored.
    """
    result = [[] for _ in adjacency]
    for v, succ in enumerate(adjacency):
        for w in succ:
            if 0 <= w < len(result):
                result[w].append(v)
    return tuple(tuple(pred) for pred in result)


def transpose(game: ParityGame) -> Adjacency:
    """
    Predecessor lists of ``game``: ``transpose(game)[v]`` lists every ``u``
    with an edge ``u -> v``.
    """
    return transpose_adjacency(game.successors)
