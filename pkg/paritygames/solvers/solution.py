from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, List, Optional, Tuple, Union

from paritygames.game.pgsolver_format import GameFormatError
from paritygames.game.player import Player

UNDECIDED = 0


@dataclass(frozen=True, eq=True)
class Solution:
    """
    An exact solution: ``winner[v]`` wins from ``v``; ``strategy[v]`` is a
    winning move for nodes whose owner is their winner, None elsewhere.
    """

    winner: Tuple[Player, ...]
    strategy: Tuple[Optional[int], ...]

    @property
    def node_count(self) -> int:
        return len(self.winner)

    def winning_region(self, player: Player) -> FrozenSet[int]:
        return frozenset(v for v, w in enumerate(self.winner) if w is player)

    def as_partial(self) -> "PartialSolution":
        return PartialSolution(tuple(int(w) for w in self.winner), self.strategy)


@dataclass(frozen=True, eq=True)
class PartialSolution:
    """
    Game values as computed by backwards induction: ``value[v]`` is -1
    (Even wins), +1 (Odd wins) or 0 (undecided). ``witness[v]`` optionally
    records a successor through which the owner of ``v`` wins.
    """

    value: Tuple[int, ...]
    witness: Tuple[Optional[int], ...]

    @classmethod
    def undecided(cls, node_count: int) -> "PartialSolution":
        return cls((UNDECIDED,) * node_count, (None,) * node_count)

    @property
    def node_count(self) -> int:
        return len(self.value)

    @cached_property
    def decided_count(self) -> int:
        return sum(1 for x in self.value if x != UNDECIDED)

    @property
    def decided_fraction(self) -> float:
        return self.decided_count / self.node_count if self.node_count else 1.0

    @property
    def fully_solved(self) -> bool:
        return self.decided_count == self.node_count

    def winner(self, v: int) -> Optional[Player]:
        return None if self.value[v] == UNDECIDED else Player(self.value[v])

    def decided_nodes(self) -> List[int]:
        return [v for v, x in enumerate(self.value) if x != UNDECIDED]

    def to_solution(self) -> Solution:
        if not self.fully_solved:
            raise ValueError(
                f"only {self.decided_count}/{self.node_count} nodes are decided"
            )
        return Solution(tuple(Player(x) for x in self.value), self.witness)


AnySolution = Union[Solution, PartialSolution]

_WINNER_CODES = {-1: "0", 1: "1", UNDECIDED: "?"}


def render_solution(solution: AnySolution) -> str:
    """
    One LF-terminated line ``<id> <0|1|?> [witness]`` per node.
    """
    if isinstance(solution, Solution):
        solution = solution.as_partial()
    lines = []
    for v, (x, w) in enumerate(zip(solution.value, solution.witness)):
        fields = [str(v), _WINNER_CODES[x]] + ([] if w is None else [str(w)])
        lines.append(" ".join(fields) + "\n")
    return "".join(lines)


def parse_solution(text: str) -> PartialSolution:
    entries = {}
    for number, line in enumerate(text.splitlines(), 1):
        fields = line.split()
        if not fields:
            continue
        if len(fields) not in (2, 3) or fields[1] not in ("0", "1", "?"):
            raise GameFormatError(f"malformed solution line {line!r}", number)
        try:
            v = int(fields[0])
            witness = int(fields[2]) if len(fields) == 3 else None
        except ValueError:
            raise GameFormatError(f"malformed solution line {line!r}", number) from None
        if v in entries:
            raise GameFormatError(f"node {v} listed twice", number)
        value = UNDECIDED if fields[1] == "?" else int(Player.from_code(int(fields[1])))
        entries[v] = (value, witness)
    if sorted(entries) != list(range(len(entries))):
        raise GameFormatError("solution node ids are not 0 .. n-1")
    return PartialSolution(
        tuple(entries[v][0] for v in range(len(entries))),
        tuple(entries[v][1] for v in range(len(entries))),
    )


def write_solution(solution: AnySolution, path: str) -> None:
    with open(path, "w", newline="\n") as f:
        f.write(render_solution(solution))


def read_solution(path: str) -> PartialSolution:
    with open(path) as f:
        return parse_solution(f.read())
