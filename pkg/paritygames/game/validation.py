from dataclasses import dataclass
from typing import List, Optional

from paritygames.game.parity_game import ParityGame
from paritygames.game.player import Player


@dataclass(frozen=True, eq=True)
class Violation:
    """
    A single breach of the game invariants. ``node`` is None for violations
    that concern the game as a whole.
    """

    kind: str
    node: Optional[int]
    message: str

    def __str__(self):
        where = "game" if self.node is None else f"node {self.node}"
        return f"{self.kind} at {where}: {self.message}"


class InvalidGameError(ValueError):
    def __init__(self, violations: List[Violation]):
        self.violations = violations
        super().__init__(
            f"invalid parity game ({len(violations)} violation(s)), first: "
            f"{violations[0]}"
        )


def validate(game: ParityGame, degree: Optional[int] = None) -> List[Violation]:
    """
    Check every structural invariant of ``game`` and return the violations,
    in node order. An empty list means the game is valid.

    :param game: The game to check.
    :param degree: If given, additionally require every node to have exactly
        this out-degree.
    """
    violations = []
    n = game.node_count
    if n == 0:
        violations.append(Violation("empty", None, "game has no nodes"))
    if len(game.owner) != n or len(game.priority) != n:
        violations.append(
            Violation(
                "shape",
                None,
                f"{n} adjacency lists but {len(game.owner)} owners"
                f" and {len(game.priority)} priorities",
            )
        )
        return violations
    for v in range(n):
        succ = game.successors[v]
        if not isinstance(game.owner[v], Player):
            violations.append(
                Violation("owner", v, f"owner {game.owner[v]!r} is not a player")
            )
        if game.priority[v] < 0:
            violations.append(
                Violation("priority", v, f"negative priority {game.priority[v]}")
            )
        if not succ:
            violations.append(Violation("sink node", v, "no successors"))
        bad = [w for w in succ if not 0 <= w < n]
        if bad:
            violations.append(
                Violation("out of range", v, f"successor(s) {bad} not in [0, {n})")
            )
        if len(set(succ)) != len(succ):
            violations.append(
                Violation("duplicate successor", v, f"successors {list(succ)}")
            )
        if degree is not None and succ and len(succ) != degree:
            violations.append(
                Violation("irregular", v, f"out-degree {len(succ)} != {degree}")
            )
    return violations


def assert_valid(game: ParityGame, degree: Optional[int] = None) -> None:
    violations = validate(game, degree)
    if violations:
        raise InvalidGameError(violations)
