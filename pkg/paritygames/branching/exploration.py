import warnings
from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional

from paritygames.game.parity_game import ParityGame
from paritygames.game.player import par


@dataclass(frozen=True, eq=True)
class ExplorationResult:
    explored: int
    active_at_stop: int
    first_cycle_step: Optional[int]


def in_winning_parity_subgraph(game: ParityGame, v: int) -> bool:
    """
    Whether ``v``'s priority has its owner's winning parity. Any cycle among
    such nodes of a single owner is self-winning.
    """
    return par(game.priority[v]) is game.owner[v]


def _reaches(edges: Dict[int, List[int]], source: int, target: int) -> bool:
    stack, seen = [source], {source}
    while stack:
        v = stack.pop()
        if v == target:
            return True
        for w in edges.get(v, ()):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return False


def explore_self_winning_subgraph(
    game: ParityGame, start: Iterable[int], step_budget: int
) -> ExplorationResult:
    """
    Run the active / explored / unseen exploration process from ``start``
    on the subgraph of same-owner edges between nodes of winning parity.

    At each step the oldest active node (FIFO) becomes explored and its
    unseen successors in the subgraph become active. The run stops at the
    first step whose node has an edge closing a directed cycle among the
    explored and active nodes, when no node is active, or after
    ``step_budget`` steps.

    Start nodes should lie in the subgraph; any that do not are still
    explored, with a warning. Each repeated successor costs a search over
    the explored edges, so a run is quadratic in its step count.
    """
    active = deque(dict.fromkeys(start))
    if not active:
        raise ValueError("exploration needs a nonempty start set")
    outside = [v for v in active if not in_winning_parity_subgraph(game, v)]
    if outside:
        warnings.warn(
            f"start nodes {outside[:10]} are outside the winning-parity subgraph"
        )
    seen = set(active)
    explored_edges: Dict[int, List[int]] = {}
    steps = 0
    while active and steps < step_budget:
        v = active.popleft()
        steps += 1
        successors = [
            w
            for w in game.successors[v]
            if game.owner[w] is game.owner[v] and in_winning_parity_subgraph(game, w)
        ]
        explored_edges[v] = successors
        closes_cycle = False
        for w in successors:
            if w not in seen:
                seen.add(w)
                active.append(w)
            elif _reaches(explored_edges, w, v):
                closes_cycle = True
        if closes_cycle:
            return ExplorationResult(steps, len(active), steps)
    return ExplorationResult(steps, len(active), None)
