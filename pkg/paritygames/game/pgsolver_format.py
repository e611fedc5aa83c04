"""
Reading and writing games in the PGSolver text format::

    parity <max_node_id>;
    <id> <priority> <owner> <succ0>,<succ1>,... ["name"];

Owners are 0 (Even) and 1 (Odd). The writer is canonical (successors in
ascending order, LF line endings, no names); the reader is permissive about
whitespace, node order, quoted names and an optional ``start <id>;``.
"""

import re
from typing import Dict, List, Tuple

from paritygames.game.parity_game import ParityGame


class GameFormatError(ValueError):
    def __init__(self, message: str, line: int = None):
        self.line = line
        where = "" if line is None else f"line {line}: "
        super().__init__(where + message)


_HEADER = re.compile(r"parity\s+(\d+)\s*;")
_START = re.compile(r"start\s+(\d+)\s*;")
_NODE = re.compile(
    r"(\d+)\s+(\d+)\s+(\d+)\s+(\d+(?:\s*,\s*\d+)*)"
    r'(?:\s+"(?:[^"\\]|\\.)*")?\s*;'
)
_SPACE = re.compile(r"\s+")


def render_pgsolver(game: ParityGame) -> str:
    lines = [f"parity {game.node_count - 1};"]
    for v in game.nodes():
        succ = ",".join(str(w) for w in sorted(game.successors[v]))
        lines.append(f"{v} {game.priority[v]} {game.owner[v].code} {succ};")
    return "\n".join(lines) + "\n"


def parse_pgsolver(text: str) -> ParityGame:
    """
    Parse a PGSolver game. Node ids must cover ``0 .. max_node_id`` exactly
    once each.

    Raises:
        GameFormatError: on malformed statements, unknown owners, missing or
            repeated node ids.
    """
    position = _skip_space(text, 0)
    header = _HEADER.match(text, position)
    if header is None:
        raise GameFormatError("expected 'parity <max_node_id>;' header", 1)
    max_id = int(header.group(1))
    position = header.end()

    nodes: Dict[int, Tuple[int, int, List[int]]] = {}
    line, counted = 1, 0
    while True:
        position = _skip_space(text, position)
        if position >= len(text):
            break
        line += text.count("\n", counted, position)
        counted = position
        start = _START.match(text, position)
        if start is not None:
            position = start.end()
            continue
        node = _NODE.match(text, position)
        if node is None:
            snippet = text[position : position + 30].splitlines()[0]
            raise GameFormatError(f"cannot parse node statement {snippet!r}", line)
        ident, priority, owner = (int(node.group(i)) for i in (1, 2, 3))
        if owner not in (0, 1):
            raise GameFormatError(f"owner of node {ident} must be 0 or 1", line)
        if ident in nodes:
            raise GameFormatError(f"node {ident} declared twice", line)
        if ident > max_id:
            raise GameFormatError(f"node {ident} exceeds header max {max_id}", line)
        succ = [int(x) for x in node.group(4).split(",")]
        nodes[ident] = (priority, owner, succ)
        position = node.end()

    missing = [v for v in range(max_id + 1) if v not in nodes]
    if missing:
        raise GameFormatError(f"missing node(s) {missing[:10]}")
    return ParityGame.create(
        [nodes[v][2] for v in range(max_id + 1)],
        [nodes[v][1] for v in range(max_id + 1)],
        [nodes[v][0] for v in range(max_id + 1)],
    )


def _skip_space(text: str, position: int) -> int:
    space = _SPACE.match(text, position)
    return position if space is None else space.end()


def write_game(game: ParityGame, path: str) -> None:
    with open(path, "w", newline="\n") as f:
        f.write(render_pgsolver(game))


def read_game(path: str) -> ParityGame:
    with open(path) as f:
        return parse_pgsolver(f.read())
