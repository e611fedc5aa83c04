from .bipartite import BipartiteConversion, to_bipartite, to_bipartite_with_origin
from .example_game import example_game
from .parity_game import Adjacency, ParityGame, transpose, transpose_adjacency
from .pgsolver_format import (
    GameFormatError,
    parse_pgsolver,
    read_game,
    render_pgsolver,
    write_game,
)
from .player import Player, par
from .validation import InvalidGameError, Violation, assert_valid, validate
