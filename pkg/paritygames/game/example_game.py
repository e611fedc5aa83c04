from paritygames.game.parity_game import ParityGame
from paritygames.game.player import Player

O, E = Player.ODD, Player.EVEN

# label: (owner, priority, successor labels)
_NINE_NODE_GAME = {
    1: (O, 0, [2, 5]),
    2: (O, 2, [4, 8]),
    3: (O, 1, [5, 9]),
    4: (O, 3, [3]),
    5: (E, 2, [6]),
    6: (E, 1, [2, 7]),
    7: (E, 0, [5]),
    8: (E, 3, [1, 7]),
    9: (O, 2, [4]),
}


def example_game() -> ParityGame:
    """
    A nine-node game with one self-winning cycle per player: Odd owns
    ``4 -> 3 -> 9 -> 4`` (maximum priority 3) and Even owns
    ``5 -> 6 -> 7 -> 5`` (maximum priority 2). Nodes 1 and 2 lead into the
    Odd cycle and node 8 into the Even one, so SWCP solves the whole game:
    Odd wins from labels 1, 2, 3, 4, 9 and Even from 5, 6, 7, 8.

    Label ``k`` is stored as node id ``k - 1``.
    """
    labels = sorted(_NINE_NODE_GAME)
    return ParityGame.create(
        [[w - 1 for w in _NINE_NODE_GAME[k][2]] for k in labels],
        [_NINE_NODE_GAME[k][0] for k in labels],
        [_NINE_NODE_GAME[k][1] for k in labels],
    )
