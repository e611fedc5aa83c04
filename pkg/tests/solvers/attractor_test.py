import unittest

import paritygames as pg


def diamond():
    # 0 (Odd) -> 1, 2;  1 (Even) -> 3, 0;  2 (Even) -> 3;  3 (Odd) -> 3
    return pg.ParityGame.create([[1, 2], [3, 0], [3], [3]], [1, 0, 0, 1], [0, 0, 0, 1])


class TestAttractor(unittest.TestCase):
    def test_odd(self):
        region, strategy = pg.attractor_with_strategy(diamond(), pg.Player.ODD, [3])
        self.assertEqual(region, {0, 1, 2, 3})
        self.assertEqual(strategy, {0: 2})

    def test_even(self):
        # once 1 and 2 are pulled in, Odd at 0 has nowhere else to go
        region = pg.attractor(diamond(), pg.Player.EVEN, [3])
        self.assertEqual(region, {0, 1, 2, 3})

    def test_within(self):
        region = pg.attractor(diamond(), pg.Player.ODD, [3], within={1, 3})
        self.assertEqual(region, {1, 3})

    def test_target_outside_subgame(self):
        self.assertEqual(pg.attractor(diamond(), pg.Player.ODD, [3], within={0}), set())


class TestDfs(unittest.TestCase):
    def test_directions(self):
        game = diamond()
        everything = lambda v: True
        self.assertEqual(pg.dfs_reachable(game, everything, 2), {2, 3})
        self.assertEqual(
            pg.dfs_reachable(game, everything, 2, pg.Direction.BACKWARD), {0, 1, 2}
        )

    def test_filter(self):
        game = diamond()
        odd = lambda v: game.owner[v] is pg.Player.ODD
        self.assertEqual(pg.dfs_reachable(game, odd, 0), {0})
        self.assertEqual(
            pg.dfs_reachable(
                game, odd, 3, pg.Direction.BACKWARD, predecessors=pg.transpose(game)
            ),
            {3},
        )
