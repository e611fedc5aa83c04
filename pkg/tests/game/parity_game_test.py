import unittest

import paritygames as pg


def small_game():
    return pg.ParityGame.create([[1, 2], [0], [2]], [0, 1, 0], [2, 1, 0])


class TestParityGame(unittest.TestCase):
    def test_create(self):
        game = small_game()
        self.assertEqual(game.node_count, 3)
        self.assertEqual(game.edge_count, 4)
        self.assertEqual(game.max_priority, 2)
        self.assertEqual(game.owner, (pg.Player.EVEN, pg.Player.ODD, pg.Player.EVEN))
        self.assertEqual(list(game.edges()), [(0, 1), (0, 2), (1, 0), (2, 2)])
        self.assertEqual(game.out_degrees(), [2, 1, 1])
        self.assertEqual(game.nodes_owned_by(pg.Player.EVEN), [0, 2])

    def test_hashable(self):
        self.assertEqual(hash(small_game()), hash(small_game()))
        self.assertEqual(small_game(), small_game())

    def test_transpose(self):
        self.assertEqual(pg.transpose(small_game()), ((1,), (0,), (0, 2)))

    def test_transpose_twice(self):
        game = pg.example_game()
        twice = pg.transpose_adjacency(pg.transpose(game))
        self.assertEqual(
            [sorted(succ) for succ in twice],
            [sorted(succ) for succ in game.successors],
        )

    def test_regular(self):
        self.assertFalse(small_game().is_regular(1))
        self.assertFalse(pg.example_game().is_regular(1))
        game = pg.ParityGame.create([[1], [0]], [0, 0], [0, 0])
        self.assertTrue(game.is_regular(1))


class TestValidate(unittest.TestCase):
    def kinds(self, game, degree=None):
        return [v.kind for v in pg.validate(game, degree)]

    def test_valid(self):
        self.assertEqual(pg.validate(pg.example_game()), [])
        pg.assert_valid(pg.example_game())

    def test_sink(self):
        game = pg.ParityGame.create([[1], []], [0, 1], [0, 1])
        self.assertEqual(self.kinds(game), ["sink node"])
        with self.assertRaises(pg.InvalidGameError) as context:
            pg.assert_valid(game)
        self.assertEqual(context.exception.violations[0].node, 1)

    def test_out_of_range(self):
        game = pg.ParityGame.create([[1], [2]], [0, 1], [0, 1])
        self.assertEqual(self.kinds(game), ["out of range"])

    def test_duplicate(self):
        game = pg.ParityGame.create([[1, 1], [0]], [0, 1], [0, 1])
        self.assertEqual(self.kinds(game), ["duplicate successor"])

    def test_negative_priority(self):
        game = pg.ParityGame.create([[1], [0]], [0, 1], [-1, 1])
        self.assertEqual(self.kinds(game), ["priority"])

    def test_shape(self):
        game = pg.ParityGame(((1,), (0,)), (pg.Player.ODD,), (0, 1))
        self.assertEqual(self.kinds(game), ["shape"])

    def test_empty(self):
        self.assertEqual(self.kinds(pg.ParityGame((), (), ())), ["empty"])

    def test_irregular(self):
        game = pg.ParityGame.create([[1, 2], [0], [0]], [0, 1, 1], [0, 1, 2])
        self.assertEqual(self.kinds(game, degree=2), ["irregular", "irregular"])
        self.assertEqual(self.kinds(game), [])
