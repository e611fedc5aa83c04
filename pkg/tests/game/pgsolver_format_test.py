import os
import tempfile
import time
import unittest

from parameterized import parameterized

import paritygames as pg

from ..utils import random_games

EXAMPLE_TEXT = """parity 8;
0 0 1 1,4;
1 2 1 3,7;
2 1 1 4,8;
3 3 1 2;
4 2 0 5;
5 1 0 1,6;
6 0 0 4;
7 3 0 0,6;
8 2 1 3;
"""


class TestRender(unittest.TestCase):
    def test_example_game(self):
        self.assertEqual(pg.render_pgsolver(pg.example_game()), EXAMPLE_TEXT)

    def test_sorted_successors(self):
        game = pg.ParityGame.create([[1, 0], [0]], [0, 1], [3, 4])
        self.assertEqual(pg.render_pgsolver(game), "parity 1;\n0 3 0 0,1;\n1 4 1 0;\n")


class TestParse(unittest.TestCase):
    def test_example_game(self):
        self.assertEqual(pg.parse_pgsolver(EXAMPLE_TEXT), pg.example_game())

    def test_permissive(self):
        text = """
            parity 2;  start 0;
            2 4 1 0 "last";
            0   1 0 1 , 2 ;
            1 0 1 2 "with \\"quotes\\"";
        """
        game = pg.parse_pgsolver(text)
        self.assertEqual(game.successors, ((1, 2), (2,), (0,)))
        self.assertEqual(game.priority, (1, 0, 4))
        self.assertEqual(game.owner, (pg.Player.EVEN, pg.Player.ODD, pg.Player.ODD))

    def assertFormatError(self, text, line=None):
        with self.assertRaises(pg.GameFormatError) as context:
            pg.parse_pgsolver(text)
        self.assertEqual(context.exception.line, line)

    def test_missing_header(self):
        self.assertFormatError("0 0 0 0;\n", 1)

    def test_bad_statement(self):
        self.assertFormatError("parity 1;\n0 0 0 1;\n1 0 x 0;\n", 3)

    def test_bad_owner(self):
        self.assertFormatError("parity 0;\n0 0 2 0;\n", 2)

    def test_duplicate_node(self):
        self.assertFormatError("parity 1;\n0 0 0 1;\n0 0 0 1;\n", 3)

    def test_missing_node(self):
        self.assertFormatError("parity 2;\n0 0 0 1;\n1 0 0 0;\n")

    def test_node_beyond_header(self):
        self.assertFormatError("parity 0;\n0 0 0 0;\n1 0 0 0;\n", 3)

    def test_line_after_many_statements(self):
        body = "".join(f"{v} 0 0 {(v + 1) % 50};\n" for v in range(49))
        text = "parity 49;\nstart 0;\n\n" + body + "49 0 7 0;\n"
        self.assertFormatError(text, 53)


class TestRoundTrip(unittest.TestCase):
    @parameterized.expand([(seed,) for seed in range(0, 100, 10)])
    def test_generated(self, seed):
        for game in random_games(10, 30, 3, priority_count=6, seed=seed):
            text = pg.render_pgsolver(game)
            self.assertEqual(pg.parse_pgsolver(text), game)
            self.assertEqual(pg.render_pgsolver(pg.parse_pgsolver(text)), text)

    def test_file(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "game.pg")
            pg.write_game(pg.example_game(), path)
            with open(path, "rb") as f:
                self.assertNotIn(b"\r", f.read())
            self.assertEqual(pg.read_game(path), pg.example_game())

    def test_large_game_parses_quickly(self):
        game = pg.generate(pg.GenConfig.create(10_000, 8, seed=5))
        text = pg.render_pgsolver(game)
        start = time.perf_counter()
        parsed = pg.parse_pgsolver(text)
        self.assertLess(time.perf_counter() - start, 1.5)
        self.assertEqual(parsed, game)
