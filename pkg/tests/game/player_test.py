import unittest

import paritygames as pg


class TestPlayer(unittest.TestCase):
    def test_embedding(self):
        self.assertEqual(int(pg.Player.EVEN), -1)
        self.assertEqual(int(pg.Player.ODD), 1)
        self.assertIs(pg.Player.EVEN.opponent, pg.Player.ODD)
        self.assertIs(pg.Player.ODD.opponent, pg.Player.EVEN)

    def test_codes(self):
        for player in pg.Player:
            self.assertIs(pg.Player.from_code(player.code), player)
        self.assertRaises(ValueError, lambda: pg.Player.from_code(2))

    def test_par(self):
        self.assertIs(pg.par(0), pg.Player.EVEN)
        self.assertIs(pg.par(3), pg.Player.ODD)
        self.assertIs(pg.par(10), pg.Player.EVEN)
