import time
import unittest
from unittest import mock

import numpy as np
from hypothesis import given, settings
from parameterized import parameterized

import paritygames as pg

from ..utils import games, random_games


class TestSWCPSoundness(unittest.TestCase):
    @parameterized.expand([(n, d) for n in (100, 300) for d in range(1, 9)])
    def test_agrees_with_zielonka(self, n, d):
        for game in random_games(5, n, d, seed=1000 * d + n):
            result = pg.swcp_solve(game)
            truth = pg.zielonka_solve(game)
            self.assertEqual(pg.disagreements(truth, result), [])
            self.assertEqual(pg.witness_closure_violations(game, result), [])

    def test_random_d6(self):
        game = pg.generate(pg.GenConfig.create(1000, 6, seed=17))
        result = pg.swcp_solve(game)
        self.assertEqual(pg.disagreements(pg.zielonka_solve(game), result), [])

    @settings(max_examples=300, deadline=None)
    @given(games(max_nodes=8))
    def test_arbitrary_games(self, game):
        result = pg.swcp_solve(game)
        self.assertEqual(pg.disagreements(pg.zielonka_solve(game), result), [])
        self.assertEqual(result.value, pg.swcp_solve(game, round_robin=True).value)

    @parameterized.expand([(seed,) for seed in range(5)])
    def test_round_robin_same_values(self, seed):
        game = pg.generate(pg.GenConfig.create(200, 3, priority_count=4, seed=seed))
        self.assertEqual(
            pg.swcp_solve(game).value, pg.swcp_solve(game, round_robin=True).value
        )


class TestSWCPDense(unittest.TestCase):
    def test_mostly_decided_at_degree_six(self):
        fractions = [
            pg.swcp_solve(game).decided_fraction
            for game in random_games(10, 1000, 6, seed=3)
        ]
        self.assertGreaterEqual(sum(fractions) / len(fractions), 0.95)

    def test_degree_four_level(self):
        # two priorities at n = 1000 leave roughly 0.86 to 0.89 decided
        fractions = [
            pg.swcp_solve(game).decided_fraction
            for game in random_games(10, 1000, 4, seed=3)
        ]
        self.assertGreaterEqual(sum(fractions) / len(fractions), 0.8)
        self.assertLess(sum(fractions) / len(fractions), 0.95)

    def test_degree_two_decides_less(self):
        def mean_decided(d):
            results = [pg.swcp_solve(g) for g in random_games(10, 1000, d, seed=4)]
            return sum(r.decided_fraction for r in results) / len(results)

        self.assertGreater(mean_decided(4) - mean_decided(2), 0.2)

    def test_undecided_nodes_remain_possible(self):
        # a mixed-owner cycle: no self-winning node, nothing decided
        game = pg.ParityGame.create([[1], [0]], [0, 1], [1, 2])
        result = pg.swcp_solve(game)
        self.assertEqual(result.decided_count, 0)
        self.assertFalse(result.fully_solved)
        self.assertRaises(ValueError, result.to_solution)


def relabel(game, permutation):
    """
    The same game with node ``v`` renamed to ``permutation[v]``.
    """
    inverse = np.argsort(permutation)
    return pg.ParityGame.create(
        [[int(permutation[w]) for w in game.successors[v]] for v in inverse],
        [game.owner[v] for v in inverse],
        [game.priority[v] for v in inverse],
    )


class TestAnchorOrder(unittest.TestCase):
    @parameterized.expand([(d,) for d in (1, 2, 3, 5)])
    def test_relabelling_keeps_values(self, d):
        rng = np.random.default_rng(d)
        for game in random_games(10, 150, d, priority_count=6, seed=d):
            permutation = rng.permutation(game.node_count)
            renamed = pg.swcp_solve(relabel(game, permutation)).value
            self.assertEqual(
                [renamed[permutation[v]] for v in game.nodes()],
                list(pg.swcp_solve(game).value),
            )

    @parameterized.expand([(d,) for d in (1, 2, 4)])
    def test_reversed_anchors_keep_values(self, d):
        def reversed_anchors(game):
            return pg.solvers.anchors(game)[::-1]

        for game in random_games(10, 150, d, priority_count=6, seed=10 + d):
            expected = pg.swcp_solve(game)
            with mock.patch.object(
                pg.solvers.self_winning, "anchors", reversed_anchors
            ):
                actual = pg.swcp_solve(game)
            self.assertEqual(actual.value, expected.value)
            self.assertEqual(pg.witness_closure_violations(game, actual), [])


def mean_runtime(n, d, count=2):
    elapsed = []
    for game in random_games(count, n, d, seed=n + d):
        start = time.perf_counter()
        pg.swcp_solve(game)
        elapsed.append(time.perf_counter() - start)
    return sum(elapsed) / len(elapsed)


class TestSWCPRuntime(unittest.TestCase):
    def test_doubling_nodes_at_most_quadratic(self):
        self.assertLessEqual(mean_runtime(4000, 4) / mean_runtime(2000, 4), 5)

    def test_increasing_in_degree(self):
        times = [mean_runtime(2000, d) for d in (2, 4, 8, 16)]
        self.assertEqual(times, sorted(times))
