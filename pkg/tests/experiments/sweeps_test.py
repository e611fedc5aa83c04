import unittest
import warnings

from parameterized import parameterized

import paritygames as pg


def spec(kind, n_grid, d_grid, trials=4, **kwargs):
    return pg.SweepSpec.create(
        kind, n_grid, d_grid, trials=trials, base_seed=7, **kwargs
    )


class TestTrialSeed(unittest.TestCase):
    def test_deterministic(self):
        self.assertEqual(pg.trial_seed(1, 100, 4, 3), pg.trial_seed(1, 100, 4, 3))

    def test_distinct(self):
        seeds = {
            pg.trial_seed(base, n, d, t)
            for base in (0, 1)
            for n in (10, 20)
            for d in (1, 2)
            for t in range(5)
        }
        self.assertEqual(len(seeds), 40)


class TestSweeps(unittest.TestCase):
    def test_order_and_ranges(self):
        cells = pg.run_sweep(spec("success_prob", [30, 60], [1, 3]))
        self.assertEqual(
            [(c.n, c.d_effective) for c in cells],
            [(30, 1), (30, 3), (60, 1), (60, 3)],
        )
        for cell in cells:
            self.assertEqual(cell.trials, 4)
            self.assertGreaterEqual(cell.metric_value, 0)
            self.assertLessEqual(cell.metric_value, 1)
            self.assertGreaterEqual(cell.stderr, 0)
            self.assertGreaterEqual(cell.extra["solved_fraction"], 0)
            self.assertLessEqual(cell.extra["solved_fraction"], 1)

    def test_cell_matches_trials(self):
        (cell,) = pg.run_sweep(spec("self_winning_frac", [40], [2]))
        fractions = [
            pg.experiments.self_winning_trial(40, 2, 2, pg.trial_seed(7, 40, 2, t))
            for t in range(4)
        ]
        self.assertAlmostEqual(cell.metric_value, sum(fractions) / 4)

    def test_skips_out_of_range(self):
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            cells = pg.run_sweep(spec("self_winning_frac", [10], [2, 20]))
        self.assertEqual([c.d_effective for c in cells], [2])
        self.assertEqual(len(caught), 1)

    def test_workers_do_not_matter(self):
        one = pg.run_sweep(spec("success_prob", [40], [2, 4]))
        two = pg.run_sweep(spec("success_prob", [40], [2, 4]), workers=2)
        self.assertEqual(one, two)

    def test_nonsparse_exact_and_bound(self):
        (exact,) = pg.sweep_nonsparse(spec("nonsparse_loss", [30], ["frac:0.5"]))
        self.assertEqual(exact.d_effective, 15)
        self.assertEqual(exact.extra, {"degree_tag": "frac:0.5", "bound": "exact"})
        (bound,) = pg.sweep_nonsparse(
            spec("nonsparse_loss", [30], ["frac:0.5"], oracle_max_nodes=10)
        )
        self.assertEqual(bound.extra["bound"], "upper")
        # certification only misses nodes, so the bound is never below the truth
        self.assertGreaterEqual(bound.metric_value, exact.metric_value)

    def test_nonsparse_dense_beats_sparse(self):
        dense, sparse = pg.sweep_nonsparse(
            spec("nonsparse_loss", [100], ["frac:0.9", "ln_n"], trials=8)
        )
        self.assertLessEqual(
            dense.metric_value,
            sparse.metric_value + 2 * max(dense.stderr, sparse.stderr),
        )

    def test_nonsparse_half_degree(self):
        (cell,) = pg.sweep_nonsparse(
            spec("nonsparse_loss", [100], ["frac:0.5"], trials=5)
        )
        self.assertLessEqual(cell.metric_value, 0.05)

    def test_timing(self):
        (cell,) = pg.sweep_timing(spec("timing", [10], [2], trials=3))
        self.assertEqual(cell.extra, {"n_squared": 100, "n_times_m": 200})
        self.assertGreater(cell.metric_value, 0)
        self.assertLess(cell.metric_value, 0.01)

    @parameterized.expand(
        [
            (pg.sweep_success_prob, "timing"),
            (pg.sweep_self_winning, "success_prob"),
            (pg.sweep_nonsparse, "self_winning_frac"),
            (pg.sweep_timing, "nonsparse_loss"),
        ]
    )
    def test_kind_mismatch(self, sweep, kind):
        self.assertRaises(ValueError, lambda: sweep(spec(kind, [10], [2])))

    def test_self_winning_grows_with_degree(self):
        cells = pg.sweep_self_winning(
            spec("self_winning_frac", [300], [2, 4, 8], trials=10)
        )
        fractions = [c.metric_value for c in cells]
        for low, high, cell in zip(fractions, fractions[1:], cells[1:]):
            self.assertGreaterEqual(high, low - 2 * cell.stderr)
