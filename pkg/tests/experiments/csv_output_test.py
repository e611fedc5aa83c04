import os
import tempfile
import unittest

from frozendict import frozendict

import paritygames as pg


class TestSweepCsv(unittest.TestCase):
    def test_render(self):
        spec = pg.SweepSpec.create("success_prob", [10], [2], trials=3, base_seed=5)
        cells = [
            pg.SweepCell(
                10,
                2,
                3,
                0.5,
                0.25,
                frozendict(solved_fraction=1 / 3, solved_stderr=0.0),
            )
        ]
        self.assertEqual(
            pg.render_sweep_csv(spec, cells),
            "n,d,trials,metric,stderr,kind,seed,solved_fraction,solved_stderr\n"
            "10,2,3,0.5,0.25,success_prob,5,0.3333333333,0\n",
        )

    def test_headers(self):
        for kind in pg.SweepKind:
            header = pg.experiments.sweep_header(kind)
            self.assertEqual(
                header[:7], ["n", "d", "trials", "metric", "stderr", "kind", "seed"]
            )

    def test_byte_identical_across_workers(self):
        spec = pg.SweepSpec.create(
            "nonsparse_loss", [20, 40], ["ln_n", "frac:0.5"], trials=3, base_seed=2
        )
        one = pg.render_sweep_csv(spec, pg.run_sweep(spec))
        two = pg.render_sweep_csv(spec, pg.run_sweep(spec, workers=2))
        self.assertEqual(one, two)

    def test_file_round_trip(self):
        spec = pg.SweepSpec.create("self_winning_frac", [20], [2, 3], trials=2)
        cells = pg.run_sweep(spec)
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "sweep.csv")
            pg.write_sweep_csv(spec, cells, path)
            rows = pg.read_sweep_csv(path)
        self.assertEqual([row["d"] for row in rows], ["2", "3"])
        self.assertEqual({row["kind"] for row in rows}, {"self_winning_frac"})
        for row, cell in zip(rows, cells):
            self.assertAlmostEqual(float(row["metric"]), cell.metric_value, places=9)
