import os
import tempfile
import unittest

import paritygames as pg


class TestPlotting(unittest.TestCase):
    def test_svg(self):
        spec = pg.SweepSpec.create("self_winning_frac", [20, 30], [2, 3], trials=2)
        cells = pg.run_sweep(spec)
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "sweep.svg")
            pg.plot_sweep(spec, cells, path)
            with open(path) as f:
                svg = f.read()
        self.assertIn("<svg", svg)
        self.assertIn("|V| = 30", svg)

    def test_deterministic(self):
        spec = pg.SweepSpec.create(
            "nonsparse_loss", [20], ["ln_n", "frac:0.5"], trials=2
        )
        cells = pg.run_sweep(spec)
        outputs = []
        with tempfile.TemporaryDirectory() as directory:
            for name in ("a.svg", "b.svg"):
                path = os.path.join(directory, name)
                pg.plot_sweep(spec, cells, path)
                with open(path) as f:
                    outputs.append(f.read())
        self.assertEqual(outputs[0], outputs[1])
