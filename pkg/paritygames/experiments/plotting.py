from typing import Dict, List

import matplotlib

matplotlib.use("Agg")

# pylint: disable=wrong-import-position
import matplotlib.pyplot as plt

from paritygames.experiments.sweep_spec import SweepCell, SweepKind, SweepSpec

# fixed salt for element ids and text kept as text, so equal sweeps give
# byte-identical files
_SVG_STYLE = {"svg.hashsalt": "paritygames", "svg.fonttype": "none"}

_Y_LABELS = {
    SweepKind.SUCCESS_PROB: "fraction of nodes decided by SWCP",
    SweepKind.SELF_WINNING_FRAC: "fraction of self-winning nodes",
    SweepKind.NONSPARSE_LOSS: "fraction of nodes not won by their owner",
    SweepKind.TIMING: "mean SWCP time (s)",
}


def plot_sweep(spec: SweepSpec, cells: List[SweepCell], path: str) -> None:
    """
    Line chart of a sweep: metric against degree, one line per node count,
    with standard-error bars. Written as SVG.
    """
    by_n: Dict[int, List[SweepCell]] = {}
    for cell in cells:
        by_n.setdefault(cell.n, []).append(cell)
    with plt.rc_context(_SVG_STYLE):
        _draw(spec, by_n, path)


def _draw(spec: SweepSpec, by_n: Dict[int, List[SweepCell]], path: str) -> None:
    fig, ax = plt.subplots(figsize=(6, 4))
    for n, row in by_n.items():
        ax.errorbar(
            [c.d_effective for c in row],
            [c.metric_value for c in row],
            yerr=[c.stderr for c in row],
            marker="o",
            capsize=3,
            label=f"|V| = {n}",
        )
    ax.set_xlabel("degree d")
    ax.set_ylabel(_Y_LABELS[spec.kind])
    if spec.kind is SweepKind.NONSPARSE_LOSS:
        ax.set_xscale("log")
    ax.grid(True, alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)
