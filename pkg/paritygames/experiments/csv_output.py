import csv
import io
from typing import List

from paritygames.experiments.sweep_spec import (
    COMMON_COLUMNS,
    EXTRA_COLUMNS,
    SweepCell,
    SweepKind,
    SweepSpec,
)


def _format(value) -> str:
    if isinstance(value, float):
        return f"{value:.10g}"
    return str(value)


def sweep_header(kind: SweepKind) -> List[str]:
    return list(COMMON_COLUMNS) + list(EXTRA_COLUMNS[kind])


def render_sweep_csv(spec: SweepSpec, cells: List[SweepCell]) -> str:
    """
    CSV text of a sweep: the common columns
    ``n,d,trials,metric,stderr,kind,seed`` then the kind's extra columns,
    one row per cell in the order given.
    """
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(sweep_header(spec.kind))
    for cell in cells:
        row = [
            cell.n,
            cell.d_effective,
            cell.trials,
            cell.metric_value,
            cell.stderr,
            spec.kind.value,
            spec.base_seed,
        ] + [cell.extra[column] for column in EXTRA_COLUMNS[spec.kind]]
        writer.writerow([_format(x) for x in row])
    return out.getvalue()


def write_sweep_csv(spec: SweepSpec, cells: List[SweepCell], path: str) -> None:
    with open(path, "w", newline="") as f:
        f.write(render_sweep_csv(spec, cells))


def read_sweep_csv(path: str) -> List[dict]:
    with open(path, newline="") as f:
        return list(csv.DictReader(f))
