"""
Command line interface: ``python -m paritygames <command> ...``.

Commands: generate, solve, verify, sweep, threshold. Exit codes are 0 on
success, 1 on usage or precondition errors, 2 when verification finds a
disagreement and 3 on I/O or parse errors.
"""

import argparse
import csv
import io
import logging
import os
import sys
import time
from dataclasses import replace
from enum import IntEnum
from typing import List, Optional

from paritygames.branching.threshold import (
    CLOSED_FORM,
    DEFAULT_SCAN_MAX,
    FIXED_POINT,
    ThresholdCheck,
    min_sufficient_degree,
    threshold_table,
    verdict_disagreements,
)
from paritygames.experiments.csv_output import write_sweep_csv
from paritygames.experiments.plotting import plot_sweep
from paritygames.experiments.sweep_spec import (
    DEFAULT_ORACLE_MAX_NODES,
    SweepKind,
    SweepSpec,
    parse_degree_grid,
    parse_node_grid,
)
from paritygames.experiments.sweeps import run_sweep
from paritygames.game.pgsolver_format import GameFormatError, read_game, render_pgsolver
from paritygames.game.validation import assert_valid
from paritygames.generator.config import GenConfig, InvalidConfigError, load_gen_config
from paritygames.generator.degree import parse_degree
from paritygames.generator.generate import generate
from paritygames.solvers.brute_force import (
    DEFAULT_STRATEGY_BOUND,
    brute_force_solve,
    strategy_space_size,
)
from paritygames.solvers.d1 import solve_d1
from paritygames.solvers.solution import write_solution
from paritygames.solvers.strategy_check import (
    disagreements,
    strategy_violations,
    witness_closure_violations,
)
from paritygames.solvers.swcp import swcp_solve
from paritygames.solvers.zielonka import zielonka_solve

OUTPUT_DIR_VARIABLE = "PARITYGAMES_OUTPUT_DIR"
DEFAULT_OUTPUT_DIR = "results"

logger = logging.getLogger(__name__)


class ExitCode(IntEnum):
    OK = 0
    USAGE = 1
    VERIFICATION_FAILURE = 2
    IO = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(ExitCode.USAGE, f"{self.prog}: error: {message}\n")


class VerificationFailure(Exception):
    pass


def output_dir(explicit: Optional[str]) -> str:
    if explicit:
        return explicit
    return os.environ.get(OUTPUT_DIR_VARIABLE, DEFAULT_OUTPUT_DIR)


SOLVERS = {
    "swcp": swcp_solve,
    "zielonka": zielonka_solve,
    "brute": brute_force_solve,
    "d1": solve_d1,
}


def cmd_generate(args) -> None:
    config = load_gen_config(args.config) if args.config else None
    overrides = {
        "node_count": args.nodes,
        "degree": None if args.degree is None else parse_degree(args.degree),
        "priority_count": args.priorities,
        "allow_self_loops": args.self_loops,
        "seed": args.seed,
    }
    overrides = {k: v for k, v in overrides.items() if v is not None}
    if config is None:
        if "node_count" not in overrides or "degree" not in overrides:
            raise InvalidConfigError(
                "--nodes and --degree are required without --config"
            )
        config = GenConfig(**overrides)
    else:
        config = replace(config, **overrides)
    text = render_pgsolver(generate(config))
    if args.out in (None, "-"):
        sys.stdout.write(text)
        return
    with open(args.out, "w", newline="\n") as f:
        f.write(text)
    print(f"wrote {config.node_count} nodes to {args.out}")


def cmd_solve(args) -> None:
    game = read_game(args.input)
    assert_valid(game)
    start = time.perf_counter()
    solution = SOLVERS[args.algorithm](game)
    elapsed = time.perf_counter() - start
    partial = solution if args.algorithm == "swcp" else solution.as_partial()
    out = args.out or args.input + ".sol"
    write_solution(solution, out)
    status = "complete" if partial.fully_solved else "incomplete"
    print(
        f"decided {partial.decided_count}/{game.node_count} status={status}"
        f" time={elapsed:.6f}s algorithm={args.algorithm} solution={out}"
    )


def cmd_verify(args) -> None:
    game = read_game(args.input)
    assert_valid(game)
    truth = zielonka_solve(game)
    failures = []

    def report(name, bad):
        print(f"{name}: {'ok' if not bad else f'FAILED at nodes {bad[:20]}'}")
        if bad:
            failures.append(name)

    swcp = swcp_solve(game)
    print(f"swcp decided {swcp.decided_count}/{game.node_count}")
    report("swcp vs zielonka", disagreements(truth, swcp))
    report("swcp witness closure", witness_closure_violations(game, swcp))
    report("zielonka strategy closure", strategy_violations(game, truth))
    if strategy_space_size(game) <= DEFAULT_STRATEGY_BOUND:
        brute = brute_force_solve(game).as_partial()
        report("brute vs zielonka", disagreements(truth, brute))
    else:
        print("brute vs zielonka: skipped (strategy space too large)")
    if game.is_regular(1):
        report("d1 vs zielonka", disagreements(truth, solve_d1(game).as_partial()))
    if failures:
        raise VerificationFailure(", ".join(failures))


def cmd_sweep(args) -> None:
    spec = SweepSpec(
        SweepKind(args.kind),
        parse_node_grid(args.grid_n),
        parse_degree_grid(args.grid_d),
        trials=args.trials,
        base_seed=args.seed,
        priority_count=args.priorities,
        oracle_max_nodes=args.oracle_max_nodes,
    )
    cells = run_sweep(spec, workers=args.workers, progress=not args.quiet)
    directory = output_dir(args.out)
    os.makedirs(directory, exist_ok=True)
    csv_path = os.path.join(directory, f"{spec.kind.value}.csv")
    write_sweep_csv(spec, cells, csv_path)
    print(f"wrote {len(cells)} cells to {csv_path}")
    if not args.no_plot:
        svg_path = os.path.join(directory, f"{spec.kind.value}.svg")
        plot_sweep(spec, cells, svg_path)
        print(f"wrote plot to {svg_path}")


_THRESHOLD_HEADER = ["d", "eta(d-1,1/4)", "d*eta", "closed_form", "verdict", "agree"]


def threshold_rows(table: List[ThresholdCheck]) -> List[List[str]]:
    return [
        [
            str(row.d),
            f"{row.eta:.12f}",
            f"{row.lhs_fixed_point:.12f}",
            f"{row.lhs_closed_form:.12f}",
            "holds" if row.condition_holds else "fails",
            "yes" if row.verdicts_agree else "NO",
        ]
        for row in table
    ]


def cmd_threshold(args) -> None:
    table = threshold_table(args.d_min, args.d_max, args.tolerance)
    rows = threshold_rows(table)
    widths = [
        max(len(r[i]) for r in rows + [_THRESHOLD_HEADER])
        for i in range(len(_THRESHOLD_HEADER))
    ]
    for row in [_THRESHOLD_HEADER] + rows:
        print("  ".join(x.rjust(w) for x, w in zip(row, widths)))
    directory = output_dir(args.out)
    os.makedirs(directory, exist_ok=True)
    buffer = io.StringIO()
    csv.writer(buffer, lineterminator="\n").writerows([_THRESHOLD_HEADER] + rows)
    path = os.path.join(directory, "threshold.csv")
    with open(path, "w", newline="") as f:
        f.write(buffer.getvalue())
    for form in (FIXED_POINT, CLOSED_FORM):
        try:
            degree = min_sufficient_degree(form, args.d_max, args.tolerance)
        except ValueError:
            degree = None
        print(f"minimal sufficient degree ({form}): {degree}")
    print(f"verdict disagreements: {verdict_disagreements(table) or 'none'}")
    print(f"wrote {path}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="paritygames", description=__doc__.splitlines()[1])
    parser.add_argument("--verbose", "-v", action="store_true")
    commands = parser.add_subparsers(dest="command", required=True)

    generate_parser = commands.add_parser("generate", help="sample a random game")
    generate_parser.add_argument("--nodes", type=int)
    generate_parser.add_argument("--degree", help="integer, ln_n, sqrt_n or frac:<a>")
    generate_parser.add_argument("--priorities", type=int)
    generate_parser.add_argument("--seed", type=int)
    generate_parser.add_argument(
        "--self-loops", action=argparse.BooleanOptionalAction, help="allow v -> v"
    )
    generate_parser.add_argument("--config", help="key=value GenConfig file")
    generate_parser.add_argument("--out", help="output path, '-' for stdout")
    generate_parser.set_defaults(handler=cmd_generate)

    solve_parser = commands.add_parser("solve", help="solve a PGSolver game")
    solve_parser.add_argument("input")
    solve_parser.add_argument("--algorithm", choices=sorted(SOLVERS), default="swcp")
    solve_parser.add_argument("--out", help="solution path (default <input>.sol)")
    solve_parser.set_defaults(handler=cmd_solve)

    verify_parser = commands.add_parser("verify", help="cross-check the solvers")
    verify_parser.add_argument("input")
    verify_parser.set_defaults(handler=cmd_verify)

    sweep_parser = commands.add_parser("sweep", help="run an experiment grid")
    sweep_parser.add_argument(
        "--kind", choices=[k.value for k in SweepKind], required=True
    )
    sweep_parser.add_argument("--grid-n", required=True, help="e.g. 100,300")
    sweep_parser.add_argument("--grid-d", required=True, help="e.g. 2,4,ln_n,frac:0.5")
    sweep_parser.add_argument("--trials", type=int, default=200)
    sweep_parser.add_argument("--seed", type=int, default=0)
    sweep_parser.add_argument("--priorities", type=int, default=2)
    sweep_parser.add_argument("--workers", type=int, default=1)
    sweep_parser.add_argument(
        "--oracle-max-nodes", type=int, default=DEFAULT_ORACLE_MAX_NODES
    )
    sweep_parser.add_argument(
        "--out", help=f"output directory (${OUTPUT_DIR_VARIABLE})"
    )
    sweep_parser.add_argument("--no-plot", action="store_true")
    sweep_parser.add_argument("--quiet", action="store_true")
    sweep_parser.set_defaults(handler=cmd_sweep)

    threshold_parser = commands.add_parser(
        "threshold", help="tabulate the sufficient degree condition"
    )
    threshold_parser.add_argument("--d-min", type=int, default=2)
    threshold_parser.add_argument("--d-max", type=int, default=DEFAULT_SCAN_MAX)
    threshold_parser.add_argument("--tolerance", type=float, default=1e-12)
    threshold_parser.add_argument(
        "--out", help=f"output directory (${OUTPUT_DIR_VARIABLE})"
    )
    threshold_parser.set_defaults(handler=cmd_threshold)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    logger.debug("running %s", args.command)
    try:
        args.handler(args)
    except VerificationFailure as e:
        print(f"verification failed: {e}", file=sys.stderr)
        return ExitCode.VERIFICATION_FAILURE
    except (GameFormatError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return ExitCode.IO
    except ValueError as e:
        # invalid configs and games, and solver preconditions
        print(f"error: {e}", file=sys.stderr)
        return ExitCode.USAGE
    return ExitCode.OK
