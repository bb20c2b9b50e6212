"""Command-line front end.

Subcommands:
  metrics   evaluate dispersion metrics on a literal value list
  evaluate  score, rank and aggregate the candidates of a problem config
  heatmap   sample one principle's score over the allocation square as CSV

Exit codes: 0 success, 2 input/config error, 3 domain error while scoring.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from pathlib import Path

from .allocation import RankingTable, continuous_ranking, discrete_ranking, heatmap
from .config import ProblemConfig, load_config, parse_config
from .core import ValueVector
from .dispersion import DispersionMetric, dispersion
from .errors import ConfigError, DomainError, ScoringError
from .presets import get_preset, preset_names

DEFAULT_RESOLUTION = 10_001

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_DOMAIN = 3


def _fmt(value: float) -> str:
    return f"{value:.6g}"


def _fmt_vector(v) -> str:
    return "[" + ", ".join(_fmt(x) for x in v) + "]"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fairalloc",
        description="Score, rank and optimize resource allocations under "
        "six distributive-fairness principles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_metrics = sub.add_parser(
        "metrics", help="evaluate dispersion metrics on a value list"
    )
    p_metrics.add_argument(
        "--values", required=True, help="comma-separated nonnegative values"
    )
    p_metrics.add_argument(
        "--metric",
        action="append",
        required=True,
        help="metric name, e.g. gini, hoover, atkinson(0.5); repeatable or "
        "comma-separated",
    )
    p_metrics.set_defaults(func=cmd_metrics)

    for name, func in (("evaluate", cmd_evaluate), ("heatmap", cmd_heatmap)):
        p = sub.add_parser(
            name,
            help="rank a problem's candidate allocations"
            if name == "evaluate"
            else "sample a principle score over the allocation square",
        )
        source = p.add_mutually_exclusive_group(required=True)
        source.add_argument("--config", help="path to a JSON problem config")
        source.add_argument(
            "--preset", choices=preset_names(), help="built-in example problem"
        )
        p.add_argument("--out", help="write CSV output to this path")
        if name == "evaluate":
            p.add_argument(
                "--resolution",
                type=int,
                default=DEFAULT_RESOLUTION,
                help="frontier grid points for continuous problems "
                f"(default {DEFAULT_RESOLUTION})",
            )
        else:
            p.add_argument(
                "--principle", required=True, help="principle label from the config"
            )
            p.add_argument(
                "--grid", type=int, default=100, help="cells per axis (default 100)"
            )
        p.set_defaults(func=func)

    return parser


def _load(args) -> ProblemConfig:
    if args.preset:
        return parse_config(get_preset(args.preset))
    return load_config(args.config)


def cmd_metrics(args) -> int:
    try:
        values = [float(x) for x in args.values.split(",") if x.strip() != ""]
    except ValueError:
        print(f"error: cannot parse --values {args.values!r}", file=sys.stderr)
        return EXIT_CONFIG
    names = [name for chunk in args.metric for name in chunk.split(",") if name]
    try:
        vector = ValueVector(values)
        metrics = [DispersionMetric.parse(name) for name in names]
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_CONFIG
    rows = []
    for metric in metrics:
        try:
            rows.append((str(metric), dispersion(metric, vector)))
        except DomainError as err:
            print(f"error: {err.name}: {err}", file=sys.stderr)
            return EXIT_CONFIG
    width = max(len(name) for name, _ in rows)
    for name, value in rows:
        print(f"{name:<{width}}  {_fmt(value)}")
    return EXIT_OK


def _evaluate_csv(table: RankingTable) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["candidate", "principle", "score", "direction", "rank"])
    for c, candidate in enumerate(table.candidates):
        for p, principle in enumerate(table.principles):
            writer.writerow(
                [
                    candidate,
                    principle,
                    f"{table.scores[p][c]:.12g}",
                    table.directions[p],
                    table.ranks[p][c],
                ]
            )
    return buffer.getvalue()


def _print_table(table: RankingTable) -> None:
    width = max(len(c) for c in table.candidates)
    print("Candidates:")
    for c, candidate in enumerate(table.candidates):
        ctx = table.contexts[c]
        print(
            f"  {candidate:<{width}}  y={_fmt_vector(ctx.outputs)} "
            f"u={_fmt_vector(ctx.utilities)}"
        )
    print()
    for p, principle in enumerate(table.principles):
        print(f"Principle {principle} ({table.directions[p]}):")
        for c, candidate in enumerate(table.candidates):
            print(
                f"  {candidate:<{width}}  score={_fmt(table.scores[p][c])} "
                f"rank={table.ranks[p][c]}"
            )
        print()
    print("Combined ranking (weighted Borda):")
    for c in table.combined_order():
        print(
            f"  {table.combined[c]}. {table.candidates[c]:<{width}} "
            f"points={_fmt(table.borda[c])}"
        )


def cmd_evaluate(args) -> int:
    try:
        cfg = _load(args)
    except ConfigError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_CONFIG
    if args.resolution < 2:
        print("error: --resolution must be >= 2", file=sys.stderr)
        return EXIT_CONFIG
    try:
        if cfg.kind == "discrete":
            table = discrete_ranking(
                cfg.problem,
                cfg.principle_labels,
                cfg.specs,
                cfg.weights,
                labels=cfg.candidate_labels,
            )
        else:
            table = continuous_ranking(
                cfg.problem,
                cfg.principle_labels,
                cfg.specs,
                cfg.weights,
                resolution=args.resolution,
            )
    except ScoringError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_DOMAIN
    except DomainError as err:
        print(f"error: {err.name}: {err}", file=sys.stderr)
        return EXIT_DOMAIN
    _print_table(table)
    if args.out:
        Path(args.out).write_text(_evaluate_csv(table), encoding="utf-8", newline="\n")
        print(f"\nwrote {args.out}")
    return EXIT_OK


def _heatmap_csv(cells) -> str:
    lines = ["y_a,y_b,score,on_frontier"]
    for cell in cells:
        score = "" if cell.score is None else f"{cell.score:.12g}"
        lines.append(
            f"{cell.y_a:.12g},{cell.y_b:.12g},{score},{1 if cell.on_frontier else 0}"
        )
    return "\n".join(lines) + "\n"


def cmd_heatmap(args) -> int:
    try:
        cfg = _load(args)
    except ConfigError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_CONFIG
    if cfg.kind != "continuous":
        print("error: heatmaps require a continuous problem", file=sys.stderr)
        return EXIT_CONFIG
    if args.grid < 1:
        print("error: --grid must be >= 1", file=sys.stderr)
        return EXIT_CONFIG
    if args.principle not in cfg.principle_labels:
        print(
            f"error: principle {args.principle!r} not in config "
            f"(have: {', '.join(cfg.principle_labels)})",
            file=sys.stderr,
        )
        return EXIT_CONFIG
    spec = cfg.specs[cfg.principle_labels.index(args.principle)]
    try:
        cells = heatmap(cfg.problem, spec, args.grid)
    except DomainError as err:
        print(f"error: {err.name}: {err}", file=sys.stderr)
        return EXIT_DOMAIN
    text = _heatmap_csv(cells)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors itself
        return int(exc.code or 0)
    return args.func(args)


def entry() -> None:  # console-script entry point
    raise SystemExit(main())
