"""``scan``: 閉じた式による |F_n ⊗ F_n| と |F_2n| の比較"""

import argparse

from app.commands.common import CommandContext
from core.composition import hypothesis_scan

NAME = "scan"
ALIASES = ("hypothesis-scan",)


def add_parser(subparsers) -> argparse.ArgumentParser:
    parser = subparsers.add_parser(NAME, aliases=list(ALIASES), help="compare |F_n x F_n| with |F_2n|")
    parser.add_argument("--max-n", type=int, required=True, help="last n of the table (>= 3)")
    parser.add_argument("--format", choices=("table", "csv", "json"), default="table")
    return parser


def run(args: argparse.Namespace, ctx: CommandContext) -> int:
    report = hypothesis_scan(args.max_n)
    ctx.echo(ctx.renderer.render_scan(report, args.format))
    return 0
