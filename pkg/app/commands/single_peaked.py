"""``single-peaked``: 1 < 2 < ... < n 上の単峰（または単谷）領域"""

import argparse

from app.commands.common import CommandContext, add_format_argument, add_out_argument, emit_domain
from core.fishburn import single_dipped_domain, single_peaked_domain

NAME = "single-peaked"
ALIASES = ()


def add_parser(subparsers) -> argparse.ArgumentParser:
    parser = subparsers.add_parser(NAME, help="single-peaked domain with 2^(n-1) orders")
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--dipped", action="store_true", help="single-dipped instead")
    add_out_argument(parser)
    add_format_argument(parser)
    return parser


def run(args: argparse.Namespace, ctx: CommandContext) -> int:
    build = single_dipped_domain if args.dipped else single_peaked_domain
    emit_domain(ctx, build(args.n, cap=ctx.settings.enumeration_cap), args.out, args.format)
    return 0
