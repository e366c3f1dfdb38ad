"""``conditions``: 領域ファイルの N(D)、または条件ファイルの D(N)"""

import argparse

from app.commands.common import CommandContext, add_format_argument, add_out_argument, emit_domain
from core.never import conditions_of, orders_satisfying

NAME = "conditions"
ALIASES = ()


def add_parser(subparsers) -> argparse.ArgumentParser:
    parser = subparsers.add_parser(NAME, help="never conditions of a domain, or the domain of a condition set")
    parser.add_argument("file", help="domain file, or condition file with --generate")
    parser.add_argument("--generate", action="store_true", help="read never conditions and print D(N)")
    add_out_argument(parser)
    add_format_argument(parser)
    return parser


def run(args: argparse.Namespace, ctx: CommandContext) -> int:
    if args.generate:
        alternatives, condition_set = ctx.store.load_conditions(args.file)
        domain = orders_satisfying(condition_set, alternatives=alternatives, cap=ctx.settings.enumeration_cap)
        if not domain.orders:
            ctx.logger.warning(f"{args.file}: the condition set is inconsistent (no order satisfies it)")
        emit_domain(ctx, domain, args.out, args.format)
        return 0
    domain = ctx.store.load_domain(args.file)
    for line in conditions_of(domain).format_lines(domain.alternatives):
        ctx.echo(line)
    return 0
