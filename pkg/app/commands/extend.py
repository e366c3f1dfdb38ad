"""``extend``: 追加してもCondorcetのままである順序"""

import argparse

from app.commands.common import CommandContext, add_format_argument, add_out_argument, emit_domain
from core.domain import extensions, maximal_extension

NAME = "extend"
ALIASES = ()


def add_parser(subparsers) -> argparse.ArgumentParser:
    parser = subparsers.add_parser(NAME, help="list the extensions of a Condorcet domain")
    parser.add_argument("domain_file")
    parser.add_argument(
        "--maximal",
        action="store_true",
        help="greedily complete the domain to a maximal one and print it",
    )
    add_out_argument(parser)
    add_format_argument(parser)
    return parser


def run(args: argparse.Namespace, ctx: CommandContext) -> int:
    domain = ctx.store.load_domain(args.domain_file)
    cap = ctx.settings.extension_cap
    if args.maximal:
        emit_domain(ctx, maximal_extension(domain, cap=cap), args.out, args.format)
        return 0
    for order in extensions(domain, cap=cap):
        ctx.echo(domain.format(order))
    return 0
