"""``isomorphic``: 2つの領域ファイル間の（flip）同型写像"""

import argparse

from app.commands.common import CommandContext, verdict_exit
from core.domain import find_isomorphism

NAME = "isomorphic"
ALIASES = ()


def add_parser(subparsers) -> argparse.ArgumentParser:
    parser = subparsers.add_parser(NAME, help="print a bijection mapping the first domain onto the second, or none")
    parser.add_argument("first")
    parser.add_argument("second")
    parser.add_argument("--flip", action="store_true", help="map onto the reversed orders")
    return parser


def run(args: argparse.Namespace, ctx: CommandContext) -> int:
    first = ctx.store.load_domain(args.first)
    second = ctx.store.load_domain(args.second)
    mapping = find_isomorphism(first, second, flip=args.flip, cap=ctx.settings.isomorphism_cap)
    if mapping is None:
        ctx.echo("none")
        return verdict_exit(False)
    ctx.echo(" ".join(
        f"{first.alternatives.label(a)}->{second.alternatives.label(b)}" for a, b in sorted(mapping.items())
    ))
    return verdict_exit(True)
