"""``maximal-domains``: 少数の選択肢上のラベル付き極大Condorcet領域"""

import argparse

from app.commands.common import CommandContext
from core.domain import isomorphism_classes, maximal_domains
from core.never import conditions_of

NAME = "maximal-domains"
ALIASES = ()


def add_parser(subparsers) -> argparse.ArgumentParser:
    parser = subparsers.add_parser(NAME, help="exhaustive search for maximal Condorcet domains (n <= 3)")
    parser.add_argument("--n", type=int, default=3)
    parser.add_argument("--labels", default=None, help='alternative labels, e.g. "a b c"')
    return parser


def run(args: argparse.Namespace, ctx: CommandContext) -> int:
    found = maximal_domains(args.n)
    if args.labels:
        found = [d.with_labels(args.labels.split()) for d in found]
    for domain in found:
        conditions = " ".join(conditions_of(domain).format_lines(domain.alternatives))
        orders = " ".join(domain.format(u, compact=True) for u in domain.orders)
        ctx.echo(f"{conditions}: {{{orders}}} ({len(domain)} orders)")
    ctx.echo(f"maximal domains: {len(found)}")
    ctx.echo(f"isomorphism classes: {len(isomorphism_classes(found))}")
    ctx.echo(f"flip-isomorphism classes: {len(isomorphism_classes(found, flip=True))}")
    return 0
