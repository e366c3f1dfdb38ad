"""``shuffles``: 互いに素なラベル上の2順序のシャッフル領域 u ⊕ v"""

import argparse

from app.commands.common import CommandContext, add_format_argument, add_out_argument, emit_domain, loose_tokens
from core.composition import shuffle_domain
from core.errors import PreconditionError
from core.orders import AlternativeSet, LinearOrder

NAME = "shuffles"
ALIASES = ()


def add_parser(subparsers) -> argparse.ArgumentParser:
    parser = subparsers.add_parser(
        NAME,
        help="all interleavings of two orders",
        description="Labels are separated by spaces. The compact form (\"1234\") splits one token "
        "into characters, so multi-character labels such as 10 must be written \"10 11\".",
    )
    parser.add_argument("u", help='first order, e.g. "1 2 3 4" or "1234"')
    parser.add_argument("v", help='second order on disjoint labels, e.g. "5 6 7 8 9"')
    parser.add_argument("--count-only", action="store_true", help="print the number of shuffles only")
    add_out_argument(parser)
    add_format_argument(parser)
    return parser


def run(args: argparse.Namespace, ctx: CommandContext) -> int:
    left, right = loose_tokens(args.u), loose_tokens(args.v)
    for name, tokens in (("u", left), ("v", right)):
        repeated = sorted({t for t in tokens if tokens.count(t) > 1})
        if repeated:
            raise PreconditionError(
                f"repeats {repeated}; separate multi-character labels with spaces", field_name=name
            )
    overlap = sorted(set(left) & set(right))
    if overlap:
        raise PreconditionError(f"shuffle operands overlap on {overlap}")
    alternatives = AlternativeSet(tuple(left + right))
    u = LinearOrder(tuple(range(len(left))))
    v = LinearOrder(tuple(range(len(left), len(left) + len(right))))
    domain = shuffle_domain(u, v, alternatives)
    if args.count_only:
        ctx.echo(str(len(domain)))
        return 0
    emit_domain(ctx, domain, args.out, args.format)
    return 0
