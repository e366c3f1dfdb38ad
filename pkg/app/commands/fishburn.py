"""``fishburn``: 交代スキーム領域 F_n またはその大きさ"""

import argparse

from app.commands.common import CommandContext, add_format_argument, add_out_argument, emit_domain
from core.fishburn import fishburn_cardinality, fishburn_domain, fishburn_table
from core.models import SchemeVariant

NAME = "fishburn"
ALIASES = ()


def add_parser(subparsers) -> argparse.ArgumentParser:
    parser = subparsers.add_parser(NAME, help="enumerate F_n or print |F_n|")
    parser.add_argument("--n", type=int, required=True, help="number of alternatives (>= 2)")
    parser.add_argument(
        "--variant",
        choices=[v.value for v in SchemeVariant],
        default=SchemeVariant.EVEN_BOTTOM.value,
        help="bottom: F_n, top: its flip (default: bottom)",
    )
    parser.add_argument("--formula-only", action="store_true", help="print the exact cardinality only")
    parser.add_argument("--table", action="store_true", help="print |F_k| for k = 2..n")
    add_out_argument(parser)
    add_format_argument(parser)
    return parser


def run(args: argparse.Namespace, ctx: CommandContext) -> int:
    if args.table:
        for n, size in fishburn_table(args.n):
            ctx.echo(f"{n} {size}")
        return 0
    expected = fishburn_cardinality(args.n)
    if args.formula_only:
        ctx.echo(str(expected))
        return 0
    domain = fishburn_domain(args.n, SchemeVariant(args.variant), cap=ctx.settings.enumeration_cap)
    if len(domain) != expected:
        raise AssertionError(f"F_{args.n} has {len(domain)} orders, closed form gives {expected}")
    emit_domain(ctx, domain, args.out, args.format)
    return 0
