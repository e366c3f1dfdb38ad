"""``compose``: 2つの領域ファイルのテンソル積 (D1 ⊗ D2)(u, v)"""

import argparse
import sys

from app.commands.common import CommandContext, add_format_argument, add_out_argument, emit_domain, parse_member
from core.composition import maximal_width_seam, tensor

NAME = "compose"
ALIASES = ()


def add_parser(subparsers) -> argparse.ArgumentParser:
    parser = subparsers.add_parser(NAME, help="tensor product of two Condorcet domains")
    parser.add_argument("--left", required=True, help="left domain file")
    parser.add_argument("--right", required=True, help="right domain file")
    parser.add_argument("--u", default=None, help="seam order of the left domain (default: a reversal-pair member)")
    parser.add_argument("--v", default=None, help="seam order of the right domain (default: a reversal-pair member)")
    add_out_argument(parser)
    add_format_argument(parser)
    return parser


def run(args: argparse.Namespace, ctx: CommandContext) -> int:
    left = ctx.store.load_domain(args.left)
    right = ctx.store.load_domain(args.right)
    u = parse_member(left, args.u, "u") if args.u else maximal_width_seam(left)
    v = parse_member(right, args.v, "v") if args.v else maximal_width_seam(right)
    result = tensor(left, right, u, v)
    domain = result.domain
    summary = ctx.renderer.render(
        "composition",
        left_size=len(left),
        left_n=left.n,
        u=left.format(u),
        right_size=len(right),
        right_n=right.n,
        v=right.format(v),
        seam=domain.format(result.seam),
        size=len(domain),
        expected=result.expected_size,
    )
    # --out が無ければ領域本体が標準出力に出る
    print(summary, file=ctx.out if args.out is not None else sys.stderr)
    emit_domain(ctx, domain, args.out, args.format)
    return 0
