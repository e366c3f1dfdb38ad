"""``analyze``: 領域ファイルの全構造述語を評価"""

import argparse

from app.commands.common import CommandContext, verdict_exit
from services.analyzer import DomainAnalyzer
from services.schema_manager import SchemaManager

NAME = "analyze"
ALIASES = ()


def add_parser(subparsers) -> argparse.ArgumentParser:
    parser = subparsers.add_parser(NAME, help="analyze a domain file (exit 0 iff Condorcet)")
    parser.add_argument("domain_file", help="domain file (.json or text)")
    parser.add_argument("--format", choices=("text", "json", "csv"), default="text")
    parser.add_argument("--no-extensions", action="store_true", help="omit the list of extension orders")
    return parser


def run(args: argparse.Namespace, ctx: CommandContext) -> int:
    domain = ctx.store.load_domain(args.domain_file)
    analyzer = DomainAnalyzer(ctx.settings, ctx.logger)
    report = analyzer.analyze(domain, source=str(args.domain_file), include_extensions=not args.no_extensions)
    if args.format == "json":
        SchemaManager().ensure_valid("analysis", report.model_dump())
    ctx.echo(ctx.renderer.render_analysis(report, args.format))
    return verdict_exit(bool(report.verdicts["condorcet"].value))
