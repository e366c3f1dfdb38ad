"""サブコマンド共通の処理"""

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, TextIO

from core.domain import Domain
from core.errors import ParseError
from core.models import AppSettings
from core.orders import LinearOrder
from providers.storage_local import LocalDomainStore
from services.error_handler import ErrorHandler, ExitCode
from services.logger import Logger
from services.report_renderer import ReportRenderer

DOMAIN_FORMATS = ("text", "json", "csv")


@dataclass
class CommandContext:
    """サブコマンドに渡す実行コンテキスト"""
    settings: AppSettings
    store: LocalDomainStore = field(default_factory=LocalDomainStore)
    renderer: ReportRenderer = field(default_factory=ReportRenderer)
    error_handler: ErrorHandler = field(default_factory=ErrorHandler)
    logger: Logger = field(default_factory=lambda: Logger("condorcet_domains.cli"))
    out: TextIO = field(default_factory=lambda: sys.stdout)

    def echo(self, text: str = "") -> None:
        print(text, file=self.out)


def add_format_argument(parser: argparse.ArgumentParser, choices=DOMAIN_FORMATS, default: str = "text") -> None:
    parser.add_argument("--format", choices=choices, default=default, help=f"output format (default: {default})")


def add_out_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", type=Path, default=None, help="write the domain to this file (format by suffix)")


def render_domain(ctx: CommandContext, domain: Domain, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(ctx.store.to_payload(domain), ensure_ascii=False, indent=2)
    if fmt == "csv":
        return ctx.store.export_csv(domain).rstrip("\n")
    return ctx.store.format_text(domain).rstrip("\n")


def emit_domain(ctx: CommandContext, domain: Domain, out: Optional[Path] = None, fmt: str = "text") -> None:
    """--out があればファイルへ、なければ標準出力へ"""
    if out is not None:
        path = ctx.store.save_domain(domain, out)
        ctx.logger.info(f"wrote {len(domain)} orders to {path}")
    else:
        ctx.echo(render_domain(ctx, domain, fmt))


def parse_member(domain: Domain, text: str, name: str) -> LinearOrder:
    """コマンドライン引数の順序を解析"""
    try:
        return domain.parse(text)
    except ParseError as e:
        raise ParseError(f"--{name}: {e.message}") from None


def loose_tokens(text: str) -> list:
    """``2 4 1 3`` または ``2413`` を単語列に分解（ラベル集合がまだ無い場合）"""
    tokens = text.split()
    if len(tokens) == 1 and len(tokens[0]) > 1:
        return list(tokens[0])
    return tokens


def verdict_exit(value: bool) -> int:
    return int(ExitCode.OK if value else ExitCode.FALSE_VERDICT)
