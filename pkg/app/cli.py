"""
コマンドラインのエントリポイント: ``condorcet-domains <グローバルオプション> <サブコマンド> ...``
終了コード: 0 成功/真の判定、1 偽の判定、2 使用法・前提条件エラー、3 上限超過、4 構文エラー
"""

import argparse
import sys
from typing import Optional, Sequence

from app.commands import COMMANDS
from app.commands.common import CommandContext
from core.logging_config import setup_logging
from core.models import AppSettings
from services.error_handler import ErrorHandler, ExitCode
from services.logger import Logger
from services.settings_manager import CAP_FIELDS, SettingsManager

logger = Logger("condorcet_domains.cli")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="condorcet-domains",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--config", default=None, help="settings JSON file (defaults are used without it)")
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING, ERROR or CRITICAL")
    parser.add_argument("--log-file", action="store_true", help="also log to <log_dir>/condorcet_domains.log")
    caps = parser.add_argument_group("enumeration caps")
    for name in CAP_FIELDS:
        flag = "--" + name.replace("_", "-")
        caps.add_argument(flag, dest=name, type=int, default=None, help=AppSettings.model_fields[name].description)

    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)
    for module in COMMANDS:
        sub = module.add_parser(subparsers)
        sub.set_defaults(handler=module.run)
    return parser


def resolve_settings(args: argparse.Namespace) -> AppSettings:
    """--config（任意）を読み込み、CLIフラグで上書き"""
    overrides = {name: getattr(args, name) for name in CAP_FIELDS}
    if args.log_level is not None:
        overrides["log_level"] = args.log_level
    if args.log_file:
        overrides["log_to_file"] = True
    if args.config:
        manager = SettingsManager(args.config, create_missing=False)
        return manager.with_overrides(overrides)
    return SettingsManager.apply_overrides(AppSettings(), overrides)


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as e:
        # argparse は使用法エラーで2、--help で0を返して終了する
        return int(e.code) if isinstance(e.code, int) else int(ExitCode.USAGE)

    handler = ErrorHandler(logger)
    try:
        settings = resolve_settings(args)
        setup_logging(settings.log_level, settings.log_to_file, settings.log_dir)
        ctx = CommandContext(settings=settings, error_handler=handler, out=out or sys.stdout)
        logger.debug(f"running {args.command} with caps { {name: getattr(settings, name) for name in CAP_FIELDS} }")
        return int(args.handler(args, ctx))
    except KeyboardInterrupt:
        print("error[interrupted]: interrupted", file=sys.stderr)
        return 130
    except Exception as e:  # noqa: BLE001 - すべての失敗を終了コードに変換
        response = handler.handle_error(e, context=args.command)
        print(handler.format_message(e), file=sys.stderr)
        return int(response["exit_code"])


if __name__ == "__main__":
    sys.exit(main())
