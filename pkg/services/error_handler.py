from datetime import datetime, timezone
from enum import IntEnum
from typing import Any, Dict, Optional
import traceback

from core.errors import (
    CondorcetDomainError,
    ConfigurationError,
    DomainError,
    ParseError,
    PreconditionError,
    ResourceLimitError,
)

__all__ = [
    "CondorcetDomainError",
    "ConfigurationError",
    "DomainError",
    "ErrorHandler",
    "ExitCode",
    "ParseError",
    "PreconditionError",
    "ResourceLimitError",
]


class ExitCode(IntEnum):
    """CLIの終了コード（安定した契約）"""
    OK = 0
    FALSE_VERDICT = 1
    USAGE = 2
    RESOURCE_LIMIT = 3
    PARSE = 4


class ErrorHandler:
    """例外を終了コード・1行メッセージ・レスポンス辞書へ変換する"""

    def __init__(self, logger=None):
        self.logger = logger
        self.error_messages = self._get_error_messages()

    def _get_error_messages(self) -> Dict[str, str]:
        """エラーコード別の補足説明"""
        return {
            "precondition_violation": "入力が操作の前提条件を満たしていません",
            "domain_error": "Condorcet領域が必要な操作です",
            "resource_limit": "列挙上限を超えました。対応する --*-cap で上限を変更できます",
            "parse_error": "ファイルの形式が正しくありません",
            "configuration_error": "設定ファイルに問題があります",
            "internal_error": "予期しないエラーが発生しました",
        }

    def exit_code_for(self, error: BaseException) -> ExitCode:
        """例外の種類から終了コードを決める（構文・上限以外はすべて使用法エラー）"""
        if isinstance(error, ParseError):
            return ExitCode.PARSE
        if isinstance(error, ResourceLimitError):
            return ExitCode.RESOURCE_LIMIT
        return ExitCode.USAGE

    def error_code_for(self, error: BaseException) -> str:
        if isinstance(error, CondorcetDomainError):
            return error.error_code
        if isinstance(error, OSError):
            return "io_error"
        return "internal_error"

    def format_message(self, error: BaseException) -> str:
        """機械可読な1行メッセージ ``error[<code>]: <message>``"""
        if isinstance(error, PreconditionError):
            message = error.get_field_specific_message()
        elif isinstance(error, CondorcetDomainError):
            message = error.message
        else:
            message = str(error)
        message = " ".join(message.split())
        return f"error[{self.error_code_for(error)}]: {message}"

    def handle_error(self, error: BaseException, context: Optional[str] = None) -> Dict[str, Any]:
        """エラーの処理と適切なレスポンスの生成"""

        error_info = self._collect_error_info(error, context)

        if self.logger:
            message = f"Error occurred in {context or 'unknown context'}: {error_info['message']}"
            if isinstance(error, CondorcetDomainError):
                # 想定内のエラーはトレースバックなし
                self.logger.info(message)
            else:
                self.logger.error(message, exc_info=error)

        return {
            "success": False,
            "error": {
                "message": error_info["message"],
                "code": error_info["code"],
                "type": error_info["type"],
                "hint": self.error_messages.get(error_info["code"]),
                "details": error_info.get("details", {}),
            },
            "exit_code": int(self.exit_code_for(error)),
            "timestamp": error_info["timestamp"],
            "context": context,
        }

    def _collect_error_info(self, error: BaseException, context: Optional[str] = None) -> Dict[str, Any]:
        """エラー情報の収集"""
        error_info: Dict[str, Any] = {
            "message": error.message if isinstance(error, CondorcetDomainError) else str(error),
            "type": type(error).__name__,
            "code": self.error_code_for(error),
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "context": context,
            "traceback": "".join(traceback.format_exception(type(error), error, error.__traceback__)),
        }
        if isinstance(error, CondorcetDomainError):
            error_info["details"] = error.details
        return error_info
