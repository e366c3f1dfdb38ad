"""例外階層（ライブラリ・サービス・CLI共通）"""
from typing import Any, Dict, Optional


class CondorcetDomainError(Exception):
    """ライブラリ全体の基本例外クラス"""

    default_code = "internal_error"

    def __init__(
        self,
        message: str,
        error_code: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None,
    ):
        super().__init__(message)
        self.message = message
        self.error_code = error_code or self.default_code
        self.details = details or {}

    def __str__(self) -> str:
        if self.error_code:
            return f"[{self.error_code}] {self.message}"
        return self.message


class PreconditionError(CondorcetDomainError):
    """前提条件違反（異なる選択肢集合、空の部分集合など）"""

    default_code = "precondition_violation"

    def __init__(
        self,
        message: str,
        field_name: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None,
    ):
        super().__init__(message, details=details)
        self.field_name = field_name

    def get_field_specific_message(self) -> str:
        if self.field_name:
            return f"{self.field_name}: {self.message}"
        return self.message


class DomainError(CondorcetDomainError):
    """Condorcet領域が必要な箇所に非Condorcet領域が渡された"""

    default_code = "domain_error"


class ResourceLimitError(CondorcetDomainError):
    """列挙上限（cap）を超えた"""

    default_code = "resource_limit"

    def __init__(self, cap_name: str, cap: int, requested: int, operation: str = ""):
        what = f"{operation}: " if operation else ""
        super().__init__(
            f"{what}{cap_name}={cap} exceeded (requested {requested})",
            details={"cap_name": cap_name, "cap": cap, "requested": requested},
        )
        self.cap_name = cap_name
        self.cap = cap
        self.requested = requested


class ParseError(CondorcetDomainError):
    """ドメインファイル・条件ファイルの構文エラー"""

    default_code = "parse_error"

    def __init__(
        self,
        message: str,
        line_number: Optional[int] = None,
        source: Optional[str] = None,
    ):
        where = ""
        if source and line_number is not None:
            where = f"{source}:{line_number}: "
        elif line_number is not None:
            where = f"line {line_number}: "
        elif source:
            where = f"{source}: "
        super().__init__(
            f"{where}{message}",
            details={"line_number": line_number, "source": source},
        )
        self.line_number = line_number
        self.source = source


class ConfigurationError(CondorcetDomainError):
    """設定ファイルエラー"""

    default_code = "configuration_error"
