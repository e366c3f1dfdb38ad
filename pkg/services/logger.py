import logging
import time
from contextlib import contextmanager
from typing import Iterator, Optional


class Logger:
    """名前付きロガーの薄いラッパー（ハンドラは setup_logging が設定する）"""

    def __init__(self, name: str = "condorcet_domains"):
        self.name = name
        self.logger = logging.getLogger(name)

    def info(self, message: str):
        """情報ログ"""
        self.logger.info(message)

    def warning(self, message: str):
        """警告ログ"""
        self.logger.warning(message)

    def error(self, message: str, exc_info: Optional[BaseException] = None):
        """エラーログ"""
        if exc_info:
            self.logger.error(message, exc_info=exc_info)
        else:
            self.logger.error(message)

    def debug(self, message: str):
        """デバッグログ"""
        self.logger.debug(message)

    def critical(self, message: str, exc_info: Optional[BaseException] = None):
        """重大エラーログ"""
        if exc_info:
            self.logger.critical(message, exc_info=exc_info)
        else:
            self.logger.critical(message)

    def log_service_call(self, service_name: str, method: str, params: Optional[dict] = None):
        """サービス呼び出しのログ"""
        message = f"SERVICE_CALL: {service_name}.{method}"
        if params:
            message += f" - Params: {params}"
        self.info(message)

    @contextmanager
    def log_timing(self, operation: str) -> Iterator[None]:
        """処理時間をDEBUGで記録"""
        started = time.perf_counter()
        try:
            yield
        finally:
            self.debug(f"TIMING: {operation} took {time.perf_counter() - started:.3f}s")
