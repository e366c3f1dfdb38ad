"""
Logging configuration for the condorcet-domains toolkit
"""

import logging
import logging.handlers
from pathlib import Path

_HANDLER_TAG = "_condorcet_domains_handler"


def setup_logging(level: str = "WARNING", log_to_file: bool = False, log_dir: str = "logs") -> None:
    """アプリケーション全体のログ設定を初期化（再呼び出し時はハンドラを置き換える）"""

    numeric_level = getattr(logging, level.upper(), logging.WARNING)

    formatter = logging.Formatter(
        fmt='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )

    root_logger = logging.getLogger()
    root_logger.setLevel(numeric_level)

    # 以前に追加した自前のハンドラのみ除去
    for handler in list(root_logger.handlers):
        if getattr(handler, _HANDLER_TAG, False):
            root_logger.removeHandler(handler)
            handler.close()

    # コンソールハンドラ（stdout はレポート出力用なので stderr へ）
    console_handler = logging.StreamHandler()
    console_handler.setLevel(numeric_level)
    console_handler.setFormatter(formatter)
    setattr(console_handler, _HANDLER_TAG, True)
    root_logger.addHandler(console_handler)

    if log_to_file:
        path = Path(log_dir)
        path.mkdir(parents=True, exist_ok=True)

        file_handler = logging.handlers.RotatingFileHandler(
            path / "condorcet_domains.log",
            maxBytes=10*1024*1024,  # 10MB
            backupCount=5,
            encoding='utf-8'
        )
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(formatter)
        setattr(file_handler, _HANDLER_TAG, True)
        root_logger.addHandler(file_handler)
