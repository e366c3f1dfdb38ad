import json
from pathlib import Path
from typing import Any, Dict, Optional, Union

from pydantic import ValidationError

from core.errors import ConfigurationError
from core.models import AppSettings
from services.logger import Logger

CAP_FIELDS = (
    "enumeration_cap",
    "extension_cap",
    "isomorphism_cap",
    "oracle_cap",
    "graph_cap",
    "chain_cap",
)

PathLike = Union[str, Path]


def _read(path: PathLike) -> AppSettings:
    with open(path, "r", encoding="utf-8") as f:
        return AppSettings(**json.load(f))


def _write(path: PathLike, settings: AppSettings) -> None:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    with open(target, "w", encoding="utf-8") as f:
        json.dump(settings.model_dump(), f, ensure_ascii=False, indent=2)


class SettingsManager:
    """列挙上限・シード・ログ設定の読み書き"""

    def __init__(self, config_file: PathLike = "config/settings.json", create_missing: bool = True):
        self.config_file = Path(config_file)
        self.create_missing = create_missing
        self._settings: Optional[AppSettings] = None
        self.logger = Logger(__name__)

    def load_settings(self) -> AppSettings:
        """設定を読み込み（読めない場合はデフォルトにフォールバック）"""
        if self._settings is not None:
            return self._settings

        if not self.config_file.exists():
            self._settings = AppSettings()
            if self.create_missing:
                self.save_settings()
            else:
                self.logger.warning(f"設定ファイルが見つかりません: {self.config_file}")
            return self._settings

        try:
            self._settings = _read(self.config_file)
        except (OSError, ValueError, TypeError, ValidationError) as e:
            self.logger.warning(f"設定ファイルの読み込みに失敗: {self.config_file}: {e}")
            self._settings = AppSettings()
        return self._settings

    def save_settings(self, settings: Optional[AppSettings] = None) -> bool:
        if settings is not None:
            self._settings = settings
        if self._settings is None:
            return False
        try:
            _write(self.config_file, self._settings)
        except OSError as e:
            self.logger.error(f"設定ファイルの保存に失敗: {e}")
            return False
        return True

    def update_setting(self, key: str, value: Any) -> bool:
        """1項目を更新して保存（範囲外の値は拒否）"""
        if key not in AppSettings.model_fields:
            return False
        try:
            updated = self.apply_overrides(self.load_settings(), {key: value})
        except ConfigurationError as e:
            self.logger.warning(e.message)
            return False
        return self.save_settings(updated)

    def get_setting(self, key: str, default: Any = None) -> Any:
        return getattr(self.load_settings(), key, default)

    def reset_to_defaults(self) -> bool:
        return self.save_settings(AppSettings())

    def export_settings(self, export_path: PathLike) -> bool:
        try:
            _write(export_path, self.load_settings())
        except OSError as e:
            self.logger.error(f"設定のエクスポートに失敗: {e}")
            return False
        return True

    def import_settings(self, import_path: PathLike) -> bool:
        """別ファイルの設定を取り込んで保存"""
        try:
            imported = _read(import_path)
        except (OSError, ValueError, TypeError, ValidationError) as e:
            self.logger.error(f"設定のインポートに失敗: {e}")
            return False
        return self.save_settings(imported)

    def get_caps(self) -> Dict[str, int]:
        """列挙上限の一覧"""
        settings = self.load_settings()
        return {name: getattr(settings, name) for name in CAP_FIELDS}

    def with_overrides(self, overrides: Dict[str, Any]) -> AppSettings:
        """CLIフラグによる上書きを適用した設定（ファイルには保存しない）"""
        return self.apply_overrides(self.load_settings(), overrides)

    @staticmethod
    def apply_overrides(settings: AppSettings, overrides: Dict[str, Any]) -> AppSettings:
        """None 以外の値だけを上書きして再検証"""
        changes = {k: v for k, v in overrides.items() if v is not None}
        if not changes:
            return settings
        try:
            return AppSettings(**{**settings.model_dump(), **changes})
        except ValidationError as e:
            error = e.errors()[0]
            field = ".".join(str(p) for p in error.get("loc", ()))
            raise ConfigurationError(f"invalid setting {field}: {error['msg']}") from e
