from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel, Field, field_validator

# 列挙上限のデフォルト値
DEFAULT_INTERVAL_CAP = 10
DEFAULT_ENUMERATION_CAP = 12
DEFAULT_EXTENSION_CAP = 10
DEFAULT_ISOMORPHISM_CAP = 10
DEFAULT_ORACLE_CAP = 1_000_000
DEFAULT_GRAPH_CAP = 500
DEFAULT_CHAIN_CAP = 200_000
DEFAULT_MAXIMAL_SEARCH_CAP = 3
DEFAULT_SEED = 20190603

REPORT_SCHEMA_VERSION = "1.0"


class SchemeVariant(str, Enum):
    EVEN_BOTTOM = "bottom"  # F_n: 偶数の中央要素は最下位にならない
    EVEN_TOP = "top"  # F_n の反転版


class AppSettings(BaseModel):
    """アプリケーション設定"""

    # 列挙上限
    enumeration_cap: int = Field(default=DEFAULT_ENUMERATION_CAP, ge=1, le=20, description="never条件からの列挙の最大選択肢数")
    extension_cap: int = Field(default=DEFAULT_EXTENSION_CAP, ge=1, le=16, description="拡張探索の最大選択肢数")
    isomorphism_cap: int = Field(default=DEFAULT_ISOMORPHISM_CAP, ge=1, le=32, description="同型探索の最大選択肢数")
    oracle_cap: int = Field(default=DEFAULT_ORACLE_CAP, ge=1, description="プロファイル総当たりの最大件数")
    graph_cap: int = Field(default=DEFAULT_GRAPH_CAP, ge=1, description="G_D を構築する最大頂点数")
    chain_cap: int = Field(default=DEFAULT_CHAIN_CAP, ge=1, description="極大鎖探索の最大状態数")

    # 乱数・ログ
    seed: int = Field(default=DEFAULT_SEED, description="ランダムコーパスのシード")
    log_level: str = Field(default="WARNING", description="ログレベル")
    log_to_file: bool = Field(default=False, description="ファイルへのログ出力")
    log_dir: str = Field(default="logs", description="ログディレクトリ")

    @field_validator("log_level", mode="before")
    @classmethod
    def _validate_log_level(cls, v: object) -> str:
        """不正なログレベルはWARNINGにフォールバック"""
        level = str(v).upper()
        if level not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            return "WARNING"
        return level


class Verdict(BaseModel):
    """述語の判定結果。上限でスキップした場合は value=None"""

    value: Optional[bool] = None
    skipped: Optional[str] = None

    @property
    def is_skipped(self) -> bool:
        return self.skipped is not None

    def render(self) -> str:
        if self.skipped is not None:
            return f"skipped ({self.skipped})"
        return "true" if self.value else "false"


class GraphStats(BaseModel):
    vertices: int
    edges: int
    permutahedron_edges: int
    diameter: Optional[int] = None


class AnalysisReport(BaseModel):
    """analyze サブコマンドの出力"""

    schema_version: str = REPORT_SCHEMA_VERSION
    source: Optional[str] = None
    alternatives: List[str]
    size: int
    verdicts: Dict[str, Verdict]
    never_conditions: Dict[str, List[str]] = Field(default_factory=dict)
    inversion_triples: Optional[List[List[str]]] = None
    extensions: Optional[List[str]] = None
    graph: Optional[GraphStats] = None
    diagnostics: List[str] = Field(default_factory=list)


class ScanRow(BaseModel):
    n: int
    product: int
    fishburn_2n: int
    comparison: str


class ScanReport(BaseModel):
    schema_version: str = REPORT_SCHEMA_VERSION
    max_n: int
    rows: List[ScanRow]
    first_exceedance: Optional[int] = None
