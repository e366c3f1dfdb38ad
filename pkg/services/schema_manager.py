"""
JSONレポートのスキーマ管理
バージョン付きスキーマの登録・取得・検証を一元化
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from jsonschema import Draft7Validator

from core.errors import CondorcetDomainError
from core.models import REPORT_SCHEMA_VERSION
from services.logger import Logger

logger = Logger("SchemaManager")


@dataclass
class SchemaDefinition:
    """スキーマ定義"""
    name: str
    version: str
    schema: Dict[str, Any]
    description: str = ""
    tags: List[str] = field(default_factory=list)


class SchemaBuilder:
    """スキーマビルダー"""

    @staticmethod
    def _verdict() -> Dict[str, Any]:
        return {
            "type": "object",
            "properties": {
                "value": {"type": ["boolean", "null"]},
                "skipped": {"type": ["string", "null"]},
            },
            "required": ["value", "skipped"],
        }

    @staticmethod
    def create_analysis_schema() -> Dict[str, Any]:
        """analyze レポートのスキーマ"""
        return {
            "type": "object",
            "properties": {
                "schema_version": {"type": "string"},
                "source": {"type": ["string", "null"]},
                "alternatives": {"type": "array", "items": {"type": "string"}},
                "size": {"type": "integer", "minimum": 0},
                "verdicts": {
                    "type": "object",
                    "additionalProperties": SchemaBuilder._verdict(),
                },
                "never_conditions": {
                    "type": "object",
                    "additionalProperties": {"type": "array", "items": {"type": "string"}},
                },
                "inversion_triples": {
                    "type": ["array", "null"],
                    "items": {"type": "array", "items": {"type": "string"}, "minItems": 3, "maxItems": 3},
                },
                "extensions": {"type": ["array", "null"], "items": {"type": "string"}},
                "graph": {
                    "type": ["object", "null"],
                    "properties": {
                        "vertices": {"type": "integer"},
                        "edges": {"type": "integer"},
                        "permutahedron_edges": {"type": "integer"},
                        "diameter": {"type": ["integer", "null"]},
                    },
                    "required": ["vertices", "edges", "permutahedron_edges"],
                },
                "diagnostics": {"type": "array", "items": {"type": "string"}},
            },
            "required": ["schema_version", "alternatives", "size", "verdicts"],
        }

    @staticmethod
    def create_scan_schema() -> Dict[str, Any]:
        """scan テーブルのスキーマ"""
        return {
            "type": "object",
            "properties": {
                "schema_version": {"type": "string"},
                "max_n": {"type": "integer", "minimum": 3},
                "rows": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "properties": {
                            "n": {"type": "integer"},
                            "product": {"type": "integer"},
                            "fishburn_2n": {"type": "integer"},
                            "comparison": {"enum": ["<", "=", ">"]},
                        },
                        "required": ["n", "product", "fishburn_2n", "comparison"],
                    },
                },
                "first_exceedance": {"type": ["integer", "null"]},
            },
            "required": ["schema_version", "max_n", "rows", "first_exceedance"],
        }

    @staticmethod
    def create_domain_schema() -> Dict[str, Any]:
        """ドメインJSON（compose/fishburn などの出力）のスキーマ"""
        return {
            "type": "object",
            "properties": {
                "schema_version": {"type": "string"},
                "alternatives": {"type": "array", "items": {"type": "string"}},
                "orders": {"type": "array", "items": {"type": "array", "items": {"type": "string"}}},
            },
            "required": ["alternatives", "orders"],
        }


class SchemaManager:
    """スキーマの登録と検証"""

    def __init__(self):
        self.schemas: Dict[str, Dict[str, SchemaDefinition]] = {}
        self._register_builtin()

    def _register_builtin(self):
        for name, schema, description in (
            ("analysis", SchemaBuilder.create_analysis_schema(), "analyze report"),
            ("scan", SchemaBuilder.create_scan_schema(), "hypothesis scan table"),
            ("domain", SchemaBuilder.create_domain_schema(), "domain payload"),
        ):
            self.register(SchemaDefinition(name, REPORT_SCHEMA_VERSION, schema, description))

    def register(self, schema_def: SchemaDefinition) -> None:
        Draft7Validator.check_schema(schema_def.schema)
        self.schemas.setdefault(schema_def.name, {})[schema_def.version] = schema_def
        logger.debug(f"Registered schema: {schema_def.name} v{schema_def.version}")

    def get_schema(self, name: str, version: Optional[str] = None) -> Optional[SchemaDefinition]:
        versions = self.schemas.get(name)
        if not versions:
            return None
        if version is None:
            return versions[max(versions.keys())]
        return versions.get(version)

    def list_schemas(self) -> List[str]:
        return sorted(self.schemas.keys())

    def validate(self, name: str, payload: Dict[str, Any], version: Optional[str] = None) -> List[str]:
        """ペイロードを検証してエラーメッセージのリストを返す（空なら有効）"""
        schema_def = self.get_schema(name, version)
        if schema_def is None:
            return [f"unknown schema: {name}"]
        validator = Draft7Validator(schema_def.schema)
        errors = sorted(validator.iter_errors(payload), key=lambda e: list(e.path))
        return [f"{'/'.join(str(p) for p in e.path) or '<root>'}: {e.message}" for e in errors]

    def ensure_valid(self, name: str, payload: Dict[str, Any]) -> None:
        errors = self.validate(name, payload)
        if errors:
            raise CondorcetDomainError(f"{name} payload violates its schema: {errors[0]}", error_code="schema_error")
