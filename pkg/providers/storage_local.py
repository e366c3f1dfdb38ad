import csv
import io
import json
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

from core.domain import Domain
from core.errors import ParseError
from core.never import ConditionSet, NeverCondition, CONDITION_PATTERN
from core.models import REPORT_SCHEMA_VERSION
from core.orders import AlternativeSet, LinearOrder
from core.validation import ensure_labels
from services.logger import Logger
from services.schema_manager import SchemaManager

logger = Logger("LocalDomainStore")

HEADER = "alternatives:"
PathLike = Union[str, Path]


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _natural_key(label: str) -> Tuple[int, Any]:
    return (0, int(label)) if label.isdigit() else (1, label)


class LocalDomainStore:
    """ドメインファイル（テキスト/JSON）と条件ファイルの読み書き"""

    def __init__(self, base_dir: Optional[PathLike] = None):
        self.base_dir = Path(base_dir) if base_dir is not None else None

    def _resolve(self, path: PathLike) -> Path:
        p = Path(path)
        if self.base_dir is not None and not p.is_absolute():
            p = self.base_dir / p
        return p

    # ------------------------------------------------------------------
    # ドメイン

    def parse_text(self, text: str, source: Optional[str] = None) -> Domain:
        """``alternatives:`` ヘッダ + 1行1順序のテキストを解析"""
        alternatives: Optional[AlternativeSet] = None
        orders = []
        for number, raw in enumerate(text.splitlines(), start=1):
            line = _strip_comment(raw)
            if not line:
                continue
            if alternatives is None:
                if not line.lower().startswith(HEADER):
                    raise ParseError(f"expected '{HEADER}' header, got {line!r}", line_number=number, source=source)
                labels = line[len(HEADER):].split()
                ensure_labels(labels, source=source, line_number=number)
                alternatives = AlternativeSet(tuple(labels))
                continue
            try:
                orders.append(alternatives.parse_order(line))
            except ParseError as e:
                raise ParseError(e.message, line_number=number, source=source) from None
        if alternatives is None:
            raise ParseError(f"missing '{HEADER}' header", source=source)
        return Domain(alternatives, tuple(orders))

    def format_text(self, domain: Domain) -> str:
        lines = [f"{HEADER} {' '.join(domain.alternatives.labels)}"]
        lines.extend(domain.format(order) for order in domain.orders)
        return "\n".join(lines) + "\n"

    def to_payload(self, domain: Domain) -> Dict[str, Any]:
        labels = domain.alternatives.labels
        return {
            "schema_version": REPORT_SCHEMA_VERSION,
            "alternatives": list(labels),
            "orders": [[labels[x] for x in order.ranking] for order in domain.orders],
        }

    def from_payload(self, payload: Dict[str, Any], source: Optional[str] = None) -> Domain:
        """``domain`` スキーマで構造を、ラベル規則と各順序の網羅性をここで検証"""
        errors = SchemaManager().validate("domain", payload)
        if errors:
            raise ParseError(f"domain payload violates its schema: {errors[0]}", source=source)
        labels = payload["alternatives"]
        ensure_labels(labels, source=source)
        alternatives = AlternativeSet(tuple(labels))
        orders = []
        for i, order in enumerate(payload["orders"], start=1):
            if len(order) != len(labels) or set(order) != set(labels):
                raise ParseError(f"order {i} must rank every alternative exactly once", source=source)
            orders.append(LinearOrder(tuple(alternatives.id_of(label) for label in order)))
        return Domain(alternatives, tuple(orders))

    def load_domain(self, path: PathLike) -> Domain:
        """拡張子 .json はJSON、それ以外はテキストとして読み込み"""
        file_path = self._resolve(path)
        with open(file_path, "r", encoding="utf-8") as f:
            content = f.read()
        if file_path.suffix.lower() == ".json":
            try:
                payload = json.loads(content)
            except json.JSONDecodeError as e:
                raise ParseError(f"invalid JSON: {e.msg}", line_number=e.lineno, source=str(path)) from None
            domain = self.from_payload(payload, source=str(path))
        else:
            domain = self.parse_text(content, source=str(path))
        logger.debug(f"loaded {len(domain)} orders from {file_path}")
        return domain

    def save_domain(self, domain: Domain, path: PathLike) -> Path:
        """ドメインを保存（拡張子で形式を選択）"""
        file_path = self._resolve(path)
        file_path.parent.mkdir(parents=True, exist_ok=True)
        if file_path.suffix.lower() == ".json":
            content = json.dumps(self.to_payload(domain), ensure_ascii=False, indent=2) + "\n"
        elif file_path.suffix.lower() == ".csv":
            content = self.export_csv(domain)
        else:
            content = self.format_text(domain)
        with open(file_path, "w", encoding="utf-8", newline="") as f:
            f.write(content)
        logger.info(f"saved {len(domain)} orders to {file_path}")
        return file_path

    def export_csv(self, domain: Domain) -> str:
        """1行1順序、1列1順位のCSV"""
        output = io.StringIO()
        writer = csv.writer(output, lineterminator="\n")
        writer.writerow([f"rank_{i}" for i in range(1, domain.n + 1)])
        for order in domain.orders:
            writer.writerow([domain.alternatives.label(x) for x in order.ranking])
        return output.getvalue()

    # ------------------------------------------------------------------
    # never条件

    def parse_conditions(
        self,
        text: str,
        alternatives: Optional[AlternativeSet] = None,
        source: Optional[str] = None,
    ) -> Tuple[AlternativeSet, ConditionSet]:
        """1行1条件のテキストを解析（任意で ``alternatives:`` ヘッダ）"""
        entries: List[Tuple[int, str]] = []
        for number, raw in enumerate(text.splitlines(), start=1):
            line = _strip_comment(raw)
            if not line:
                continue
            if line.lower().startswith(HEADER):
                if alternatives is not None or entries:
                    raise ParseError("unexpected alternatives header", line_number=number, source=source)
                labels = line[len(HEADER):].split()
                ensure_labels(labels, source=source, line_number=number)
                alternatives = AlternativeSet(tuple(labels))
                continue
            entries.append((number, line))

        if alternatives is None:
            alternatives = self._infer_alternatives(entries, source)

        conditions = []
        for number, line in entries:
            try:
                conditions.append(NeverCondition.parse(line, alternatives))
            except ParseError as e:
                raise ParseError(e.message, line_number=number, source=source) from None
        return alternatives, ConditionSet(alternatives.size, frozenset(conditions))

    def _infer_alternatives(self, entries: List[Tuple[int, str]], source: Optional[str]) -> AlternativeSet:
        labels = set()
        for number, line in entries:
            match = CONDITION_PATTERN.match(line)
            if not match:
                raise ParseError(f"malformed never condition {line!r}", line_number=number, source=source)
            labels.update(token.strip() for token in match.group("triple").split(","))
        return AlternativeSet(tuple(sorted(labels, key=_natural_key)))

    def load_conditions(
        self, path: PathLike, alternatives: Optional[AlternativeSet] = None
    ) -> Tuple[AlternativeSet, ConditionSet]:
        file_path = self._resolve(path)
        with open(file_path, "r", encoding="utf-8") as f:
            return self.parse_conditions(f.read(), alternatives=alternatives, source=str(path))

    def save_conditions(self, alternatives: AlternativeSet, conditions: ConditionSet, path: PathLike) -> Path:
        file_path = self._resolve(path)
        file_path.parent.mkdir(parents=True, exist_ok=True)
        lines = [f"{HEADER} {' '.join(alternatives.labels)}"] + conditions.format_lines(alternatives)
        with open(file_path, "w", encoding="utf-8") as f:
            f.write("\n".join(lines) + "\n")
        return file_path
