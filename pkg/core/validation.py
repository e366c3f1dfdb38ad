from typing import Any, Iterable, List, Optional
import re
import logging

from .errors import ParseError

logger = logging.getLogger(__name__)

# 条件式 xN{a,b,c}i と注釈記法を壊す文字は使わせない
_FORBIDDEN_LABEL_CHARS = re.compile(r"[\s#{},]")
MAX_LABEL_LENGTH = 32


def validate_label(label: Any) -> List[str]:
    """選択肢ラベル1件の検証"""
    errors = []
    if not isinstance(label, str):
        errors.append(f"ラベル {label!r} は文字列である必要があります")
        return errors
    if not label:
        errors.append("ラベルが空です")
    elif len(label) > MAX_LABEL_LENGTH:
        errors.append(f"ラベル {label!r} は{MAX_LABEL_LENGTH}文字以内で入力してください")
    elif _FORBIDDEN_LABEL_CHARS.search(label):
        errors.append(f"ラベル {label!r} に空白・#・括弧・カンマは使用できません")
    return errors


def validate_labels(labels: Iterable[Any]) -> List[str]:
    """選択肢ラベル列の検証（空・重複・不正文字）"""
    labels = list(labels)
    errors: List[str] = []
    if not labels:
        errors.append("選択肢が1つもありません")
        return errors
    for label in labels:
        errors.extend(validate_label(label))
    seen = set()
    for label in labels:
        if label in seen:
            errors.append(f"ラベル {label!r} が重複しています")
        seen.add(label)
    return errors


def ensure_labels(labels: Iterable[Any], source: Optional[str] = None, line_number: Optional[int] = None) -> None:
    """ラベルが不正ならParseErrorを送出"""
    errors = validate_labels(labels)
    if errors:
        raise ParseError("; ".join(errors), line_number=line_number, source=source)
