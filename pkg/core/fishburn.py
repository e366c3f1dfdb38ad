"""Fishburnの交代スキーム領域 F_n と単峰・単谷領域"""

from __future__ import annotations

import logging
from math import comb
from typing import List, Tuple

from core.domain import Domain, triples
from core.errors import PreconditionError, ResourceLimitError
from core.models import DEFAULT_ENUMERATION_CAP, SchemeVariant
from core.never import NEVER_BOTTOM, NEVER_TOP, ConditionSet, NeverCondition, orders_satisfying
from core.orders import AlternativeSet, LinearOrder

logger = logging.getLogger(__name__)


def _check_size(n: int) -> None:
    if n < 2:
        raise PreconditionError(f"the alternating scheme needs n >= 2, got {n}", field_name="n")


def alternating_scheme(n: int, variant: SchemeVariant = SchemeVariant.EVEN_BOTTOM) -> ConditionSet:
    """三つ組ごとに中央の要素 ``j`` についての条件を1つ（ラベル ``1..n``）

    even-bottom: ``j`` が偶数なら ``jN3``、奇数なら ``jN1``。even-top は位置を入れ替える。
    """
    _check_size(n)
    even, odd = (NEVER_BOTTOM, NEVER_TOP) if variant is SchemeVariant.EVEN_BOTTOM else (NEVER_TOP, NEVER_BOTTOM)
    conditions = []
    for t in triples(n):
        middle = t[1]
        label = middle + 1
        conditions.append(NeverCondition(t, middle, even if label % 2 == 0 else odd))
    return ConditionSet(n, frozenset(conditions))


def fishburn_domain(
    n: int,
    variant: SchemeVariant = SchemeVariant.EVEN_BOTTOM,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> Domain:
    """ラベル ``1..n`` 上の F_n（またはその反転）"""
    scheme = alternating_scheme(n, variant)
    domain = orders_satisfying(scheme, n, alternatives=AlternativeSet.numbered(n), cap=cap)
    logger.info("F_%d (%s) has %d orders", n, variant.value, len(domain))
    return domain


def fishburn_cardinality(n: int) -> int:
    """|F_n| を厳密な整数で計算（どちらの変種も同じ大きさ）

    閉じた式の半整数係数を避けるため、2倍の値を求めて偶数であることを確認してから割る。
    """
    _check_size(n)
    doubled = (n + 3) * 2 ** (n - 2)
    if n % 2 == 0:
        doubled -= (2 * n - 3) * comb(n - 2, n // 2 - 1)
    else:
        doubled -= (n - 1) * comb(n - 1, (n - 1) // 2)
    if doubled % 2:
        raise ArithmeticError(f"2|F_{n}| = {doubled} is odd")
    return doubled // 2


def fishburn_table(max_n: int, min_n: int = 2) -> List[Tuple[int, int]]:
    _check_size(min_n)
    return [(n, fishburn_cardinality(n)) for n in range(min_n, max_n + 1)]


def _single_peaked_rankings(lo: int, hi: int) -> List[Tuple[int, ...]]:
    # 残りの最下位は軸区間 [lo, hi] の端
    if lo == hi:
        return [(lo,)]
    return [head + (hi,) for head in _single_peaked_rankings(lo, hi - 1)] + [
        head + (lo,) for head in _single_peaked_rankings(lo + 1, hi)
    ]


def single_peaked_domain(n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> Domain:
    """軸 ``1 < 2 < ... < n`` 上の単峰な順序すべて（2^(n-1) 個）"""
    if n < 1:
        raise PreconditionError(f"n must be positive, got {n}", field_name="n")
    if n > cap:
        raise ResourceLimitError("enumeration_cap", cap, n, "single_peaked_domain")
    rankings = _single_peaked_rankings(0, n - 1)
    return Domain(AlternativeSet.numbered(n), tuple(LinearOrder(r) for r in rankings))


def single_dipped_domain(n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> Domain:
    return single_peaked_domain(n, cap=cap).flip()
