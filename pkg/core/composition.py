"""
Condorcet領域の連結・シャッフル領域・テンソル積
右側の選択肢idは左側の選択肢数だけシフトする。ラベルは衝突しなければそのまま、
衝突した右側のラベルには ``'`` を付ける。
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import comb
from typing import List, Optional, Sequence, Tuple

from core.domain import Domain, is_condorcet
from core.errors import DomainError, PreconditionError
from core.fishburn import fishburn_cardinality
from core.models import ScanReport, ScanRow
from core.orders import AlternativeSet, LinearOrder, reverse, shuffles

logger = logging.getLogger(__name__)

LEFT = "left"
RIGHT = "right"


@dataclass(frozen=True)
class Provenance:
    side: str
    label: str


@dataclass(frozen=True)
class CompositionResult:
    """テンソル積と継ぎ目 ``uv``、2つの部分の大きさ"""

    domain: Domain
    seam: LinearOrder
    part_sizes: Tuple[int, int, int]
    provenance: Tuple[Provenance, ...]

    @property
    def expected_size(self) -> int:
        s1, s2, shuffled = self.part_sizes
        return s1 * s2 + shuffled - 1


def joined_alternatives(
    left: AlternativeSet, right: AlternativeSet
) -> Tuple[AlternativeSet, Tuple[Provenance, ...]]:
    taken = set(left.labels)
    labels = list(left.labels)
    for label in right.labels:
        fresh = label
        while fresh in taken:
            fresh += "'"
        taken.add(fresh)
        labels.append(fresh)
    provenance = tuple(Provenance(LEFT, label) for label in left.labels) + tuple(
        Provenance(RIGHT, label) for label in right.labels
    )
    return AlternativeSet(tuple(labels)), provenance


def concatenate(first: Domain, second: Domain) -> Domain:
    """D1 ⊙ D2: D1 の各順序の後ろに D2 の各順序（シフト済み）を連結"""
    alternatives, _ = joined_alternatives(first.alternatives, second.alternatives)
    offset = first.n
    orders = tuple(x.concat(y.shifted(offset)) for x in first.orders for y in second.orders)
    return Domain(alternatives, orders)


def shuffle_domain(u: LinearOrder, v: LinearOrder, alternatives: Optional[AlternativeSet] = None) -> Domain:
    """u ⊕ v（``u`` と ``v`` のidを合わせて ``0..n+m-1`` であること）"""
    alternatives = alternatives or AlternativeSet.of_size(len(u) + len(v))
    return Domain(alternatives, shuffles(u, v))


def _require_member(domain: Domain, order: LinearOrder, name: str) -> None:
    if order not in domain:
        raise PreconditionError(f"{name} = {order} is not a member of its domain", field_name=name)


def tensor(first: Domain, second: Domain, u: LinearOrder, v: LinearOrder) -> CompositionResult:
    """(D1 ⊗ D2)(u, v) = (D1 ⊙ D2) ∪ (u ⊕ v')（v' は v を D1 の選択肢数だけシフトしたもの）"""
    _require_member(first, u, "u")
    _require_member(second, v, "v")
    for name, domain in (("left", first), ("right", second)):
        if not is_condorcet(domain):
            raise DomainError(f"{name} operand is not a Condorcet domain")
    alternatives, provenance = joined_alternatives(first.alternatives, second.alternatives)
    shifted = v.shifted(first.n)
    concatenated = concatenate(first, second)
    shuffled = shuffles(u, shifted)
    domain = Domain(alternatives, concatenated.orders + shuffled)
    result = CompositionResult(
        domain=domain,
        seam=u.concat(shifted),
        part_sizes=(len(first), len(second), len(shuffled)),
        provenance=provenance,
    )
    if len(domain) != result.expected_size:
        raise AssertionError(f"tensor has {len(domain)} orders, expected {result.expected_size}")
    logger.debug("tensor of %d x %d orders -> %d", len(first), len(second), len(domain))
    return result


def tensor_cardinality(s1: int, s2: int, m: int, n: int) -> int:
    """|D1|, |D2| と選択肢数から |(D1 ⊗ D2)(u, v)| を計算"""
    if s1 < 1 or s2 < 1:
        raise PreconditionError("domain sizes must be positive")
    return s1 * s2 + comb(n + m, m) - 1


def reversal_pair(domain: Domain) -> Optional[LinearOrder]:
    """反転も領域に含まれる最小の順序"""
    for order in domain.orders:
        if reverse(order) in domain:
            return order
    return None


def maximal_width_seam(domain: Domain) -> LinearOrder:
    """既定の継ぎ目: 反転対があればそれ、無ければ最小の順序"""
    if not domain.orders:
        raise PreconditionError("an empty domain has no seam order", field_name="domain")
    return reversal_pair(domain) or domain.orders[0]


def tensor_chain(
    domains: Sequence[Domain],
    seams: Optional[Sequence[Tuple[LinearOrder, LinearOrder]]] = None,
) -> CompositionResult:
    """テンソル積の左畳み込み（``seams[i]`` で途中の積と ``domains[i + 1]`` をつなぐ）"""
    if len(domains) < 2:
        raise PreconditionError("a tensor chain needs at least two domains", field_name="domains")
    if seams is not None and len(seams) != len(domains) - 1:
        raise PreconditionError(f"expected {len(domains) - 1} seams, got {len(seams)}", field_name="seams")
    current = domains[0]
    result: Optional[CompositionResult] = None
    for step, right in enumerate(domains[1:]):
        if seams is not None:
            u, v = seams[step]
        else:
            u, v = maximal_width_seam(current), maximal_width_seam(right)
        result = tensor(current, right, u, v)
        current = result.domain
    assert result is not None
    return result


def hypothesis_scan(max_n: int) -> ScanReport:
    """n = 3..max_n について |F_n ⊗ F_n| と |F_2n| を閉じた式だけで比較"""
    if max_n < 3:
        raise PreconditionError(f"max_n must be at least 3, got {max_n}", field_name="max_n")
    rows: List[ScanRow] = []
    first_exceedance = None
    for n in range(3, max_n + 1):
        size = fishburn_cardinality(n)
        product = tensor_cardinality(size, size, n, n)
        target = fishburn_cardinality(2 * n)
        comparison = "<" if product < target else (">" if product > target else "=")
        if comparison == ">" and first_exceedance is None:
            first_exceedance = n
        rows.append(ScanRow(n=n, product=product, fishburn_2n=target, comparison=comparison))
    return ScanReport(max_n=max_n, rows=rows, first_exceedance=first_exceedance)
