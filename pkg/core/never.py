"""never条件 ``xN{a,b,c}i`` と、領域と条件集合の相互変換"""

from __future__ import annotations

import logging
import re
from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

from core.domain import Domain, Triple, realised, triple_patterns, triples
from core.errors import ParseError, PreconditionError, ResourceLimitError
from core.models import DEFAULT_ENUMERATION_CAP
from core.orders import AlternativeSet, LinearOrder, restrict

logger = logging.getLogger(__name__)

# 位置1が最上位
NEVER_TOP = 1
NEVER_MIDDLE = 2
NEVER_BOTTOM = 3

CONDITION_PATTERN = re.compile(r"^\s*(?P<x>[^\s{}]+)\s*N\s*\{(?P<triple>[^}]*)\}\s*(?P<pos>[123])\s*$")


@dataclass(frozen=True, order=True)
class NeverCondition:
    """``triple`` への制限で ``x`` が ``position`` に来ない"""

    triple: Triple
    x: int
    position: int

    def __post_init__(self) -> None:
        triple = tuple(sorted(self.triple))
        if len(set(triple)) != 3:
            raise PreconditionError(f"{self.triple} is not a 3-subset", field_name="triple")
        if self.x not in triple:
            raise PreconditionError(f"{self.x} is not a member of {triple}", field_name="x")
        if self.position not in (1, 2, 3):
            raise PreconditionError(f"position {self.position} outside 1..3", field_name="position")
        object.__setattr__(self, "triple", triple)

    def flipped(self) -> "NeverCondition":
        """この条件を満たす順序の反転が満たす条件"""
        return NeverCondition(self.triple, self.x, 4 - self.position)

    def format(self, alternatives: AlternativeSet) -> str:
        members = ",".join(alternatives.label(a) for a in self.triple)
        return f"{alternatives.label(self.x)}N{{{members}}}{self.position}"

    @classmethod
    def parse(cls, text: str, alternatives: AlternativeSet) -> "NeverCondition":
        match = CONDITION_PATTERN.match(text)
        if not match:
            raise ParseError(f"malformed never condition {text.strip()!r}")
        members = [token.strip() for token in match.group("triple").split(",")]
        if len(members) != 3:
            raise ParseError(f"condition {text.strip()!r} must name exactly three alternatives")
        triple = tuple(alternatives.id_of(label) for label in members)
        return cls(triple, alternatives.id_of(match.group("x")), int(match.group("pos")))  # type: ignore[arg-type]


@dataclass(frozen=True)
class ConditionSet:
    """選択肢 ``0..n-1`` 上のnever条件（三つ組で索引）"""

    n: int
    conditions: FrozenSet[NeverCondition]

    def __post_init__(self) -> None:
        conditions = frozenset(self.conditions)
        for c in conditions:
            if max(c.triple) >= self.n or min(c.triple) < 0:
                raise PreconditionError(f"condition {c} mentions an id outside 0..{self.n - 1}")
        object.__setattr__(self, "conditions", conditions)

    @classmethod
    def of(cls, n: int, conditions: Iterable[NeverCondition]) -> "ConditionSet":
        return cls(n, frozenset(conditions))

    @cached_property
    def by_triple(self) -> Dict[Triple, FrozenSet[Tuple[int, int]]]:
        index: Dict[Triple, set] = defaultdict(set)
        for c in self.conditions:
            index[c.triple].add((c.x, c.position))
        return {t: frozenset(v) for t, v in index.items()}

    def for_triple(self, triple: Triple) -> FrozenSet[Tuple[int, int]]:
        return self.by_triple.get(tuple(sorted(triple)), frozenset())  # type: ignore[arg-type]

    def __iter__(self) -> Iterator[NeverCondition]:
        return iter(sorted(self.conditions))

    def __len__(self) -> int:
        return len(self.conditions)

    def __contains__(self, condition: object) -> bool:
        return condition in self.conditions

    def is_complete(self) -> bool:
        return all(t in self.by_triple for t in triples(self.n))

    def issubset(self, other: "ConditionSet") -> bool:
        return self.conditions <= other.conditions

    def union(self, other: "ConditionSet") -> "ConditionSet":
        return ConditionSet(max(self.n, other.n), self.conditions | other.conditions)

    def format_lines(self, alternatives: AlternativeSet) -> List[str]:
        return [c.format(alternatives) for c in self]


def order_satisfies(u: LinearOrder, condition: NeverCondition) -> bool:
    if not set(condition.triple) <= u.alternatives:
        raise PreconditionError(f"triple {condition.triple} is not ranked by {u}")
    restricted = restrict(u, condition.triple)
    return restricted.position(condition.x) + 1 != condition.position


def domain_satisfies(domain: Domain, condition: NeverCondition) -> bool:
    return all(order_satisfies(u, condition) for u in domain.orders)


def conditions_of(domain: Domain) -> ConditionSet:
    """N(D): 領域の全順序が満たすnever条件すべて"""
    if not domain.orders:
        raise PreconditionError("N(D) is defined for non-empty domains", field_name="domain")
    found = []
    for t in triples(domain.n):
        used = realised(triple_patterns(domain, t))
        found.extend(
            NeverCondition(t, x, i) for x in t for i in (1, 2, 3) if (x, i) not in used
        )
    return ConditionSet(domain.n, frozenset(found))


def orders_satisfying(
    conditions: ConditionSet,
    n: Optional[int] = None,
    alternatives: Optional[AlternativeSet] = None,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> Domain:
    """D(N): ``n`` 選択肢上ですべての条件を満たす順序

    接頭辞ごとに組み立てる。``z`` を置くと、それを含む三つ組での位置が決まる。
    2つ置いた時点で残りの1つの位置（最後）も決まるので、違反はできるだけ早く検出される。
    結果が空なら条件集合は矛盾している。
    """
    size = n if n is not None else conditions.n
    if size < conditions.n:
        raise PreconditionError(f"conditions mention {conditions.n} alternatives, n={size}")
    if size > cap:
        raise ResourceLimitError("enumeration_cap", cap, size, "orders_satisfying")
    alternatives = alternatives or AlternativeSet.of_size(size)

    # z -> [(zの禁止位置, 残り1, 残り2, 各メンバーの禁止位置)]
    member_of: Dict[int, List[Tuple[FrozenSet[int], int, int, Dict[int, FrozenSet[int]]]]] = {
        x: [] for x in range(size)
    }
    for t, pairs in conditions.by_triple.items():
        forbidden = {x: frozenset(i for y, i in pairs if y == x) for x in t}
        for z in t:
            p, q = (x for x in t if x != z)
            member_of[z].append((forbidden[z], p, q, forbidden))

    found: List[LinearOrder] = []
    prefix: List[int] = []
    placed: set = set()

    def fits(z: int) -> bool:
        for banned, p, q, forbidden in member_of[z]:
            k = (p in placed) + (q in placed)
            if k + 1 in banned:
                return False
            if k == 1:
                # 未配置のメンバーは最後に来る
                rest = q if p in placed else p
                if 3 in forbidden[rest]:
                    return False
        return True

    def place() -> None:
        if len(prefix) == size:
            found.append(LinearOrder(tuple(prefix)))
            return
        for z in range(size):
            if z in placed or not fits(z):
                continue
            placed.add(z)
            prefix.append(z)
            place()
            prefix.pop()
            placed.discard(z)

    place()
    logger.info("enumerated %d orders on %d alternatives from %d conditions", len(found), size, len(conditions))
    return Domain(alternatives, tuple(found))


def never_type(domain: Domain) -> Dict[str, bool]:
    """全三つ組に共通のnever位置があるか（never-top / -middle / -bottom）"""
    result = {"never_top": True, "never_middle": True, "never_bottom": True}
    if not domain.orders:
        return {key: False for key in result}
    names = {1: "never_top", 2: "never_middle", 3: "never_bottom"}
    for t in triples(domain.n):
        used = realised(triple_patterns(domain, t))
        for i, name in names.items():
            if all((x, i) in used for x in t):
                result[name] = False
    return result
