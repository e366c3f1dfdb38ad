"""
線形順序の領域と構造述語
Condorcet判定は三つ組への制限パターンで行う。制限後の順序で現れない（選択肢, 位置）の組が
1つでもあれば、その三つ組でnever条件が成り立つ。
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from core.errors import DomainError, PreconditionError, ResourceLimitError
from core.models import (
    DEFAULT_EXTENSION_CAP,
    DEFAULT_ISOMORPHISM_CAP,
    DEFAULT_MAXIMAL_SEARCH_CAP,
    DEFAULT_ORACLE_CAP,
)
from core.orders import AlternativeSet, LinearOrder, all_orders, reverse

logger = logging.getLogger(__name__)

Triple = Tuple[int, int, int]
Pattern = Tuple[int, int, int]


@dataclass(frozen=True)
class Domain:
    """1つの選択肢集合上の順序の集合（重複なし・辞書式にソート済み）"""

    alternatives: AlternativeSet
    orders: Tuple[LinearOrder, ...]

    def __post_init__(self) -> None:
        canonical = tuple(sorted(set(self.orders)))
        full = frozenset(range(self.alternatives.size))
        for order in canonical:
            if order.alternatives != full or len(order) != self.alternatives.size:
                raise PreconditionError(
                    f"order {order} is not a ranking of all {self.alternatives.size} alternatives"
                )
        object.__setattr__(self, "orders", canonical)

    @classmethod
    def from_texts(cls, labels: Sequence[str], orders: Iterable[str]) -> "Domain":
        alternatives = AlternativeSet(tuple(labels))
        return cls(alternatives, tuple(alternatives.parse_order(text) for text in orders))

    @property
    def n(self) -> int:
        return self.alternatives.size

    def __len__(self) -> int:
        return len(self.orders)

    def __iter__(self) -> Iterator[LinearOrder]:
        return iter(self.orders)

    def __contains__(self, order: object) -> bool:
        return order in self.order_set

    @cached_property
    def order_set(self) -> FrozenSet[LinearOrder]:
        return frozenset(self.orders)

    @cached_property
    def position_table(self) -> Tuple[Tuple[int, ...], ...]:
        """順序ごとの、選択肢idで引ける0始まりの順位表"""
        table = []
        for order in self.orders:
            pos = [0] * self.n
            for i, x in enumerate(order.ranking):
                pos[x] = i
            table.append(tuple(pos))
        return tuple(table)

    def format(self, order: LinearOrder, compact: bool = False) -> str:
        return self.alternatives.format_order(order, compact=compact)

    def parse(self, text: str) -> LinearOrder:
        return self.alternatives.parse_order(text)

    def restrict(self, subset: Iterable[int]) -> "Domain":
        """``subset`` への制限（idは振り直し、ラベルは維持）"""
        keep = frozenset(subset)
        if not keep:
            raise PreconditionError("restriction to an empty subset", field_name="subset")
        alternatives, mapping = self.alternatives.subset(keep)
        return Domain(
            alternatives,
            tuple(
                LinearOrder(tuple(mapping[x] for x in order.ranking if x in keep))
                for order in self.orders
            ),
        )

    def flip(self) -> "Domain":
        return Domain(self.alternatives, tuple(reverse(order) for order in self.orders))

    def relabel(self, mapping: Dict[int, int], alternatives: Optional[AlternativeSet] = None) -> "Domain":
        """id の全単射による像"""
        return Domain(
            alternatives or self.alternatives,
            tuple(order.mapped(mapping) for order in self.orders),
        )

    def with_labels(self, labels: Sequence[str]) -> "Domain":
        if len(labels) != self.n:
            raise PreconditionError(f"expected {self.n} labels, got {len(labels)}")
        return Domain(AlternativeSet(tuple(labels)), self.orders)

    def union(self, orders: Iterable[LinearOrder]) -> "Domain":
        return Domain(self.alternatives, self.orders + tuple(orders))


def triples(n: int) -> Iterator[Triple]:
    return itertools.combinations(range(n), 3)  # type: ignore[return-value]


def _pattern(pos: Sequence[int], triple: Triple) -> Pattern:
    return tuple(sorted(triple, key=pos.__getitem__))  # type: ignore[return-value]


def triple_patterns(domain: Domain, triple: Triple) -> Set[Pattern]:
    """``triple`` に制限した順序パターン（重複なし）"""
    return {_pattern(pos, triple) for pos in domain.position_table}


def realised(patterns: Iterable[Pattern]) -> Set[Tuple[int, int]]:
    """制限後の順序で実際に現れる（選択肢, 1始まりの位置）の組"""
    return {(x, i + 1) for pattern in patterns for i, x in enumerate(pattern)}


def is_condorcet(domain: Domain) -> bool:
    """空でなく、すべての三つ組でいずれかのnever条件が成り立つ"""
    if not domain.orders:
        return False
    for triple in triples(domain.n):
        if len(realised(triple_patterns(domain, triple))) == 9:
            return False
    return True


def is_ample(domain: Domain) -> bool:
    if not domain.orders:
        return False
    table = domain.position_table
    for a, b in itertools.combinations(range(domain.n), 2):
        above = {pos[a] < pos[b] for pos in table}
        if len(above) != 2:
            return False
    return True


def is_copious(domain: Domain) -> bool:
    if not domain.orders:
        return False
    return all(len(triple_patterns(domain, t)) == 4 for t in triples(domain.n))


def is_peak_pit(domain: Domain) -> bool:
    """すべての三つ組で never-top か never-bottom が成り立つ"""
    if not domain.orders:
        return False
    for triple in triples(domain.n):
        used = realised(triple_patterns(domain, triple))
        if all((x, 1) in used and (x, 3) in used for x in triple):
            return False
    return True


def has_maximal_width(domain: Domain) -> bool:
    return any(reverse(order) in domain for order in domain.orders)


# ----------------------------------------------------------------------
# 多数決関係


class PairOutcome(str, Enum):
    FIRST = "first"  # 先の選択肢が多数派
    SECOND = "second"
    TIE = "tie"


@dataclass(frozen=True)
class Profile:
    """投票者の順序の列（重複可）"""

    voters: Tuple[LinearOrder, ...]

    def __post_init__(self) -> None:
        voters = tuple(self.voters)
        object.__setattr__(self, "voters", voters)
        if not voters:
            raise PreconditionError("a profile needs at least one voter", field_name="voters")
        first = voters[0].alternatives
        if any(v.alternatives != first for v in voters[1:]):
            raise PreconditionError("voters rank different alternative sets", field_name="voters")

    @property
    def alternatives(self) -> FrozenSet[int]:
        return self.voters[0].alternatives


@dataclass(frozen=True)
class MajorityRelation:
    """``a < b`` の組 ``(a, b)`` ごとの多数決の結果"""

    alternatives: Tuple[int, ...]
    outcomes: Dict[Tuple[int, int], PairOutcome]

    def outcome(self, a: int, b: int) -> PairOutcome:
        if a < b:
            return self.outcomes[(a, b)]
        flipped = self.outcomes[(b, a)]
        if flipped is PairOutcome.TIE:
            return flipped
        return PairOutcome.SECOND if flipped is PairOutcome.FIRST else PairOutcome.FIRST

    def prefers(self, a: int, b: int) -> bool:
        return self.outcome(a, b) is PairOutcome.FIRST

    @property
    def has_ties(self) -> bool:
        return any(o is PairOutcome.TIE for o in self.outcomes.values())


def majority_relation(profile: Profile) -> MajorityRelation:
    alternatives = tuple(sorted(profile.alternatives))
    outcomes: Dict[Tuple[int, int], PairOutcome] = {}
    for a, b in itertools.combinations(alternatives, 2):
        for_a = sum(1 for v in profile.voters if v.prefers(a, b))
        margin = 2 * for_a - len(profile.voters)
        if margin > 0:
            outcomes[(a, b)] = PairOutcome.FIRST
        elif margin < 0:
            outcomes[(a, b)] = PairOutcome.SECOND
        else:
            outcomes[(a, b)] = PairOutcome.TIE
    return MajorityRelation(alternatives, outcomes)


def is_transitive(relation: MajorityRelation) -> bool:
    """トーナメントが非巡回 ⇔ 勝ち数がちょうど 0..n-1"""
    if relation.has_ties:
        raise PreconditionError("majority relation has ties; transitivity needs a tournament")
    wins = {x: 0 for x in relation.alternatives}
    for (a, b), outcome in relation.outcomes.items():
        wins[a if outcome is PairOutcome.FIRST else b] += 1
    return sorted(wins.values()) == list(range(len(relation.alternatives)))


def is_condorcet_oracle(domain: Domain, voters: int = 3, cap: int = DEFAULT_ORACLE_CAP) -> bool:
    """領域から取った ``voters`` 人のプロファイルを総当たり"""
    if voters < 1 or voters % 2 == 0:
        raise PreconditionError("the oracle needs an odd number of voters", field_name="voters")
    requested = len(domain) ** voters
    if requested > cap:
        raise ResourceLimitError("oracle_cap", cap, requested, "is_condorcet_oracle")
    if not domain.orders:
        return False
    # 並び順に依存しないので重複組合せのみ調べる
    for combo in itertools.combinations_with_replacement(domain.orders, voters):
        if not is_transitive(majority_relation(Profile(combo))):
            return False
    return True


# ----------------------------------------------------------------------
# 拡張探索


def extensions(domain: Domain, cap: int = DEFAULT_EXTENSION_CAP) -> Tuple[LinearOrder, ...]:
    """追加してもCondorcetのままである領域外の順序

    接頭辞を深さ優先で伸ばし、完成した三つ組が9通りの（選択肢, 位置）をすべて実現した時点で枝を切る。
    """
    if not is_condorcet(domain):
        raise DomainError("extensions are defined for Condorcet domains only")
    n = domain.n
    if n > cap:
        raise ResourceLimitError("extension_cap", cap, n, "extensions")

    used = {t: realised(triple_patterns(domain, t)) for t in triples(n)}
    member_of: Dict[int, List[Tuple[Triple, int, int]]] = {x: [] for x in range(n)}
    for t in used:
        a, b, c = t
        member_of[a].append((t, b, c))
        member_of[b].append((t, a, c))
        member_of[c].append((t, a, b))

    found: List[LinearOrder] = []
    prefix: List[int] = []
    position: Dict[int, int] = {}

    def fits(z: int) -> bool:
        for t, p, q in member_of[z]:
            if p in position and q in position:
                first, second = (p, q) if position[p] < position[q] else (q, p)
                pairs = {(first, 1), (second, 2), (z, 3)}
                if len(used[t] | pairs) == 9:
                    return False
        return True

    def place() -> None:
        if len(prefix) == n:
            candidate = LinearOrder(tuple(prefix))
            if candidate not in domain:
                found.append(candidate)
            return
        for z in range(n):
            if z in position or not fits(z):
                continue
            position[z] = len(prefix)
            prefix.append(z)
            place()
            prefix.pop()
            del position[z]

    place()
    logger.debug("found %d extension(s) of a domain of size %d", len(found), len(domain))
    return tuple(sorted(found))


def is_maximal(domain: Domain, cap: int = DEFAULT_EXTENSION_CAP) -> bool:
    return not extensions(domain, cap=cap)


def maximal_extension(domain: Domain, cap: int = DEFAULT_EXTENSION_CAP) -> Domain:
    """最小の拡張を追加し続ける貪欲な補完"""
    current = domain
    while True:
        candidates = extensions(current, cap=cap)
        if not candidates:
            return current
        current = current.union([candidates[0]])


# ----------------------------------------------------------------------
# 同型


def is_isomorphism(first: Domain, second: Domain, mapping: Dict[int, int], flip: bool = False) -> bool:
    """``psi(first) == second`` か（``flip`` なら反転像と比較）"""
    if sorted(mapping) != list(range(first.n)) or sorted(mapping.values()) != list(range(second.n)):
        return False
    images = set()
    for order in first.orders:
        image = order.mapped(mapping)
        images.add(reverse(image) if flip else image)
    return images == second.order_set


def find_isomorphism(
    first: Domain,
    second: Domain,
    flip: bool = False,
    cap: int = DEFAULT_ISOMORPHISM_CAP,
) -> Optional[Dict[int, int]]:
    """``first`` を ``second`` に写す選択肢idの全単射（無ければNone）

    ``first`` の最小の順序の行き先を ``second`` の各順序に決めると全単射が確定する。恒等写像を最初に試す。
    """
    if len(first) != len(second) or first.n != second.n:
        return None
    if first.n > cap:
        raise ResourceLimitError("isomorphism_cap", cap, first.n, "find_isomorphism")
    identity = {x: x for x in range(first.n)}
    if is_isomorphism(first, second, identity, flip):
        return identity
    if not first.orders:
        return None
    seed = first.orders[0]
    for candidate in second.orders:
        target = reverse(candidate) if flip else candidate
        mapping = dict(zip(seed.ranking, target.ranking))
        if is_isomorphism(first, second, mapping, flip):
            return mapping
    return None


# ----------------------------------------------------------------------
# 小規模の全探索


def maximal_domains(n: int, cap: int = DEFAULT_MAXIMAL_SEARCH_CAP) -> List[Domain]:
    """``n`` 選択肢上のラベル付き極大Condorcet領域を総当たりで列挙"""
    if n > cap:
        raise ResourceLimitError("maximal_search_cap", cap, n, "maximal_domains")
    universe = all_orders(n)
    alternatives = AlternativeSet.of_size(n)
    found = []
    for mask in range(1, 1 << len(universe)):
        chosen = tuple(u for i, u in enumerate(universe) if mask >> i & 1)
        candidate = Domain(alternatives, chosen)
        if is_condorcet(candidate) and is_maximal(candidate):
            found.append(candidate)
    found.sort(key=lambda d: d.orders)
    return found


def isomorphism_classes(domains: Sequence[Domain], flip: bool = False) -> List[List[Domain]]:
    """同型類に分ける（``flip`` ならflip同型）"""
    classes: List[List[Domain]] = []
    for domain in domains:
        for group in classes:
            representative = group[0]
            if find_isomorphism(domain, representative) is not None or (
                flip and find_isomorphism(domain, representative, flip=True) is not None
            ):
                group.append(domain)
                break
        else:
            classes.append([domain])
    return classes
