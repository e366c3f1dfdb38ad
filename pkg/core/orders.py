"""
有限の選択肢集合上の線形順序
選択肢は連番id ``0..n-1``、表示ラベルは :class:`AlternativeSet` が持つ。
:class:`LinearOrder` は順位列（先頭が最良）だけを保持し、選択肢集合は参照しない。
"""

from __future__ import annotations

import itertools
import logging
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

from core.errors import ParseError, PreconditionError, ResourceLimitError
from core.models import DEFAULT_INTERVAL_CAP

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AlternativeSet:
    """選択肢 ``0..size-1`` と表示用ラベル"""

    labels: Tuple[str, ...]

    def __post_init__(self) -> None:
        labels = tuple(str(label) for label in self.labels)
        object.__setattr__(self, "labels", labels)
        if len(set(labels)) != len(labels):
            raise PreconditionError("alternative labels must be unique", field_name="labels")

    @classmethod
    def of_size(cls, n: int) -> "AlternativeSet":
        return cls(tuple(str(i) for i in range(n)))

    @classmethod
    def numbered(cls, n: int, start: int = 1) -> "AlternativeSet":
        return cls(tuple(str(i) for i in range(start, start + n)))

    @property
    def size(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    @cached_property
    def _index(self) -> Dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    @property
    def single_char(self) -> bool:
        return all(len(label) == 1 for label in self.labels)

    def label(self, alternative: int) -> str:
        return self.labels[alternative]

    def id_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise ParseError(f"unknown alternative {label!r}") from None

    def tokenize(self, text: str) -> List[str]:
        """順序テキストをラベル列に分解

        正式な形は ``2 4 1 3``。区切りなしの ``2413`` は全ラベルが1文字のときだけ受け付ける。
        """
        tokens = text.split()
        if len(tokens) == 1 and len(tokens[0]) > 1 and tokens[0] not in self._index:
            if not self.single_char:
                raise ParseError(f"compact order {tokens[0]!r} needs single-character labels")
            tokens = list(tokens[0])
        return tokens

    def parse_order(self, text: str, partial: bool = False) -> "LinearOrder":
        """順序テキストを解析（``partial`` なら部分集合の順位付けも可）"""
        tokens = self.tokenize(text)
        if not tokens:
            raise ParseError("empty order")
        try:
            order = LinearOrder(tuple(self.id_of(token) for token in tokens))
        except PreconditionError as e:
            raise ParseError(e.message) from None
        if not partial and len(order) != self.size:
            raise ParseError(
                f"order {text.strip()!r} ranks {len(order)} of {self.size} alternatives"
            )
        return order

    def format_order(self, order: "LinearOrder", compact: bool = False) -> str:
        labels = [self.labels[x] for x in order.ranking]
        if compact and self.single_char:
            return "".join(labels)
        return " ".join(labels)

    def subset(self, ids: Iterable[int]) -> Tuple["AlternativeSet", Dict[int, int]]:
        """部分集合を0から振り直し、新しい集合と旧id→新idの対応を返す"""
        kept = sorted(set(ids))
        for x in kept:
            if not 0 <= x < self.size:
                raise PreconditionError(f"alternative id {x} outside 0..{self.size - 1}")
        mapping = {old: new for new, old in enumerate(kept)}
        return AlternativeSet(tuple(self.labels[x] for x in kept)), mapping


@dataclass(frozen=True, order=True)
class LinearOrder:
    """相異なる選択肢idの厳密な順位（先頭が最良）"""

    ranking: Tuple[int, ...]

    def __post_init__(self) -> None:
        ranking = tuple(int(x) for x in self.ranking)
        object.__setattr__(self, "ranking", ranking)
        if len(set(ranking)) != len(ranking):
            raise PreconditionError(f"ranking {ranking} repeats an alternative")

    @classmethod
    def of(cls, *ids: int) -> "LinearOrder":
        return cls(tuple(ids))

    def __len__(self) -> int:
        return len(self.ranking)

    def __iter__(self) -> Iterator[int]:
        return iter(self.ranking)

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.ranking)

    @cached_property
    def positions(self) -> Dict[int, int]:
        """各選択肢の0始まりの順位"""
        return {x: i for i, x in enumerate(self.ranking)}

    @cached_property
    def alternatives(self) -> FrozenSet[int]:
        return frozenset(self.ranking)

    def position(self, x: int) -> int:
        try:
            return self.positions[x]
        except KeyError:
            raise PreconditionError(f"alternative {x} is not ranked by {self}") from None

    def prefers(self, a: int, b: int) -> bool:
        return self.position(a) < self.position(b)

    def shifted(self, offset: int) -> "LinearOrder":
        return LinearOrder(tuple(x + offset for x in self.ranking))

    def mapped(self, mapping: Dict[int, int]) -> "LinearOrder":
        return LinearOrder(tuple(mapping[x] for x in self.ranking))

    def concat(self, other: "LinearOrder") -> "LinearOrder":
        return LinearOrder(self.ranking + other.ranking)


def _same_alternatives(*orders: LinearOrder) -> None:
    first = orders[0].alternatives
    for other in orders[1:]:
        if other.alternatives != first:
            raise PreconditionError("orders are over different alternative sets")


def relation_mask(u: LinearOrder, n: Optional[int] = None) -> int:
    """``u`` が ``a`` を ``b`` より上位に置くときだけビット ``a*n+b`` が立つ（idは連番前提）"""
    size = n if n is not None else max(u.ranking, default=-1) + 1
    mask = 0
    ranking = u.ranking
    for i, a in enumerate(ranking):
        base = a * size
        for b in ranking[i + 1:]:
            mask |= 1 << (base + b)
    return mask


def reverse(u: LinearOrder) -> LinearOrder:
    return LinearOrder(u.ranking[::-1])


def restrict(u: LinearOrder, subset: Iterable[int]) -> LinearOrder:
    """``subset`` の要素だけの相対順位を残す"""
    keep = frozenset(subset)
    if not keep:
        raise PreconditionError("restriction to an empty subset", field_name="subset")
    foreign = keep - u.alternatives
    if foreign:
        raise PreconditionError(
            f"alternatives {sorted(foreign)} are not ranked by {u}", field_name="subset"
        )
    return LinearOrder(tuple(x for x in u.ranking if x in keep))


def is_between(v: LinearOrder, u: LinearOrder, w: LinearOrder) -> bool:
    """Kemenyの間にある関係: ``u`` と ``w`` が一致する比較を ``v`` もすべて保つ"""
    _same_alternatives(v, u, w)
    pw, pv = w.positions, v.positions
    ranking = u.ranking
    for i, a in enumerate(ranking):
        for b in ranking[i + 1:]:
            # u では a が b より上
            if pw[a] < pw[b] and pv[a] > pv[b]:
                return False
    return True


def _adjacent_swaps(ranking: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
    for i in range(len(ranking) - 1):
        swapped = list(ranking)
        swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
        yield tuple(swapped)


def interval(u: LinearOrder, w: LinearOrder, cap: int = DEFAULT_INTERVAL_CAP) -> FrozenSet[LinearOrder]:
    """``u`` と ``w`` の間にあるすべての順序（区間）

    ``u`` から隣接互換で幅優先に広げる。区間は ``u ∩ w`` の線形拡大の集合で、隣接互換で連結。
    """
    _same_alternatives(u, w)
    if len(u) > cap:
        raise ResourceLimitError("interval_cap", cap, len(u), "interval")
    pu, pw = u.positions, w.positions
    common = [
        (a, b)
        for a in u.ranking
        for b in u.ranking
        if pu[a] < pu[b] and pw[a] < pw[b]
    ]

    def between(ranking: Tuple[int, ...]) -> bool:
        pos = {x: i for i, x in enumerate(ranking)}
        return all(pos[a] < pos[b] for a, b in common)

    seen = {u.ranking}
    queue = deque([u.ranking])
    while queue:
        current = queue.popleft()
        for candidate in _adjacent_swaps(current):
            if candidate not in seen and between(candidate):
                seen.add(candidate)
                queue.append(candidate)
    logger.debug("interval of size %d between %s and %s", len(seen), u, w)
    return frozenset(LinearOrder(r) for r in seen)


def is_adjacent(u: LinearOrder, w: LinearOrder) -> bool:
    """``w`` が ``u`` の隣接する1組を入れ替えたものか"""
    if len(u) != len(w):
        return False
    diff = [i for i, (a, b) in enumerate(zip(u.ranking, w.ranking)) if a != b]
    if len(diff) != 2 or diff[1] != diff[0] + 1:
        return False
    i = diff[0]
    return u.ranking[i] == w.ranking[i + 1] and u.ranking[i + 1] == w.ranking[i]


def shuffles(u: LinearOrder, v: LinearOrder) -> Tuple[LinearOrder, ...]:
    """``u`` と ``v`` のすべての交互配置（順位列の辞書式順）"""
    if u.alternatives & v.alternatives:
        raise PreconditionError(
            f"shuffle operands overlap on {sorted(u.alternatives & v.alternatives)}"
        )
    n, m = len(u), len(v)
    result = []
    for slots in itertools.combinations(range(n + m), n):
        chosen = set(slots)
        left, right = iter(u.ranking), iter(v.ranking)
        result.append(
            LinearOrder(tuple(next(left) if i in chosen else next(right) for i in range(n + m)))
        )
    result.sort()
    return tuple(result)


def inversions(u: LinearOrder, reference: LinearOrder) -> int:
    """``reference`` と逆順に並ぶ組の数"""
    _same_alternatives(u, reference)
    pos = u.positions
    ranking = reference.ranking
    return sum(
        1
        for i, a in enumerate(ranking)
        for b in ranking[i + 1:]
        if pos[a] > pos[b]
    )


def kendall_tau(u: LinearOrder, w: LinearOrder) -> int:
    return inversions(u, w)


def all_orders(n: int) -> Tuple[LinearOrder, ...]:
    return tuple(LinearOrder(p) for p in itertools.permutations(range(n)))
