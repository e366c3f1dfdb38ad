"""
Seeded random domains for the randomized test suites.
"""
import random
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from core.domain import Domain, is_condorcet
from core.models import DEFAULT_SEED
from core.orders import AlternativeSet, LinearOrder, all_orders

DomainPredicate = Callable[[Domain], bool]


@dataclass(frozen=True)
class CondorcetPair:
    left: Domain
    right: Domain
    u: LinearOrder
    v: LinearOrder


class DomainCorpus:
    """再現可能なランダム領域（乱数はすべて1つの ``random.Random`` から）"""

    def __init__(self, seed: int = DEFAULT_SEED, rng: Optional[random.Random] = None):
        self.seed = seed
        self.rng = rng or random.Random(seed)

    def random_domain(self, n: int, max_size: int) -> Domain:
        """L(A) から一様に選んだ 1..max_size 個の相異なる順序"""
        universe = all_orders(n)
        size = self.rng.randint(1, min(max_size, len(universe)))
        return Domain(AlternativeSet.of_size(n), tuple(self.rng.sample(universe, size)))

    def random_condorcet_domain(
        self,
        n: int,
        max_size: int,
        keep: DomainPredicate = is_condorcet,
    ) -> Domain:
        """ランダム順に順序を試し、``keep`` を満たす間だけ追加する貪欲成長"""
        universe = list(all_orders(n))
        self.rng.shuffle(universe)
        target = self.rng.randint(1, max_size)
        alternatives = AlternativeSet.of_size(n)
        domain = Domain(alternatives, (universe[0],))
        for order in universe[1:]:
            if len(domain) >= target:
                break
            candidate = domain.union([order])
            if keep(candidate):
                domain = candidate
        return domain

    def random_condorcet_pair(self, max_n: int = 5, max_size: int = 20, min_n: int = 1) -> CondorcetPair:
        left = self.random_condorcet_domain(self.rng.randint(min_n, max_n), max_size)
        right = self.random_condorcet_domain(self.rng.randint(min_n, max_n), max_size)
        return CondorcetPair(left, right, self.rng.choice(left.orders), self.rng.choice(right.orders))

    def domains(self, count: int, max_n: int = 5, max_size: int = 12, min_n: int = 1) -> Iterator[Domain]:
        for _ in range(count):
            yield self.random_domain(self.rng.randint(min_n, max_n), max_size)

    def condorcet_domains(self, count: int, max_n: int = 5, max_size: int = 12, min_n: int = 1) -> Iterator[Domain]:
        for _ in range(count):
            yield self.random_condorcet_domain(self.rng.randint(min_n, max_n), max_size)
