import itertools

import pytest

from core.composition import tensor
from core.domain import (
    Domain,
    PairOutcome,
    Profile,
    extensions,
    find_isomorphism,
    has_maximal_width,
    is_ample,
    is_condorcet,
    is_condorcet_oracle,
    is_copious,
    is_isomorphism,
    is_maximal,
    is_peak_pit,
    is_transitive,
    isomorphism_classes,
    majority_relation,
    maximal_domains,
    maximal_extension,
)
from core.errors import DomainError, PreconditionError, ResourceLimitError
from core.fishburn import fishburn_domain
from core.never import conditions_of
from core.orders import AlternativeSet, LinearOrder, all_orders

ABC = AlternativeSet(tuple("abc"))


def domain_of(*orders: str) -> Domain:
    return Domain.from_texts("abc", list(orders))


@pytest.mark.unit
class TestDomainValue:
    """Domain の正規化と変換"""

    def test_orders_are_sorted_and_deduplicated(self):
        domain = domain_of("cba", "abc", "cba")
        assert [domain.format(u, compact=True) for u in domain] == ["abc", "cba"]

    def test_partial_rankings_rejected(self):
        with pytest.raises(PreconditionError):
            Domain(ABC, (LinearOrder.of(0, 1),))

    def test_restrict_keeps_labels(self, f4):
        restricted = f4.restrict({0, 2, 3})
        assert restricted.alternatives.labels == ("1", "3", "4")
        assert len(restricted) == 4

    def test_restrict_empty_subset(self, f4):
        with pytest.raises(PreconditionError):
            f4.restrict(set())

    def test_flip(self, cd3_top, cd3_bottom):
        assert cd3_top.flip() == cd3_bottom

    def test_with_labels(self, f4):
        relabelled = f4.with_labels(list("abcd"))
        assert relabelled.orders == f4.orders
        with pytest.raises(PreconditionError):
            f4.with_labels(["a"])


@pytest.mark.unit
class TestMajority:
    """多数決関係と推移性"""

    def test_majority_relation(self):
        profile = Profile(tuple(ABC.parse_order(t) for t in ("abc", "bca", "bac")))
        relation = majority_relation(profile)
        assert relation.prefers(1, 0)
        assert relation.prefers(1, 2)
        assert relation.prefers(0, 2)
        assert is_transitive(relation)

    def test_condorcet_cycle(self):
        profile = Profile(tuple(ABC.parse_order(t) for t in ("abc", "bca", "cab")))
        assert not is_transitive(majority_relation(profile))

    def test_outcome_is_antisymmetric(self):
        profile = Profile((ABC.parse_order("abc"),))
        relation = majority_relation(profile)
        assert relation.outcome(0, 1) is PairOutcome.FIRST
        assert relation.outcome(1, 0) is PairOutcome.SECOND

    def test_ties_are_not_a_tournament(self):
        profile = Profile((ABC.parse_order("abc"), ABC.parse_order("cba")))
        relation = majority_relation(profile)
        assert relation.has_ties
        with pytest.raises(PreconditionError):
            is_transitive(relation)

    def test_profile_needs_voters(self):
        with pytest.raises(PreconditionError):
            Profile(())

    def test_profile_on_one_alternative_set(self):
        with pytest.raises(PreconditionError):
            Profile((LinearOrder.of(0, 1), LinearOrder.of(0, 2)))


@pytest.mark.unit
class TestCondorcet:
    """Condorcet 判定とプロファイル総当たり"""

    def test_maximal_domains_on_three(self, cd3_top, cd3_middle, cd3_bottom):
        assert is_condorcet(cd3_top)
        assert is_condorcet(cd3_middle)
        assert is_condorcet(cd3_bottom)

    def test_all_orders_are_not_condorcet(self):
        assert not is_condorcet(Domain(ABC, all_orders(3)))

    def test_single_order(self):
        assert is_condorcet(domain_of("bca"))

    def test_empty_domain(self):
        assert not is_condorcet(Domain(ABC, ()))

    def test_fewer_than_three_alternatives(self):
        assert is_condorcet(Domain.from_texts("ab", ["ab", "ba"]))

    def test_oracle_examples(self, cd3_top):
        assert is_condorcet_oracle(cd3_top)
        assert not is_condorcet_oracle(domain_of("abc", "bca", "cab"))
        assert is_condorcet_oracle(domain_of("acb"))

    def test_oracle_agrees_on_every_subset_of_three(self):
        universe = all_orders(3)
        for size in range(1, len(universe) + 1):
            for chosen in itertools.combinations(universe, size):
                domain = Domain(ABC, chosen)
                assert is_condorcet_oracle(domain, voters=5) == is_condorcet(domain)

    def test_oracle_needs_odd_voters(self, cd3_top):
        with pytest.raises(PreconditionError):
            is_condorcet_oracle(cd3_top, voters=4)

    def test_oracle_cap(self):
        with pytest.raises(ResourceLimitError) as excinfo:
            is_condorcet_oracle(Domain(ABC, all_orders(3)), cap=100)
        assert excinfo.value.cap_name == "oracle_cap"


@pytest.mark.unit
class TestStructuralPredicates:
    """ample / copious / peak-pit / maximal width"""

    def test_ample(self, f4):
        assert is_ample(f4)
        assert not is_ample(domain_of("abc"))
        assert is_ample(domain_of("abc", "cba"))

    def test_copious(self, cd3_top, tensor_e):
        assert is_copious(cd3_top)
        assert is_copious(tensor_e)
        assert not is_copious(domain_of("abc", "cba"))

    def test_peak_pit(self, cd3_middle):
        assert not is_peak_pit(cd3_middle)
        assert is_peak_pit(domain_of("abc"))
        for n in range(3, 7):
            assert is_peak_pit(fishburn_domain(n))

    def test_maximal_width(self, f4, pair_right):
        assert has_maximal_width(f4)
        assert has_maximal_width(pair_right)
        assert not has_maximal_width(domain_of("abc", "acb"))


@pytest.mark.unit
class TestExtensions:
    """拡張探索と極大性"""

    def test_tensor_product_extensions(self, tensor_e):
        found = [tensor_e.format(u) for u in extensions(tensor_e)]
        assert found == ["2 3 5 1 4", "2 3 5 4 1"]
        assert not is_maximal(tensor_e)

    def test_maximal_domain_has_no_extension(self, cd3_top, cd3_bottom):
        assert extensions(cd3_top) == ()
        assert is_maximal(cd3_bottom)

    def test_single_order(self):
        domain = domain_of("abc")
        found = extensions(domain)
        assert ABC.parse_order("cba") in found
        assert not is_maximal(domain)

    def test_extensions_keep_condorcet(self, corpus):
        for domain in corpus.condorcet_domains(40, max_n=5, max_size=8, min_n=3):
            for u in extensions(domain):
                assert u not in domain
                assert is_condorcet(domain.union([u]))

    def test_non_condorcet_input(self):
        with pytest.raises(DomainError):
            extensions(Domain(ABC, all_orders(3)))

    def test_extension_cap(self):
        domain = Domain(AlternativeSet.of_size(11), (LinearOrder(tuple(range(11))),))
        with pytest.raises(ResourceLimitError) as excinfo:
            extensions(domain)
        assert excinfo.value.cap_name == "extension_cap"

    def test_maximal_extension(self):
        grown = maximal_extension(domain_of("abc"))
        assert ABC.parse_order("abc") in grown
        assert is_condorcet(grown)
        assert is_maximal(grown)
        assert len(grown) == 4

    def test_fishburn_domains_are_maximal(self):
        for n in range(2, 7):
            assert is_maximal(fishburn_domain(n))


@pytest.mark.unit
class TestIsomorphism:
    """同型・反転同型"""

    def test_flip_isomorphism_is_identity(self, cd3_top, cd3_bottom):
        assert find_isomorphism(cd3_top, cd3_bottom, flip=True) == {0: 0, 1: 1, 2: 2}

    def test_self_isomorphism_is_identity(self, f4):
        assert find_isomorphism(f4, f4) == {x: x for x in range(4)}

    def test_product_of_two_pairs_is_f4(self, f4):
        left = Domain.from_texts("ab", ["ab", "ba"])
        right = Domain.from_texts("cd", ["cd", "dc"])
        product = tensor(left, right, left.parse("ab"), right.parse("cd")).domain
        # 1->b, 2->a, 3->d, 4->c
        assert is_isomorphism(f4, product, {0: 1, 1: 0, 2: 3, 3: 2})
        mapping = find_isomorphism(f4, product)
        assert mapping is not None
        assert is_isomorphism(f4, product, mapping)

    def test_relabelled_domain_is_found(self, corpus, rng):
        for domain in corpus.condorcet_domains(30, max_n=5, max_size=10, min_n=2):
            images = list(range(domain.n))
            rng.shuffle(images)
            relabelled = domain.relabel(dict(enumerate(images)))
            mapping = find_isomorphism(domain, relabelled)
            assert mapping is not None
            assert is_isomorphism(domain, relabelled, mapping)
            inverse = find_isomorphism(relabelled, domain)
            assert inverse is not None

    def test_different_sizes(self, cd3_top):
        assert find_isomorphism(cd3_top, domain_of("abc")) is None

    def test_non_isomorphic_domains(self, cd3_top, cd3_middle):
        assert find_isomorphism(cd3_top, cd3_middle) is None
        assert find_isomorphism(cd3_top, cd3_middle, flip=True) is None

    def test_invalid_mapping(self, cd3_top):
        assert not is_isomorphism(cd3_top, cd3_top, {0: 0, 1: 1})

    def test_isomorphism_cap(self):
        domain = Domain(AlternativeSet.of_size(11), (LinearOrder(tuple(range(11))),))
        with pytest.raises(ResourceLimitError):
            find_isomorphism(domain, domain)


@pytest.mark.unit
class TestMaximalDomainsOnThree:
    """3選択肢の極大 Condorcet 領域の総当たり"""

    def setup_method(self):
        self.found = [d.with_labels(list("abc")) for d in maximal_domains(3)]

    def test_every_maximal_domain_has_four_orders_and_one_condition(self):
        assert len(self.found) == 9
        for domain in self.found:
            assert len(domain) == 4
            assert len(conditions_of(domain)) == 1

    def test_known_domains_are_found(self, cd3_top, cd3_middle, cd3_bottom):
        order_sets = [d.order_set for d in self.found]
        for known in (cd3_top, cd3_middle, cd3_bottom):
            assert known.order_set in order_sets

    def test_classes(self):
        assert len(isomorphism_classes(self.found)) == 3
        assert len(isomorphism_classes(self.found, flip=True)) == 2

    def test_search_cap(self):
        with pytest.raises(ResourceLimitError):
            maximal_domains(4)
