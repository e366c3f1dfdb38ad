import itertools

import pytest

from core.domain import Domain, is_condorcet, triples
from core.errors import ParseError, PreconditionError, ResourceLimitError
from core.fishburn import alternating_scheme
from core.never import (
    NEVER_BOTTOM,
    NEVER_MIDDLE,
    NEVER_TOP,
    ConditionSet,
    NeverCondition,
    conditions_of,
    domain_satisfies,
    never_type,
    order_satisfies,
    orders_satisfying,
)
from core.orders import AlternativeSet, LinearOrder, all_orders, reverse

ABC = AlternativeSet(tuple("abc"))


def cond(text: str, alternatives: AlternativeSet = ABC) -> NeverCondition:
    return NeverCondition.parse(text, alternatives)


@pytest.mark.unit
class TestNeverCondition:
    """条件 xN{a,b,c}i の表現"""

    def test_parse_and_format(self):
        c = cond("bN{a,b,c}1")
        assert (c.triple, c.x, c.position) == ((0, 1, 2), 1, NEVER_TOP)
        assert c.format(ABC) == "bN{a,b,c}1"

    def test_triple_is_sorted(self):
        c = cond("bN{c,a,b}3")
        assert c.triple == (0, 1, 2)
        assert c.format(ABC) == "bN{a,b,c}3"

    def test_flipped_swaps_top_and_bottom(self):
        assert cond("aN{a,b,c}1").flipped() == cond("aN{a,b,c}3")
        assert cond("aN{a,b,c}2").flipped() == cond("aN{a,b,c}2")

    @pytest.mark.parametrize("text", ["bN{a,b,c}4", "b{a,b,c}1", "bN(a,b,c)1", ""])
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            cond(text)

    def test_triple_must_have_three_members(self):
        with pytest.raises(ParseError):
            cond("bN{a,b}1")

    def test_unknown_label(self):
        with pytest.raises(ParseError):
            cond("bN{a,b,z}1")

    def test_subject_outside_triple(self):
        alternatives = AlternativeSet(tuple("abcd"))
        with pytest.raises(PreconditionError):
            cond("dN{a,b,c}1", alternatives)

    def test_repeated_member(self):
        with pytest.raises(PreconditionError):
            NeverCondition((0, 0, 1), 0, NEVER_TOP)


@pytest.mark.unit
class TestSatisfaction:
    """順序・ドメインによる条件の充足"""

    def test_order_satisfies(self):
        c = cond("bN{a,b,c}1")
        assert order_satisfies(ABC.parse_order("abc"), c)
        assert not order_satisfies(ABC.parse_order("bac"), c)

    def test_order_on_more_alternatives(self):
        alternatives = AlternativeSet(tuple("xaybz"))
        u = alternatives.parse_order("xaybz")
        assert not order_satisfies(u, cond("aN{a,x,y}2", alternatives))
        assert order_satisfies(u, cond("aN{a,x,y}1", alternatives))

    def test_triple_not_ranked_by_order(self):
        c = NeverCondition((0, 1, 3), 0, NEVER_TOP)
        with pytest.raises(PreconditionError):
            order_satisfies(LinearOrder.of(0, 1, 2), c)

    def test_domain_satisfies(self, cd3_top):
        assert domain_satisfies(cd3_top, cond("bN{a,b,c}1"))
        assert not domain_satisfies(cd3_top, cond("aN{a,b,c}1"))

    def test_reversal_satisfies_flipped_condition(self):
        for u in all_orders(4):
            for t in triples(4):
                for x, i in itertools.product(t, (1, 2, 3)):
                    c = NeverCondition(t, x, i)
                    assert order_satisfies(u, c) == order_satisfies(reverse(u), c.flipped())


@pytest.mark.unit
class TestConditionsOf:
    """N(D) の計算"""

    def test_single_condition_of_maximal_domain(self, cd3_top):
        assert conditions_of(cd3_top).format_lines(ABC) == ["bN{a,b,c}1"]

    def test_single_order_satisfies_six_conditions(self):
        domain = Domain.from_texts("abc", ["abc"])
        assert len(conditions_of(domain)) == 6

    def test_empty_domain(self):
        with pytest.raises(PreconditionError):
            conditions_of(Domain(ABC, ()))

    def test_fishburn_conditions(self, f4):
        lines = set(conditions_of(f4).format_lines(f4.alternatives))
        assert {"2N{1,2,3}3", "2N{1,2,4}3", "3N{1,3,4}1", "3N{2,3,4}1"} <= lines

    def test_copious_domain_has_one_condition_per_triple(self, f4):
        conditions = conditions_of(f4)
        assert len(conditions) == 4
        assert all(len(conditions.for_triple(t)) == 1 for t in triples(4))
        assert conditions.is_complete()

    def test_antitone(self, corpus):
        for domain in corpus.domains(50, max_n=4, max_size=10, min_n=3):
            smaller = Domain(domain.alternatives, domain.orders[:1])
            assert conditions_of(domain).issubset(conditions_of(smaller))


@pytest.mark.unit
class TestOrdersSatisfying:
    """D(N) の列挙"""

    def test_single_condition(self, cd3_top):
        domain = orders_satisfying(ConditionSet.of(3, [cond("bN{a,b,c}1")]), alternatives=ABC)
        assert domain.order_set == cd3_top.order_set

    def test_no_conditions_gives_every_order(self):
        assert len(orders_satisfying(ConditionSet.of(3, []), n=3)) == 6

    def test_more_alternatives_than_conditions_mention(self):
        domain = orders_satisfying(ConditionSet.of(3, [cond("bN{a,b,c}1")]), n=4)
        assert len(domain) == 4 * 4

    def test_inconsistent_set_is_empty(self):
        conditions = ConditionSet.of(3, [cond(f"{x}N{{a,b,c}}1") for x in "abc"])
        assert len(orders_satisfying(conditions)) == 0

    def test_alternating_scheme(self, f4):
        assert orders_satisfying(alternating_scheme(4)).orders == f4.orders

    def test_round_trip_contains_domain(self, corpus):
        for domain in corpus.domains(60, max_n=5, max_size=8, min_n=3):
            closure = orders_satisfying(conditions_of(domain))
            assert domain.order_set <= closure.order_set

    def test_closure_of_condorcet_domain_is_condorcet(self, corpus):
        for domain in corpus.condorcet_domains(30, max_n=5, max_size=10, min_n=3):
            assert is_condorcet(orders_satisfying(conditions_of(domain)))

    def test_matches_brute_force(self, corpus):
        for domain in corpus.domains(20, max_n=4, max_size=5, min_n=3):
            conditions = conditions_of(domain)
            expected = {
                u for u in all_orders(domain.n)
                if all(order_satisfies(u, c) for c in conditions)
            }
            assert orders_satisfying(conditions).order_set == expected

    def test_n_smaller_than_conditions(self):
        with pytest.raises(PreconditionError):
            orders_satisfying(ConditionSet.of(4, [NeverCondition((1, 2, 3), 1, NEVER_TOP)]), n=3)

    def test_enumeration_cap(self):
        with pytest.raises(ResourceLimitError) as excinfo:
            orders_satisfying(ConditionSet.of(13, []))
        assert excinfo.value.cap_name == "enumeration_cap"


@pytest.mark.unit
class TestNeverType:
    """never-top / never-middle / never-bottom 型"""

    def test_single_dipped_shape(self, cd3_top):
        assert never_type(cd3_top) == {"never_top": True, "never_middle": False, "never_bottom": False}

    def test_single_peaked_shape(self, cd3_bottom):
        assert never_type(cd3_bottom)["never_bottom"] is True

    def test_middle(self, cd3_middle):
        assert never_type(cd3_middle)["never_middle"] is True
        assert conditions_of(cd3_middle).format_lines(ABC) == ["aN{a,b,c}2"]

    def test_constants(self):
        assert (NEVER_TOP, NEVER_MIDDLE, NEVER_BOTTOM) == (1, 2, 3)
