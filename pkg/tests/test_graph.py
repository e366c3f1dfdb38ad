import networkx as nx
import pytest

from core.composition import tensor
from core.domain import Domain, has_maximal_width
from core.errors import PreconditionError, ResourceLimitError
from core.fishburn import fishburn_domain
from core.graph import (
    InversionTriple,
    MaximalChain,
    build_graph,
    find_maximal_chain,
    find_median_violation,
    inversion_triples,
    is_connected,
    is_direct_connected,
    is_semi_connected,
    iter_maximal_chains,
    semi_connected_chain,
    verify_median_graph,
)
from core.orders import AlternativeSet, LinearOrder, all_orders, reverse


def labelled(domain: Domain, triples):
    labels = domain.alternatives.labels
    return {(labels[t.i], labels[t.j], labels[t.k]) for t in triples}


@pytest.mark.unit
class TestDomainGraph:
    """G_D の構築"""

    def test_single_order(self):
        graph = build_graph(Domain.from_texts("abc", ["abc"]))
        assert (graph.vertex_count, graph.edge_count) == (1, 0)

    def test_pair(self):
        graph = build_graph(Domain.from_texts("ab", ["ab", "ba"]))
        assert graph.edge_count == 1
        assert len(graph.permutahedron_edges) == 1

    def test_fishburn_four(self, f4):
        graph = build_graph(f4)
        stats = graph.stats()
        assert (stats.vertices, stats.edges, stats.permutahedron_edges) == (9, 10, 10)
        assert stats.diameter == 6

    def test_middle_domain_has_a_long_edge(self, cd3_middle):
        graph = build_graph(cd3_middle)
        p = cd3_middle.parse
        assert (p("abc"), p("bca")) in graph.edges()
        assert len(graph.permutahedron_edges) < graph.edge_count

    def test_graph_of_all_orders_is_the_permutahedron(self):
        domain = Domain(AlternativeSet.of_size(4), all_orders(4))
        graph = build_graph(domain)
        assert graph.edge_count == 36
        assert len(graph.permutahedron_edges) == 36

    def test_graph_cap(self, f4):
        with pytest.raises(ResourceLimitError) as excinfo:
            build_graph(f4, cap=5)
        assert excinfo.value.cap_name == "graph_cap"


@pytest.mark.unit
class TestConnectivity:
    """connected / semi-connected / direct-connected"""

    def test_connected(self, cd3_top, cd3_middle, cd3_bottom, f4):
        assert is_connected(cd3_top)
        assert is_connected(cd3_bottom)
        assert not is_connected(cd3_middle)
        assert is_connected(f4)
        assert is_connected(Domain.from_texts("abc", ["bac"]))

    def test_fishburn_domains_are_semi_connected(self):
        for n in range(2, 7):
            assert is_semi_connected(fishburn_domain(n))

    def test_semi_connected_needs_maximal_width(self):
        assert not is_semi_connected(Domain.from_texts("abc", ["abc", "acb"]))

    def test_reversed_pair_without_chain(self):
        assert not is_semi_connected(Domain.from_texts("abc", ["abc", "cba"]))

    def test_product_seam_decides_width(self, pair_left, pair_right):
        x = pair_left.parse("ab")
        wide = tensor(pair_left, pair_right, x, pair_right.parse("cde")).domain
        narrow = tensor(pair_left, pair_right, x, pair_right.parse("dec")).domain
        assert has_maximal_width(wide)
        assert not has_maximal_width(narrow)
        assert not is_semi_connected(narrow)

    def test_direct_connected(self, f4, cd3_middle):
        assert is_direct_connected(f4)
        assert not is_direct_connected(cd3_middle)


@pytest.mark.unit
class TestMaximalChains:
    """極大鎖と反転三つ組"""

    def test_chain_of_a_pair(self):
        domain = Domain.from_texts("ab", ["ab", "ba"])
        chain = find_maximal_chain(domain, domain.parse("ab"))
        assert chain is not None
        assert chain.path == (domain.parse("ab"), domain.parse("ba"))
        assert inversion_triples(chain) == frozenset()

    def test_fishburn_chain(self, f4):
        chain = find_maximal_chain(f4, f4.parse("1234"))
        assert chain is not None
        assert len(chain.path) == 7
        assert chain.path[-1] == f4.parse("4321")
        assert all(u in f4 for u in chain.path)

    def test_no_chain_between_distant_reversals(self):
        domain = Domain.from_texts("abc", ["abc", "cba"])
        assert find_maximal_chain(domain, domain.parse("abc")) is None

    def test_missing_reversal(self):
        domain = Domain.from_texts("abc", ["abc", "acb"])
        assert find_maximal_chain(domain, domain.parse("abc")) is None

    def test_start_outside_domain(self, f4):
        with pytest.raises(PreconditionError):
            find_maximal_chain(f4, f4.parse("3124"))

    def test_fishburn_inversion_triples(self, f4):
        chains = list(iter_maximal_chains(f4, f4.parse("1234")))
        assert len(chains) > 1
        for chain in chains:
            assert labelled(f4, inversion_triples(chain)) == {("1", "3", "4"), ("2", "3", "4")}

    def test_tensor_inversion_triples(self, tensor_e):
        start = tensor_e.parse("1 2 3 4 5")
        chains = list(iter_maximal_chains(tensor_e, start))
        assert chains
        for chain in chains:
            assert labelled(tensor_e, inversion_triples(chain)) == {
                ("1", "4", "5"),
                ("2", "4", "5"),
                ("3", "4", "5"),
            }

    def test_semi_connected_chain_starts_at_reversal_pair(self, f4):
        chain = semi_connected_chain(f4)
        assert chain is not None
        assert reverse(chain.start) in f4

    def test_chain_cap(self, f4):
        with pytest.raises(ResourceLimitError) as excinfo:
            list(iter_maximal_chains(f4, f4.parse("1234"), cap=2))
        assert excinfo.value.cap_name == "chain_cap"

    def test_chain_validation(self):
        a, b, c = LinearOrder.of(0, 1), LinearOrder.of(1, 0), LinearOrder.of(0, 1, 2)
        with pytest.raises(PreconditionError):
            MaximalChain((a, a), ((0, 1),))
        with pytest.raises(PreconditionError):
            MaximalChain((c,), ())
        assert MaximalChain.from_path((a, b)).swaps == ((0, 1),)

    def test_inversion_triple_ordering(self):
        assert sorted({InversionTriple(1, 2, 3), InversionTriple(0, 2, 3)})[0] == InversionTriple(0, 2, 3)


@pytest.mark.unit
class TestMedianGraph:
    """メディアングラフ判定"""

    def test_small_graphs(self):
        single = nx.Graph()
        single.add_node(0)
        assert verify_median_graph(single)
        assert verify_median_graph(nx.path_graph(2))
        assert verify_median_graph(nx.cycle_graph(4))
        assert not verify_median_graph(nx.cycle_graph(3))
        assert not verify_median_graph(nx.complete_bipartite_graph(2, 3))

    def test_empty_and_disconnected(self):
        assert not verify_median_graph(nx.Graph())
        disconnected = nx.Graph()
        disconnected.add_nodes_from([0, 1])
        assert not verify_median_graph(disconnected)

    def test_violation_is_reported(self):
        assert find_median_violation(nx.cycle_graph(3)) is not None
        assert find_median_violation(nx.cycle_graph(4)) is None

    def test_condorcet_domains(self, f4, cd3_middle, tensor_e):
        assert verify_median_graph(build_graph(f4))
        assert verify_median_graph(build_graph(cd3_middle))
        assert verify_median_graph(build_graph(tensor_e))
