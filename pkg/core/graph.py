"""領域グラフ G_D、連結性、メディアン判定、極大鎖"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from functools import cached_property
from math import comb
from typing import Dict, FrozenSet, Iterator, List, Optional, Set, Tuple, Union

import networkx as nx

from core.domain import Domain, has_maximal_width
from core.errors import PreconditionError, ResourceLimitError
from core.models import DEFAULT_CHAIN_CAP, DEFAULT_GRAPH_CAP, GraphStats
from core.orders import LinearOrder, is_adjacent, kendall_tau, relation_mask, reverse

logger = logging.getLogger(__name__)

Swap = Tuple[int, int]


@dataclass(frozen=True)
class DomainGraph:
    """G_D: 間に領域の第三の順序がない2順序を辺で結ぶ

    端点が隣接互換1回で移り合う辺（置換多面体の辺）には ``adjacent=True`` を付ける。
    """

    domain: Domain
    graph: nx.Graph

    @property
    def vertex_count(self) -> int:
        return self.graph.number_of_nodes()

    @property
    def edge_count(self) -> int:
        return self.graph.number_of_edges()

    @cached_property
    def permutahedron_edges(self) -> List[Tuple[LinearOrder, LinearOrder]]:
        return [(u, w) for u, w, adjacent in self.graph.edges(data="adjacent") if adjacent]

    def edges(self) -> List[Tuple[LinearOrder, LinearOrder]]:
        return sorted(tuple(sorted(edge)) for edge in self.graph.edges())  # type: ignore[misc]

    def stats(self) -> GraphStats:
        diameter = None
        if self.vertex_count and nx.is_connected(self.graph):
            diameter = nx.diameter(self.graph)
        return GraphStats(
            vertices=self.vertex_count,
            edges=self.edge_count,
            permutahedron_edges=len(self.permutahedron_edges),
            diameter=diameter,
        )


def build_graph(domain: Domain, cap: int = DEFAULT_GRAPH_CAP) -> DomainGraph:
    """G_D を構築（第三の順序が ``u ∩ w`` を含むとき、それは ``u`` と ``w`` の間にある）"""
    if len(domain) > cap:
        raise ResourceLimitError("graph_cap", cap, len(domain), "build_graph")
    orders = domain.orders
    masks = [relation_mask(u, domain.n) for u in orders]
    graph = nx.Graph()
    graph.add_nodes_from(orders)
    for i, j in itertools.combinations(range(len(orders)), 2):
        common = masks[i] & masks[j]
        if any(
            masks[k] & common == common
            for k in range(len(orders))
            if k != i and k != j
        ):
            continue
        graph.add_edge(orders[i], orders[j], adjacent=is_adjacent(orders[i], orders[j]))
    logger.debug("G_D: %d vertices, %d edges", graph.number_of_nodes(), graph.number_of_edges())
    return DomainGraph(domain, graph)


def is_connected(domain: Domain, cap: int = DEFAULT_GRAPH_CAP) -> bool:
    """G_D が置換多面体の部分グラフか"""
    graph = build_graph(domain, cap=cap)
    return graph.edge_count == len(graph.permutahedron_edges)


# ----------------------------------------------------------------------
# 極大鎖


@dataclass(frozen=True)
class MaximalChain:
    """``path[0]`` から反転順序まで隣接互換で単調に進む経路"""

    path: Tuple[LinearOrder, ...]
    swaps: Tuple[Swap, ...]

    def __post_init__(self) -> None:
        if not self.path:
            raise PreconditionError("a chain needs at least one order", field_name="path")
        n = len(self.path[0])
        if len(self.path) != comb(n, 2) + 1 or len(self.swaps) != len(self.path) - 1:
            raise PreconditionError(f"a maximal chain on {n} alternatives has {comb(n, 2) + 1} orders")
        if self.path[-1] != reverse(self.path[0]):
            raise PreconditionError("chain does not end at the reversal of its start")
        if len({frozenset(s) for s in self.swaps}) != len(self.swaps):
            raise PreconditionError("chain swaps some pair twice")
        for before, after, swap in zip(self.path, self.path[1:], self.swaps):
            if not is_adjacent(before, after) or _swapped_pair(before, after) != swap:
                raise PreconditionError(f"{before} -> {after} is not the neighbouring swap {swap}")

    @property
    def start(self) -> LinearOrder:
        return self.path[0]

    @classmethod
    def from_path(cls, path: Tuple[LinearOrder, ...]) -> "MaximalChain":
        return cls(path, tuple(_swapped_pair(a, b) for a, b in zip(path, path[1:])))


def _swapped_pair(before: LinearOrder, after: LinearOrder) -> Swap:
    for i, (a, b) in enumerate(zip(before.ranking, after.ranking)):
        if a != b:
            return (min(a, b), max(a, b))
    raise PreconditionError("orders are identical")


def _forward_steps(current: Tuple[int, ...], rank_in_start: Dict[int, int]) -> Iterator[Tuple[int, ...]]:
    # 始点の向きから反転の向きへ組を動かす互換だけ
    for i in range(len(current) - 1):
        a, b = current[i], current[i + 1]
        if rank_in_start[a] < rank_in_start[b]:
            step = list(current)
            step[i], step[i + 1] = b, a
            yield tuple(step)


def _check_endpoints(domain: Domain, w: LinearOrder) -> bool:
    if w not in domain:
        raise PreconditionError(f"{domain.format(w)} is not a member of the domain", field_name="w")
    return reverse(w) in domain


def iter_maximal_chains(domain: Domain, w: LinearOrder, cap: int = DEFAULT_CHAIN_CAP) -> Iterator[MaximalChain]:
    """領域内で ``w`` からその反転までのすべての極大鎖

    反転に到達できない状態は記録し、展開は1回だけ。``cap`` は展開回数の上限。
    """
    if not _check_endpoints(domain, w):
        return
    rank_in_start = w.positions
    target = reverse(w).ranking
    members = {u.ranking for u in domain.orders}
    dead: Set[Tuple[int, ...]] = set()
    expanded = 0
    path: List[Tuple[int, ...]] = [w.ranking]

    def walk(current: Tuple[int, ...]) -> Iterator[MaximalChain]:
        nonlocal expanded
        if current == target:
            yield MaximalChain.from_path(tuple(LinearOrder(r) for r in path))
            return
        expanded += 1
        if expanded > cap:
            raise ResourceLimitError("chain_cap", cap, expanded, "iter_maximal_chains")
        alive = False
        for step in _forward_steps(current, rank_in_start):
            if step not in members or step in dead:
                continue
            path.append(step)
            for chain in walk(step):
                alive = True
                yield chain
            path.pop()
        if not alive:
            dead.add(current)

    yield from walk(w.ranking)


def find_maximal_chain(domain: Domain, w: LinearOrder, cap: int = DEFAULT_CHAIN_CAP) -> Optional[MaximalChain]:
    return next(iter_maximal_chains(domain, w, cap=cap), None)


def is_semi_connected(domain: Domain, cap: int = DEFAULT_CHAIN_CAP) -> bool:
    """最大幅で、かつ領域内のある反転対の間に極大鎖がある"""
    if not has_maximal_width(domain):
        return False
    for w in domain.orders:
        if reverse(w) in domain and find_maximal_chain(domain, w, cap=cap) is not None:
            return True
    return False


def semi_connected_chain(domain: Domain, cap: int = DEFAULT_CHAIN_CAP) -> Optional[MaximalChain]:
    """反転対を領域の順に試し、最初に見つかった鎖"""
    for w in domain.orders:
        if reverse(w) in domain:
            chain = find_maximal_chain(domain, w, cap=cap)
            if chain is not None:
                return chain
    return None


@dataclass(frozen=True, order=True)
class InversionTriple:
    """鎖の始点での順位の順に並べた選択肢 ``i, j, k``"""

    i: int
    j: int
    k: int


def inversion_triples(chain: MaximalChain) -> FrozenSet[InversionTriple]:
    """組が (j,k), (i,k), (i,j) の順に入れ替わる三つ組"""
    when = {frozenset(pair): step for step, pair in enumerate(chain.swaps)}
    found = set()
    for i, j, k in itertools.combinations(chain.start.ranking, 3):
        if when[frozenset((j, k))] < when[frozenset((i, k))] < when[frozenset((i, j))]:
            found.add(InversionTriple(i, j, k))
    return frozenset(found)


# ----------------------------------------------------------------------
# メディアン判定と診断


def _as_nx(graph: Union[DomainGraph, nx.Graph]) -> nx.Graph:
    return graph.graph if isinstance(graph, DomainGraph) else graph


def find_median_violation(graph: Union[DomainGraph, nx.Graph]) -> Optional[Tuple[object, object, object]]:
    """メディアンがちょうど1つでない頂点三つ組（無ければNone）

    区間 ``I(x, y)`` はBFS距離から作る頂点ビットマスクで、3区間の共通部分がメディアン。
    """
    g = _as_nx(graph)
    nodes = list(g.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    dist = dict(nx.all_pairs_shortest_path_length(g))
    intervals: Dict[Tuple[int, int], int] = {}
    for x, y in itertools.combinations(nodes, 2):
        d = dist[x][y]
        mask = 0
        for m in nodes:
            if dist[x][m] + dist[m][y] == d:
                mask |= 1 << index[m]
        intervals[(index[x], index[y])] = mask
    for x, y, z in itertools.combinations(range(len(nodes)), 3):
        medians = intervals[(x, y)] & intervals[(y, z)] & intervals[(x, z)]
        if bin(medians).count("1") != 1:
            return nodes[x], nodes[y], nodes[z]
    return None


def verify_median_graph(graph: Union[DomainGraph, nx.Graph]) -> bool:
    """全頂点三つ組がただ1つのメディアンを持つ（空・非連結なら偽）"""
    g = _as_nx(graph)
    if g.number_of_nodes() == 0:
        logger.info("median check: empty graph")
        return False
    if not nx.is_connected(g):
        logger.info("median check: graph has %d components", nx.number_connected_components(g))
        return False
    violation = find_median_violation(g)
    if violation is not None:
        logger.info("median check: triple %s has no unique median", violation)
        return False
    return True


def is_direct_connected(domain: Domain, cap: int = DEFAULT_GRAPH_CAP) -> bool:
    """任意の2順序が領域内でKendall-tau距離と同じ長さの互換経路で結ばれる"""
    built = build_graph(domain, cap=cap)
    swaps_only = nx.Graph()
    swaps_only.add_nodes_from(built.graph.nodes())
    swaps_only.add_edges_from(built.permutahedron_edges)
    dist = dict(nx.all_pairs_shortest_path_length(swaps_only))
    for u, w in itertools.combinations(domain.orders, 2):
        if dist[u].get(w) != kendall_tau(u, w):
            logger.debug("no geodesic swap path between %s and %s", u, w)
            return False
    return True
