"""
Domain analysis service: runs every structural predicate and assembles an AnalysisReport.
Capped predicates are reported as skipped with the cap named, never dropped.
"""
from typing import Callable, Dict, List, Optional

from core.domain import (
    Domain,
    extensions,
    has_maximal_width,
    is_ample,
    is_condorcet,
    is_copious,
    is_peak_pit,
)
from core.errors import ResourceLimitError
from core.graph import (
    DomainGraph,
    build_graph,
    inversion_triples,
    is_direct_connected,
    semi_connected_chain,
    verify_median_graph,
)
from core.models import AnalysisReport, AppSettings, Verdict
from core.never import conditions_of, never_type
from services.logger import Logger

VERDICT_ORDER = (
    "condorcet",
    "ample",
    "copious",
    "peak-pit",
    "maximal-width",
    "connected",
    "semi-connected",
    "maximal",
    "median-graph",
)


def _skipped(error: ResourceLimitError) -> Verdict:
    return Verdict(skipped=f"{error.cap_name}={error.cap}")


class DomainAnalyzer:
    """ドメインの全述語を評価してレポートを作成する"""

    def __init__(self, settings: Optional[AppSettings] = None, logger: Optional[Logger] = None):
        self.settings = settings or AppSettings()
        self.logger = logger or Logger("DomainAnalyzer")

    def _guarded(self, name: str, check: Callable[[], bool]) -> Verdict:
        try:
            return Verdict(value=check())
        except ResourceLimitError as e:
            self.logger.info(f"{name} skipped: {e.message}")
            return _skipped(e)

    def analyze(self, domain: Domain, source: Optional[str] = None, include_extensions: bool = True) -> AnalysisReport:
        """全述語・never条件・反転三つ組・拡張を計算"""
        self.logger.log_service_call("DomainAnalyzer", "analyze", {"source": source, "size": len(domain)})
        s = self.settings
        diagnostics: List[str] = []
        verdicts: Dict[str, Verdict] = {}

        with self.logger.log_timing("analyze"):
            condorcet = is_condorcet(domain)
            verdicts["condorcet"] = Verdict(value=condorcet)
            verdicts["ample"] = Verdict(value=is_ample(domain))
            verdicts["copious"] = Verdict(value=is_copious(domain))
            verdicts["peak-pit"] = Verdict(value=is_peak_pit(domain))
            verdicts["maximal-width"] = Verdict(value=has_maximal_width(domain))

            graph: Optional[DomainGraph] = None
            try:
                graph = build_graph(domain, cap=s.graph_cap)
            except ResourceLimitError as e:
                verdicts["connected"] = _skipped(e)
                diagnostics.append(f"G_D not built: {e.message}")
            if graph is not None:
                verdicts["connected"] = Verdict(value=graph.edge_count == len(graph.permutahedron_edges))

            chain = None
            try:
                chain = semi_connected_chain(domain, cap=s.chain_cap)
                verdicts["semi-connected"] = Verdict(value=chain is not None)
            except ResourceLimitError as e:
                verdicts["semi-connected"] = _skipped(e)

            found = None
            if not condorcet:
                verdicts["maximal"] = Verdict(value=False)
                diagnostics.append("not a Condorcet domain: maximality and extensions not searched")
            else:
                try:
                    found = extensions(domain, cap=s.extension_cap)
                    verdicts["maximal"] = Verdict(value=not found)
                except ResourceLimitError as e:
                    verdicts["maximal"] = _skipped(e)

            if graph is not None:
                verdicts["median-graph"] = Verdict(value=verify_median_graph(graph))
                stats = graph.stats()
                if graph.vertex_count:
                    direct = self._guarded("direct-connected", lambda: is_direct_connected(domain, cap=s.graph_cap))
                    diagnostics.append(f"direct-connected: {direct.render()}")
            else:
                verdicts["median-graph"] = verdicts["connected"]
                stats = None

        labels = domain.alternatives.labels
        never_conditions: Dict[str, List[str]] = {}
        if domain.orders:
            for condition in conditions_of(domain):
                key = "{" + ",".join(labels[x] for x in condition.triple) + "}"
                never_conditions.setdefault(key, []).append(condition.format(domain.alternatives))
            kinds = [name.replace("_", "-") for name, flag in never_type(domain).items() if flag]
            if kinds:
                diagnostics.append("never type: " + ", ".join(kinds))
        else:
            diagnostics.append("empty domain: N(D) is undefined")

        triples = None
        if chain is not None:
            triples = [
                [labels[t.i], labels[t.j], labels[t.k]]
                for t in sorted(inversion_triples(chain), key=lambda t: (chain.start.position(t.i), chain.start.position(t.j), chain.start.position(t.k)))
            ]
            diagnostics.append(f"maximal chain from {domain.format(chain.start)}")

        report = AnalysisReport(
            source=source,
            alternatives=list(labels),
            size=len(domain),
            verdicts={name: verdicts[name] for name in VERDICT_ORDER},
            never_conditions=never_conditions,
            inversion_triples=triples,
            extensions=[domain.format(u) for u in found] if (include_extensions and found is not None) else None,
            graph=stats,
            diagnostics=diagnostics,
        )
        self.logger.info(f"analyzed {source or '<domain>'}: condorcet={condorcet}")
        return report
