import logging
from typing import Any

from ..centrality import MultilayerBetweenness, rank_correlation, rank_deltas
from ..clustering import Clusterability, louvain
from ..io import load, load_fixture
from ..mlnet import LayerSet, MultilayerNetwork, flatten_stats, layer_stats
from ..mlnet.exceptions import InputFileError
from ..paths import ParetoPathEngine
from ..portfolio import NetworkPortfolio, combination_label, legend
from .basic_input import BasicInput
from .report_table import ReportTable

logger = logging.getLogger(__name__)


class PythonRunMLNet(BasicInput):
    """Load a network and run each analysis as a report table.

    Rows follow the orderings of the analyses: layers in file order, actors by index,
    combinations by cardinality then layer index.

    Args:
        options (dict[str, Any]): Options.
    """

    def __init__(self, options: dict[str, Any]) -> None:
        super().__init__(options)

    def load_network(
        self, edges_path: str | None = None, actors_path: str | None = None, fixture: str | None = None
    ) -> MultilayerNetwork:
        if fixture:
            return load_fixture(fixture, layer_cap=self.layer_cap)
        if not edges_path:
            raise InputFileError("<no edge list given>")
        return load(edges_path, actors_path, layer_cap=self.layer_cap)

    def _label(self, network: MultilayerNetwork, combination: LayerSet) -> str:
        return combination_label(network, combination, self.layer_codes)

    def _legend(self, network: MultilayerNetwork) -> list[tuple[str, str]]:
        return legend(network, self.layer_codes)

    # ------------------------------------------------------------------ mlnet
    def stats_table(self, network: MultilayerNetwork) -> ReportTable:
        table = ReportTable(("layer", "edges", "components", "avg_degree", "active_actors"))
        for layer in network.layers:
            s = layer_stats(network, layer)
            table.add(layer.name, s.edge_count, s.component_count, s.avg_degree_active, s.active_actor_count)
        return table

    def flatten_stats_table(
        self, network: MultilayerNetwork, layers: list[str] | None = None, clusters: bool = False
    ) -> ReportTable:
        combination = network.layer_set(layers) if layers else network.all_layers()
        s = flatten_stats(network, combination)

        columns = (
            "combination",
            "actors",
            "edges",
            "directed_edges",
            "layer_edge_sum",
            "active_actors",
            "avg_degree",
            "diameter",
            "components",
        )
        values = (
            self._label(network, combination),
            s.actor_count,
            s.edge_count,
            s.directed_edge_count,
            s.layer_edge_sum,
            s.active_actor_count,
            s.avg_degree_all,
            s.diameter,
            s.component_count,
        )
        if clusters:
            columns += ("clusters", "modularity")
            flat = network.flatten(combination)
            if flat.edge_count:
                assignment = louvain(flat, self.seed)
                values += (assignment.cluster_count, assignment.modularity)
            else:
                values += (0, None)

        table = ReportTable(columns, legend=self._legend(network))
        table.add(*values)
        return table

    # ------------------------------------------------------------------ centrality
    def betweenness_table(
        self, network: MultilayerNetwork, compare: bool = False, correlation: bool = False
    ) -> ReportTable:
        scores = MultilayerBetweenness(network, self.options).betweenness_scores()

        if correlation:
            result = rank_correlation(scores, self.classic_mode)
            table = ReportTable(("spearman", "kendall", "max_abs_delta"))
            table.add(result.spearman, result.kendall, result.max_abs_delta)
            return table

        if compare:
            fractional = self.classic_mode == "fractional"
            classic = {s.actor: s.classic_fractional if fractional else s.classic_count for s in scores}
            ml = {s.actor: s.ml_count for s in scores}
            table = ReportTable(("actor", "classic_rank", "ml_rank", "delta"))
            for row in rank_deltas(classic, ml):
                table.add(row.actor.label, row.classic_rank, row.ml_rank, row.delta)
            return table

        table = ReportTable(("actor", "ml_count", "classic_fractional", "classic_count"))
        for s in scores:
            table.add(s.actor.label, s.ml_count, s.classic_fractional, s.classic_count)
        return table

    # ------------------------------------------------------------------ paths
    def paths_table(
        self, network: MultilayerNetwork, source: str, target: str, front_only: bool = False
    ) -> ReportTable:
        engine = ParetoPathEngine(network, self.options)
        s, t = network.actor(source), network.actor(target)

        if front_only:
            table = ReportTable(("source", "target", "length_vector", "path_count"))
            for label in engine.pareto_front(s, t):
                table.add(s.label, t.label, label.vector.describe(network.layers), label.path_count)
            return table

        table = ReportTable(("source", "target", "length_vector", "path"))
        for path in engine.enumerate_efficient_paths(s, t):
            table.add(s.label, t.label, path.vector(network.num_layers).describe(network.layers), path.describe())
        return table

    # ------------------------------------------------------------------ portfolio
    def coverage_table(self, network: MultilayerNetwork, target: str | None = None) -> ReportTable:
        portfolio = NetworkPortfolio(network, self.options)
        if target is not None:
            targets = [network.layer(target)]
        else:
            targets = []
            for layer in network.layers:
                if network.edge_count(layer) == 0:
                    logger.warning("layer %s has no edges; no coverage rows", layer.name)
                    continue
                targets.append(layer)

        table = ReportTable(("target", "combination", "probability"), legend=self._legend(network))
        for layer in targets:
            for row in portfolio.cover_frontier(layer):
                table.add(layer.name, self._label(network, row.combination), row.probability)
        return table

    def jaccard_table(self, network: MultilayerNetwork, target: str | None = None) -> ReportTable:
        portfolio = NetworkPortfolio(network, self.options)
        if target is not None:
            results = [r for r in [portfolio.most_similar(target)] if r is not None]
        else:
            results = portfolio.similarity_table()

        table = ReportTable(("target", "combination", "index"), legend=self._legend(network))
        for r in results:
            table.add(r.left.names[0], self._label(network, r.right), r.index)
        return table

    def disjoint_table(self, network: MultilayerNetwork) -> ReportTable:
        table = ReportTable(("left", "right", "index"), legend=self._legend(network))
        if (r := NetworkPortfolio(network, self.options).best_disjoint_pair()) is not None:
            table.add(self._label(network, r.left), self._label(network, r.right), r.index)
        return table

    # ------------------------------------------------------------------ clustering
    def clusterability_table(self, network: MultilayerNetwork) -> ReportTable:
        table = ReportTable(("combination", "cluster_count", "modularity"), legend=self._legend(network))
        for row in Clusterability(network, self.options).sweep():
            table.add(self._label(network, row.combination), row.cluster_count, row.modularity)
        return table
