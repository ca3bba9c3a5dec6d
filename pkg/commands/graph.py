"""Exchange graph export"""

from cluster import build, geodesic_cycles
from utils import graph_to_dict, graph_to_dot, to_json

from .base import BaseCommand, RunConfig


class GraphCommand(BaseCommand):
    NAME = "graph"
    HELP = "export the exchange graph as DOT or JSON"
    FORMATS = ("dot", "json")

    def run(self, config: RunConfig) -> int:
        graph = build(config.n, max_nodes=config.max_nodes)
        if config.fmt == "json":
            fives = geodesic_cycles(graph)[1] if config.n >= 2 else ()
            self.emit(config, to_json(graph_to_dict(graph, fives)))
        else:
            self.emit(config, graph_to_dot(graph))
        return 0
