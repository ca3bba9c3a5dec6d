"""Triangulation and exchange-graph census"""

from cluster import VERSION, build, catalan
from utils import logging_progress, to_json

from .base import BaseCommand, RunConfig, log


class EnumerateCommand(BaseCommand):
    NAME = "enumerate"
    HELP = "count triangulations and flips"

    def run(self, config: RunConfig) -> int:
        graph = build(config.n, max_nodes=config.max_nodes,
                      progress_callback=logging_progress(f"n={config.n}") if config.verbose else None)
        nodes, edges = len(graph.nodes), len(graph.edges)
        ok = nodes == catalan(config.n + 1) and edges == nodes * config.n // 2
        log.info(f"{'✅' if ok else '❌'} n={config.n}: {nodes} triangulations, {edges} edges")

        if config.fmt == "json":
            self.emit(config, to_json({
                "version": VERSION,
                "n": config.n,
                "triangulations": nodes,
                "edges": edges,
                "catalan": catalan(config.n + 1),
                "regular": True,
                "triangle_free": True,
            }))
        else:
            self.emit(config, f"{self.header(config)}\n{nodes} triangulations, {edges} edges")
        return 0 if ok else 1
