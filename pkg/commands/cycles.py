"""Geodesic 4- and 5-cycle census"""

from collections import Counter

from cluster import VERSION, build, geodesic_cycles
from utils import to_json

from .base import BaseCommand, RunConfig


class CyclesCommand(BaseCommand):
    NAME = "cycles"
    HELP = "list geodesic 4- and 5-cycles with their labels"

    def run(self, config: RunConfig) -> int:
        graph = build(config.n, max_nodes=config.max_nodes)
        fours, fives = geodesic_cycles(graph) if config.n >= 2 else ((), ())
        per_label = Counter(C.label for C in fives)

        if config.fmt == "json":
            self.emit(config, to_json({
                "version": VERSION,
                "n": config.n,
                "four_cycles": [{"nodes": list(C.nodes), "labels": [list(L) for L in C.edge_labels[:2]]}
                                for C in fours],
                "five_cycles": [{"nodes": list(C.nodes), "label": list(C.label)} for C in fives],
                "label_classes": len(per_label),
            }))
            return 0

        lines = [self.header(config),
                 f"{len(fours)} geodesic 4-cycles, {len(fives)} geodesic 5-cycles, {len(per_label)} labels"]
        for label, count in sorted(per_label.items()):
            lines.append(f"  {{{','.join(map(str, label))}}}: {count}")
        self.emit(config, "\n".join(lines))
        return 0
