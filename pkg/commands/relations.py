"""Pentagonal relations, kernel of theta and the exchange-module basis"""

from cluster import VERSION, ExchangeModule
from cluster.exchmod import pentagonal_relations
from utils import to_json

from .base import BaseCommand, RunConfig


class RelationsCommand(BaseCommand):
    NAME = "relations"
    HELP = "pentagonal relations, ker theta basis, E(A) basis"
    HEAVY = True

    def run(self, config: RunConfig) -> int:
        module = ExchangeModule(config.n)
        pentagons = pentagonal_relations(config.n)

        if config.fmt == "json":
            self.emit(config, to_json({
                "version": VERSION,
                "n": config.n,
                "pentagonal_relations": [{"label": list(p.label), "vector": p.vector.to_json()}
                                         for p in pentagons],
                "kernel_basis": [v.to_json() for v in module.kernel],
                "exchange_basis": [list(p.vertices) for p in module.basis],
            }))
            return 0

        lines = [self.header(config), f"{len(pentagons)} pentagonal relations"]
        lines += [f"  {p.vector.to_text()}" for p in pentagons]
        lines.append(f"ker theta: rank {len(module.kernel)}")
        lines += [f"  {v.to_text()}" for v in module.kernel]
        lines.append(f"E(A) basis: {len(module.basis)} pairs")
        lines += [f"  {p}" for p in module.basis]
        self.emit(config, "\n".join(lines))
        return 0
