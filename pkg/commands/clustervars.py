"""Cluster variable table"""

from cluster import VERSION, InvalidDiagonal, compute_table
from cluster.polygon import Diagonal, diagonal
from utils import to_json

from .base import BaseCommand, RunConfig, UsageError


def parse_diagonal(n: int, text: str) -> Diagonal:
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"expected --diagonal a,b, got {text!r}")
    try:
        return diagonal(n, a, b)
    except InvalidDiagonal as e:
        raise UsageError(str(e))


class ClusterVarsCommand(BaseCommand):
    NAME = "cluster-vars"
    HELP = "print the cluster variable of every diagonal, or of one"
    HEAVY = True

    def add_arguments(self, parser) -> None:
        super().add_arguments(parser)
        parser.add_argument("--diagonal", default=None, help="a,b")

    def validate(self, config: RunConfig) -> None:
        if config.diagonal is not None:
            parse_diagonal(config.n, config.diagonal)

    def run(self, config: RunConfig) -> int:
        table = compute_table(config.n)
        entries = table.items()
        if config.diagonal:
            d = parse_diagonal(config.n, config.diagonal)
            entries = [(d, table[d])]

        if config.fmt == "json":
            self.emit(config, to_json({
                "version": VERSION,
                "n": config.n,
                "variables": {str(d): p.to_json() for d, p in entries},
            }))
        else:
            lines = [self.header(config)]
            lines += [f"{d} = {p}" for d, p in entries]
            self.emit(config, "\n".join(lines))
        return 0
