"""First homology of the 2-cell complex"""

from cluster import VERSION, build_complex
from cluster.homology import expected_rank, report_row
from utils import rows_to_csv, to_json

from .base import BaseCommand, RunConfig

CSV_FIELDS = ("version", "n", "rank", "torsion", "four_cycles", "five_cycles", "label_classes")


class HomologyCommand(BaseCommand):
    NAME = "homology"
    HELP = "H1 rank and torsion"
    FORMATS = ("text", "json", "csv")
    HEAVY = True

    def run(self, config: RunConfig) -> int:
        X = build_complex(config.n)
        row = report_row(X)
        if config.fmt == "csv":
            self.emit(config, rows_to_csv([{"version": VERSION, **row}], CSV_FIELDS))
        elif config.fmt == "json":
            self.emit(config, to_json({"version": VERSION, **row}))
        else:
            self.emit(config, "\n".join([
                self.header(config),
                f"H1 rank {row['rank']} (C({config.n + 2},4) = {expected_rank(config.n)})",
                f"torsion {row['torsion'] or 'none'}",
                f"{row['four_cycles']} geodesic 4-cycles, {row['five_cycles']} geodesic 5-cycles, "
                f"{row['label_classes']} label classes",
            ]))
        return 0
