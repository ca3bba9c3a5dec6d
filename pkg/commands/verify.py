"""Machine checks of the structural statements for one n"""

import random
from itertools import combinations
from math import comb
from typing import Callable, Dict, List, Tuple

import networkx as nx

from cluster import VERSION, ExchangeModule, build_complex, catalan, classes_equal, homotopic, net_between
from cluster.base import AssocError
from cluster.clustervars import all_distinct, laurent_violations, positivity_violations, verify_period_five
from cluster.exchmod import diagonal_count, edge_classes, expected_kernel_rank, module_report, psi_checks
from cluster.flipgraph import is_grid, is_label_cycle, loop_word, random_moves
from cluster.homology import CellComplex2, homology_checks
from utils import to_json

from .base import BaseCommand, RunConfig, log

Check = Tuple[str, bool]
THEOREMS = ("1", "2", "3", "4.4", "all")
SAMPLED_PAIRS = 1000
MOVE_SEQUENCES = 500
MOVE_STEPS = 20


def census_checks(X: CellComplex2) -> List[Check]:
    graph = X.graph
    n = graph.n
    return [
        (f"{catalan(n + 1)} triangulations", len(graph.nodes) == catalan(n + 1)),
        (f"{n}-regular", all(len(a) == n for a in graph.adjacency)),
        (f"{len(graph.nodes) * n // 2} edges", len(graph.edges) == len(graph.nodes) * n // 2),
        ("no triangles", not sum(nx.triangles(graph.networkx).values())),
        ("every 4-cycle is geodesic", not X.non_geodesic),
    ]


def variable_checks(module: ExchangeModule) -> List[Check]:
    table = module.table
    checks = [
        (f"{diagonal_count(module.n)} cluster variables", len(table) == diagonal_count(module.n)),
        ("Laurent: denominators avoid frozen variables", not laurent_violations(table)),
        ("cluster variables distinct", all_distinct(table)),
    ]
    positivity_violations(table)
    if module.n == 2:
        checks.append(("period five", verify_period_five(2, table)))
    return checks


def label_homotopy_checks(X: CellComplex2, rng: random.Random) -> List[Check]:
    """Class equality against label equality, nets between same-label cycles, move soundness"""
    graph = X.graph
    fives = X.cycles[1]
    pairs = list(combinations(fives, 2))
    if len(pairs) > SAMPLED_PAIRS:
        same = [p for p in pairs if homotopic(*p)]
        rest = [p for p in pairs if not homotopic(*p)]
        pairs = same[:SAMPLED_PAIRS // 2] + rng.sample(rest, min(len(rest), SAMPLED_PAIRS // 2))

    mismatches = sum(classes_equal(X, C.walk(), C2.walk()) != homotopic(C, C2) for C, C2 in pairs)
    nets_ok = True
    for C, C2 in pairs:
        if not homotopic(C, C2):
            continue
        rows = net_between(graph, C, C2)
        nets_ok &= (is_grid(graph, rows) and rows[0] == C.walk()
                    and set(rows[-1]) == set(C2.nodes)
                    and all(is_label_cycle(graph, row, C.label) for row in rows))

    moves_ok = True
    for _ in range(MOVE_SEQUENCES if fives else 0):
        start = rng.choice(fives).walk()
        walk = random_moves(graph, start, MOVE_STEPS, rng)
        moves_ok &= (classes_equal(X, start, walk)
                     and _odd_letters(loop_word(graph, start)) == _odd_letters(loop_word(graph, walk)))

    return [
        (f"class equality = label equality ({len(pairs)} pairs)", mismatches == 0),
        ("nets between same-label 5-cycles are grids", nets_ok),
        ("moves keep homology class and letter parity", moves_ok),
    ]


def _odd_letters(word) -> set:
    return {letter for letter, odd in word.parity().items() if odd}


def theorem_checks(theorem: str, X: CellComplex2, module: ExchangeModule, rng: random.Random) -> List[Check]:
    n = X.n
    if theorem == "2":
        return homology_checks(X)
    if theorem == "4.4":
        return label_homotopy_checks(X, rng)
    if theorem == "1":
        pentagons = module.pentagons()
        checks = [
            (f"ker theta rank {expected_kernel_rank(n)}", len(module.kernel) == expected_kernel_rank(n)),
            ("pentagonal relations generate their lattice from vertex-1 labels", pentagons.ok),
            (f"pentagon lattice rank = H1 rank = {comb(n + 2, 4)}",
             pentagons.pentagon_rank == X.first_homology.rank),
            ("pentagon lattice = ker theta" if n <= 2 else "pentagon lattice inside ker theta",
             pentagons.equals_kernel if n <= 2 else pentagons.in_kernel),
        ]
        checks += psi_checks(X, module)
        if n >= 2:
            checks.append((f"{comb(n + 3, 4)} edge classes, one per label", len(edge_classes(X)) == comb(n + 3, 4)))
        return checks
    if theorem == "3":
        report = module_report(n, module, X)["verified"]
        checks = [
            (f"E rank {module.e_rank}", report["E_rank"]),
            ("vertex-1 pairs generate E(A)", report["E_generated_by_vertex_1_pairs"]),
            ("E(A) torsion-free", report["E_torsion_free"]),
        ]
        if n <= 2:
            checks.append((f"E rank = C({n + 2},3)", module.e_rank == comb(n + 2, 3)))
        return checks
    raise ValueError(f"unknown theorem {theorem!r}")


class VerifyCommand(BaseCommand):
    NAME = "verify"
    HELP = "run the acceptance checks; nonzero exit on any failure"
    HEAVY = True

    def add_arguments(self, parser) -> None:
        super().add_arguments(parser)
        parser.add_argument("--theorem", choices=THEOREMS, default="all")
        parser.add_argument("--seed", type=int, default=0)

    def run(self, config: RunConfig) -> int:
        rng = random.Random(config.seed)
        module = ExchangeModule(config.n)
        X = build_complex(config.n, module.graph)

        sections: Dict[str, List[Check]] = {}
        if config.theorem == "all":
            sections["census"] = census_checks(X)
            sections["variables"] = variable_checks(module)
            names = ["2", "4.4", "1", "3"]
        else:
            names = [config.theorem]
        for name in names:
            sections[name] = self._guarded(lambda: theorem_checks(name, X, module, rng))

        ok = all(passed for checks in sections.values() for _, passed in checks)
        summary = {"kernel_rank": None, "E_rank": module.e_rank, "h1_rank": X.first_homology.rank}
        try:
            summary["kernel_rank"] = len(module.kernel)
        except AssocError as e:
            log.error(f"❌ {type(e).__name__}: {e}")
            ok = False

        if config.fmt == "json":
            self.emit(config, to_json({
                "version": VERSION,
                "n": config.n,
                **summary,
                "checks": {k: [{"check": c, "passed": p} for c, p in v] for k, v in sections.items()},
                "verified": ok,
            }))
        else:
            lines = [self.header(config),
                     f"kernel rank {summary['kernel_rank']}, E rank {summary['E_rank']}, "
                     f"H1 rank {summary['h1_rank']}"]
            for section, checks in sections.items():
                lines.append(f"[{section}]")
                lines += [f"  {'✅' if passed else '❌'} {name}" for name, passed in checks]
            lines.append("all checks passed" if ok else "verification FAILED")
            self.emit(config, "\n".join(lines))

        log.info(f"{'✅' if ok else '❌'} verify n={config.n} theorem={config.theorem}")
        return 0 if ok else 1

    @staticmethod
    def _guarded(run: Callable[[], List[Check]]) -> List[Check]:
        try:
            return run()
        except AssocError as e:
            log.error(f"❌ {type(e).__name__}: {e}")
            return [(f"{type(e).__name__}: {e}", False)]
