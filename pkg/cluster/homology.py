"""2-cell complex on the exchange graph and its first homology"""

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple, Union

import networkx as nx

from .base import NotInSpan, TriangleFound, log
from .flipgraph import (
    ExchangeGraph,
    GeodesicCycle,
    build,
    canonical_cycle,
    check_walk,
    five_cycle_for_face,
    geodesic_cycles,
    non_geodesic_four_cycles,
    pentagon_face,
)
from .zlinalg import IntMatrix, Lattice, invariant_factors


class ChainLevel(Enum):
    C0 = 0
    C1 = 1
    C2 = 2


@dataclass(frozen=True)
class ChainVector:
    level: ChainLevel
    coefficients: Tuple[Tuple[int, int], ...]

    @classmethod
    def of(cls, level: ChainLevel, coefficients: Dict[int, int]) -> "ChainVector":
        return cls(level, tuple(sorted((i, c) for i, c in coefficients.items() if c)))

    def as_dict(self) -> Dict[int, int]:
        return dict(self.coefficients)

    def __sub__(self, other: "ChainVector") -> "ChainVector":
        if self.level != other.level:
            raise ValueError(f"chains at levels {self.level.name} and {other.level.name}")
        out = self.as_dict()
        for i, c in other.coefficients:
            out[i] = out.get(i, 0) - c
        return ChainVector.of(self.level, out)

    def __bool__(self) -> bool:
        return bool(self.coefficients)


@dataclass(frozen=True)
class H1Result:
    rank: int
    torsion: Tuple[int, ...] = ()

    @property
    def free(self) -> bool:
        return not self.torsion


@dataclass
class CellComplex2:
    """Exchange graph with a 2-cell on every 4-cycle (the graph has no 3-cycles)"""
    graph: ExchangeGraph
    two_cells: Tuple[Tuple[int, ...], ...]
    non_geodesic: Tuple[Tuple[int, ...], ...] = ()

    @property
    def n(self) -> int:
        return self.graph.n

    @cached_property
    def cycles(self) -> Tuple[Tuple[GeodesicCycle, ...], Tuple[GeodesicCycle, ...]]:
        return geodesic_cycles(self.graph)

    @cached_property
    def boundaries(self) -> Tuple[IntMatrix, IntMatrix]:
        return boundary_matrices(self)

    @cached_property
    def boundary_lattice(self) -> Lattice:
        return Lattice(self.boundaries[1])

    @cached_property
    def first_homology(self) -> "H1Result":
        return h1(self)

    @cached_property
    def basis(self) -> Tuple[GeodesicCycle, ...]:
        return basis_cycles(self)

    @cached_property
    def basis_lattice(self) -> Lattice:
        """Basis class vectors followed by the columns of the second boundary"""
        E = len(self.graph.edges)
        cols = [class_vector(self.graph, C.walk()).as_dict() for C in self.basis]
        return Lattice(IntMatrix(E, len(cols), cols).hstack(self.boundaries[1]))


def four_cycles(graph: ExchangeGraph) -> Tuple[Tuple[int, ...], ...]:
    """All 4-cycles, each once in canonical rotation and direction"""
    found = set()
    for u in range(len(graph.nodes)):
        for v, w in combinations(graph.neighbors(u), 2):
            common = set(graph.neighbors(v)) & set(graph.neighbors(w))
            for x in common - {u}:
                found.add(canonical_cycle((u, v, x, w)))
    return tuple(sorted(found))


def build_complex(n: int, graph: Optional[ExchangeGraph] = None) -> CellComplex2:
    graph = graph or build(n)
    G = graph.networkx
    if sum(nx.triangles(G).values()):
        raise TriangleFound(f"exchange graph for n={n} has a triangle")
    cells = four_cycles(graph)
    X = CellComplex2(graph, cells)
    if graph.n >= 2:
        odd = non_geodesic_four_cycles(graph, cells, X.cycles[0])
        for c in odd:
            log.warning(f"⚠️ 4-cycle {c} does not come from a codimension-2 face")
        X.non_geodesic = tuple(odd)
    log.info(f"Cell complex n={n}: {len(cells)} two-cells")
    return X


def boundary_matrices(X: CellComplex2) -> Tuple[IntMatrix, IntMatrix]:
    """
    ∂1: edge u->v maps to v - u; ∂2: signed traversal of each 2-cell

    Edges carry their fixed orientation, so a 2-cell picks up -1 on
    every edge it crosses against it.
    """
    graph = X.graph
    d1 = IntMatrix(len(graph.nodes), len(graph.edges),
                   [{e.tail: -1, e.head: 1} for e in graph.edges])
    cols = []
    for cell in X.two_cells:
        col: Dict[int, int] = {}
        for i, u in enumerate(cell):
            v = cell[(i + 1) % len(cell)]
            e = graph.edge_between(u, v)
            sign = 1 if (e.tail, e.head) == (u, v) else -1
            col[e.index] = col.get(e.index, 0) + sign
        cols.append(col)
    d2 = IntMatrix(len(graph.edges), len(cols), cols)
    return d1, d2


def h1(X: Union[int, CellComplex2]) -> H1Result:
    """Rank and torsion of ker ∂1 / im ∂2; accepts n or a built complex"""
    if isinstance(X, int):
        X = build_complex(X)
    d1, d2 = X.boundaries
    r1 = len(invariant_factors(d1))
    f2 = invariant_factors(d2)
    rank = len(X.graph.edges) - r1 - len(f2)
    torsion = tuple(d for d in f2 if d > 1)
    log.info(f"H1 n={X.n}: rank {rank}, torsion {list(torsion) or 'none'}")
    return H1Result(rank, torsion)


# ---------------------------------------------------------
# CLASSES OF CLOSED WALKS
# ---------------------------------------------------------
def class_vector(graph: ExchangeGraph, walk: Sequence[int]) -> ChainVector:
    """1-chain of a closed walk in edge coordinates"""
    walk = check_walk(graph, walk)
    coeffs: Dict[int, int] = {}
    for u, v in zip(walk, walk[1:]):
        if u == v:
            continue
        e = graph.edge_between(u, v)
        coeffs[e.index] = coeffs.get(e.index, 0) + (1 if (e.tail, e.head) == (u, v) else -1)
    return ChainVector.of(ChainLevel.C1, coeffs)


def classes_equal(X: CellComplex2, w1: Sequence[int], w2: Sequence[int]) -> bool:
    diff = class_vector(X.graph, w1) - class_vector(X.graph, w2)
    return X.boundary_lattice.contains(diff.as_dict()) is not None


def basis_labels(n: int) -> Tuple[Tuple[int, ...], ...]:
    """5-sets containing vertex 1, sorted"""
    return tuple((1,) + rest for rest in combinations(range(2, n + 4), 4))


def basis_cycles(X: CellComplex2) -> Tuple[GeodesicCycle, ...]:
    """One 5-cycle per 1-containing label, exterior fanned at least vertices"""
    return tuple(five_cycle_for_face(X.graph, pentagon_face(X.n, L)) for L in basis_labels(X.n))


def decompose(X: CellComplex2, C: GeodesicCycle) -> Tuple[int, ...]:
    """
    Integer coefficients of C's class over the 1-containing basis classes

    Raises:
        NotInSpan: the class is not an integer combination of the basis
    """
    coeffs = X.basis_lattice.contains(class_vector(X.graph, C.walk()).as_dict())
    if coeffs is None:
        raise NotInSpan(f"5-cycle {C.nodes} with label {C.label} is outside the basis span")
    return tuple(coeffs[:len(X.basis)])


def basis_independent(X: CellComplex2) -> int:
    """Rank of the basis classes modulo im ∂2"""
    return X.basis_lattice.rank - X.boundary_lattice.rank


def five_cycle_class_count(X: CellComplex2, cycles: Optional[Sequence[GeodesicCycle]] = None) -> int:
    """Distinct homology classes among the given (default: all) geodesic 5-cycles"""
    if cycles is None:
        cycles = X.cycles[1]
    return len({decompose(X, C) for C in cycles})


def expected_rank(n: int) -> int:
    return comb(n + 2, 4)


def report_row(X: CellComplex2) -> Dict[str, object]:
    """CSV row: n, rank, torsion, four_cycles, five_cycles, label_classes"""
    result = X.first_homology
    fours, fives = X.cycles
    return {
        "n": X.n,
        "rank": result.rank,
        "torsion": " ".join(str(d) for d in result.torsion),
        "four_cycles": len(fours),
        "five_cycles": len(fives),
        "label_classes": len({C.label for C in fives}),
    }


def homology_checks(X: CellComplex2) -> List[Tuple[str, bool]]:
    """Named pass/fail checks for the homology statements at this n"""
    result = X.first_homology
    d1, d2 = X.boundaries
    fives = X.cycles[1]
    labels = {C.label for C in fives}
    return [
        ("∂1·∂2 = 0", (d1 @ d2).is_zero()),
        (f"H1 rank = C({X.n + 2},4) = {expected_rank(X.n)}", result.rank == expected_rank(X.n)),
        ("H1 torsion-free", result.free),
        ("1-containing classes independent", basis_independent(X) == len(X.basis) == expected_rank(X.n)),
        ("5-cycle classes = label classes", five_cycle_class_count(X) == len(labels) == comb(X.n + 3, 5)),
    ]
