"""Free module on crossing pairs, the map theta, pentagonal relations, E(A)"""

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from .base import VERSION, LabelMismatch, NotExpressible, RankMismatch, log
from .clustervars import VariableTable, compute_table
from .flipgraph import ExchangeGraph, build
from .homology import CellComplex2, ChainLevel, ChainVector, build_complex, class_vector
from .laurent import LaurentPoly, grlex_key
from .polygon import Diagonal, Label, all_diagonals
from .zlinalg import IntMatrix, Lattice, column_echelon, invariant_factors, kernel_basis, lattice_equal


@dataclass(frozen=True)
class CrossingPair:
    """Diagonals (a,c) and (b,d) of the quadrilateral a<b<c<d"""
    vertices: Label

    @property
    def alpha(self) -> Diagonal:
        a, _, c, _ = self.vertices
        return Diagonal(a, c)

    @property
    def beta(self) -> Diagonal:
        _, b, _, d = self.vertices
        return Diagonal(b, d)

    def __str__(self) -> str:
        return "{" + "".join(str(v) if v < 10 else f"({v})" for v in self.vertices) + "}"


def crossing_pairs(n: int) -> Tuple[CrossingPair, ...]:
    return tuple(CrossingPair(q) for q in combinations(range(1, n + 4), 4))


def pair_index(n: int) -> Dict[Label, int]:
    return {p.vertices: i for i, p in enumerate(crossing_pairs(n))}


def diagonal_count(n: int) -> int:
    return comb(n + 3, 2) - (n + 3)


def expected_kernel_rank(n: int) -> int:
    """rank of ker theta when the cluster variables are linearly independent"""
    return comb(n + 3, 4) - diagonal_count(n) + 1


@dataclass(frozen=True)
class RelationVector:
    """Integer combination of crossing pairs, keyed by their vertex 4-sets"""
    n: int
    coefficients: Tuple[Tuple[Label, int], ...]

    @classmethod
    def of(cls, n: int, coefficients: Dict[Label, int]) -> "RelationVector":
        return cls(n, tuple(sorted((tuple(q), c) for q, c in coefficients.items() if c)))

    @classmethod
    def from_dense(cls, n: int, column: Dict[int, int]) -> "RelationVector":
        pairs = crossing_pairs(n)
        return cls.of(n, {pairs[i].vertices: c for i, c in column.items()})

    def as_dict(self) -> Dict[Label, int]:
        return dict(self.coefficients)

    def dense(self) -> Dict[int, int]:
        index = pair_index(self.n)
        return {index[q]: c for q, c in self.coefficients}

    def __add__(self, other: "RelationVector") -> "RelationVector":
        out = self.as_dict()
        for q, c in other.coefficients:
            out[q] = out.get(q, 0) + c
        return RelationVector.of(self.n, out)

    def __neg__(self) -> "RelationVector":
        return RelationVector(self.n, tuple((q, -c) for q, c in self.coefficients))

    def __bool__(self) -> bool:
        return bool(self.coefficients)

    def to_text(self) -> str:
        if not self.coefficients:
            return "0"
        parts = []
        for q, c in self.coefficients:
            name = "X" + "".join(map(str, q)) if all(v < 10 for v in q) else "X" + str(list(q))
            sign = "+" if c > 0 else "-"
            parts.append(f"{sign}{'' if abs(c) == 1 else abs(c)}{name}")
        return " ".join(parts)

    def to_json(self) -> List[List]:
        return [[list(q), c] for q, c in self.coefficients]


@dataclass(frozen=True)
class PentagonalRelation:
    label: Label
    vector: RelationVector


def pentagonal_relation(n: int, label: Sequence[int]) -> PentagonalRelation:
    """+abcd +bcde +abde -acde -abce for the pentagon a<b<c<d<e"""
    a, b, c, d, e = sorted(label)
    vector = RelationVector.of(n, {
        (a, b, c, d): 1,
        (b, c, d, e): 1,
        (a, b, d, e): 1,
        (a, c, d, e): -1,
        (a, b, c, e): -1,
    })
    return PentagonalRelation((a, b, c, d, e), vector)


def pentagonal_relations(n: int) -> Tuple[PentagonalRelation, ...]:
    return tuple(pentagonal_relation(n, L) for L in combinations(range(1, n + 4), 5))


# ---------------------------------------------------------
# THETA
# ---------------------------------------------------------
def theta_pair(table: VariableTable, pair: CrossingPair) -> LaurentPoly:
    return table[pair.alpha] - table[pair.beta]


def theta_image(vector: RelationVector, table: VariableTable) -> LaurentPoly:
    total = LaurentPoly.zero(table.nvars)
    for q, c in vector.coefficients:
        total = total + theta_pair(table, CrossingPair(q)) * c
    return total


def theta_system(n: int, table: Optional[VariableTable] = None) -> Tuple[IntMatrix, Tuple[Tuple[int, ...], ...]]:
    """theta as an integer matrix plus its monomial row order (graded-lex, descending)"""
    table = table or compute_table(n)
    images = [theta_pair(table, p) for p in crossing_pairs(n)]
    monomials = sorted({e for img in images for e in img.terms}, key=grlex_key, reverse=True)
    row = {e: i for i, e in enumerate(monomials)}
    cols = [{row[e]: c for e, c in img.terms.items()} for img in images]
    log.debug(f"theta n={n}: {len(monomials)} monomials x {len(cols)} pairs")
    return IntMatrix(len(monomials), len(cols), cols), tuple(monomials)


def theta_matrix(n: int, table: Optional[VariableTable] = None) -> IntMatrix:
    return theta_system(n, table)[0]


def formal_theta(n: int) -> IntMatrix:
    """X_ab -> e_alpha - e_beta over the diagonals (crossing-graph incidence)"""
    index = {d: i for i, d in enumerate(all_diagonals(n))}
    cols = [{index[p.alpha]: 1, index[p.beta]: -1} for p in crossing_pairs(n)]
    return IntMatrix(len(index), len(cols), cols)


def kernel_theta(n: int, table: Optional[VariableTable] = None,
                 theta: Optional[IntMatrix] = None) -> Tuple[RelationVector, ...]:
    """
    Saturated integer basis of ker theta

    Raises:
        RankMismatch: the rank is not C(n+3,4) - D + 1, D the number of diagonals
    """
    theta = theta if theta is not None else theta_matrix(n, table)
    K = kernel_basis(theta)
    expected = expected_kernel_rank(n)
    if K.ncols != expected:
        raise RankMismatch(f"ker theta has rank {K.ncols} at n={n}, expected {expected}")
    return tuple(RelationVector.from_dense(n, col) for col in K.cols)


def relation_matrix(n: int, vectors: Iterable[RelationVector]) -> IntMatrix:
    cols = [v.dense() for v in vectors]
    return IntMatrix(comb(n + 3, 4), len(cols), cols)


# ---------------------------------------------------------
# PENTAGONAL GENERATION
# ---------------------------------------------------------
@dataclass(frozen=True)
class PentagonReport:
    n: int
    pentagon_count: int
    pentagon_rank: int
    kernel_rank: int
    in_kernel: bool
    basis_independent: bool
    basis_spans: bool
    equals_kernel: bool

    @property
    def expected_rank(self) -> int:
        return comb(self.n + 2, 4)

    @property
    def ok(self) -> bool:
        return (self.in_kernel and self.basis_independent and self.basis_spans
                and self.pentagon_rank == self.expected_rank
                and (self.equals_kernel or self.n > 2))

    def __bool__(self) -> bool:
        return self.ok


def verify_pentagonal_generation(n: int, table: Optional[VariableTable] = None,
                                 kernel: Optional[Sequence[RelationVector]] = None) -> PentagonReport:
    """
    Pentagonal relations against ker theta

    Every pentagonal relation must vanish under theta; the C(n+2,4) relations
    whose label holds vertex 1 must be independent and generate all of them.
    The pentagon lattice equals the whole kernel only for n <= 2.
    """
    table = table or compute_table(n)
    if kernel is None:
        kernel = kernel_theta(n, table)
    pentagons = pentagonal_relations(n)
    in_kernel = all(theta_image(p.vector, table).is_zero() for p in pentagons)

    P = relation_matrix(n, (p.vector for p in pentagons))
    B = relation_matrix(n, (p.vector for p in pentagons if 1 in p.label))
    K = relation_matrix(n, kernel)
    _, _, p_rank = column_echelon(P)
    _, _, b_rank = column_echelon(B)
    basis = Lattice(B)
    spans = all(basis.contains(col) is not None for col in P.cols)
    report = PentagonReport(
        n=n,
        pentagon_count=len(pentagons),
        pentagon_rank=p_rank,
        kernel_rank=K.ncols,
        in_kernel=in_kernel,
        basis_independent=b_rank == B.ncols,
        basis_spans=spans,
        equals_kernel=lattice_equal(P, K),
    )
    log.debug(f"pentagons n={n}: {report}")
    return report


# ---------------------------------------------------------
# EXCHANGE MODULE E(A)
# ---------------------------------------------------------
def exchange_generators(n: int) -> Tuple[CrossingPair, ...]:
    """Pairs whose quadrilateral has vertex 1: C(n+2,3) of them"""
    return tuple(p for p in crossing_pairs(n) if p.vertices[0] == 1)


def exchange_basis(n: int) -> Tuple[CrossingPair, ...]:
    """
    Free basis of E(A) drawn from the vertex-1 generators

    A spanning forest of the crossing graph restricted to those pairs,
    built by Kruskal on pair order; it has D - 1 pairs.
    """
    G = nx.Graph()
    G.add_nodes_from(all_diagonals(n))
    for i, p in enumerate(exchange_generators(n)):
        G.add_edge(p.alpha, p.beta, weight=i, pair=p)
    forest = nx.minimum_spanning_edges(G, algorithm="kruskal", weight="weight", data=True)
    return tuple(sorted((data["pair"] for _, _, data in forest), key=lambda p: p.vertices))


class ExchangeModule:
    """Cached theta data for one n"""

    def __init__(self, n: int, table: Optional[VariableTable] = None, graph: Optional[ExchangeGraph] = None):
        self.n = n
        self.graph = graph or build(n)
        self.table = table or compute_table(n, self.graph)

    @cached_property
    def theta(self) -> IntMatrix:
        return theta_matrix(self.n, self.table)

    @cached_property
    def kernel(self) -> Tuple[RelationVector, ...]:
        return kernel_theta(self.n, self.table, self.theta)

    @cached_property
    def basis(self) -> Tuple[CrossingPair, ...]:
        return exchange_basis(self.n)

    @cached_property
    def e_rank(self) -> int:
        return column_echelon(self.theta)[2]

    @cached_property
    def _basis_lattice(self) -> Lattice:
        index = pair_index(self.n)
        return Lattice(self.theta.select(index[p.vertices] for p in self.basis))

    def express(self, pair: CrossingPair) -> Dict[Label, int]:
        """
        Coefficients writing theta(pair) over theta(basis), checked exactly

        Raises:
            NotExpressible: no integer combination exists or the round trip fails
        """
        index = pair_index(self.n)
        coeffs = self._basis_lattice.contains(self.theta.cols[index[pair.vertices]])
        if coeffs is None:
            raise NotExpressible(f"{pair} is not an integer combination of the basis")
        result = {b.vertices: c for b, c in zip(self.basis, coeffs) if c}
        back = theta_image(RelationVector.of(self.n, result), self.table)
        if back != theta_pair(self.table, pair):
            raise NotExpressible(f"round trip failed for {pair}")
        return result

    def pentagons(self) -> PentagonReport:
        return verify_pentagonal_generation(self.n, self.table, self.kernel)


def express(n: int, pair: CrossingPair, module: Optional[ExchangeModule] = None) -> Dict[Label, int]:
    module = module or ExchangeModule(n)
    return module.express(pair)


def saturation_factors(module: ExchangeModule) -> Tuple[int, ...]:
    """Invariant factors of the kernel inclusion; all ones when F/ker is torsion-free"""
    return invariant_factors(relation_matrix(module.n, module.kernel))


# ---------------------------------------------------------
# EDGES TO CROSSING PAIRS
# ---------------------------------------------------------
def psi(X: CellComplex2, chain: ChainVector) -> RelationVector:
    """Edge traversed along its orientation -> +X of its label, against it -> -X"""
    out: Dict[Label, int] = {}
    for i, c in chain.coefficients:
        label = X.graph.edges[i].label
        out[label] = out.get(label, 0) + c
    return RelationVector.of(X.n, out)


def psi_walk(X: CellComplex2, walk: Sequence[int]) -> RelationVector:
    return psi(X, class_vector(X.graph, walk))


def edge_classes(X: CellComplex2) -> Dict[Label, Tuple[int, ...]]:
    """
    Edges linked by chains of opposite edges in 4-cycles

    returns the classes keyed by their common label; raises LabelMismatch
    when a class mixes labels or a label splits into several classes.
    """
    G = nx.Graph()
    G.add_nodes_from(range(len(X.graph.edges)))
    for cell in X.two_cells:
        ids = [X.graph.edge_between(cell[i], cell[(i + 1) % 4]).index for i in range(4)]
        G.add_edge(ids[0], ids[2])
        G.add_edge(ids[1], ids[3])
    classes: Dict[Label, Tuple[int, ...]] = {}
    for component in nx.connected_components(G):
        labels = {X.graph.edges[i].label for i in component}
        if len(labels) != 1:
            raise LabelMismatch(f"edge class mixes labels {sorted(labels)}")
        label = labels.pop()
        if label in classes:
            raise LabelMismatch(f"label {label} splits into several edge classes")
        classes[label] = tuple(sorted(component))
    return dict(sorted(classes.items()))


def psi_checks(X: CellComplex2, module: ExchangeModule) -> List[Tuple[str, bool]]:
    """ψ kills boundaries, lands in ker theta, and sends basis cycles to pentagons"""
    d2 = X.boundaries[1]
    kills = all(not psi(X, ChainVector.of(ChainLevel.C1, col)) for col in d2.cols)
    kernel = Lattice(relation_matrix(X.n, module.kernel))
    cycles_in_kernel = all(psi_walk(X, C.walk()).dense() in kernel for C in X.cycles[1])
    pentagons = all(psi_walk(X, C.walk()) == pentagonal_relation(X.n, C.label).vector for C in X.basis)
    return [
        ("ψ(∂2) = 0", kills),
        ("ψ(5-cycles) ⊂ ker θ", cycles_in_kernel),
        ("ψ(basis cycle) = pentagonal relation", pentagons),
    ]


def module_report(n: int, module: Optional[ExchangeModule] = None,
                  X: Optional[CellComplex2] = None) -> Dict[str, object]:
    """JSON report: ranks, pentagon count, basis labels and per-statement verdicts"""
    module = module or ExchangeModule(n)
    X = X or build_complex(n, module.graph)
    pentagons = module.pentagons()
    h1_rank = X.first_homology.rank
    labels = edge_classes(X) if n >= 2 else {}
    expressible = True
    for pair in crossing_pairs(n):
        try:
            module.express(pair)
        except NotExpressible:
            expressible = False
            break
    return {
        "version": VERSION,
        "n": n,
        "F_rank": comb(n + 3, 4),
        "kernel_rank": len(module.kernel),
        "E_rank": module.e_rank,
        "pentagon_count": pentagons.pentagon_count,
        "pentagon_rank": pentagons.pentagon_rank,
        "stated_kernel_rank": comb(n + 2, 4),
        "stated_E_rank": comb(n + 2, 3),
        "basis_labels": [list(p.vertices) for p in module.basis],
        "verified": {
            "pentagonal_generation": pentagons.ok,
            "pentagons_equal_kernel": pentagons.equals_kernel,
            "h1_matches_pentagon_rank": h1_rank == pentagons.pentagon_rank,
            "E_rank": module.e_rank == diagonal_count(n) - 1 == len(module.basis),
            "E_generated_by_vertex_1_pairs": expressible,
            "E_torsion_free": all(d == 1 for d in saturation_factors(module)),
            "edge_classes_are_labels": len(labels) == comb(n + 3, 4) if n >= 2 else True,
        },
    }
