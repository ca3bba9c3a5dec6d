"""Cluster variables of every diagonal, computed by exchange from the fan seed"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from .base import InconsistentVariable, log
from .flipgraph import ExchangeGraph, build
from .laurent import LaurentPoly, exact_div
from .polygon import BoundaryEdge, Diagonal, Triangulation, boundary_edges, fan, is_boundary

Side = Union[Diagonal, BoundaryEdge]


@dataclass(frozen=True)
class Seed:
    """
    Initial cluster on the fan at vertex 1

    (1,j) -> x_{j-2} for j = 3..n+2; boundary (i,i+1) -> x_{n+i}
    for i = 1..n+2 and (1,n+3) -> x_{2n+3}.
    """
    n: int
    cluster: Tuple[Tuple[Diagonal, int], ...]
    frozen: Tuple[Tuple[BoundaryEdge, int], ...]

    @classmethod
    def fan(cls, n: int) -> "Seed":
        cluster = tuple((Diagonal(1, j), j - 2) for j in range(3, n + 3))
        frozen = tuple((e, n + e.a) if e.b == e.a + 1 else (e, 2 * n + 3) for e in boundary_edges(n))
        return cls(n, cluster, frozen)

    @property
    def nvars(self) -> int:
        return 2 * self.n + 3

    @property
    def triangulation(self) -> Triangulation:
        return Triangulation(self.n, tuple(d for d, _ in self.cluster))

    def frozen_indices(self) -> Tuple[int, ...]:
        return tuple(range(self.n + 1, self.nvars + 1))


class VariableTable:
    """Cluster variable of each diagonal plus the frozen variable of each side"""

    def __init__(self, seed: Seed):
        self.seed = seed
        self.n = seed.n
        self.nvars = seed.nvars
        self.diagonals: Dict[Diagonal, LaurentPoly] = {
            d: LaurentPoly.var(self.nvars, i) for d, i in seed.cluster
        }
        self.frozen: Dict[BoundaryEdge, LaurentPoly] = {
            e: LaurentPoly.var(self.nvars, i) for e, i in seed.frozen
        }

    def __getitem__(self, d: Diagonal) -> LaurentPoly:
        return self.diagonals[d]

    def __contains__(self, d: Diagonal) -> bool:
        return d in self.diagonals

    def __len__(self) -> int:
        return len(self.diagonals)

    def items(self):
        return sorted(self.diagonals.items())

    def side(self, u: int, v: int) -> LaurentPoly:
        u, v = min(u, v), max(u, v)
        if is_boundary(self.n, u, v):
            return self.frozen[BoundaryEdge(u, v)]
        return self.diagonals[Diagonal(u, v)]

    def to_json(self) -> Dict[str, List]:
        return {str(d): p.to_json() for d, p in self.items()}


def exchange(xk: LaurentPoly, xa: LaurentPoly, xb: LaurentPoly, xc: LaurentPoly, xd: LaurentPoly) -> LaurentPoly:
    """(xa*xc + xb*xd) / xk; a,c and b,d are opposite sides"""
    return exact_div(xa * xc + xb * xd, xk)


def exchange_at(table: VariableTable, T: Triangulation, d: Diagonal) -> Tuple[Diagonal, LaurentPoly]:
    """New diagonal and its variable when d is flipped in T"""
    p, q, r, s = T.quad_of(d)
    _, new = T.flip(d)
    value = exchange(table[d], table.side(p, q), table.side(q, r), table.side(r, s), table.side(s, p))
    return new, value


def compute_table(n: int, graph: Optional[ExchangeGraph] = None) -> VariableTable:
    """
    Variables of all diagonals by exchange across every edge of the graph

    Every edge is exchanged from both ends, so a diagonal reached along
    different paths is checked against its stored value.
    """
    graph = graph or build(n)
    table = VariableTable(Seed.fan(n))
    checked = 0
    for T in graph.nodes:
        for d in T.diagonals:
            new, value = exchange_at(table, T, d)
            known = table.diagonals.get(new)
            if known is None:
                table.diagonals[new] = value
            elif known != value:
                raise InconsistentVariable(f"{new}: {known} vs {value} (from {T}, flip {d})")
            else:
                checked += 1
    log.info(f"Cluster variables n={n}: {len(table)} diagonals, {checked} consistency checks")
    return table


# ---------------------------------------------------------
# INVARIANT REPORTS
# ---------------------------------------------------------
def laurent_violations(table: VariableTable) -> List[Diagonal]:
    """Diagonals whose denominator involves a frozen variable"""
    bad = []
    for d, p in table.items():
        mins = p.min_exponents()
        if any(k < 0 for k in mins[table.n:]):
            bad.append(d)
    return bad


def positivity_violations(table: VariableTable) -> List[Diagonal]:
    bad = [d for d, p in table.items() if any(c < 0 for c in p.terms.values())]
    if bad:
        log.warning(f"⚠️ Positivity fails for {len(bad)} diagonals")
    return bad


def all_distinct(table: VariableTable) -> bool:
    return len(set(table.diagonals.values())) == len(table.diagonals)


# ---------------------------------------------------------
# PERIOD FIVE (n = 2)
# ---------------------------------------------------------
def period_five_diagonals() -> Tuple[Diagonal, ...]:
    """Diagonals met flipping the older diagonal of the cluster, from fan(2,1)"""
    T = fan(2, 1)
    ds = list(T.diagonals)
    for _ in range(5):
        T, new = T.flip(ds[-2])
        ds.append(new)
    return tuple(ds)


def period_five_orbit(table: Optional[VariableTable] = None) -> Tuple[LaurentPoly, ...]:
    """f1..f7 along the pentagon with the frozen variables set to 1"""
    table = table or compute_table(2)
    frozen = table.seed.frozen_indices()
    return tuple(table[d].collapse(frozen) for d in period_five_diagonals())


def recurrence_orbit(nvars: int = 7, length: int = 7) -> Tuple[LaurentPoly, ...]:
    """f_{k+1} = (f_k + 1) / f_{k-1} from f1 = x1, f2 = x2"""
    f = [LaurentPoly.var(nvars, 1), LaurentPoly.var(nvars, 2)]
    while len(f) < length:
        f.append(exact_div(f[-1] + 1, f[-2]))
    return tuple(f)


def verify_period_five(n: int = 2, table: Optional[VariableTable] = None) -> bool:
    if n != 2:
        raise ValueError("the period-five recurrence lives on the pentagon, n = 2")
    orbit = period_five_orbit(table)
    expected = recurrence_orbit(orbit[0].nvars)
    ok = orbit == expected and orbit[5] == orbit[0] and orbit[6] == orbit[1]
    log.debug(f"period five: {'confirmed' if ok else 'FAILED'}")
    return ok


def specialized_orbit(x1: Union[int, Fraction] = 1, x2: Union[int, Fraction] = 1,
                      table: Optional[VariableTable] = None) -> Tuple[Fraction, ...]:
    orbit = period_five_orbit(table)
    nvars = orbit[0].nvars
    assignment = {i: 1 for i in range(1, nvars + 1)}
    assignment[1], assignment[2] = x1, x2
    return tuple(f.specialize(assignment) for f in orbit)
