"""Exact integer linear algebra: Smith form, echelon kernels, lattices"""

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import hermite_normal_form as _hnf

from .base import log

Column = Dict[int, int]


class IntMatrix:
    """Integer matrix stored as sparse columns {row: nonzero entry}"""

    __slots__ = ("nrows", "ncols", "cols")

    def __init__(self, nrows: int, ncols: int, cols: Optional[Sequence[Column]] = None):
        self.nrows = nrows
        self.ncols = ncols
        if cols is None:
            cols = [{} for _ in range(ncols)]
        if len(cols) != ncols:
            raise ValueError(f"{len(cols)} columns given for a {nrows}x{ncols} matrix")
        self.cols: List[Column] = []
        for col in cols:
            clean = {}
            for i, v in col.items():
                if not 0 <= i < nrows:
                    raise ValueError(f"row {i} outside 0..{nrows - 1}")
                if v:
                    clean[i] = int(v)
            self.cols.append(clean)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "IntMatrix":
        return cls(nrows, ncols)

    @classmethod
    def identity(cls, k: int) -> "IntMatrix":
        return cls(k, k, [{i: 1} for i in range(k)])

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], ncols: Optional[int] = None) -> "IntMatrix":
        ncols = len(rows[0]) if rows else (ncols or 0)
        cols: List[Column] = [{} for _ in range(ncols)]
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise ValueError(f"row {i} has {len(row)} entries, expected {ncols}")
            for j, v in enumerate(row):
                if v:
                    cols[j][i] = v
        return cls(len(rows), ncols, cols)

    @classmethod
    def from_columns(cls, nrows: int, cols: Iterable) -> "IntMatrix":
        """Columns as dicts or as dense sequences"""
        parsed = []
        for col in cols:
            if isinstance(col, dict):
                parsed.append(dict(col))
            else:
                parsed.append({i: v for i, v in enumerate(col) if v})
        return cls(nrows, len(parsed), parsed)

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.nrows, self.ncols)

    def __repr__(self) -> str:
        return f"IntMatrix({self.nrows}x{self.ncols}, nnz={self.nnz()})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self.cols == other.cols

    def nnz(self) -> int:
        return sum(len(c) for c in self.cols)

    def column(self, j: int) -> Column:
        return dict(self.cols[j])

    def dense_column(self, j: int) -> List[int]:
        col = self.cols[j]
        return [col.get(i, 0) for i in range(self.nrows)]

    def __getitem__(self, ij: Tuple[int, int]) -> int:
        i, j = ij
        return self.cols[j].get(i, 0)

    def to_rows(self) -> List[List[int]]:
        rows = [[0] * self.ncols for _ in range(self.nrows)]
        for j, col in enumerate(self.cols):
            for i, v in col.items():
                rows[i][j] = v
        return rows

    def transpose(self) -> "IntMatrix":
        cols: List[Column] = [{} for _ in range(self.nrows)]
        for j, col in enumerate(self.cols):
            for i, v in col.items():
                cols[i][j] = v
        return IntMatrix(self.ncols, self.nrows, cols)

    def apply(self, vector: Column) -> Column:
        """M * v for a sparse vector v indexed by column"""
        out: Column = {}
        for j, c in vector.items():
            for i, v in self.cols[j].items():
                out[i] = out.get(i, 0) + c * v
        return {i: v for i, v in out.items() if v}

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shapes {self.shape} and {other.shape} do not compose")
        return IntMatrix(self.nrows, other.ncols, [self.apply(col) for col in other.cols])

    def hstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.nrows != other.nrows:
            raise ValueError(f"row counts differ: {self.nrows} vs {other.nrows}")
        return IntMatrix(self.nrows, self.ncols + other.ncols, self.cols + other.cols)

    def select(self, columns: Iterable[int]) -> "IntMatrix":
        picked = [dict(self.cols[j]) for j in columns]
        return IntMatrix(self.nrows, len(picked), picked)

    def is_zero(self) -> bool:
        return not any(self.cols)

    def to_sympy(self) -> DomainMatrix:
        return DomainMatrix([[ZZ(v) for v in row] for row in self.to_rows()], self.shape, ZZ)


# ---------------------------------------------------------
# SMITH NORMAL FORM
# ---------------------------------------------------------
@dataclass(frozen=True)
class SmithForm:
    """U * M * V = diag(factors), factors[0] | factors[1] | ..."""
    factors: Tuple[int, ...]
    U: IntMatrix
    V: IntMatrix

    @property
    def rank(self) -> int:
        return sum(1 for d in self.factors if d)


def _dense_smith(A: List[List[int]], nrows: int, ncols: int, witnesses: bool):
    """In-place Smith reduction with minimal-absolute-value pivots"""
    U = [[int(i == j) for j in range(nrows)] for i in range(nrows)] if witnesses else None
    V = [[int(i == j) for j in range(ncols)] for i in range(ncols)] if witnesses else None

    def row_op(dst: int, src: int, q: int) -> None:
        # row_dst -= q * row_src
        A[dst] = [a - q * b for a, b in zip(A[dst], A[src])]
        if U is not None:
            U[dst] = [a - q * b for a, b in zip(U[dst], U[src])]

    def col_op(dst: int, src: int, q: int) -> None:
        for row in A:
            row[dst] -= q * row[src]
        if V is not None:
            for row in V:
                row[dst] -= q * row[src]

    def swap_rows(i: int, j: int) -> None:
        A[i], A[j] = A[j], A[i]
        if U is not None:
            U[i], U[j] = U[j], U[i]

    def swap_cols(i: int, j: int) -> None:
        for row in A:
            row[i], row[j] = row[j], row[i]
        if V is not None:
            for row in V:
                row[i], row[j] = row[j], row[i]

    factors = []
    for t in range(min(nrows, ncols)):
        pivot = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                if A[i][j] and (pivot is None or abs(A[i][j]) < abs(A[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            factors.extend([0] * (min(nrows, ncols) - t))
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])

        while True:
            dirty = False
            for i in range(t + 1, nrows):
                if A[i][t]:
                    row_op(i, t, A[i][t] // A[t][t])
                    if A[i][t]:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, ncols):
                if A[t][j]:
                    col_op(j, t, A[t][j] // A[t][t])
                    if A[t][j]:
                        swap_cols(t, j)
                        dirty = True
            if dirty:
                continue
            # divisibility of the remaining block
            d = A[t][t]
            bad = next((i for i in range(t + 1, nrows) if any(A[i][j] % d for j in range(t + 1, ncols))), None)
            if bad is None:
                break
            row_op(t, bad, -1)

        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            if U is not None:
                U[t] = [-a for a in U[t]]
        factors.append(A[t][t])
    return factors, U, V


def smith_normal_form(M: IntMatrix) -> SmithForm:
    """
    Smith form with unimodular witnesses

    Args:
        M: integer matrix (dense reduction, for small matrices)

    Returns:
        SmithForm with min(rows, cols) factors, zeros last
    """
    A = M.to_rows()
    factors, U, V = _dense_smith(A, M.nrows, M.ncols, witnesses=True)
    return SmithForm(tuple(factors), IntMatrix.from_rows(U, M.nrows), IntMatrix.from_rows(V, M.ncols))


def invariant_factors(M: IntMatrix) -> Tuple[int, ...]:
    """
    Nonzero invariant factors, in divisibility order

    Unit pivots are eliminated sparsely first (Markowitz choice); the
    remaining block, usually tiny, goes through the dense reduction.
    """
    rows: Dict[int, Column] = {}
    cols: Dict[int, set] = {}
    for j, col in enumerate(M.cols):
        if col:
            cols[j] = set(col)
        for i, v in col.items():
            rows.setdefault(i, {})[j] = v

    units = 0
    while True:
        best = None
        for j, members in cols.items():
            if best is not None and len(members) - 1 >= best[0]:
                continue
            for i in members:
                if abs(rows[i][j]) == 1:
                    cost = (len(members) - 1) * (len(rows[i]) - 1)
                    if best is None or cost < best[0]:
                        best = (cost, i, j)
        if best is None:
            break
        _, pi, pj = best
        pivot_row = rows.pop(pi)
        p = pivot_row[pj]
        for k in cols[pj] - {pi}:
            row = rows[k]
            q = row[pj] * p
            for j, v in pivot_row.items():
                nv = row.get(j, 0) - q * v
                if nv:
                    if j not in row:
                        cols[j].add(k)
                    row[j] = nv
                elif j in row:
                    del row[j]
                    cols[j].discard(k)
            if not row:
                del rows[k]
        for j in pivot_row:
            cols[j].discard(pi)
        del cols[pj]
        for j in [j for j, members in cols.items() if not members]:
            del cols[j]
        units += 1

    residual: Tuple[int, ...] = ()
    if rows:
        row_ids = sorted(rows)
        col_ids = sorted(cols)
        A = [[rows[i].get(j, 0) for j in col_ids] for i in row_ids]
        log.debug(f"invariant factors: {units} unit pivots, dense residual {len(row_ids)}x{len(col_ids)}")
        factors, _, _ = _dense_smith(A, len(row_ids), len(col_ids), witnesses=False)
        residual = tuple(d for d in factors if d)
    return (1,) * units + residual


def rank(M: IntMatrix) -> int:
    return len(invariant_factors(M))


# ---------------------------------------------------------
# ECHELON FORMS AND KERNELS
# ---------------------------------------------------------
def _axpy(dst: Column, src: Column, q: int) -> None:
    """dst -= q * src"""
    for i, v in src.items():
        nv = dst.get(i, 0) - q * v
        if nv:
            dst[i] = nv
        else:
            dst.pop(i, None)


def column_echelon(M: IntMatrix) -> Tuple[IntMatrix, IntMatrix, int]:
    """
    Unimodular column reduction M * V = [H | 0]

    H is lower echelon: column k has a pivot row p_k, is zero above it,
    and p_0 < p_1 < ... ; H has full column rank.

    Returns:
        (H, V, rank)
    """
    A = [dict(c) for c in M.cols]
    V = [{j: 1} for j in range(M.ncols)]
    r = 0
    pivots = []
    active_rows = sorted({i for c in A for i in c})
    for row in active_rows:
        if r == M.ncols:
            break
        while True:
            live = [j for j in range(r, M.ncols) if A[j].get(row)]
            if not live:
                break
            piv = min(live, key=lambda j: (abs(A[j][row]), len(A[j])))
            others = [j for j in live if j != piv]
            if not others:
                A[r], A[piv] = A[piv], A[r]
                V[r], V[piv] = V[piv], V[r]
                if A[r][row] < 0:
                    A[r] = {i: -v for i, v in A[r].items()}
                    V[r] = {i: -v for i, v in V[r].items()}
                pivots.append(row)
                r += 1
                break
            for j in others:
                q = A[j][row] // A[piv][row]
                _axpy(A[j], A[piv], q)
                _axpy(V[j], V[piv], q)
    H = IntMatrix(M.nrows, r, A[:r])
    return H, IntMatrix(M.ncols, M.ncols, V), r


def kernel_basis(M: IntMatrix) -> IntMatrix:
    """Columns form a Z-basis of {v : M v = 0}"""
    _, V, r = column_echelon(M)
    return V.select(range(r, M.ncols))


class Lattice:
    """Integer span of the columns of a generator matrix"""

    def __init__(self, generators: IntMatrix):
        self.generators = generators
        self.basis, self._V, self.rank = column_echelon(generators)
        self._pivots = [min(col) for col in self.basis.cols]

    def __repr__(self) -> str:
        return f"Lattice(rank={self.rank}, ambient={self.generators.nrows})"

    def solve(self, v: Column) -> Optional[List[int]]:
        """y with basis * y == v, or None"""
        residual = dict(v)
        y = []
        for k, p in enumerate(self._pivots):
            col = self.basis.cols[k]
            if any(i < p for i in residual):
                return None
            entry = residual.get(p, 0)
            if entry % col[p]:
                return None
            q = entry // col[p]
            y.append(q)
            if q:
                _axpy(residual, col, q)
        return None if residual else y

    def contains(self, v) -> Optional[List[int]]:
        """Coefficients over the generators reproducing v, or None"""
        if not isinstance(v, dict):
            v = {i: x for i, x in enumerate(v) if x}
        y = self.solve(v)
        if y is None:
            return None
        coeffs = self._V.apply({k: c for k, c in enumerate(y) if c})
        return [coeffs.get(j, 0) for j in range(self.generators.ncols)]

    def __contains__(self, v) -> bool:
        return self.contains(v) is not None


def lattice_contains(basis: IntMatrix, v) -> Optional[List[int]]:
    return Lattice(basis).contains(v)


def hermite_normal_form(M: IntMatrix) -> List[List[int]]:
    """Canonical column HNF (zero columns dropped), as dense rows"""
    nonzero = [j for j, c in enumerate(M.cols) if c]
    if not nonzero:
        return [[] for _ in range(M.nrows)]
    W = _hnf(M.select(nonzero).to_sympy())
    return [[int(x) for x in row] for row in W.to_list()]


def lattice_equal(B1: IntMatrix, B2: IntMatrix) -> bool:
    if B1.nrows != B2.nrows:
        return False
    return hermite_normal_form(B1) == hermite_normal_form(B2)


def lattice_equal_by_containment(B1: IntMatrix, B2: IntMatrix) -> bool:
    L1, L2 = Lattice(B1), Lattice(B2)
    return (all(L1.contains(B2.cols[j]) is not None for j in range(B2.ncols))
            and all(L2.contains(B1.cols[j]) is not None for j in range(B1.ncols)))


def determinant(M: IntMatrix) -> int:
    if M.nrows != M.ncols:
        raise ValueError(f"determinant of a non-square {M.shape} matrix")
    return int(M.to_sympy().det())


def is_unimodular(U: IntMatrix) -> bool:
    return U.nrows == U.ncols and abs(determinant(U)) == 1
