"""Diagonals, triangulations and flips of the labeled convex (n+3)-gon"""

from collections import deque
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .base import DiagonalNotInTriangulation, InvalidDiagonal, ResourceLimit, check_node_bound, log

Vertex = int
Label = Tuple[int, ...]


@dataclass(frozen=True, order=True)
class Diagonal:
    """Chord (a, b) with a < b; validity depends on n, see `diagonal`"""
    a: int
    b: int

    def __iter__(self) -> Iterator[int]:
        return iter((self.a, self.b))

    def __str__(self) -> str:
        return f"({self.a},{self.b})"

    def has(self, v: int) -> bool:
        return v == self.a or v == self.b

    def is_valid(self, n: int) -> bool:
        return 1 <= self.a < self.b <= n + 3 and self.b - self.a >= 2 and (self.a, self.b) != (1, n + 3)


@dataclass(frozen=True, order=True)
class BoundaryEdge:
    a: int
    b: int

    def __iter__(self) -> Iterator[int]:
        return iter((self.a, self.b))

    def __str__(self) -> str:
        return f"[{self.a},{self.b}]"


def is_boundary(n: int, u: int, v: int) -> bool:
    u, v = min(u, v), max(u, v)
    return v - u == 1 or (u, v) == (1, n + 3)


def diagonal(n: int, u: int, v: int) -> Diagonal:
    """Normalized, validated diagonal"""
    d = Diagonal(min(u, v), max(u, v))
    if not d.is_valid(n):
        raise InvalidDiagonal(f"{d} is not a diagonal of the {n + 3}-gon")
    return d


def boundary_edge(n: int, u: int, v: int) -> BoundaryEdge:
    u, v = min(u, v), max(u, v)
    if not (1 <= u and v <= n + 3 and is_boundary(n, u, v)):
        raise InvalidDiagonal(f"[{u},{v}] is not a boundary edge of the {n + 3}-gon")
    return BoundaryEdge(u, v)


def boundary_edges(n: int) -> Tuple[BoundaryEdge, ...]:
    edges = [BoundaryEdge(i, i + 1) for i in range(1, n + 3)]
    edges.append(BoundaryEdge(1, n + 3))
    return tuple(edges)


def all_diagonals(n: int) -> Tuple[Diagonal, ...]:
    return tuple(Diagonal(a, b)
                 for a in range(1, n + 4)
                 for b in range(a + 2, n + 4)
                 if (a, b) != (1, n + 3))


def crosses(d1: Diagonal, d2: Diagonal) -> bool:
    """True iff the open chords meet inside the polygon (strict interleaving)"""
    a, c = d1
    b, d = d2
    return a < b < c < d or b < a < d < c


@dataclass(frozen=True)
class Triangulation:
    """n pairwise noncrossing diagonals, stored sorted"""
    n: int
    diagonals: Tuple[Diagonal, ...]
    _edges: frozenset = field(default=frozenset(), init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        diagonals = tuple(sorted(self.diagonals))
        object.__setattr__(self, "diagonals", diagonals)
        if len(diagonals) != self.n or len(set(diagonals)) != self.n:
            raise InvalidDiagonal(f"a triangulation of the {self.n + 3}-gon needs {self.n} distinct diagonals")
        for i, d in enumerate(diagonals):
            if not d.is_valid(self.n):
                raise InvalidDiagonal(f"{d} is not a diagonal of the {self.n + 3}-gon")
            for other in diagonals[i + 1:]:
                if crosses(d, other):
                    raise InvalidDiagonal(f"{d} crosses {other}")
        object.__setattr__(self, "_edges", frozenset((d.a, d.b) for d in diagonals))

    @classmethod
    def of(cls, n: int, pairs: Iterable[Sequence[int]]) -> "Triangulation":
        return cls(n, tuple(diagonal(n, u, v) for u, v in pairs))

    def __iter__(self) -> Iterator[Diagonal]:
        return iter(self.diagonals)

    def __len__(self) -> int:
        return len(self.diagonals)

    def __contains__(self, d: Diagonal) -> bool:
        return (d.a, d.b) in self._edges

    def __str__(self) -> str:
        return "{" + ",".join(str(d) for d in self.diagonals) + "}"

    def is_edge(self, u: int, v: int) -> bool:
        """u-v is a side of some triangle: a diagonal of T or a boundary edge"""
        u, v = min(u, v), max(u, v)
        return is_boundary(self.n, u, v) or (u, v) in self._edges

    def _apex(self, d: Diagonal, inside: bool) -> int:
        a, b = d
        side = range(a + 1, b) if inside else [v for v in range(1, self.n + 4) if v < a or v > b]
        for x in side:
            if self.is_edge(a, x) and self.is_edge(x, b):
                return x
        raise InvalidDiagonal(f"no triangle on {d} in {self}")

    def triangles(self) -> Tuple[Tuple[int, int, int], ...]:
        found = set()
        for d in list(self.diagonals) + [Diagonal(e.a, e.b) for e in boundary_edges(self.n)]:
            for inside in (True, False):
                try:
                    x = self._apex(d, inside)
                except InvalidDiagonal:
                    continue
                found.add(tuple(sorted((d.a, d.b, x))))
        return tuple(sorted(found))

    def quad_of(self, d: Diagonal) -> Label:
        """The four vertices bounding the flip quadrilateral of d"""
        if d not in self:
            raise DiagonalNotInTriangulation(f"{d} not in {self}")
        return tuple(sorted((d.a, d.b, self._apex(d, True), self._apex(d, False))))

    def flip(self, d: Diagonal) -> Tuple["Triangulation", Diagonal]:
        """Replace d by the other diagonal of its quadrilateral"""
        if d not in self:
            raise DiagonalNotInTriangulation(f"{d} not in {self}")
        x, y = self._apex(d, True), self._apex(d, False)
        new = Diagonal(min(x, y), max(x, y))
        rest = tuple(e for e in self.diagonals if e != d)
        return Triangulation(self.n, rest + (new,)), new


def quad_of(T: Triangulation, d: Diagonal) -> Label:
    return T.quad_of(d)


def flip(T: Triangulation, d: Diagonal) -> Tuple[Triangulation, Diagonal]:
    return T.flip(d)


def fan(n: int, apex: int = 1) -> Triangulation:
    """All diagonals through `apex`"""
    if not 1 <= apex <= n + 3:
        raise InvalidDiagonal(f"apex {apex} outside 1..{n + 3}")
    size = n + 3
    others = [((apex - 1 + k) % size) + 1 for k in range(2, n + 2)]
    return Triangulation(n, tuple(Diagonal(min(apex, v), max(apex, v)) for v in others))


def enumerate_triangulations(
    n: int,
    max_nodes: Optional[int] = None,
    progress_callback: Optional[Callable[[int, int], None]] = None,
) -> Tuple[Triangulation, ...]:
    """
    Breadth-first closure of fan(n, 1) under flips

    Neighbors are generated by flipping diagonals in sorted order, so the
    resulting sequence (and every node index derived from it) is stable.

    Args:
        n: polygon has n+3 vertices
        max_nodes: node bound, defaults to ASSOC_MAX_NODES
        progress_callback: called as (found, expected) after each BFS layer

    Returns:
        Tuple of all Catalan(n+1) triangulations
    """
    expected = check_node_bound(n, max_nodes)

    start = fan(n, 1)
    seen: Dict[Triangulation, int] = {start: 0}
    order: List[Triangulation] = [start]
    layer = deque([start])
    depth = 0
    while layer:
        next_layer = deque()
        for T in layer:
            for d in T.diagonals:
                T2, _ = T.flip(d)
                if T2 not in seen:
                    seen[T2] = len(order)
                    order.append(T2)
                    next_layer.append(T2)
        depth += 1
        log.debug(f"BFS layer {depth}: {len(order)}/{expected} triangulations")
        if progress_callback:
            progress_callback(len(order), expected)
        layer = next_layer

    if len(order) != expected:
        raise ResourceLimit(f"enumeration found {len(order)} triangulations, expected {expected}")
    return tuple(order)


# ---------------------------------------------------------
# DISSECTIONS
# ---------------------------------------------------------
def dissection_regions(n: int, diagonals: Iterable[Diagonal]) -> Tuple[Label, ...]:
    """Regions (sorted vertex tuples) cut out by noncrossing diagonals"""
    regions: List[Label] = [tuple(range(1, n + 4))]
    for d in sorted(diagonals):
        for i, region in enumerate(regions):
            if d.a in region and d.b in region:
                pos_a, pos_b = region.index(d.a), region.index(d.b)
                if pos_b - pos_a in (1, len(region) - 1):
                    continue  # d is a side of this region
                inner = tuple(v for v in region if d.a <= v <= d.b)
                outer = tuple(v for v in region if v <= d.a or v >= d.b)
                regions[i:i + 1] = [inner, outer]
                break
        else:
            raise InvalidDiagonal(f"{d} does not split any region")
    return tuple(sorted(regions))


def triangulations_of(vertices: Sequence[int]) -> Tuple[Tuple[Diagonal, ...], ...]:
    """All triangulations of the convex polygon on `vertices` (sorted)"""
    vs = tuple(sorted(vertices))
    if len(vs) <= 3:
        return ((),)
    first, last = vs[0], vs[-1]
    result = []
    # side (first, last) lies in exactly one triangle (first, vs[k], last)
    for k in range(1, len(vs) - 1):
        apex = vs[k]
        left, right = vs[:k + 1], vs[k:]
        chords = []
        if k > 1:
            chords.append(Diagonal(first, apex))
        if k < len(vs) - 2:
            chords.append(Diagonal(apex, last))
        for lt, rt in product(triangulations_of(left), triangulations_of(right)):
            result.append(tuple(sorted(tuple(chords) + lt + rt)))
    return tuple(sorted(result))


def completions(n: int, partial: Iterable[Diagonal]) -> Tuple[Triangulation, ...]:
    """All triangulations containing the noncrossing set `partial`"""
    partial = tuple(partial)
    pieces = [triangulations_of(r) for r in dissection_regions(n, partial)]
    return tuple(Triangulation(n, partial + sum(choice, ())) for choice in product(*pieces))
