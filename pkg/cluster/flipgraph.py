"""Exchange graph: triangulations joined by flips, labeled and oriented"""

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from itertools import combinations
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx

from .base import LabelMismatch, MoveNotApplicable, NotAWalk, TriangleFound, log
from .polygon import (
    Diagonal,
    Label,
    Triangulation,
    completions,
    dissection_regions,
    enumerate_triangulations,
    is_boundary,
)

Walk = Tuple[int, ...]


@dataclass(frozen=True)
class Edge:
    """
    A flip between nodes `tail` and `head`

    Oriented from the node holding the smaller exchanged diagonal (`old`)
    to the node holding the larger one (`new`).
    """
    index: int
    tail: int
    head: int
    old: Diagonal
    new: Diagonal
    label: Label

    @property
    def ends(self) -> Tuple[int, int]:
        return (min(self.tail, self.head), max(self.tail, self.head))


class ExchangeGraph:
    """Nodes are triangulations (BFS order from the fan at 1), edges are flips"""

    def __init__(self, n: int, nodes: Sequence[Triangulation], edges: Sequence[Edge]):
        self.n = n
        self.nodes: Tuple[Triangulation, ...] = tuple(nodes)
        self.edges: Tuple[Edge, ...] = tuple(edges)
        self.index: Dict[Triangulation, int] = {T: i for i, T in enumerate(self.nodes)}
        self._edge_at: Dict[Tuple[int, int], Edge] = {e.ends: e for e in self.edges}
        adjacency: List[List[int]] = [[] for _ in self.nodes]
        for e in self.edges:
            adjacency[e.tail].append(e.head)
            adjacency[e.head].append(e.tail)
        self.adjacency: Tuple[Tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adjacency)

    def __repr__(self) -> str:
        return f"ExchangeGraph(n={self.n}, nodes={len(self.nodes)}, edges={len(self.edges)})"

    def node_of(self, T: Triangulation) -> int:
        return self.index[T]

    def neighbors(self, u: int) -> Tuple[int, ...]:
        return self.adjacency[u]

    def edge_between(self, u: int, v: int) -> Optional[Edge]:
        return self._edge_at.get((min(u, v), max(u, v)))

    def label(self, u: int, v: int) -> Label:
        e = self.edge_between(u, v)
        if e is None:
            raise NotAWalk(f"nodes {u} and {v} are not adjacent")
        return e.label

    @cached_property
    def networkx(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(range(len(self.nodes)))
        for e in self.edges:
            G.add_edge(e.tail, e.head, index=e.index, label=e.label)
        return G

    def to_networkx(self) -> nx.Graph:
        return self.networkx


def build(
    n: int,
    max_nodes: Optional[int] = None,
    progress_callback: Optional[Callable[[int, int], None]] = None,
) -> ExchangeGraph:
    """
    Exchange graph of the (n+3)-gon

    Asserts n-regularity, connectivity and triangle-freeness on the way.
    """
    nodes = enumerate_triangulations(n, max_nodes=max_nodes, progress_callback=progress_callback)
    index = {T: i for i, T in enumerate(nodes)}
    edges: List[Edge] = []
    for i, T in enumerate(nodes):
        for d in T.diagonals:
            T2, d2 = T.flip(d)
            j = index[T2]
            if j < i:
                continue
            label = T.quad_of(d)
            if d < d2:
                edges.append(Edge(len(edges), i, j, d, d2, label))
            else:
                edges.append(Edge(len(edges), j, i, d2, d, label))
    graph = ExchangeGraph(n, nodes, edges)

    degrees = {len(a) for a in graph.adjacency}
    if degrees != {n}:
        raise AssertionError(f"exchange graph is not {n}-regular: degrees {sorted(degrees)}")
    G = graph.networkx
    if not nx.is_connected(G):
        raise AssertionError("exchange graph is not connected")
    if sum(nx.triangles(G).values()):
        raise TriangleFound(f"exchange graph for n={n} has a triangle")
    log.info(f"Exchange graph n={n}: {len(nodes)} nodes, {len(edges)} edges")
    return graph


# ---------------------------------------------------------
# GEODESIC CYCLES
# ---------------------------------------------------------
class CycleKind(Enum):
    FOUR = 4
    FIVE = 5


@dataclass(frozen=True)
class LoopWord:
    letters: Tuple[Label, ...]

    def __len__(self) -> int:
        return len(self.letters)

    def parity(self) -> Dict[Label, int]:
        counts: Dict[Label, int] = {}
        for letter in self.letters:
            counts[letter] = counts.get(letter, 0) + 1
        return {letter: c % 2 for letter, c in counts.items()}


@dataclass(frozen=True)
class GeodesicCycle:
    """Completions of a codimension-2 face, in cyclic order"""
    kind: CycleKind
    nodes: Tuple[int, ...]
    face: Tuple[Diagonal, ...]
    edge_labels: Tuple[Label, ...]
    label: Optional[Label] = None  # pentagon vertex set, FIVE only

    def walk(self) -> Walk:
        return self.nodes + (self.nodes[0],)


def codim2_faces(graph: ExchangeGraph) -> Tuple[Tuple[Diagonal, ...], ...]:
    faces = set()
    for T in graph.nodes:
        for d1, d2 in combinations(T.diagonals, 2):
            faces.add(tuple(d for d in T.diagonals if d != d1 and d != d2))
    return tuple(sorted(faces))


def _region_sides(region: Label) -> List[Tuple[int, int]]:
    return [(region[i], region[(i + 1) % len(region)]) for i in range(len(region))]


def _order_cycle(graph: ExchangeGraph, members: Sequence[int]) -> List[int]:
    """Walk the cycle induced on `members`, starting at the least node"""
    pool = set(members)
    start = min(pool)
    order = [start]
    while len(order) < len(pool):
        nxt = [v for v in graph.neighbors(order[-1]) if v in pool and v not in order]
        if not nxt:
            raise AssertionError(f"nodes {sorted(pool)} do not form a cycle")
        order.append(min(nxt))
    return order


def _word(graph: ExchangeGraph, cyclic: Sequence[int]) -> Tuple[Label, ...]:
    return tuple(graph.label(cyclic[i], cyclic[(i + 1) % len(cyclic)]) for i in range(len(cyclic)))


def five_cycle_for_face(graph: ExchangeGraph, face: Sequence[Diagonal]) -> GeodesicCycle:
    """
    Geodesic 5-cycle of a face leaving one pentagon

    Traversed so that the edge labeled {a,b,c,d} (pentagon a<b<c<d<e)
    runs along its orientation; starts at the least node index.
    """
    face = tuple(sorted(face))
    pentagon = [r for r in dissection_regions(graph.n, face) if len(r) > 3]
    if len(pentagon) != 1 or len(pentagon[0]) != 5:
        raise LabelMismatch(f"face {face} does not leave exactly one pentagon")
    label = pentagon[0]
    members = [graph.index[T] for T in completions(graph.n, face)]
    order = _order_cycle(graph, members)
    key = label[:4]
    for i in range(5):
        u, v = order[i], order[(i + 1) % 5]
        e = graph.edge_between(u, v)
        if e.label == key:
            if (e.tail, e.head) != (u, v):
                order = [order[0]] + order[1:][::-1]
            break
    return GeodesicCycle(CycleKind.FIVE, tuple(order), face, _word(graph, order), label)


def four_cycle_for_face(graph: ExchangeGraph, face: Sequence[Diagonal]) -> GeodesicCycle:
    face = tuple(sorted(face))
    members = [graph.index[T] for T in completions(graph.n, face)]
    order = _order_cycle(graph, members)
    return GeodesicCycle(CycleKind.FOUR, tuple(order), face, _word(graph, order))


def geodesic_cycles(
    graph: Union[int, ExchangeGraph],
) -> Tuple[Tuple[GeodesicCycle, ...], Tuple[GeodesicCycle, ...]]:
    """All geodesic 4-cycles and 5-cycles, one per codimension-2 face; accepts n or a built graph"""
    if isinstance(graph, int):
        graph = build(graph)
    fours, fives = [], []
    for face in codim2_faces(graph):
        open_regions = [r for r in dissection_regions(graph.n, face) if len(r) > 3]
        if len(open_regions) == 1:
            cycle = five_cycle_for_face(graph, face)
            if len(set(cycle.edge_labels)) != 5 or set().union(*cycle.edge_labels) != set(cycle.label):
                raise AssertionError(f"5-cycle {cycle.nodes} breaks the label-union rule")
            fives.append(cycle)
        else:
            cycle = four_cycle_for_face(graph, face)
            w = cycle.edge_labels
            if not (w[0] == w[2] and w[1] == w[3] and w[0] != w[1]):
                raise AssertionError(f"4-cycle {cycle.nodes} has labels {w}")
            fours.append(cycle)
    fours.sort(key=lambda c: c.nodes)
    fives.sort(key=lambda c: (c.label, c.nodes))
    log.debug(f"n={graph.n}: {len(fours)} geodesic 4-cycles, {len(fives)} geodesic 5-cycles")
    return tuple(fours), tuple(fives)


def pentagon_face(n: int, label: Sequence[int]) -> Tuple[Diagonal, ...]:
    """Face leaving pentagon `label`, each exterior pocket fanned at its least vertex"""
    label = tuple(sorted(label))
    face = []
    for u, v in _region_sides(label):
        if is_boundary(n, u, v):
            continue
        lo, hi = min(u, v), max(u, v)
        face.append(Diagonal(lo, hi))
        if (u, v) == (label[-1], label[0]):
            pocket = tuple(x for x in range(1, n + 4) if x <= lo or x >= hi)
        else:
            pocket = tuple(range(lo, hi + 1))
        apex = pocket[0]
        for x in pocket[2:-1] if apex == lo else ():
            face.append(Diagonal(apex, x))
        if apex != lo:
            # wrap-around pocket, apex is vertex 1 and the chord is (lo, hi)
            for x in pocket:
                if x in (apex,) or is_boundary(n, apex, x) or (apex, x) == (lo, hi):
                    continue
                face.append(Diagonal(min(apex, x), max(apex, x)))
    return tuple(sorted(set(face)))


def homotopic(C: GeodesicCycle, C2: GeodesicCycle) -> bool:
    """Label equality decides homotopy of geodesic 5-cycles"""
    return C.label == C2.label


# ---------------------------------------------------------
# WALKS AND WORDS
# ---------------------------------------------------------
def check_walk(graph: ExchangeGraph, walk: Sequence[int]) -> Walk:
    walk = tuple(walk)
    if not walk:
        raise NotAWalk("empty node sequence")
    if walk[0] != walk[-1]:
        raise NotAWalk(f"walk is not closed: {walk[0]} .. {walk[-1]}")
    for u, v in zip(walk, walk[1:]):
        if u != v and graph.edge_between(u, v) is None:
            raise NotAWalk(f"nodes {u} and {v} are not adjacent")
    return walk


def loop_word(graph: ExchangeGraph, walk: Sequence[int]) -> LoopWord:
    """Edge labels along a closed walk; repeated nodes add no letter"""
    walk = check_walk(graph, walk)
    return LoopWord(tuple(graph.label(u, v) for u, v in zip(walk, walk[1:]) if u != v))


@dataclass(frozen=True)
class Stretch:
    pass


@dataclass(frozen=True)
class Insert:
    via: int


@dataclass(frozen=True)
class Switch:
    pass


Move = Union[Stretch, Insert, Switch]


def switch_candidate(graph: ExchangeGraph, walk: Sequence[int], i: int) -> Optional[int]:
    """Node replacing walk[i] across a geodesic 4-cycle, if there is one"""
    if not 0 < i < len(walk) - 1:
        return None
    prev, mid, nxt = walk[i - 1], walk[i], walk[i + 1]
    if len({prev, mid, nxt}) != 3:
        return None
    e1, e2 = graph.edge_between(prev, mid), graph.edge_between(mid, nxt)
    if e1 is None or e2 is None or e1.label == e2.label:
        return None
    T_prev, T_mid = graph.nodes[prev], graph.nodes[mid]
    # the diagonal flipped on the second step, read off in T_mid
    gone = [d for d in T_mid.diagonals if d not in graph.nodes[nxt]]
    if len(gone) != 1 or gone[0] not in T_prev:
        return None
    T_new, _ = T_prev.flip(gone[0])
    cand = graph.index[T_new]
    if cand == mid or graph.edge_between(cand, nxt) is None:
        return None
    if graph.label(prev, cand) != e2.label or graph.label(cand, nxt) != e1.label:
        return None
    return cand


def apply_move(graph: ExchangeGraph, walk: Sequence[int], move: Move, position: int) -> Walk:
    """
    Apply stretch, insert or switch at `position`

    Stretch repeats walk[position]; Insert(via) detours walk[position] ->
    via -> walk[position+1] where those two are equal; Switch replaces
    walk[position] by the opposite corner of a geodesic 4-cycle.
    """
    walk = check_walk(graph, walk)
    if not 0 <= position < len(walk):
        raise MoveNotApplicable(f"position {position} outside walk of length {len(walk)}")

    if isinstance(move, Stretch):
        return walk[:position + 1] + walk[position:]

    if isinstance(move, Insert):
        if position + 1 >= len(walk) or walk[position] != walk[position + 1]:
            raise MoveNotApplicable(f"insert needs a repeated node at {position}")
        if graph.edge_between(walk[position], move.via) is None:
            raise MoveNotApplicable(f"node {move.via} is not a neighbor of {walk[position]}")
        return walk[:position + 1] + (move.via,) + walk[position + 1:]

    if isinstance(move, Switch):
        cand = switch_candidate(graph, walk, position)
        if cand is None:
            raise MoveNotApplicable(f"no geodesic 4-cycle to switch across at {position}")
        return walk[:position] + (cand,) + walk[position + 1:]

    raise MoveNotApplicable(f"unknown move {move!r}")


def applicable_moves(graph: ExchangeGraph, walk: Sequence[int]) -> List[Tuple[Move, int]]:
    moves: List[Tuple[Move, int]] = []
    for p in range(len(walk)):
        moves.append((Stretch(), p))
        if p + 1 < len(walk) and walk[p] == walk[p + 1]:
            moves.extend((Insert(v), p) for v in graph.neighbors(walk[p]))
        if switch_candidate(graph, walk, p) is not None:
            moves.append((Switch(), p))
    return moves


# ---------------------------------------------------------
# NETS OF 4-CYCLES
# ---------------------------------------------------------
def _interior(T: Triangulation, label: Label) -> FrozenSet[Diagonal]:
    sides = {(min(u, v), max(u, v)) for u, v in _region_sides(label)}
    return frozenset(d for d in T.diagonals if d.a in label and d.b in label and (d.a, d.b) not in sides)


def _pockets(n: int, label: Label) -> List[Label]:
    pockets = []
    for u, v in _region_sides(label):
        if is_boundary(n, u, v):
            continue
        lo, hi = min(u, v), max(u, v)
        if (u, v) == (label[-1], label[0]):
            pockets.append(tuple(x for x in range(1, n + 4) if x <= lo or x >= hi))
        else:
            pockets.append(tuple(range(lo, hi + 1)))
    return pockets


def _normalizing_flips(T: Triangulation, label: Label) -> List[Diagonal]:
    """Flips that fan every exterior pocket at its least vertex"""
    flips = []
    for pocket in _pockets(T.n, label):
        apex = pocket[0]
        members = set(pocket)
        while True:
            inside = [d for d in T.diagonals
                      if d.a in members and d.b in members and not d.has(apex)
                      and not is_boundary(T.n, d.a, d.b) and (d.a, d.b) != (pocket[0], pocket[-1])
                      and not _is_pocket_chord(d, pocket)]
            visible = [d for d in inside if T.is_edge(apex, d.a) and T.is_edge(apex, d.b)]
            if not visible:
                break
            d = visible[0]
            T, _ = T.flip(d)
            flips.append(d)
    return flips


def _is_pocket_chord(d: Diagonal, pocket: Label) -> bool:
    ends = (pocket[0], pocket[-1]) if pocket == tuple(range(pocket[0], pocket[-1] + 1)) else None
    if ends is not None:
        return (d.a, d.b) == ends
    # wrap pocket 1..lo, hi..N: the chord is (lo, hi)
    gap = [x for x in range(pocket[0], pocket[-1] + 1) if x not in pocket]
    return (d.a, d.b) == (gap[0] - 1, gap[-1] + 1)


def _rows_to_normal(graph: ExchangeGraph, cycle_nodes: Sequence[int], label: Label) -> List[Tuple[int, ...]]:
    rows = [tuple(cycle_nodes)]
    for d in _normalizing_flips(graph.nodes[cycle_nodes[0]], label):
        rows.append(tuple(graph.index[graph.nodes[u].flip(d)[0]] for u in rows[-1]))
    return rows


def net_between(graph: ExchangeGraph, C: GeodesicCycle, C2: GeodesicCycle) -> Tuple[Walk, ...]:
    """
    Grid of closed walks from C to C2 through same-label 5-cycles

    Nodes are paired by their triangulation inside the pentagon; both
    cycles are driven to the fanned exterior and the two paths are glued
    where they first meet.
    """
    if C.label != C2.label:
        raise LabelMismatch(f"labels differ: {C.label} vs {C2.label}")
    label = C.label
    inner = {_interior(graph.nodes[u], label): u for u in C2.nodes}
    paired = tuple(inner[_interior(graph.nodes[u], label)] for u in C.nodes)

    rows_a = _rows_to_normal(graph, C.nodes, label)
    rows_b = _rows_to_normal(graph, paired, label)
    where = {row: j for j, row in enumerate(rows_b)}
    for i, row in enumerate(rows_a):
        if row in where:
            rows = rows_a[:i + 1] + rows_b[:where[row]][::-1]
            break
    else:
        raise AssertionError("normalization paths did not meet")
    return tuple(r + (r[0],) for r in rows)


def is_grid(graph: ExchangeGraph, rows: Sequence[Sequence[int]]) -> bool:
    """Equal-length closed walks, consecutive rows entrywise equal or adjacent"""
    if not rows:
        return False
    length = len(rows[0])
    for row in rows:
        if len(row) != length:
            return False
        try:
            check_walk(graph, row)
        except NotAWalk:
            return False
    for upper, lower in zip(rows, rows[1:]):
        for u, v in zip(upper, lower):
            if u != v and graph.edge_between(u, v) is None:
                return False
    return True


def is_label_cycle(graph: ExchangeGraph, row: Sequence[int], label: Label) -> bool:
    nodes = tuple(row[:-1])
    if len(set(nodes)) != 5:
        return False
    word = loop_word(graph, row).letters
    return len(set(word)) == 5 and set().union(*word) == set(label)


def canonical_cycle(nodes: Sequence[int]) -> Tuple[int, ...]:
    """Rotate to the least node, then head toward its smaller cycle neighbor"""
    k = len(nodes)
    i = nodes.index(min(nodes))
    forward = tuple(nodes[(i + j) % k] for j in range(k))
    backward = tuple(nodes[(i - j) % k] for j in range(k))
    return forward if forward[1] < backward[1] else backward


def non_geodesic_four_cycles(
    graph: ExchangeGraph,
    cycles: Iterable[Sequence[int]],
    fours: Optional[Sequence[GeodesicCycle]] = None,
) -> List[Tuple[int, ...]]:
    """4-cycles of the graph that do not come from a codimension-2 face"""
    if fours is None:
        fours, _ = geodesic_cycles(graph)
    geodesic = {canonical_cycle(c.nodes) for c in fours}
    return [c for c in (canonical_cycle(tuple(c)) for c in cycles) if c not in geodesic]


def random_moves(graph: ExchangeGraph, walk: Sequence[int], steps: int, rng) -> Walk:
    """Apply `steps` uniformly chosen applicable moves; rng is a random.Random"""
    walk = check_walk(graph, walk)
    for _ in range(steps):
        move, position = rng.choice(applicable_moves(graph, walk))
        walk = apply_move(graph, walk, move, position)
    return walk
