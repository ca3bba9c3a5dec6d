"""Type-A cluster algebras: triangulations, exchange graph, homology, exchange module"""

from .base import (
    VERSION,
    ArityMismatch,
    AssocError,
    DiagonalNotInTriangulation,
    InconsistentVariable,
    InvalidDiagonal,
    LabelMismatch,
    MoveNotApplicable,
    NotAWalk,
    NotDivisible,
    NotExpressible,
    NotInSpan,
    RankMismatch,
    ResourceLimit,
    TriangleFound,
    ZeroToNegativePower,
    catalan,
)
from .polygon import (
    BoundaryEdge,
    Diagonal,
    Triangulation,
    all_diagonals,
    boundary_edges,
    crosses,
    enumerate_triangulations,
    fan,
    flip,
    quad_of,
)
from .flipgraph import (
    CycleKind,
    ExchangeGraph,
    GeodesicCycle,
    Insert,
    LoopWord,
    Stretch,
    Switch,
    apply_move,
    build,
    geodesic_cycles,
    homotopic,
    loop_word,
    net_between,
)
from .laurent import LaurentPoly, exact_div, specialize
from .clustervars import Seed, VariableTable, compute_table, exchange, verify_period_five
from .zlinalg import IntMatrix, Lattice, kernel_basis, lattice_contains, lattice_equal, smith_normal_form
from .homology import CellComplex2, build_complex, boundary_matrices, class_vector, classes_equal, decompose, h1
from .exchmod import (
    CrossingPair,
    ExchangeModule,
    PentagonalRelation,
    RelationVector,
    crossing_pairs,
    exchange_basis,
    express,
    kernel_theta,
    theta_matrix,
    verify_pentagonal_generation,
)

__version__ = VERSION
