"""Shared logger, errors and resource limits"""

import logging
import os
from math import comb
from typing import Optional

log = logging.getLogger("assoc")

VERSION = "0.1.0"


# ---------------------------------------------------------
# LIMITS
# ---------------------------------------------------------
DEFAULT_MAX_N = 6
DEFAULT_MAX_NODES = 1430  # Catalan(8), enumeration up to n=7


def catalan(k: int) -> int:
    """k-th Catalan number"""
    return comb(2 * k, k) // (k + 1)


def max_n() -> int:
    """Bound on n for homology / algebra heavy work"""
    return int(os.getenv("ASSOC_MAX_N", DEFAULT_MAX_N))


def max_nodes() -> int:
    """Bound on the number of triangulations we are willing to enumerate"""
    return int(os.getenv("ASSOC_MAX_NODES", DEFAULT_MAX_NODES))


def check_node_bound(n: int, bound: Optional[int] = None) -> int:
    """Raise ResourceLimit unless Catalan(n+1) fits into the node bound"""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    bound = max_nodes() if bound is None else bound
    needed = catalan(n + 1)
    if needed > bound:
        raise ResourceLimit(f"n={n} needs {needed} nodes, bound is {bound}")
    return needed


# ---------------------------------------------------------
# ERRORS
# ---------------------------------------------------------
class AssocError(Exception):
    """Base class for all library errors"""


class ResourceLimit(AssocError):
    pass


class InvalidDiagonal(AssocError, ValueError):
    pass


class DiagonalNotInTriangulation(AssocError, KeyError):
    pass


class NotAWalk(AssocError, ValueError):
    pass


class MoveNotApplicable(AssocError):
    pass


class LabelMismatch(AssocError):
    pass


class ArityMismatch(AssocError, ValueError):
    pass


class NotDivisible(AssocError, ArithmeticError):
    """Exact division failed; for cluster variables this is an upstream bug"""


class ZeroToNegativePower(AssocError, ZeroDivisionError):
    pass


class InconsistentVariable(AssocError):
    """Two flip paths produced different polynomials for one diagonal"""


class TriangleFound(AssocError):
    pass


class NotInSpan(AssocError):
    pass


class RankMismatch(AssocError):
    pass


class NotExpressible(AssocError):
    pass
