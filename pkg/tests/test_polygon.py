from itertools import combinations

import pytest

from cluster import (
    Diagonal,
    DiagonalNotInTriangulation,
    InvalidDiagonal,
    ResourceLimit,
    Triangulation,
    all_diagonals,
    boundary_edges,
    catalan,
    crosses,
    enumerate_triangulations,
    fan,
    flip,
    quad_of,
)
from cluster.polygon import completions, diagonal, dissection_regions, triangulations_of


def catalan_by_recurrence(k):
    c = [1]
    for m in range(k):
        c.append(sum(c[i] * c[m - i] for i in range(m + 1)))
    return c[k]


def brute_force_triangulations(n):
    return {
        tuple(sorted(ds))
        for ds in combinations(all_diagonals(n), n)
        if not any(crosses(a, b) for a, b in combinations(ds, 2))
    }


@pytest.mark.parametrize("k", range(10))
def test_catalan_closed_form(k):
    assert catalan(k) == catalan_by_recurrence(k)


def test_diagonal_validation():
    assert diagonal(2, 4, 1) == Diagonal(1, 4)
    for u, v in [(1, 2), (2, 3), (1, 5), (0, 3), (3, 7), (2, 2)]:
        with pytest.raises(InvalidDiagonal):
            diagonal(2, u, v)


def test_diagonal_and_boundary_counts():
    for n in range(1, 6):
        assert len(all_diagonals(n)) == (n + 3) * n // 2
        assert len(boundary_edges(n)) == n + 3


def test_crosses_is_strict_interleaving():
    assert crosses(Diagonal(1, 3), Diagonal(2, 4))
    assert crosses(Diagonal(2, 4), Diagonal(1, 3))
    assert not crosses(Diagonal(1, 3), Diagonal(1, 4))  # shared endpoint
    assert not crosses(Diagonal(1, 3), Diagonal(3, 5))
    assert not crosses(Diagonal(2, 5), Diagonal(3, 4))  # nested


def test_triangulation_rejects_bad_sets():
    with pytest.raises(InvalidDiagonal):
        Triangulation.of(2, [(1, 3), (2, 4)])
    with pytest.raises(InvalidDiagonal):
        Triangulation.of(3, [(1, 3), (1, 4)])
    with pytest.raises(InvalidDiagonal):
        Triangulation.of(2, [(1, 3), (1, 3)])


def test_triangulation_is_canonical():
    assert Triangulation.of(2, [(1, 4), (1, 3)]) == Triangulation.of(2, [(1, 3), (1, 4)])
    assert hash(Triangulation.of(2, [(1, 4), (1, 3)])) == hash(fan(2, 1))


@pytest.mark.parametrize("n,apex,expected", [
    (2, 1, [(1, 3), (1, 4)]),
    (2, 3, [(1, 3), (3, 5)]),
    (3, 4, [(1, 4), (2, 4), (4, 6)]),
])
def test_fan(n, apex, expected):
    assert fan(n, apex) == Triangulation.of(n, expected)


def test_fan_rejects_apex_outside_polygon():
    with pytest.raises(InvalidDiagonal):
        fan(2, 6)


def test_quad_and_flip():
    T = fan(2, 1)
    assert quad_of(T, Diagonal(1, 3)) == (1, 2, 3, 4)
    T2, new = flip(T, Diagonal(1, 3))
    assert new == Diagonal(2, 4)
    assert T2 == Triangulation.of(2, [(1, 4), (2, 4)])
    assert quad_of(T2, new) == (1, 2, 3, 4)
    back, old = flip(T2, new)
    assert (back, old) == (T, Diagonal(1, 3))


def test_flip_of_missing_diagonal():
    with pytest.raises(DiagonalNotInTriangulation):
        flip(fan(2, 1), Diagonal(2, 4))
    with pytest.raises(DiagonalNotInTriangulation):
        quad_of(fan(2, 1), Diagonal(3, 5))


def test_triangles_cover_polygon():
    for T in enumerate_triangulations(4):
        tris = T.triangles()
        assert len(tris) == 5
        assert set().union(*tris) == set(range(1, 8))


@pytest.mark.parametrize("n", range(1, 6))
def test_enumeration_matches_brute_force(n):
    found = enumerate_triangulations(n)
    assert len(found) == catalan(n + 1)
    assert found[0] == fan(n, 1)
    assert {T.diagonals for T in found} == brute_force_triangulations(n)


def test_enumeration_is_deterministic():
    assert enumerate_triangulations(4) == enumerate_triangulations(4)


def test_enumeration_reports_progress():
    seen = []
    enumerate_triangulations(3, progress_callback=lambda found, expected: seen.append((found, expected)))
    assert seen[-1] == (14, 14)
    assert [f for f, _ in seen] == sorted(f for f, _ in seen)


def test_enumeration_respects_node_bound():
    with pytest.raises(ResourceLimit):
        enumerate_triangulations(4, max_nodes=41)
    with pytest.raises(ValueError):
        enumerate_triangulations(0)


def test_dissection_regions():
    assert dissection_regions(3, [Diagonal(1, 4)]) == ((1, 2, 3, 4), (1, 4, 5, 6))
    assert dissection_regions(2, []) == ((1, 2, 3, 4, 5),)


def test_triangulations_of_subpolygon():
    assert len(triangulations_of((2, 3, 5, 6, 7))) == 5
    assert triangulations_of((1, 2, 3)) == ((),)


def test_completions():
    partial = [Diagonal(1, 4)]
    found = completions(3, partial)
    assert len(found) == 4
    assert all(Diagonal(1, 4) in T for T in found)
