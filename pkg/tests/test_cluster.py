import math
from itertools import combinations

import pytest

from catalan_atlas.chains import h_plus_vector_from_chains, h_vector_from_chains
from catalan_atlas.cluster import (
    ClusterError,
    Diagonal,
    allowable_diagonals,
    build_complex,
    half_turn,
    is_allowable,
    parabolic_face_identity,
    polygon_size,
    rotate,
    segments_cross,
    snake,
    vertex_count_formula,
)
from catalan_atlas.poset import build_poset
from catalan_atlas.rootsys import build_root_system
from catalan_atlas.stats import f_cluster_closed_form


def _point(k, N):
    t = 2 * math.pi * k / N
    return (math.cos(t), math.sin(t))


def _geometric_cross(a, b, N):
    """Proper intersection of two chords of a regular N-gon, by orientation."""
    if set(a) & set(b):
        return False
    p1, p2, q1, q2 = (_point(v, N) for v in (*a, *b))
    orient = lambda o, u, v: (u[0] - o[0]) * (v[1] - o[1]) - (u[1] - o[1]) * (v[0] - o[0])
    d1, d2 = orient(q1, q2, p1), orient(q1, q2, p2)
    d3, d4 = orient(p1, p2, q1), orient(p1, p2, q2)
    return d1 * d2 < 0 and d3 * d4 < 0


def _brute_f(verts, N, ell):
    """Face numbers by testing every subset of at most l vertices."""
    ok = lambda d, e: not any(_geometric_cross(a, b, N) for a in d.segments for b in e.segments)
    f = [0] * (ell + 1)
    for k in range(ell + 1):
        for S in combinations(verts, k):
            if all(ok(d, e) for d, e in combinations(S, 2)):
                f[k] += 1
    return tuple(f)


def _type(family, n):
    return build_root_system(f"A{n - 1}" if family == "A" else f"B{n}")


def test_segment_crossing_matches_geometry():
    N = 9
    segs = [(i, j) for i in range(1, N + 1) for j in range(i + 2, N + 1)]
    for a, b in combinations(segs, 2):
        assert segments_cross(a, b) == _geometric_cross(a, b, N)


@pytest.mark.parametrize("N,m", [(8, 2), (11, 3), (10, 2)])
def test_allowable_means_parts_of_size_2_mod_m(N, m):
    for i in range(1, N + 1):
        for j in range(i + 2, N + 1):
            if j - i == N - 1:
                continue
            sides = (j - i + 1, N - (j - i) + 1)
            assert is_allowable(i, j, N, m) == all(s % m == 2 % m for s in sides)


def test_pentagon():
    s = build_complex("A", 3, 1)
    assert s.f == (1, 5, 5) and s.h == (1, 3, 1)


@pytest.mark.parametrize("family,n,m", [("A", 3, 2), ("A", 4, 2), ("A", 4, 1), ("B", 2, 1), ("B", 2, 2), ("B", 3, 1)])
def test_faces_match_brute_force(family, n, m):
    N = polygon_size(family, n, m)
    verts = allowable_diagonals(family, n, m)
    ell = n - 1 if family == "A" else n
    assert build_complex(family, n, m).f == _brute_f(verts, N, ell)
    neg = set(snake(family, n, m))
    pos = [v for v in verts if v not in neg]
    assert build_complex(family, n, m, positive_only=True).f == _brute_f(pos, N, ell)


@pytest.mark.parametrize("family,n,m", [("A", 3, 1), ("A", 5, 2), ("B", 2, 3), ("B", 4, 1), ("B", 3, 2)])
def test_vertex_count(family, n, m):
    assert len(allowable_diagonals(family, n, m)) == vertex_count_formula(family, n, m)


def test_type_b_vertices_are_half_turn_symmetric():
    N = polygon_size("B", 3, 2)
    for d in allowable_diagonals("B", 3, 2):
        assert {half_turn(s, N) for s in d.segments} == set(d.segments)
    # every one of the mn + 1 diameters is allowable
    assert sum(d.is_diameter for d in allowable_diagonals("B", 3, 2)) == 2 * 3 + 1


@pytest.mark.parametrize("family,n,m", [("A", 3, 1), ("A", 5, 3), ("B", 1, 2), ("B", 3, 2), ("B", 4, 1)])
def test_snake_is_a_facet(family, n, m):
    s = snake(family, n, m)
    assert len(s) == (n - 1 if family == "A" else n)
    assert all(not a.crosses(b) for a, b in combinations(s, 2))


@pytest.mark.parametrize("family,n,m", [("A", 3, 2), ("A", 4, 3), ("A", 5, 1), ("B", 2, 2), ("B", 3, 2), ("B", 4, 1)])
def test_h_vectors_match_chains(family, n, m):
    p = build_poset(_type(family, n))
    assert build_complex(family, n, m).h == h_vector_from_chains(p, m)
    assert build_complex(family, n, m, positive_only=True).h == h_plus_vector_from_chains(p, m)


@pytest.mark.parametrize("family,n,m", [("A", 4, 2), ("A", 5, 1), ("B", 3, 3), ("B", 2, 1)])
def test_positive_faces_closed_form(family, n, m):
    f = build_complex(family, n, m, positive_only=True).f
    assert f == tuple(f_cluster_closed_form(family, n, m, k) for k in range(len(f)))


@pytest.mark.parametrize("family,n,m", [("A", 4, 2), ("B", 3, 1)])
def test_positive_part_independent_of_rotation(family, n, m):
    N = polygon_size(family, n, m)
    base = build_complex(family, n, m, positive_only=True)
    for k in range(1, N):
        assert build_complex(family, n, m, positive_only=True, snake_rotation=k) == base


@pytest.mark.parametrize("family,n,m", [("A", 4, 2), ("A", 5, 1), ("B", 3, 1), ("B", 2, 3)])
def test_parabolic_identity(family, n, m):
    lhs, rhs = parabolic_face_identity(family, n, m)
    assert lhs == rhs


def test_rotation():
    d = Diagonal(((1, 3),))
    assert rotate(d, 6, 5) == Diagonal(((2, 6),))


def test_errors():
    with pytest.raises(ClusterError):
        polygon_size("D", 4, 1)
    with pytest.raises(ClusterError):
        polygon_size("A", 1, 1)
    with pytest.raises(ClusterError):
        polygon_size("B", 2, 0)
    with pytest.raises(ClusterError):
        build_complex("A", 6, 2, limit=10)
