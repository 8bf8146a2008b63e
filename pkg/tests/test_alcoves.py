from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from _oracles import CLASSICAL_DATA
from catalan_atlas.alcoves import (
    AffineElement,
    AlcoveError,
    ShiAdjacency,
    ShiVector,
    alcove_barycenter,
    alcove_vertices,
    dominant_alcoves_in_box,
    fundamental_barycenter,
    is_shi_vector,
    iter_valid_neighbors,
    length,
    length_from_shi,
    pair,
    shi_to_affine,
    shi_violation,
    simple_affine_reflections,
)
from catalan_atlas.poset import build_poset
from catalan_atlas.rootsys import build_root_system, inner

TYPES = ["A2", "A3", "B2", "B3", "C3", "G2", "D4"]
POSETS = {t: build_poset(build_root_system(t)) for t in TYPES + ["A1", "F4"]}


def _key(w):
    return (w.linear, w.translation)


def _order(g, limit=12):
    e = AffineElement.identity(g.rs)
    x = g
    for k in range(1, limit + 1):
        if _key(x) == _key(e):
            return k
        x = x * g
    return None


def _coxeter_m(rs, a, b):
    """Order of s_a s_b from the pairing of the two roots."""
    n = 4 * inner(rs, a, b) ** 2 / (inner(rs, a, a) * inner(rs, b, b))
    return {0: 2, 1: 3, 2: 4, 3: 6}[int(n)]


@pytest.mark.parametrize("name", TYPES)
def test_affine_coxeter_relations(name):
    rs = POSETS[name].rs
    gens = simple_affine_reflections(rs)
    roots = [rs.highest_root] + list(rs.simple_roots)
    for i, g in enumerate(gens):
        assert _order(g) == 2
        for j in range(i + 1, len(gens)):
            assert _order(g * gens[j]) == _coxeter_m(rs, roots[i], roots[j])


@pytest.mark.parametrize("name", TYPES)
def test_reflections_fix_their_walls(name):
    rs = POSETS[name].rs
    gens = simple_affine_reflections(rs)
    verts = alcove_vertices(AffineElement.identity(rs))
    # s_i fixes every vertex of A_o except the one opposite its wall
    for i, g in enumerate(gens):
        moved = [v for v in verts if g.apply(v) != v]
        assert len(moved) == 1


def test_identity_alcove():
    p = POSETS["B3"]
    e = AffineElement.identity(p.rs)
    assert e.shi(p).r == (1,) * p.size
    assert length(e, p) == 0
    b = fundamental_barycenter(p.rs)
    assert all(v > 0 for v in b) and pair(p.rs.highest_root, b) < 1


@pytest.mark.parametrize("name", TYPES)
def test_simple_reflections_have_length_one(name):
    p = POSETS[name]
    for g in simple_affine_reflections(p.rs):
        assert length(g, p) == 1


word = st.lists(st.integers(0, 10), max_size=14)


@given(st.sampled_from(TYPES), word)
def test_gallery_round_trip(name, letters):
    p = POSETS[name]
    gens = simple_affine_reflections(p.rs)
    w = AffineElement.identity(p.rs)
    for k in letters:
        w = w * gens[k % len(gens)]
    s = w.shi(p)
    assert is_shi_vector(p, s.r)
    back = shi_to_affine(p, s)
    assert _key(back) == _key(w)
    assert length_from_shi(s.r) <= len(letters)
    assert (length_from_shi(s.r) - len(letters)) % 2 == 0
    inv = w.inverse()
    assert _key(w * inv) == _key(AffineElement.identity(p.rs))


@given(st.sampled_from(TYPES), word)
def test_walls_agree_with_shi_adjacency(name, letters):
    p = POSETS[name]
    gens = simple_affine_reflections(p.rs)
    w = AffineElement.identity(p.rs)
    for k in letters:
        w = w * gens[k % len(gens)]
    s = w.shi(p)
    assert sorted(w.walls(p)) == sorted(ShiAdjacency(p).walls(s.r))
    for nb in iter_valid_neighbors(p, s):
        assert abs(length_from_shi(nb.r) - length_from_shi(s.r)) == 1


@pytest.mark.parametrize("name,bound", [("A2", 2), ("B2", 2), ("G2", 1), ("A3", 1), ("B3", 2), ("D4", 1)])
def test_dominant_box_count(name, bound):
    # the box is a fundamental domain of the coweight lattice scaled by bound
    _, _, _, order, det = CLASSICAL_DATA[name]
    p = POSETS[name]
    assert len(dominant_alcoves_in_box(p, bound)) == bound ** p.rs.rank * order // det


def test_dominant_box_count_f4():
    assert len(dominant_alcoves_in_box(POSETS["F4"], 1)) == 1152


def test_alcove_geometry():
    p = POSETS["A2"]
    for s in dominant_alcoves_in_box(p, 2):
        w = shi_to_affine(p, s)
        b = alcove_barycenter(w)
        for k, alpha in enumerate(p.rs.positive_roots):
            assert s[k] - 1 < pair(alpha, b) < s[k]
            for v in alcove_vertices(w):
                assert s[k] - 1 <= pair(alpha, v) <= s[k]


def test_invalid_shi_vector():
    p = POSETS["A2"]
    bad = (1, 1, 3)
    assert shi_violation(p, bad) is not None
    with pytest.raises(AlcoveError):
        shi_to_affine(p, ShiVector(bad))


def test_image_hyperplane():
    p = POSETS["A2"]
    s0 = simple_affine_reflections(p.rs)[0]
    theta = p.rs.highest_root
    k, level = s0.image_hyperplane(p, theta, 1)
    assert p.rs.positive_roots[k] == theta and level == 1
    k, level = s0.image_hyperplane(p, theta, 0)
    assert level == 2
