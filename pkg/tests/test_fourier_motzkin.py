from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from catalan_atlas.fourier_motzkin import FMResourceError, IneqSystem, MAX_VARIABLES, Row, fm_feasible


def test_open_interval():
    res = fm_feasible(IneqSystem(1).add([1], ">", 0).add([1], "<", 1))
    assert res and res.dimension == 1 and 0 < res.sample[0] < 1


def test_strict_contradiction():
    assert not fm_feasible(IneqSystem(1).add([1], ">", 1).add([1], "<", 1))
    assert not fm_feasible(IneqSystem(1).add([1], ">=", 1).add([1], "<", 1))


def test_point():
    res = fm_feasible(IneqSystem(1).add([1], ">=", 1).add([1], "<=", 1))
    assert res and res.dimension == 0 and res.sample == (Fraction(1),)


def test_open_triangle_and_edge():
    tri = IneqSystem(2).add([1, 0], ">", 0).add([0, 1], ">", 0).add([1, 1], "<", 1)
    res = fm_feasible(tri)
    assert res.dimension == 2 and tri.satisfied_by(res.sample)
    edge = tri.extended([Row((Fraction(1), Fraction(1)), "=", Fraction(1))])
    # the open triangle and its closing edge are disjoint
    assert not fm_feasible(edge)
    closed_edge = IneqSystem(2).add([1, 0], ">", 0).add([0, 1], ">", 0).add([1, 1], "=", 1)
    res = fm_feasible(closed_edge)
    assert res.dimension == 1 and closed_edge.satisfied_by(res.sample)


def test_inconsistent_equalities():
    sys = IneqSystem(2).add([1, 1], "=", 1).add([2, 2], "=", 3)
    assert not fm_feasible(sys)


def test_unbounded():
    res = fm_feasible(IneqSystem(3).add([1, -1, 0], ">", 5))
    assert res.dimension == 3


def test_bad_input():
    with pytest.raises(ValueError):
        Row((Fraction(1),), "!=", Fraction(0))
    with pytest.raises(ValueError):
        IneqSystem(2).add([1], "<", 0)
    with pytest.raises(FMResourceError):
        fm_feasible(IneqSystem(MAX_VARIABLES + 1))


coef = st.integers(-3, 3)
row = st.tuples(st.tuples(coef, coef), st.sampled_from(["<", "<=", "=", ">", ">="]), st.integers(-4, 4))


@given(st.lists(row, min_size=1, max_size=5))
def test_sample_is_feasible_and_grid_points_imply_feasibility(rows):
    sys = IneqSystem(2)
    for a, rel, b in rows:
        sys.add(a, rel, b)
    res = fm_feasible(sys)
    if res:
        assert sys.satisfied_by(res.sample)
        assert 0 <= res.dimension <= 2
    grid = [Fraction(i, 4) for i in range(-24, 25)]
    witness = any(sys.satisfied_by((x, y)) for x in grid for y in grid)
    if witness:
        assert res
