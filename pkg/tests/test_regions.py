from collections import Counter
from fractions import Fraction

import pytest

from _oracles import f_from_h_by_expansion
from catalan_atlas.alcoves import AffineElement, ShiAdjacency, alcove_barycenter, length_from_shi, pair
from catalan_atlas.chains import ChainError, IdealChain, enumerate_ideal_chains, h_plus_vector_from_chains
from catalan_atlas.poset import build_poset
from catalan_atlas.regions import (
    RegionError,
    alcoves_in_region,
    ascent_count,
    ascent_histogram,
    bounded_regions_by_alcoves,
    cell_counts,
    cell_counts_by_pairs,
    cell_to_pair,
    bounded_cell_counts_by_separating_pairs,
    chain_of_point,
    enumerate_cells,
    enumerate_regions,
    m_wall_counts,
    max_alcove,
    max_alcove_element,
    max_alcove_walls,
    region_feasibility,
    region_from_signature,
    region_of_chain,
    signature,
    walls_alcoves,
    walls_combinatorial,
    walls_fm,
)
from catalan_atlas.rootsys import build_root_system

POSETS = {t: build_poset(build_root_system(t)) for t in ["A1", "A2", "A3", "B2", "B3", "G2", "D4"]}


@pytest.mark.parametrize("name,m,total,bounded", [
    ("A1", 2, 3, 2), ("A2", 1, 5, 2), ("A2", 2, 12, 7), ("B2", 2, 15, 10), ("G2", 1, 8, 5),
])
def test_region_counts(name, m, total, bounded):
    p = POSETS[name]
    assert len(list(enumerate_regions(p, m))) == total
    assert len(list(enumerate_regions(p, m, bounded_only=True))) == bounded
    assert len(bounded_regions_by_alcoves(p, m)) == bounded


@pytest.mark.parametrize("name,m", [("A2", 2), ("B2", 2), ("G2", 1), ("A3", 1)])
def test_regions_are_nonempty_and_round_trip(name, m):
    p = POSETS[name]
    for R in enumerate_regions(p, m):
        res = region_feasibility(R)
        assert res and res.dimension == p.rs.rank
        assert chain_of_point(p, m, res.sample) == R.chain


@pytest.mark.parametrize("name,m", [("A2", 1), ("A2", 2), ("B2", 2), ("G2", 2), ("A3", 2), ("B3", 1), ("D4", 1)])
def test_chain_region_alcove_round_trip(name, m):
    p = POSETS[name]
    groups = bounded_regions_by_alcoves(p, m)
    for c in enumerate_ideal_chains(p, m, positive_only=True):
        R = region_of_chain(c)
        s = max_alcove(c)
        sig = signature(s.r, m)
        assert region_from_signature(p, m, sig).chain == R.chain
        w = max_alcove_element(c)
        assert chain_of_point(p, m, alcove_barycenter(w)).to_ideal_chain().ideals == c.ideals
        # s is the unique alcove of its region with maximal length
        lengths = sorted(length_from_shi(t.r) for t in groups[sig])
        assert lengths[-1] == length_from_shi(s.r) and lengths.count(lengths[-1]) == 1


def test_alcoves_in_region_partition_box():
    p = POSETS["B2"]
    m = 2
    groups = bounded_regions_by_alcoves(p, m)
    for R in enumerate_regions(p, m, bounded_only=True):
        sig = signature(max_alcove(R.ideal_chain).r, m)
        assert alcoves_in_region(R) == sorted(groups[sig], key=lambda s: s.r)


def test_unbounded_region_has_no_alcove_list():
    p = POSETS["A2"]
    R = next(R for R in enumerate_regions(p, 1) if not R.bounded)
    with pytest.raises(RegionError):
        alcoves_in_region(R)


def test_non_geometric_chain_rejected():
    p = POSETS["A2"]
    with pytest.raises(ChainError):
        region_of_chain(IdealChain(p, (p.simples, p.simples)))


def test_point_on_hyperplane_rejected():
    p = POSETS["A2"]
    with pytest.raises(RegionError):
        chain_of_point(p, 1, (Fraction(1), Fraction(1, 3)))


@pytest.mark.parametrize("name,m", [("A2", 2), ("B2", 2), ("G2", 2), ("A3", 1), ("B3", 1)])
def test_wall_methods_agree(name, m):
    p = POSETS[name]
    for R in enumerate_regions(p, m):
        fm = walls_fm(R)
        comb = walls_combinatorial(R)
        for a, b in zip(fm, comb):
            assert (a.root, a.level, a.separates) == (b.root, b.level, b.separates)
            if b.is_wall is not None:
                assert a.is_wall == b.is_wall
        if R.bounded:
            assert fm == walls_alcoves(R)


def test_fundamental_alcove_region_walls():
    # at m = 1 the region containing A_o has one wall of level 1, the
    # highest-root hyperplane, and it does not separate the region from A_o
    p = POSETS["A2"]
    R = region_of_chain(IdealChain(p, (p.all,)))
    assert m_wall_counts(R, "fm") == (1, 0, 0)
    walls = [w for w in walls_fm(R) if w.is_wall and w.level == 1]
    assert [p.rs.positive_roots[w.root] for w in walls] == [p.rs.highest_root]


@pytest.mark.parametrize("name,m", [("A2", 2), ("B2", 2), ("G2", 2), ("A3", 2), ("B3", 1)])
def test_maximal_alcove_walls(name, m):
    # walls of the top alcove of level <= m are walls of the region
    p = POSETS[name]
    for c in enumerate_ideal_chains(p, m, positive_only=True):
        R = region_of_chain(c)
        region_walls = {(w.root, w.level) for w in walls_alcoves(R) if w.is_wall}
        for w in max_alcove_walls(c):
            if 1 <= w.level <= m and not w.separates:
                assert (w.root, w.level) in region_walls


@pytest.mark.parametrize("name,m,f,fp", [
    ("A2", 2, (1, 8, 12), (1, 6, 7)),
    ("B2", 2, (1, 10, 15), (1, 8, 10)),
    ("A1", 3, (1, 4), (1, 3)),
])
def test_cells(name, m, f, fp):
    p = POSETS[name]
    assert cell_counts(p, m) == f
    assert cell_counts(p, m, bounded_only=True) == fp
    assert cell_counts_by_pairs(p, m) == f
    assert cell_counts_by_pairs(p, m, True) == fp
    assert cell_counts_by_pairs(p, m, route="geometry") == f
    assert bounded_cell_counts_by_separating_pairs(p, m) == fp
    assert bounded_cell_counts_by_separating_pairs(p, m, route="geometry") == fp


def test_cells_are_disjoint_and_map_to_pairs():
    p = POSETS["A2"]
    m = 2
    cells = enumerate_cells(p, m)
    assert len({c.positions for c in cells}) == len(cells)
    pairs = Counter()
    for c in cells:
        R, on = cell_to_pair(c, p, m)
        assert len(on) == p.rs.rank - c.dimension
        assert all(R.above(k, m) for k in on)
        pairs[(R.chain, on)] += 1
    assert max(pairs.values()) == 1


def test_f_from_h_for_chains():
    p = POSETS["A3"]
    assert f_from_h_by_expansion(h_plus_vector_from_chains(p, 2)) == (1, 12, 36, 30)


@pytest.mark.parametrize("name,expected", [
    ("A2", {1: 1, 2: 1}), ("A3", {1: 1, 2: 3, 3: 1}), ("B3", {1: 3, 2: 6, 3: 1}), ("G2", {1: 4, 2: 1}),
])
def test_dominant_ascents_reproduce_h_plus(name, expected):
    assert ascent_histogram(POSETS[name]) == expected


def test_literal_ascents_of_identity():
    # every simple affine reflection lengthens the identity
    p = POSETS["A1"]
    assert ascent_count(AffineElement.identity(p.rs), p) == 2


@pytest.mark.parametrize("name,m", [("A2", 2), ("B2", 2), ("G2", 2)])
def test_exact_elimination_matches_geometric_condition(name, m):
    # every nested chain of ideals, geometric or not: its system of
    # inequalities is solvable exactly when the chain is geometric
    from itertools import combinations_with_replacement

    from catalan_atlas.chains import FilterChain, is_geometric
    from catalan_atlas.poset import enumerate_filters
    from catalan_atlas.regions import Region, region_system

    p = POSETS[name]
    filters = sorted(enumerate_filters(p), key=lambda F: (-len(F), sorted(F)))
    checked = 0
    for seq in combinations_with_replacement(filters, m):
        if not all(b <= a for a, b in zip(seq, seq[1:])):
            continue
        fc = FilterChain(p, tuple(seq))
        assert bool(region_feasibility(Region(fc))) == is_geometric(fc)
        checked += 1
    assert checked > len(list(enumerate_regions(p, m)))


@pytest.mark.parametrize("name,m", [("A2", 2), ("B2", 3), ("G2", 2), ("A3", 2), ("B3", 1)])
def test_three_descriptions_of_non_separating_walls(name, m):
    from catalan_atlas.chains import indecomposables, rank_table

    p = POSETS[name]
    for c in enumerate_ideal_chains(p, m, positive_only=True):
        R = region_of_chain(c)
        t = rank_table(c)
        fm = walls_fm(R)
        top = max_alcove_walls(c)
        for r in range(1, m + 1):
            a = set(indecomposables(c, r, t))
            b = {w.root for w in fm if w.level == r and w.is_wall and not w.separates}
            d = {w.root for w in top if w.level == r and not w.separates}
            assert a == b == d


def test_rank_one_cells():
    p = POSETS["A1"]
    assert cell_counts(p, 1) == (1, 2)
    assert cell_counts(p, 1, bounded_only=True) == (1, 1)


def test_b2_dominant_ascents():
    assert ascent_histogram(POSETS["B2"]) == {1: 2, 2: 1}
