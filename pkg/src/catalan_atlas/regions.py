"""Dominant regions of the extended Catalan arrangement, their walls,
maximal alcoves and the cells F_k / F+_k.

A region is stored by its geometric chain; geometry is consulted only
through exact Fourier-Motzkin checks or through alcove adjacency.
"""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterator, NamedTuple, Sequence

from .alcoves import (
    AffineElement,
    ShiAdjacency,
    ShiVector,
    alcove_barycenter,
    dominant_alcoves_in_box,
    is_shi_vector,
    length,
    pair,
    shi_to_affine,
    simple_affine_reflections,
)
from .chains import (
    ChainError,
    FilterChain,
    IdealChain,
    InternalConsistencyError,
    enumerate_filter_chains,
    enumerate_ideal_chains,
    geometric_violation,
    indecomposables,
    indecomposables_filters,
    rank_table,
    top_indecomposables,
)
from .fourier_motzkin import FMResult, IneqSystem, fm_feasible
from .poset import RootPoset

FM_MAX_RANK = 3


class RegionError(ValueError):
    pass


@dataclass(frozen=True)
class Region:
    """The dominant region attached to a geometric chain of length m."""

    chain: FilterChain

    @property
    def poset(self) -> RootPoset:
        return self.chain.poset

    @property
    def m(self) -> int:
        return self.chain.m

    @property
    def bounded(self) -> bool:
        return self.chain.positive

    @property
    def ideal_chain(self) -> IdealChain:
        return self.chain.to_ideal_chain()

    def upper_bound(self, k: int) -> int | None:
        """Smallest r <= m with root k in J_r, else None."""
        return next((r for r in range(1, self.m + 1) if k in self.chain.J(r)), None)

    def above(self, k: int, r: int) -> bool:
        """Whether (alpha_k, x) > r on the region (0 <= r <= m)."""
        return k in self.chain.I(r)


def region_of_chain(chain: IdealChain | FilterChain) -> Region:
    v = geometric_violation(chain)
    if v is not None:
        raise ChainError(f"chain is not geometric: {v}")
    if isinstance(chain, IdealChain):
        chain = chain.to_filter_chain()
    return Region(chain)


def region_from_signature(p: RootPoset, m: int, sig: Sequence[int]) -> Region:
    """Region whose roots satisfy r-1 < (alpha, x) < r with r = sig[k] (capped at m+1)."""
    filters = tuple(frozenset(k for k in range(p.size) if sig[k] > r) for r in range(1, m + 1))
    return Region(FilterChain(p, filters))


def enumerate_regions(p: RootPoset, m: int, bounded_only: bool = False) -> Iterator[Region]:
    for c in enumerate_filter_chains(p, m, positive_only=bounded_only):
        yield Region(c)


def region_system(region: Region) -> IneqSystem:
    """Strict inequalities cutting out the region, in simple-value coordinates."""
    p, m = region.poset, region.m
    sys = IneqSystem(p.rs.rank)
    for k, alpha in enumerate(p.rs.positive_roots):
        for r in range(m + 1):
            sys.add(alpha, ">" if region.above(k, r) else "<", r)
    return sys


def region_feasibility(region: Region) -> FMResult:
    return fm_feasible(region_system(region))


def chain_of_point(p: RootPoset, m: int, y: Sequence) -> FilterChain:
    """The chain I_r = {alpha : (alpha, x) > r} of a dominant point off the arrangement."""
    vals = [pair(a, y) for a in p.rs.positive_roots]
    for v in vals:
        if v <= 0 or (v.denominator == 1 and v <= m):
            raise RegionError("point is not in a dominant region of the arrangement")
    return FilterChain(
        p, tuple(frozenset(k for k, v in enumerate(vals) if v > r) for r in range(1, m + 1))
    )


def max_alcove(chain: IdealChain) -> ShiVector:
    """Coordinates of the alcove of the bounded region farthest from A_o."""
    table = rank_table(chain)
    if not is_shi_vector(chain.poset, table.r):
        raise InternalConsistencyError("rank table violates the alcove inequalities")
    return ShiVector(table.r)


def max_alcove_element(chain: IdealChain) -> AffineElement:
    return shi_to_affine(chain.poset, max_alcove(chain))


def signature(s: Sequence[int], m: int) -> tuple[int, ...]:
    return tuple(min(v, m + 1) for v in s)


def bounded_regions_by_alcoves(p: RootPoset, m: int) -> dict[tuple[int, ...], list[ShiVector]]:
    """Group the dominant alcoves of the box (sigma_i, x) < m by region.

    Independent of the chain machinery: the number of groups is the number of
    bounded dominant regions.
    """
    out: dict[tuple[int, ...], list[ShiVector]] = {}
    for s in dominant_alcoves_in_box(p, m):
        out.setdefault(signature(s.r, m), []).append(s)
    return out


def alcoves_in_region(region: Region) -> list[ShiVector]:
    """All alcoves of a bounded region, by search from its maximal alcove."""
    if not region.bounded:
        raise RegionError("region is unbounded")
    p, m = region.poset, region.m
    start = max_alcove(region.ideal_chain)
    sig = signature(start.r, m)
    adj = ShiAdjacency(p)
    seen = {start.r}
    queue = deque([start.r])
    while queue:
        s = queue.popleft()
        for k in range(p.size):
            for v in (s[k] - 1, s[k] + 1):
                if min(v, m + 1) != sig[k] or v < 1:
                    continue
                if adj.valid_change(s, k, v):
                    t = s[:k] + (v,) + s[k + 1:]
                    if t not in seen:
                        seen.add(t)
                        queue.append(t)
    return [ShiVector(s) for s in sorted(seen)]


class WallInfo(NamedTuple):
    root: int
    level: int
    is_wall: bool | None
    separates: bool


def _separates(region: Region, k: int, r: int) -> bool:
    return r >= 1 and region.above(k, r)


def walls_fm(region: Region) -> list[WallInfo]:
    """Facet test for every H_{alpha, r}, 0 <= r <= m, by exact elimination."""
    p, m = region.poset, region.m
    base = region_system(region)
    out = []
    for k, alpha in enumerate(p.rs.positive_roots):
        for r in range(m + 1):
            idx = k * (m + 1) + r
            rows = list(base.rows)
            row = rows[idx]
            rows[idx] = type(row)(row.a, "=", row.b)
            res = fm_feasible(IneqSystem(base.nvars, rows))
            if res and res.dimension != p.rs.rank - 1:
                raise InternalConsistencyError("facet candidate has wrong dimension")
            out.append(WallInfo(k, r, bool(res), _separates(region, k, r)))
    return out


def walls_alcoves(region: Region, alcoves: Sequence[ShiVector] | None = None) -> list[WallInfo]:
    """Walls of a bounded region from the walls of its alcoves.

    H_{alpha, r} with r <= m is a wall of R exactly when it is a wall of an
    alcove inside R.
    """
    p, m = region.poset, region.m
    if alcoves is None:
        alcoves = alcoves_in_region(region)
    adj = ShiAdjacency(p)
    found = set()
    for s in alcoves:
        for k, lev in adj.walls(s.r):
            if lev <= m:
                found.add((k, lev))
    return [
        WallInfo(k, r, (k, r) in found, _separates(region, k, r))
        for k in range(p.size)
        for r in range(m + 1)
    ]


def walls_combinatorial(region: Region) -> list[WallInfo]:
    """Wall status from indecomposable roots where a criterion is available.

    Bounded regions: non-separating walls at every level are the
    indecomposables of that rank, separating walls come from the alcoves.
    Unbounded regions: only level-m separating walls are decided (filter
    indecomposables); everything else is reported as None.
    """
    p, m = region.poset, region.m
    if region.bounded:
        chain = region.ideal_chain
        table = rank_table(chain)
        ind = {r: indecomposables(chain, r, table) for r in range(1, m + 1)}
        geo = {(w.root, w.level): w.is_wall for w in walls_alcoves(region)}
        out = []
        for k in range(p.size):
            for r in range(m + 1):
                sep = _separates(region, k, r)
                if r >= 1 and not sep:
                    is_wall = k in ind[r]
                    if is_wall != geo[(k, r)]:
                        raise InternalConsistencyError(
                            f"indecomposable criterion disagrees with alcove walls at {(k, r)}"
                        )
                else:
                    is_wall = geo[(k, r)]
                out.append(WallInfo(k, r, is_wall, sep))
        return out
    sep_m = indecomposables_filters(region.chain)
    out = []
    for k in range(p.size):
        for r in range(m + 1):
            sep = _separates(region, k, r)
            decided = r == m and sep
            out.append(WallInfo(k, r, (k in sep_m) if decided else None, sep))
    return out


def walls_and_separation(region: Region, method: str = "auto") -> list[WallInfo]:
    """One entry per H_{alpha, r}, 0 <= r <= m.

    ``method`` is "fm", "alcoves" (bounded only), "combinatorial" or "auto"
    (exact elimination at rank <= 3, combinatorial above).
    """
    rank = region.poset.rs.rank
    if method == "auto":
        method = "fm" if rank <= FM_MAX_RANK else "combinatorial"
    if method == "fm":
        return walls_fm(region)
    if method == "alcoves":
        return walls_alcoves(region)
    if method == "combinatorial":
        return walls_combinatorial(region)
    raise ValueError(f"unknown method {method!r}")


def separation_at_barycenter(chain: IdealChain, k: int, r: int) -> bool:
    """Whether H_{alpha_k, r} separates the maximal alcove from A_o."""
    w = max_alcove_element(chain)
    v = pair(chain.poset.root(k), alcove_barycenter(w))
    return (v > r) != (r <= 0)


def m_wall_counts(region: Region, method: str = "auto") -> tuple[int, int, int]:
    """(#non-separating, #separating, #separating simple) walls of the form H_{alpha, m}."""
    simples = region.poset.simples
    ns = s = ss = 0
    for w in walls_and_separation(region, method):
        if w.level != region.m or not w.is_wall:
            continue
        if w.separates:
            s += 1
            ss += w.root in simples
        else:
            ns += 1
    return ns, s, ss


def max_alcove_walls(chain: IdealChain) -> list[WallInfo]:
    """Walls of w_R A_o with their separation status."""
    s = max_alcove(chain)
    adj = ShiAdjacency(chain.poset)
    out = []
    for k, lev in adj.walls(s.r):
        below = s[k] <= lev
        out.append(WallInfo(k, lev, True, below != (lev >= 1)))
    return sorted(out)


# --- statistics on maximal elements ---------------------------------------


def ascent_count(w: AffineElement, poset: RootPoset) -> int:
    """Number of i in 0..l with l(w s_i) > l(w)."""
    base = length(w, poset)
    return sum(1 for g in simple_affine_reflections(w.rs) if length(w * g, poset) > base)


def dominant_ascent_count(w: AffineElement, poset: RootPoset) -> int:
    """Right ascents s_i for which w s_i A_o is still dominant."""
    base = length(w, poset)
    n = 0
    for g in simple_affine_reflections(w.rs):
        v = w * g
        if length(v, poset) > base and min(v.shi(poset).r) >= 1:
            n += 1
    return n


def ascent_histogram(p: RootPoset, m: int = 1, dominant_only: bool = True) -> dict[int, int]:
    stat = dominant_ascent_count if dominant_only else ascent_count
    hist = Counter(
        stat(max_alcove_element(c), p) for c in enumerate_ideal_chains(p, m, positive_only=True)
    )
    return dict(sorted(hist.items()))


def nonseparating_profile(region: Region, method: str = "auto") -> tuple[int, ...]:
    """(i_1, ..., i_m): non-separating walls H_{alpha, r} of each level r."""
    counts = Counter(
        w.level for w in walls_and_separation(region, method) if w.is_wall and not w.separates
    )
    return tuple(counts.get(r, 0) for r in range(1, region.m + 1))


# --- cells -----------------------------------------------------------------


class Position(NamedTuple):
    """Where (alpha, x) lies: "open" (j-1, j), "on" the value m, or "above" m."""

    kind: str
    j: int


@dataclass(frozen=True)
class Cell:
    positions: tuple[Position, ...]
    dimension: int
    sample: tuple[Fraction, ...]


def _positions(m: int) -> list[Position]:
    return [Position("open", j) for j in range(1, m + 1)] + [Position("on", m), Position("above", m)]


def _position_rows(alpha, pos: Position, m: int):
    if pos.kind == "open":
        return [(alpha, ">", pos.j - 1), (alpha, "<", pos.j)]
    if pos.kind == "on":
        return [(alpha, "=", m)]
    return [(alpha, ">", m)]


def enumerate_cells(p: RootPoset, m: int, bounded_only: bool = False) -> list[Cell]:
    """All nonempty cells, by depth-first sign assignment with exact pruning."""
    rs = p.rs
    if rs.rank > FM_MAX_RANK:
        raise RegionError(f"geometric cell search is limited to rank <= {FM_MAX_RANK}")
    if m < 1:
        raise RegionError("m must be >= 1")
    simples = p.simples
    order = sorted(range(p.size), key=lambda k: (k not in simples, k))
    out: list[Cell] = []

    def rec(i: int, sys: IneqSystem, chosen: dict):
        if i == len(order):
            res = fm_feasible(sys)
            out.append(
                Cell(tuple(chosen[k] for k in range(p.size)), res.dimension, res.sample)
            )
            return
        k = order[i]
        alpha = rs.positive_roots[k]
        for pos in _positions(m):
            if bounded_only and k in simples and pos.kind == "above":
                continue
            trial = IneqSystem(sys.nvars, list(sys.rows))
            for a, rel, b in _position_rows(alpha, pos, m):
                trial.add(a, rel, b)
            if not fm_feasible(trial):
                continue
            chosen[k] = pos
            rec(i + 1, trial, chosen)
            del chosen[k]

    rec(0, IneqSystem(rs.rank), {})
    return out


def cell_counts(p: RootPoset, m: int, bounded_only: bool = False) -> tuple[int, ...]:
    """(|F_0|, ..., |F_l|) from the geometric search."""
    hist = Counter(c.dimension for c in enumerate_cells(p, m, bounded_only))
    return tuple(hist.get(k, 0) for k in range(p.rs.rank + 1))


def cell_to_pair(cell: Cell, p: RootPoset, m: int) -> tuple[Region, frozenset]:
    """The region obtained by pushing every H_{alpha, m} equality to the
    positive side, together with the set of those roots."""
    on = frozenset(k for k, pos in enumerate(cell.positions) if pos.kind == "on")
    sig = []
    for pos in cell.positions:
        if pos.kind == "open":
            sig.append(pos.j)
        else:
            sig.append(m + 1)
    return region_from_signature(p, m, sig), on


def cell_counts_by_pairs(
    p: RootPoset, m: int, bounded_only: bool = False, route: str = "chains"
) -> tuple[int, ...]:
    """Cell counts from pairs (region, subset of level-m walls).

    All regions: subsets of separating walls.  Bounded regions: subsets of
    non-separating walls.  ``route`` is "chains" (indecomposable roots) or
    "geometry" (wall tests).
    """
    ell = p.rs.rank
    sizes: list[int] = []
    if route == "chains":
        if bounded_only:
            sizes = [len(top_indecomposables(c)) for c in enumerate_ideal_chains(p, m, True)]
        else:
            sizes = [len(indecomposables_filters(c)) for c in enumerate_filter_chains(p, m)]
    elif route == "geometry":
        for R in enumerate_regions(p, m, bounded_only):
            ns, s, _ = m_wall_counts(R, "alcoves" if bounded_only and ell > FM_MAX_RANK else "auto")
            sizes.append(ns if bounded_only else s)
    else:
        raise ValueError(f"unknown route {route!r}")
    return tuple(sum(comb(w, ell - k) for w in sizes) for k in range(ell + 1))


def bounded_cell_counts_by_separating_pairs(p: RootPoset, m: int, route: str = "chains") -> tuple[int, ...]:
    """|F+_k| as pairs (R, S), R any dominant region, S a set of l-k separating
    level-m walls containing all simple ones."""
    ell = p.rs.rank
    simples = p.simples
    data = []
    if route == "chains":
        for c in enumerate_filter_chains(p, m):
            ind = indecomposables_filters(c)
            data.append((len(ind), len(ind & simples)))
    elif route == "geometry":
        for R in enumerate_regions(p, m):
            _, s, ss = m_wall_counts(R, "fm")
            data.append((s, ss))
    else:
        raise ValueError(f"unknown route {route!r}")
    return tuple(
        sum(comb(w - s, ell - k - s) for w, s in data if ell - k - s >= 0) for k in range(ell + 1)
    )
