"""Coroot lattice points in the dilated fundamental alcove, the simplices
Sigma^r_m, the bijection rho and orbit counting on the finite torus."""
from __future__ import annotations

import itertools
import os
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .alcoves import AffineElement, ShiVector, alcove_barycenter, coroot_to_point, pair, shi_to_affine
from .chains import enumerate_ideal_chains
from .poset import RootPoset
from .regions import chain_of_point, max_alcove, max_alcove_element

DEFAULT_MAX_TORUS = 200_000


class LatticeError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class CorootPoint:
    """A point of the coroot lattice, by its simple-coroot coefficients."""

    coords: tuple[int, ...]

    def values(self, rs) -> tuple[Fraction, ...]:
        """(sigma_i, x) for each simple root."""
        return coroot_to_point(rs, self.coords)


@dataclass(frozen=True)
class SimplexSigma:
    """m - r <= (sigma_i, x) and (highest root, x) <= mh - m + r - 1."""

    r: int
    m: int

    def __post_init__(self):
        if not 1 <= self.r <= self.m:
            raise LatticeError(f"need 1 <= r <= m, got r={self.r}, m={self.m}")

    def bounds(self, rs) -> tuple[int, int]:
        """(lower bound on simple values, upper bound on the highest-root value)."""
        return self.m - self.r, self.m * rs.coxeter_number - self.m + self.r - 1


def _solve_cartan(rs, y: Sequence[int]) -> tuple[Fraction, ...]:
    """Coroot coefficients c with sum_i a_ji c_i = y_j."""
    n = rs.rank
    M = [[Fraction(rs.cartan[j][i]) for i in range(n)] + [Fraction(y[j])] for j in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if M[r][col] != 0)
        M[col], M[piv] = M[piv], M[col]
        M[col] = [v / M[col][col] for v in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [a - f * b for a, b in zip(M[r], M[col])]
    return tuple(M[r][n] for r in range(n))


def enumerate_Dm(rs, m: int) -> list[CorootPoint]:
    """Coroot lattice points of the closed simplex p * closure(A_o), p = mh - 1."""
    if m < 1:
        raise LatticeError("m must be >= 1")
    p = m * rs.coxeter_number - 1
    c = rs.highest_root
    out = []

    def rec(i: int, budget: int, y: list[int]):
        if i == rs.rank:
            coef = _solve_cartan(rs, y)
            if all(v.denominator == 1 for v in coef):
                out.append(CorootPoint(tuple(int(v) for v in coef)))
            return
        for v in range(budget // c[i] + 1):
            y.append(v)
            rec(i + 1, budget - v * c[i], y)
            y.pop()

    rec(0, p, [])
    return sorted(out)


def wall_incidence(rs, pt: CorootPoint, sigma: SimplexSigma) -> int:
    """Number of the l + 1 walls of Sigma^r_m containing the point."""
    lo, hi = sigma.bounds(rs)
    y = pt.values(rs)
    top = pair(rs.highest_root, y)
    if any(v < lo for v in y) or top > hi:
        raise LatticeError("point lies outside the simplex")
    return sum(1 for v in y if v == lo) + (top == hi)


def walls_containing(rs, pt: CorootPoint, sigma: SimplexSigma) -> frozenset[int]:
    """Indices i (0 for the highest-root wall) of the walls H(Sigma, i) through the point."""
    lo, hi = sigma.bounds(rs)
    y = pt.values(rs)
    out = {i + 1 for i, v in enumerate(y) if v == lo}
    if pair(rs.highest_root, y) == hi:
        out.add(0)
    return frozenset(out)


def incidence_histogram(rs, m: int, r: int | None = None) -> dict[int, int]:
    sigma = SimplexSigma(m if r is None else r, m)
    hist = Counter(wall_incidence(rs, pt, sigma) for pt in enumerate_Dm(rs, m))
    return dict(sorted(hist.items()))


def interior_count(rs, m: int) -> int:
    """Coroot lattice points strictly inside p * A_o."""
    sigma = SimplexSigma(m, m)
    return sum(1 for pt in enumerate_Dm(rs, m) if wall_incidence(rs, pt, sigma) == 0)


def f_region_point(rs, m: int) -> tuple[Fraction, ...]:
    """A point of the region m - 1 < (sigma_i, x) < m near the top alcove."""
    n = rs.rank
    c = rs.highest_root
    # barycenter of A_o reflected through the corner m * (1, ..., 1)
    return tuple(Fraction(m) - Fraction(1, (n + 1) * c[i]) for i in range(n))


def w_f(poset: RootPoset, m: int) -> AffineElement:
    """The maximal element whose alcove lies in the region m-1 < (sigma_i, x) < m."""
    rs = poset.rs
    y = f_region_point(rs, m)
    chain = chain_of_point(poset, m, y).to_ideal_chain()
    w = shi_to_affine(poset, max_alcove(chain))
    b = alcove_barycenter(w)
    h = rs.coxeter_number
    if not (all(v < m for v in b) and pair(rs.highest_root, b) > m * h - m - 1):
        raise AssertionError("top alcove does not match its explicit description")
    return w


def rho(w: AffineElement, wf: AffineElement) -> CorootPoint:
    """(w_f w^{-1}) . 0"""
    u = wf * w.inverse()
    return CorootPoint(tuple(u.translation))


def rho_table(poset: RootPoset, m: int) -> list[tuple[ShiVector, AffineElement, CorootPoint]]:
    """(maximal alcove, element, rho-image) for every bounded region."""
    wf = w_f(poset, m)
    out = []
    for chain in enumerate_ideal_chains(poset, m, positive_only=True):
        w = max_alcove_element(chain)
        out.append((max_alcove(chain), w, rho(w, wf)))
    return out


def transferred_walls(poset: RootPoset, m: int, w: AffineElement, wf: AffineElement) -> dict[int, tuple[int, int]]:
    """For i = 0..l, the hyperplane (w w_f^{-1}) H(w_f, i) as (root index, level)."""
    rs = poset.rs
    h = rs.coxeter_number
    u = w * wf.inverse()
    out = {0: u.image_hyperplane(poset, rs.highest_root, m * h - m - 1)}
    for i, s in enumerate(rs.simple_roots):
        out[i + 1] = u.image_hyperplane(poset, s, m)
    return out


def _torus_limit() -> int:
    env = os.environ.get("CATALAN_ATLAS_MAX_WORK")
    return int(env) if env else DEFAULT_MAX_TORUS


def orbit_count_bruteforce(rs, m: int, limit: int | None = None) -> int:
    """Orbits of W on Q^vee / p Q^vee, by union-find under simple reflections."""
    if m < 1:
        raise LatticeError("m must be >= 1")
    p = m * rs.coxeter_number - 1
    n = rs.rank
    size = p**n
    limit = _torus_limit() if limit is None else limit
    if size > limit:
        raise LatticeError(f"torus has {size} elements, above the limit {limit}")
    parent = list(range(size))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def encode(v):
        code = 0
        for x in v:
            code = code * p + x % p
        return code

    A = rs.cartan
    for v in itertools.product(range(p), repeat=n):
        a = encode(v)
        for i in range(n):
            # s_i(x) = x - (sigma_i, x) sigma_i^vee
            w = list(v)
            w[i] -= sum(A[i][j] * v[j] for j in range(n))
            ra, rb = find(a), find(encode(w))
            if ra != rb:
                parent[ra] = rb
    return sum(1 for a in range(size) if find(a) == a)
