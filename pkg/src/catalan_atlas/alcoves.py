"""Alcoves, Shi coordinates and affine Weyl group elements.

Points of V are written in *simple-value coordinates* y_i = (sigma_i, x), so
(alpha, x) is the integer dot product of alpha's simple-root coordinates with
y.  Coroot-lattice vectors are stored by their coefficients on the simple
coroots.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, lcm
from typing import Iterator, Sequence

from .poset import RootPoset
from .rootsys import (
    RootSystem,
    coroot_coords,
    simple_reflection_matrix,
)

Point = tuple[Fraction, ...]


class AlcoveError(ValueError):
    pass


def pair(alpha: Sequence[int], y: Sequence) -> Fraction:
    """(alpha, x) for a root alpha and a point given by y = ((sigma_i, x))_i."""
    return sum((a * v for a, v in zip(alpha, y)), Fraction(0))


def coroot_to_point(rs: RootSystem, c: Sequence[int]) -> Point:
    """Simple-value coordinates of sum c_i sigma_i^vee: y_j = sum_i a_ji c_i."""
    n = rs.rank
    return tuple(Fraction(sum(rs.cartan[j][i] * c[i] for i in range(n))) for j in range(n))


def fundamental_barycenter(rs: RootSystem) -> Point:
    """Barycenter of A_o; its vertices are 0 and varpi_i^vee / c_i."""
    n = rs.rank
    c = rs.highest_root
    return tuple(Fraction(1, (n + 1) * c[i]) for i in range(n))


def fundamental_vertices(rs: RootSystem) -> list[Point]:
    n = rs.rank
    c = rs.highest_root
    verts = [tuple(Fraction(0) for _ in range(n))]
    for i in range(n):
        verts.append(tuple(Fraction(1, c[i]) if j == i else Fraction(0) for j in range(n)))
    return verts


def _matmul(A, B):
    n = len(A)
    return tuple(tuple(sum(A[i][k] * B[k][j] for k in range(n)) for j in range(n)) for i in range(n))


def _matvec(A, v):
    return tuple(sum(A[i][k] * v[k] for k in range(len(v))) for i in range(len(A)))


def _identity(n):
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


_NORMS: dict[int, tuple[RootSystem, tuple[int, ...], int]] = {}


def _norms(rs: RootSystem) -> tuple[tuple[int, ...], int]:
    """Integers N_i proportional to (sigma_i, sigma_i), and their lcm."""
    hit = _NORMS.get(id(rs))
    if hit is None or hit[0] is not rs:
        sym = rs.sym
        den = lcm(*(Fraction(sym[i][i]).denominator for i in range(len(sym))))
        N = tuple(int(sym[i][i] * den) for i in range(len(sym)))
        hit = _NORMS[id(rs)] = (rs, N, lcm(*N))
    return hit[1], hit[2]


def _act_on_coroots(rs: RootSystem, L, c) -> tuple[int, ...]:
    """Simple-coroot coefficients of L(x) for x = sum c_j sigma_j^vee.

    L acts on root coordinates, so the coefficient is sum_j L_ij c_j N_i / N_j.
    """
    N, P = _norms(rs)
    n = len(c)
    out = []
    for i in range(n):
        num = N[i] * sum(L[i][j] * c[j] * (P // N[j]) for j in range(n))
        if num % P:
            raise AlcoveError("translation left the coroot lattice")
        out.append(num // P)
    return tuple(out)


@dataclass(frozen=True)
class AffineElement:
    """x -> L x + t with L in W (matrix on simple-root coordinates, columns
    are images of the simple roots) and t in the coroot lattice (simple-coroot
    coefficients)."""

    rs: RootSystem
    linear: tuple[tuple[int, ...], ...]
    linear_inv: tuple[tuple[int, ...], ...]
    translation: tuple[int, ...]

    @classmethod
    def identity(cls, rs: RootSystem) -> "AffineElement":
        n = rs.rank
        return cls(rs, _identity(n), _identity(n), (0,) * n)

    def __mul__(self, other: "AffineElement") -> "AffineElement":
        moved = _act_on_coroots(self.rs, self.linear, other.translation)
        return AffineElement(
            self.rs,
            _matmul(self.linear, other.linear),
            _matmul(other.linear_inv, self.linear_inv),
            tuple(a + b for a, b in zip(moved, self.translation)),
        )

    def inverse(self) -> "AffineElement":
        back = _act_on_coroots(self.rs, self.linear_inv, self.translation)
        return AffineElement(self.rs, self.linear_inv, self.linear, tuple(-v for v in back))

    def apply(self, y: Sequence) -> Point:
        """Image of a point given in simple-value coordinates."""
        n = self.rs.rank
        shift = coroot_to_point(self.rs, self.translation)
        return tuple(
            sum((self.linear_inv[k][j] * Fraction(y[k]) for k in range(n)), Fraction(0)) + shift[j]
            for j in range(n)
        )

    def apply_root(self, alpha: Sequence[int]) -> tuple[int, ...]:
        return _matvec(self.linear, alpha)

    def shi(self, poset: RootPoset) -> "ShiVector":
        """r(w, alpha) = ceil((alpha, w x_0)) at the barycenter x_0 of A_o."""
        y = self.apply(fundamental_barycenter(self.rs))
        return ShiVector(tuple(ceil(pair(a, y)) for a in poset.rs.positive_roots))

    def image_hyperplane(self, poset: RootPoset, beta: Sequence[int], k: int) -> tuple[int, int]:
        """w H_{beta, k} as (positive-root index, level)."""
        gamma = self.apply_root(beta)
        A, t = self.rs.cartan, self.translation
        n = len(t)
        level = k + sum(gamma[j] * sum(A[j][i] * t[i] for i in range(n)) for j in range(n))
        if all(g <= 0 for g in gamma):
            gamma, level = tuple(-g for g in gamma), -level
        return poset.rs.index(gamma), int(level)

    def walls(self, poset: RootPoset) -> list[tuple[int, int]]:
        """Walls w H(e, i), i = 0..l, as (positive-root index, level k)."""
        rs = self.rs
        gens = [(rs.highest_root, 1)] + [(s, 0) for s in rs.simple_roots]
        return [self.image_hyperplane(poset, beta, k) for beta, k in gens]


def simple_affine_reflections(rs: RootSystem) -> list[AffineElement]:
    """[s_0, s_1, ..., s_l]; s_0 is the reflection in H_{highest root, 1}."""
    n = rs.rank
    theta = rs.highest_root
    # theta is long with (theta, theta) = 2, so theta^vee = theta and
    # s_theta(sigma_j) = sigma_j - (sigma_j, theta) theta.
    ip = [sum(rs.sym[j][b] * theta[b] for b in range(n)) for j in range(n)]
    S0 = tuple(tuple(int(int(i == j) - ip[j] * theta[i]) for j in range(n)) for i in range(n))
    t0 = tuple(int(v) for v in coroot_coords(rs, theta))
    out = [AffineElement(rs, S0, S0, t0)]
    for i in range(n):
        S = simple_reflection_matrix(rs, i)
        out.append(AffineElement(rs, S, S, (0,) * n))
    return out


@dataclass(frozen=True)
class ShiVector:
    """Alcove coordinates r(w, alpha), indexed like ``positive_roots``."""

    r: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        return self.r[k]

    def __len__(self) -> int:
        return len(self.r)

    def replace(self, k: int, value: int) -> "ShiVector":
        r = list(self.r)
        r[k] = value
        return ShiVector(tuple(r))


def shi_violation(poset: RootPoset, s: Sequence[int]) -> tuple[int, int, int] | None:
    """First additive triple violating r_a + r_b - 1 <= r_{a+b} <= r_a + r_b."""
    for a, b, c in poset.triples:
        lo = s[a] + s[b] - 1
        if not lo <= s[c] <= lo + 1:
            return (a, b, c)
    return None


def is_shi_vector(poset: RootPoset, s: Sequence[int]) -> bool:
    return shi_violation(poset, s) is None


class ShiAdjacency:
    """Fast validity checks for Shi vectors differing in one coordinate."""

    def __init__(self, poset: RootPoset):
        self.poset = poset
        self.involving: list[list[tuple[int, int, int]]] = [[] for _ in range(poset.size)]
        for t in poset.triples:
            for k in set(t):
                self.involving[k].append(t)

    def valid_change(self, s: Sequence[int], k: int, value: int) -> bool:
        s = list(s)
        s[k] = value
        for a, b, c in self.involving[k]:
            lo = s[a] + s[b] - 1
            if not lo <= s[c] <= lo + 1:
                return False
        return True

    def walls(self, s: Sequence[int]) -> list[tuple[int, int]]:
        """Walls (root index, level) of the alcove with coordinates s."""
        out = []
        for k in range(len(s)):
            if self.valid_change(s, k, s[k] + 1):
                out.append((k, s[k]))
            if self.valid_change(s, k, s[k] - 1):
                out.append((k, s[k] - 1))
        return out


def length_from_shi(s: Sequence[int]) -> int:
    """Number of affine hyperplanes separating the alcove from A_o."""
    return sum(abs(v - 1) for v in s)


def shi_to_affine(poset: RootPoset, target: ShiVector) -> AffineElement:
    """Walk a gallery from A_o to the alcove with the given coordinates."""
    rs = poset.rs
    if not is_shi_vector(poset, target.r):
        raise AlcoveError("not a valid Shi vector")
    gens = simple_affine_reflections(rs)
    w = AffineElement.identity(rs)
    cur = [1] * poset.size
    goal = target.r
    while True:
        dist = sum(abs(a - b) for a, b in zip(cur, goal))
        if dist == 0:
            break
        for i, (k, level) in enumerate(w.walls(poset)):
            if (cur[k] <= level) != (goal[k] <= level):
                w = w * gens[i]
                # crossing H_{alpha_k, level} moves r_k to the other side only
                cur[k] = level + 1 if cur[k] <= level else level
                break
        else:
            raise AlcoveError("no separating wall found")
    if w.shi(poset) != target:
        raise AlcoveError("gallery walk ended in the wrong alcove")
    return w


def length(w: AffineElement, poset: RootPoset) -> int:
    return length_from_shi(w.shi(poset).r)


def dominant_alcoves_in_box(poset: RootPoset, bound: int) -> list[ShiVector]:
    """All dominant alcoves with (sigma_i, x) < bound, by breadth-first search
    through facet-adjacent alcoves starting at A_o."""
    rs = poset.rs
    simple_idx = [rs.index(s) for s in rs.simple_roots]
    adj = ShiAdjacency(poset)
    start = tuple([1] * poset.size)
    seen = {start}
    queue = deque([start])
    while queue:
        s = queue.popleft()
        for k in range(poset.size):
            for v in (s[k] - 1, s[k] + 1):
                if v < 1 or (k in simple_idx and v > bound):
                    continue
                if adj.valid_change(s, k, v):
                    t = s[:k] + (v,) + s[k + 1:]
                    if t not in seen:
                        seen.add(t)
                        queue.append(t)
    return [ShiVector(s) for s in sorted(seen)]


def alcove_vertices(w: AffineElement) -> list[Point]:
    return [w.apply(v) for v in fundamental_vertices(w.rs)]


def alcove_barycenter(w: AffineElement) -> Point:
    return w.apply(fundamental_barycenter(w.rs))


def iter_valid_neighbors(poset: RootPoset, s: ShiVector) -> Iterator[ShiVector]:
    adj = ShiAdjacency(poset)
    for k, level in adj.walls(s.r):
        yield s.replace(k, level + 1 if level == s[k] else level)
