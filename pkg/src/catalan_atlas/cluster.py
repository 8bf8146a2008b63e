"""Polygon models of the generalized cluster complexes of types A and B/C,
their positive parts, and face enumeration.

Type A_{n-1}: m-allowable diagonals of a convex (mn+2)-gon.  Type B_n/C_n:
diameters and half-turn pairs of m-allowable diagonals of a (2mn+2)-gon.
Vertices of the polygon are labelled 1..N counterclockwise.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Sequence

from .stats import h_from_f, poly_mul

FAMILIES = ("A", "B")
DEFAULT_MAX_FACES = 10_000_000


class ClusterError(ValueError):
    pass


Segment = tuple[int, int]


def _seg(i: int, j: int) -> Segment:
    return (i, j) if i < j else (j, i)


def segments_cross(a: Segment, b: Segment) -> bool:
    """Strict interior crossing; shared endpoints do not count."""
    (i, j), (k, l) = a, b
    if len({i, j, k, l}) < 4:
        return False
    return (i < k < j) != (i < l < j)


@dataclass(frozen=True, order=True)
class Diagonal:
    """A vertex of the complex: one segment (type A diagonal or a diameter)
    or a half-turn pair of segments."""

    segments: tuple[Segment, ...]

    @property
    def is_diameter(self) -> bool:
        return len(self.segments) == 1

    def crosses(self, other: "Diagonal") -> bool:
        if self == other:
            return False
        return any(segments_cross(a, b) for a in self.segments for b in other.segments)

    def __str__(self) -> str:
        return "+".join(f"{i}-{j}" for i, j in self.segments)


def polygon_size(family: str, n: int, m: int) -> int:
    _check(family, n, m)
    return m * n + 2 if family == "A" else 2 * m * n + 2


def rank_of(family: str, n: int) -> int:
    return n - 1 if family == "A" else n


def _check(family: str, n: int, m: int) -> None:
    if family not in FAMILIES:
        raise ClusterError(f"family must be one of {FAMILIES}, got {family!r}")
    if m < 1:
        raise ClusterError("m must be >= 1")
    if family == "A" and n < 2:
        raise ClusterError("type A needs n >= 2 (the polygon models A_{n-1})")
    if family == "B" and n < 1:
        raise ClusterError("type B needs n >= 1")


def is_allowable(i: int, j: int, N: int, m: int) -> bool:
    """Both sides of the diagonal have a vertex count congruent to 2 mod m."""
    i, j = _seg(i, j)
    if j - i < 2 or N - (j - i) < 2:
        return False
    return (j - i - 1) % m == 0


def half_turn(s: Segment, N: int) -> Segment:
    h = N // 2
    return _seg((s[0] - 1 + h) % N + 1, (s[1] - 1 + h) % N + 1)


def allowable_diagonals(family: str, n: int, m: int) -> list[Diagonal]:
    N = polygon_size(family, n, m)
    segs = [(i, j) for i in range(1, N + 1) for j in range(i + 2, N + 1) if is_allowable(i, j, N, m)]
    if family == "A":
        return [Diagonal((s,)) for s in segs]
    out = set()
    for s in segs:
        t = half_turn(s, N)
        out.add(Diagonal((s,)) if t == s else Diagonal(tuple(sorted((s, t)))))
    return sorted(out)


def _zigzag(N: int, m: int, count: int) -> list[Segment]:
    """count segments 1, N-m, 1+m, N-2m, ... joined end to end; consecutive
    segments cut off (m+2)-gons."""
    pts = []
    for k in range(count + 1):
        pts.append(1 + (k // 2) * m if k % 2 == 0 else N - ((k + 1) // 2) * m)
    return [_seg(a, b) for a, b in zip(pts, pts[1:])]


def snake(family: str, n: int, m: int) -> list[Diagonal]:
    """A facet of l pairwise noncrossing vertices playing the role of the
    negative simple roots."""
    N = polygon_size(family, n, m)
    if family == "A":
        out = [Diagonal((s,)) for s in _zigzag(N, m, n - 1)]
    else:
        segs = _zigzag(N, m, 2 * n - 1)
        if {half_turn(s, N) for s in segs} != set(segs):
            raise AssertionError("zigzag is not centrally symmetric")
        out = []
        for k in range(n):
            s, t = segs[k], segs[2 * n - 2 - k]
            out.append(Diagonal((s,)) if s == t else Diagonal(tuple(sorted((s, t)))))
    verts = set(allowable_diagonals(family, n, m))
    if not all(d in verts for d in out) or any(a.crosses(b) for a, b in combinations(out, 2)):
        raise AssertionError("snake is not a face")
    if any(all(not v.crosses(d) for d in out) for v in verts - set(out)):
        raise AssertionError("snake is not a facet")
    return out


def rotate(d: Diagonal, N: int, k: int) -> Diagonal:
    segs = tuple(sorted(_seg((i - 1 + k) % N + 1, (j - 1 + k) % N + 1) for i, j in d.segments))
    return Diagonal(segs)


@dataclass(frozen=True)
class ComplexSummary:
    f: tuple[int, ...]
    h: tuple[int, ...]


def _check_pure(vertices: Sequence[Diagonal], ell: int) -> None:
    """Every maximal noncrossing set has exactly l elements (maximal cliques
    of the compatibility graph, Bron-Kerbosch style)."""
    n = len(vertices)
    compat = [
        frozenset(j for j in range(n) if j != i and not vertices[i].crosses(vertices[j]))
        for i in range(n)
    ]

    def rec(R: int, P: frozenset, X: frozenset):
        if not P and not X:
            if R != ell:
                raise AssertionError(f"maximal face of size {R}, complex is not pure")
            return
        for v in sorted(P):
            rec(R + 1, P & compat[v], X & compat[v])
            P = P - {v}
            X = X | {v}

    if n:
        rec(0, frozenset(range(n)), frozenset())


def build_complex(
    family: str, n: int, m: int, positive_only: bool = False, limit: int = DEFAULT_MAX_FACES,
    snake_rotation: int = 0,
) -> ComplexSummary:
    """f- and h-vectors of the complex or of its positive part."""
    ell = rank_of(family, n)
    N = polygon_size(family, n, m)
    verts = allowable_diagonals(family, n, m)
    if positive_only:
        removed = {rotate(d, N, snake_rotation) for d in snake(family, n, m)}
        verts = [v for v in verts if v not in removed]
    else:
        _check_pure(verts, ell)
    counts = _faces_by_size(verts, ell, limit)
    f = tuple(counts)
    return ComplexSummary(f, h_from_f(f))


def _faces_by_size(vertices: Sequence[Diagonal], ell: int, limit: int) -> list[int]:
    n = len(vertices)
    compat = [
        frozenset(j for j in range(i + 1, n) if not vertices[i].crosses(vertices[j]))
        for i in range(n)
    ]
    counts = [0] * (ell + 1)
    total = 0

    def rec(size: int, cand: frozenset):
        nonlocal total
        counts[size] += 1
        total += 1
        if total > limit:
            raise ClusterError(f"more than {limit} faces")
        for j in sorted(cand):
            if size + 1 > ell:
                raise AssertionError("face larger than the rank")
            rec(size + 1, cand & compat[j])

    rec(0, frozenset(range(n)))
    return counts


# --- parabolic identity ----------------------------------------------------


def _components(family: str, n: int, nodes: Sequence[int]) -> list[tuple[str, int]]:
    """Irreducible pieces of a parabolic subsystem, as (family, n) model
    parameters.  Nodes are 1..l; in type B the last node is the special one."""
    nodes = sorted(nodes)
    runs: list[list[int]] = []
    for v in nodes:
        if runs and runs[-1][-1] == v - 1:
            runs[-1].append(v)
        else:
            runs.append([v])
    ell = rank_of(family, n)
    out = []
    for run in runs:
        if family == "B" and run[-1] == ell:
            out.append(("B", len(run)))
        else:
            out.append(("A", len(run) + 1))
    return out


def _positive_f_poly(family: str, n: int, nodes: Sequence[int], m: int, cache: dict) -> list[int]:
    poly = [1]
    for comp in _components(family, n, nodes):
        if comp not in cache:
            cache[comp] = list(build_complex(comp[0], comp[1], m, positive_only=True).f)
        poly = poly_mul(poly, cache[comp])
    return poly


def parabolic_face_identity(family: str, n: int, m: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Both sides of f_{k-1}(complex) = sum_J f_{k-|J|-1}(positive part on I minus J)."""
    ell = rank_of(family, n)
    lhs = build_complex(family, n, m).f
    cache: dict = {}
    rhs = [0] * (ell + 1)
    nodes = range(1, ell + 1)
    for size in range(ell + 1):
        for J in combinations(nodes, size):
            rest = [v for v in nodes if v not in J]
            poly = _positive_f_poly(family, n, rest, m, cache)
            for i, c in enumerate(poly):
                if i + size <= ell:
                    rhs[i + size] += c
    return tuple(lhs), tuple(rhs)


def parabolic_face_identity_check(family: str, n: int, m: int) -> bool:
    lhs, rhs = parabolic_face_identity(family, n, m)
    return lhs == rhs


def vertex_count_formula(family: str, n: int, m: int) -> int:
    """m |Phi+| + l."""
    ell = rank_of(family, n)
    pos = comb(n, 2) if family == "A" else n * n
    return m * pos + ell
