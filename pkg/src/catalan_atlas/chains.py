"""Geometric chains of ideals/filters, the rank function r_alpha(J) and
indecomposable roots."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple

from .poset import RootPoset, enumerate_filters

EMPTY = frozenset()


class ChainError(ValueError):
    pass


class InternalConsistencyError(AssertionError):
    """A proved identity failed; indicates a bug, never bad input."""


class Violation(NamedTuple):
    """Witness for a failed closure condition.

    ``condition`` is "ideals" for (J_i + J_j) & Phi+ <= J_{i+j} and "filters"
    for (I_i + I_j) & Phi+ <= I_{i+j}; ``alpha + beta`` is the offending sum.
    """

    condition: str
    i: int
    j: int
    alpha: int
    beta: int


@dataclass(frozen=True)
class IdealChain:
    """J_1 <= ... <= J_m (J_0 = empty implicit)."""

    poset: RootPoset = field(compare=False, repr=False)
    ideals: tuple[frozenset, ...]

    @property
    def m(self) -> int:
        return len(self.ideals)

    def J(self, i: int) -> frozenset:
        if i <= 0:
            return EMPTY
        return self.ideals[min(i, self.m) - 1]

    def I(self, i: int) -> frozenset:
        return self.poset.all - self.J(i)

    @property
    def filters(self) -> tuple[frozenset, ...]:
        return tuple(self.I(i) for i in range(1, self.m + 1))

    @property
    def positive(self) -> bool:
        return self.poset.simples <= self.J(self.m)

    def to_filter_chain(self) -> "FilterChain":
        return FilterChain(self.poset, self.filters)


@dataclass(frozen=True)
class FilterChain:
    """Phi+ = I_0 >= I_1 >= ... >= I_m."""

    poset: RootPoset = field(compare=False, repr=False)
    filters: tuple[frozenset, ...]

    @property
    def m(self) -> int:
        return len(self.filters)

    def I(self, i: int) -> frozenset:
        if i <= 0:
            return self.poset.all
        return self.filters[min(i, self.m) - 1]

    def J(self, i: int) -> frozenset:
        return self.poset.all - self.I(i)

    @property
    def positive(self) -> bool:
        return not (self.poset.simples & self.I(self.m))

    def to_ideal_chain(self) -> IdealChain:
        return IdealChain(self.poset, tuple(self.J(i) for i in range(1, self.m + 1)))


def _check_nested(chain) -> None:
    p = chain.poset
    prev = EMPTY
    for i in range(1, chain.m + 1):
        J = chain.J(i)
        if not p.is_ideal(J):
            raise ChainError(f"J_{i} is not an ideal")
        if not prev <= J:
            raise ChainError(f"chain is not nested at index {i}")
        prev = J


def geometric_violation(chain: IdealChain | FilterChain) -> Violation | None:
    """First violated closure condition, or None if the chain is geometric."""
    _check_nested(chain)
    p, m = chain.poset, chain.m
    for i in range(1, m + 1):
        for j in range(i, m + 1):
            if i + j <= m:
                Ji, Jj, Jt = chain.J(i), chain.J(j), chain.J(i + j)
                for a, b, c in p.triples:
                    for x, y in ((a, b), (b, a)):
                        if x in Ji and y in Jj and c not in Jt:
                            return Violation("ideals", i, j, x, y)
            Ii, Ij, It = chain.I(i), chain.I(j), chain.I(i + j)
            for a, b, c in p.triples:
                for x, y in ((a, b), (b, a)):
                    if x in Ii and y in Ij and c not in It:
                        return Violation("filters", i, j, x, y)
    return None


def is_geometric(chain: IdealChain | FilterChain) -> bool:
    return geometric_violation(chain) is None


def _geometric_ideal_sequences(p: RootPoset, m: int, positive_only: bool) -> Iterator[tuple]:
    """Yield J-sequences of geometric chains, extending one filter at a time."""
    if m < 1:
        raise ChainError("chain length m must be >= 1")
    full = p.all
    all_filters = list(enumerate_filters(p))
    simples = p.simples

    def rec(Is: list[frozenset]):
        k = len(Is) + 1
        I = lambda i: full if i == 0 else Is[i - 1]  # noqa: E731
        lower = set()
        upper = set()
        for i in range(1, k // 2 + 1):
            j = k - i
            lower |= p.sumset(I(i), I(j))
            upper |= p.sumset(full - I(i), full - I(j))
        lower_f = frozenset(lower)
        prev = I(k - 1)
        for F in all_filters:
            if not (F <= prev and lower_f <= F) or (F & upper):
                continue
            if k == m:
                if positive_only and F & simples:
                    continue
                seq = Is + [F]
                ok = True
                for i in range(1, m + 1):
                    for j in range(max(i, m + 1 - i), m + 1):
                        if not p.sumset(seq[i - 1], seq[j - 1]) <= F:
                            ok = False
                            break
                    if not ok:
                        break
                if ok:
                    yield tuple(full - X for X in seq)
            else:
                Is.append(F)
                yield from rec(Is)
                Is.pop()

    yield from rec([])


def enumerate_ideal_chains(p: RootPoset, m: int, positive_only: bool = False) -> Iterator[IdealChain]:
    for Js in _geometric_ideal_sequences(p, m, positive_only):
        yield IdealChain(p, Js)


def enumerate_filter_chains(p: RootPoset, m: int, positive_only: bool = False) -> Iterator[FilterChain]:
    full = p.all
    for Js in _geometric_ideal_sequences(p, m, positive_only):
        yield FilterChain(p, tuple(full - J for J in Js))


@dataclass(frozen=True)
class RankTable:
    """Exact values r_alpha(J) indexed by positive-root index."""

    m: int
    r: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        return self.r[k]

    def display(self) -> tuple:
        """Values capped at m + 1 (printed as "> m")."""
        return tuple(v if v <= self.m else f">{self.m}" for v in self.r)


def _splits(p: RootPoset) -> list[list[tuple[int, int]]]:
    out: list[list[tuple[int, int]]] = [[] for _ in range(p.size)]
    for a, b, c in p.triples:
        out[c].append((a, b))
    return out


def rank_table(chain: IdealChain) -> RankTable:
    """r_alpha(J) by height-increasing dynamic programming over two-part splits."""
    if not chain.positive:
        raise ChainError("rank table needs a positive chain (all simple roots in J_m)")
    p, m = chain.poset, chain.m
    splits = _splits(p)
    r: list[int] = []
    for k in range(p.size):
        best = next((i for i in range(1, m + 1) if k in chain.J(i)), None)
        for a, b in splits[k]:
            v = r[a] + r[b]
            if best is None or v < best:
                best = v
        if best is None:
            raise InternalConsistencyError(f"root {k} has no decomposition")
        r.append(best)
    # Structural guarantees; these must never fire.
    for k, v in enumerate(r):
        if v <= m and k not in chain.J(v):
            raise InternalConsistencyError(f"r={v} <= m but root {k} not in J_{v}")
        if v > m and not any(
            r[a] + r[b] == v and min(r[a], r[b]) <= m for a, b in splits[k]
        ):
            raise InternalConsistencyError(f"no minimizing split for root {k}")
    return RankTable(m, tuple(r))


def indecomposables(chain: IdealChain, r: int, table: RankTable | None = None) -> frozenset:
    """Roots indecomposable of rank r (1 <= r <= m) with respect to a positive chain."""
    m = chain.m
    if not 1 <= r <= m:
        raise ChainError(f"rank {r} outside 1..{m}")
    p = chain.poset
    if table is None:
        table = rank_table(chain)
    rv = table.r
    splits = _splits(p)
    partners: list[list[tuple[int, int]]] = [[] for _ in range(p.size)]
    for a, b, c in p.triples:
        partners[a].append((b, c))
        if a != b:
            partners[b].append((a, c))
    out = set()
    for k in chain.J(r):
        if rv[k] != r:
            continue
        if any(
            (x in chain.J(i) and y in chain.J(r - i)) or (y in chain.J(i) and x in chain.J(r - i))
            for x, y in splits[k]
            for i in range(1, r)
        ):
            continue
        if any(rv[c] <= m and beta not in chain.J(rv[c] - r) for beta, c in partners[k]):
            continue
        out.add(k)
    return frozenset(out)


def top_indecomposables(chain: IdealChain) -> frozenset:
    """Rank-m indecomposables via the maximal-element criterion."""
    p, m = chain.poset, chain.m
    layer = chain.J(m) - chain.J(m - 1)
    out = set()
    for k in p.maximal(layer):
        if any(
            (x in chain.J(i) and y in chain.J(m - i)) or (y in chain.J(i) and x in chain.J(m - i))
            for x, y in _splits(p)[k]
            for i in range(1, m)
        ):
            continue
        out.add(k)
    return frozenset(out)


def indecomposables_filters(chain: FilterChain) -> frozenset:
    """Rank-m indecomposables of a filter chain: alpha in I_m with no split
    alpha = beta + gamma, beta in I_i, gamma in I_j, i + j = m (i, j >= 0)."""
    p, m = chain.poset, chain.m
    splits = _splits(p)
    out = set()
    for k in chain.I(m):
        if any(
            (x in chain.I(i) and y in chain.I(m - i))
            for a, b in splits[k]
            for x, y in ((a, b), (b, a))
            for i in range(0, m + 1)
        ):
            continue
        out.add(k)
    return frozenset(out)


def indecomposable_profile(chain: IdealChain) -> tuple[int, ...]:
    """(i_1, ..., i_m): number of indecomposables of each rank."""
    table = rank_table(chain)
    return tuple(len(indecomposables(chain, r, table)) for r in range(1, chain.m + 1))


def h_vector_from_chains(p: RootPoset, m: int) -> tuple[int, ...]:
    """h_i(Phi, m) = #filter chains with l - i rank-m indecomposables."""
    ell = p.rs.rank
    hist = Counter(len(indecomposables_filters(c)) for c in enumerate_filter_chains(p, m))
    return tuple(hist.get(ell - i, 0) for i in range(ell + 1))


def h_plus_vector_from_chains(p: RootPoset, m: int) -> tuple[int, ...]:
    """h+_{l-i}(Phi, m) = #positive ideal chains with i rank-m indecomposables."""
    ell = p.rs.rank
    hist = Counter(len(top_indecomposables(c)) for c in enumerate_ideal_chains(p, m, True))
    return tuple(hist.get(ell - i, 0) for i in range(ell + 1))
