"""The root poset of a positive system, its filters and ideals."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .rootsys import RootSystem

RootSet = frozenset  # of positive-root indices


@dataclass(frozen=True, eq=False)
class RootPoset:
    """Phi+ ordered coordinatewise in simple-root coordinates.

    Elements are the indices ``0..n-1`` of ``rs.positive_roots``; the order is
    a linear extension (roots are sorted by height).
    """

    rs: RootSystem
    leq: tuple[tuple[bool, ...], ...]
    covers: tuple[tuple[int, int], ...]
    # unordered additive triples (a, b, c) with root_a + root_b = root_c, a <= b
    triples: tuple[tuple[int, int, int], ...]
    _up: tuple[frozenset, ...] = field(repr=False)
    _down: tuple[frozenset, ...] = field(repr=False)

    @property
    def size(self) -> int:
        return len(self.rs.positive_roots)

    @property
    def all(self) -> frozenset:
        return frozenset(range(self.size))

    @property
    def simples(self) -> frozenset:
        return frozenset(self.rs.index(s) for s in self.rs.simple_roots)

    def up(self, k: int) -> frozenset:
        return self._up[k]

    def down(self, k: int) -> frozenset:
        return self._down[k]

    def up_closure(self, elems: Iterable[int]) -> frozenset:
        out: set[int] = set()
        for k in elems:
            out |= self._up[k]
        return frozenset(out)

    def down_closure(self, elems: Iterable[int]) -> frozenset:
        out: set[int] = set()
        for k in elems:
            out |= self._down[k]
        return frozenset(out)

    def minimal(self, subset: Iterable[int]) -> frozenset:
        s = set(subset)
        return frozenset(a for a in s if not any(b != a and self.leq[b][a] for b in s))

    def maximal(self, subset: Iterable[int]) -> frozenset:
        s = set(subset)
        return frozenset(a for a in s if not any(b != a and self.leq[a][b] for b in s))

    def is_filter(self, subset: Iterable[int]) -> bool:
        s = frozenset(subset)
        return all(self._up[a] <= s for a in s)

    def is_ideal(self, subset: Iterable[int]) -> bool:
        s = frozenset(subset)
        return all(self._down[a] <= s for a in s)

    def complement(self, subset: Iterable[int]) -> frozenset:
        return self.all - frozenset(subset)

    def sumset(self, X: frozenset, Y: frozenset) -> frozenset:
        """(X + Y) intersected with Phi+."""
        out = set()
        for a, b, c in self.triples:
            if (a in X and b in Y) or (b in X and a in Y):
                out.add(c)
        return frozenset(out)

    def root(self, k: int):
        return self.rs.positive_roots[k]


def build_poset(rs: RootSystem) -> RootPoset:
    roots = rs.positive_roots
    n = len(roots)
    leq = tuple(
        tuple(all(x <= y for x, y in zip(roots[a], roots[b])) for b in range(n)) for a in range(n)
    )
    simples = set(rs.simple_roots)
    covers = []
    for a in range(n):
        for b in range(n):
            diff = tuple(y - x for x, y in zip(roots[a], roots[b]))
            if diff in simples:
                covers.append((a, b))
    triples = []
    for a in range(n):
        for b in range(a, n):
            s = tuple(x + y for x, y in zip(roots[a], roots[b]))
            if s in rs._index:
                triples.append((a, b, rs._index[s]))
    up = tuple(frozenset(b for b in range(n) if leq[a][b]) for a in range(n))
    down = tuple(frozenset(b for b in range(n) if leq[b][a]) for a in range(n))
    return RootPoset(rs, leq, tuple(covers), tuple(triples), up, down)


def transitive_reduction(p: RootPoset) -> set[tuple[int, int]]:
    """Hasse diagram computed directly from the order relation."""
    n = p.size
    out = set()
    for a in range(n):
        for b in range(n):
            if a != b and p.leq[a][b]:
                if not any(c not in (a, b) and p.leq[a][c] and p.leq[c][b] for c in range(n)):
                    out.add((a, b))
    return out


def antichains(p: RootPoset) -> Iterator[frozenset]:
    """All antichains, depth-first in root order (empty antichain first)."""
    n = p.size

    def rec(start: int, chosen: list[int]):
        yield frozenset(chosen)
        for k in range(start, n):
            if all(not p.leq[c][k] and not p.leq[k][c] for c in chosen):
                chosen.append(k)
                yield from rec(k + 1, chosen)
                chosen.pop()

    yield from rec(0, [])


def enumerate_filters(p: RootPoset, positive_only: bool = False) -> Iterator[frozenset]:
    """Each order filter once, generated from its antichain of minimal elements."""
    simples = p.simples
    for anti in antichains(p):
        if positive_only and anti & simples:
            continue
        yield p.up_closure(anti)


def enumerate_ideals(p: RootPoset) -> Iterator[frozenset]:
    for F in enumerate_filters(p):
        yield p.complement(F)


def count_filters_by_min_elements(p: RootPoset, positive_only: bool = False) -> dict[int, int]:
    hist = Counter(len(p.minimal(F)) for F in enumerate_filters(p, positive_only))
    return dict(sorted(hist.items()))


def count_ideals_by_max_elements(p: RootPoset, must_contain_simples: bool = False) -> dict[int, int]:
    simples = p.simples
    hist: Counter = Counter()
    for J in enumerate_ideals(p):
        if must_contain_simples and not simples <= J:
            continue
        hist[len(p.maximal(J))] += 1
    return dict(sorted(hist.items()))


def histogram_vector(hist: dict[int, int], length: int) -> tuple[int, ...]:
    return tuple(hist.get(i, 0) for i in range(length))
