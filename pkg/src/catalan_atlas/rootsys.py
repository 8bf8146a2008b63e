"""Crystallographic root systems with exact integer/rational data.

Roots are integer vectors of coefficients on the ordered simple roots
(Bourbaki numbering).  The Gram matrix is normalized so that long roots have
squared length 2.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Iterable, Sequence

RootVec = tuple[int, ...]
Matrix = tuple[tuple, ...]

FAMILIES = "ABCDEFG"

# Standard exponent tables; the height-partition derivation in the tests
# re-derives them independently.
_EXCEPTIONAL_EXPONENTS = {
    ("E", 6): (1, 4, 5, 7, 8, 11),
    ("E", 7): (1, 5, 7, 9, 11, 13, 17),
    ("E", 8): (1, 7, 11, 13, 17, 19, 23, 29),
    ("F", 4): (1, 5, 7, 11),
    ("G", 2): (1, 5),
}


class RootSystemError(ValueError):
    """Invalid Cartan type or malformed root data."""


@dataclass(frozen=True, order=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        f, n = self.family, self.rank
        if f not in FAMILIES:
            raise RootSystemError(f"unknown family {f!r}")
        ok = {
            "A": n >= 1,
            "B": n >= 2,
            "C": n >= 2,
            "D": n >= 4,
            "E": n in (6, 7, 8),
            "F": n == 4,
            "G": n == 2,
        }[f]
        if not ok:
            hint = " (use A3 for D3)" if (f, n) == ("D", 3) else ""
            raise RootSystemError(f"invalid rank {n} for type {f}{hint}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        m = re.fullmatch(r"\s*([A-Ga-g])_?(\d+)\s*", text)
        if not m:
            raise RootSystemError(f"cannot parse Cartan type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))


def _gram_matrix(ct: CartanType) -> list[list[Fraction]]:
    """Symmetrized Gram matrix ((sigma_i, sigma_j)) in Bourbaki numbering."""
    f, n = ct.family, ct.rank
    G = [[Fraction(0)] * n for _ in range(n)]

    def link(i, j, val):
        G[i][j] = G[j][i] = Fraction(val)

    if f in "ABCD":
        norms = [Fraction(2)] * n
        if f == "B":
            norms[n - 1] = Fraction(1)
        elif f == "C":
            norms = [Fraction(1)] * (n - 1) + [Fraction(2)]
        for i in range(n):
            G[i][i] = norms[i]
        last = n - 1 if f != "D" else n - 2
        for i in range(last):
            link(i, i + 1, -max(norms[i], norms[i + 1]) / 2)
        if f == "D":
            link(n - 3, n - 1, -1)
    elif f == "E":
        for i in range(n):
            G[i][i] = Fraction(2)
        link(0, 2, -1)
        link(1, 3, -1)
        for i in range(2, n - 1):
            link(i, i + 1, -1)
    elif f == "F":
        for i, v in enumerate((2, 2, 1, 1)):
            G[i][i] = Fraction(v)
        link(0, 1, -1)
        link(1, 2, -1)
        link(2, 3, Fraction(-1, 2))
    elif f == "G":
        G[0][0] = Fraction(2, 3)
        G[1][1] = Fraction(2)
        link(0, 1, -1)
    return G


def cartan_from_gram(G: Sequence[Sequence[Fraction]]) -> tuple[tuple[int, ...], ...]:
    """a_ij = 2 (sigma_i, sigma_j) / (sigma_j, sigma_j)."""
    n = len(G)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            a = 2 * Fraction(G[i][j]) / G[j][j]
            if a.denominator != 1:
                raise RootSystemError("Gram matrix is not crystallographic")
            row.append(int(a))
        rows.append(tuple(row))
    return tuple(rows)


def _positive_roots(cartan: Sequence[Sequence[int]]) -> list[RootVec]:
    """Close the simple roots under root strings, height by height."""
    n = len(cartan)
    simples = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots = set(simples)
    layer = list(simples)
    while layer:
        nxt = set()
        for beta in layer:
            for i in range(n):
                # <beta, sigma_i^vee> = sum_j beta_j a_ji
                pairing = sum(beta[j] * cartan[j][i] for j in range(n))
                q = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        q += 1
                    else:
                        break
                if q - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    nxt.add(tuple(up))
        nxt -= roots
        roots |= nxt
        layer = list(nxt)
    return sorted(roots, key=lambda r: (sum(r), r))


def _components(cartan: Sequence[Sequence[int]]) -> list[list[int]]:
    n = len(cartan)
    seen: set[int] = set()
    comps = []
    for s in range(n):
        if s in seen:
            continue
        stack, comp = [s], []
        seen.add(s)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if j not in seen and cartan[i][j] != 0:
                    seen.add(j)
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def classify(cartan: Sequence[Sequence[int]], norms: Sequence[Fraction]) -> CartanType:
    """Identify an irreducible Cartan matrix (nodes in any order)."""
    n = len(cartan)
    if n == 0:
        raise RootSystemError("empty diagram")
    adj = {i: [j for j in range(n) if j != i and cartan[i][j] != 0] for i in range(n)}
    mult = {(i, j): cartan[i][j] * cartan[j][i] for i in range(n) for j in adj[i]}
    if n == 1:
        return CartanType("A", 1)
    if 3 in mult.values():
        return CartanType("G", 2)
    degree = {i: len(adj[i]) for i in range(n)}
    branch = [i for i in range(n) if degree[i] == 3]
    if branch:
        b = branch[0]
        legs = []
        for start in adj[b]:
            length, prev, cur = 1, b, start
            while degree[cur] == 2:
                prev, cur = cur, next(j for j in adj[cur] if j != prev)
                length += 1
            legs.append(length)
        legs.sort()
        if legs[:2] == [1, 1]:
            return CartanType("D", n)
        return CartanType("E", n)
    doubles = [e for e, v in mult.items() if v == 2]
    if not doubles:
        return CartanType("A", n)
    i, j = doubles[0]
    if n == 2:
        return CartanType("B", 2)
    if degree[i] == 2 and degree[j] == 2:
        return CartanType("F", 4)
    end = i if degree[i] == 1 else j
    other = j if end == i else i
    return CartanType("B" if norms[end] < norms[other] else "C", n)


@dataclass(frozen=True)
class RootSystem:
    """Root system in simple-root coordinates, possibly reducible.

    ``components`` lists (CartanType, simple-root indices) pairs.  The
    irreducible-only constants (highest root, exponents, Coxeter number) are
    ``None`` for reducible or empty systems.
    """

    components: tuple[tuple[CartanType, tuple[int, ...]], ...]
    cartan: Matrix
    sym: Matrix
    positive_roots: tuple[RootVec, ...]
    highest_root: RootVec | None = None
    exponents: tuple[int, ...] | None = None
    coxeter_number: int | None = None
    _index: dict = field(default_factory=dict, repr=False, compare=False, hash=False)

    def __post_init__(self):
        self._index.update({r: k for k, r in enumerate(self.positive_roots)})

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def ctype(self) -> CartanType | None:
        if len(self.components) == 1:
            return self.components[0][0]
        return None

    @property
    def is_irreducible(self) -> bool:
        return self.ctype is not None

    @property
    def name(self) -> str:
        if not self.components:
            return "0"
        return "x".join(str(ct) for ct, _ in self.components)

    @property
    def simple_roots(self) -> tuple[RootVec, ...]:
        n = self.rank
        return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))

    @property
    def coroot_basis(self) -> tuple[tuple[Fraction, ...], ...]:
        """Row i = simple coroot 2 sigma_i/(sigma_i, sigma_i) in root coordinates."""
        n = self.rank
        return tuple(
            tuple(Fraction(2) / self.sym[i][i] if i == j else Fraction(0) for j in range(n))
            for i in range(n)
        )

    def index(self, root: Sequence[int]) -> int:
        """Position of a positive root in ``positive_roots``."""
        try:
            return self._index[tuple(root)]
        except KeyError:
            raise RootSystemError(f"{tuple(root)} is not a positive root") from None

    def is_root(self, v: Sequence[int]) -> bool:
        v = tuple(v)
        return v in self._index or tuple(-x for x in v) in self._index

    def height(self, root: Sequence[int]) -> int:
        return sum(root)

    def weyl_order(self) -> int:
        """|W| from the exponents: prod (e_i + 1)."""
        if self.exponents is None:
            raise RootSystemError("exponents only defined for irreducible systems")
        return prod(e + 1 for e in self.exponents)


def _assemble(cartan, sym, components) -> RootSystem:
    roots = tuple(_positive_roots(cartan))
    highest = exps = h = None
    if len(components) == 1:
        ct = components[0][0]
        highest = roots[-1]
        h = sum(highest) + 1
        if ct.family == "A":
            exps = tuple(range(1, ct.rank + 1))
        elif ct.family in "BC":
            exps = tuple(range(1, 2 * ct.rank, 2))
        elif ct.family == "D":
            exps = tuple(sorted(list(range(1, 2 * ct.rank - 2, 2)) + [ct.rank - 1]))
        else:
            exps = _EXCEPTIONAL_EXPONENTS[(ct.family, ct.rank)]
    return RootSystem(
        components=tuple(components),
        cartan=tuple(tuple(r) for r in cartan),
        sym=tuple(tuple(r) for r in sym),
        positive_roots=roots,
        highest_root=highest,
        exponents=exps,
        coxeter_number=h,
    )


def build_root_system(ctype: CartanType | str) -> RootSystem:
    if isinstance(ctype, str):
        ctype = CartanType.parse(ctype)
    G = _gram_matrix(ctype)
    A = cartan_from_gram(G)
    rs = _assemble(A, G, [(ctype, tuple(range(ctype.rank)))])
    if len(rs.positive_roots) * 2 != ctype.rank * rs.coxeter_number:
        raise RootSystemError(f"{ctype}: |Phi+| != l h / 2")
    return rs


def inner(rs: RootSystem, x: Sequence, y: Sequence) -> Fraction:
    n = rs.rank
    if len(x) != n or len(y) != n:
        raise RootSystemError("dimension mismatch")
    return sum((Fraction(x[i]) * rs.sym[i][j] * y[j] for i in range(n) for j in range(n)), Fraction(0))


def coroot(rs: RootSystem, alpha: Sequence[int]) -> tuple[Fraction, ...]:
    """2 alpha / (alpha, alpha) in simple-root coordinates."""
    if not rs.is_root(alpha):
        raise RootSystemError(f"{tuple(alpha)} is not a root")
    c = 2 / inner(rs, alpha, alpha)
    return tuple(c * a for a in alpha)


def coroot_coords(rs: RootSystem, v: Sequence) -> tuple[Fraction, ...]:
    """Convert simple-root coordinates to simple-coroot coordinates."""
    return tuple(Fraction(v[i]) * rs.sym[i][i] / 2 for i in range(rs.rank))


def root_coords_of_coroot_vector(rs: RootSystem, c: Sequence) -> tuple[Fraction, ...]:
    return tuple(Fraction(c[i]) * 2 / rs.sym[i][i] for i in range(rs.rank))


def parabolic(rs: RootSystem, J: Iterable[int]) -> RootSystem:
    """Parabolic subsystem on the simple roots indexed by ``J`` (0-based).

    Coordinates are re-indexed to ``sorted(J)``.
    """
    J = sorted(set(J))
    if any(j < 0 or j >= rs.rank for j in J):
        raise RootSystemError(f"index set {J} out of range for rank {rs.rank}")
    sub_c = [[rs.cartan[i][j] for j in J] for i in J]
    sub_g = [[rs.sym[i][j] for j in J] for i in J]
    comps = []
    for comp in _components(sub_c):
        cc = [[sub_c[i][j] for j in comp] for i in comp]
        norms = [sub_g[i][i] for i in comp]
        comps.append((classify(cc, norms), tuple(comp)))
    comps.sort(key=lambda c: c[1])
    return _assemble(sub_c, sub_g, comps)


def product_system(*systems: RootSystem) -> RootSystem:
    """Orthogonal direct sum of root systems (block-diagonal data)."""
    n = sum(s.rank for s in systems)
    A = [[0] * n for _ in range(n)]
    G = [[Fraction(0)] * n for _ in range(n)]
    comps = []
    off = 0
    for s in systems:
        for i in range(s.rank):
            for j in range(s.rank):
                A[off + i][off + j] = s.cartan[i][j]
                G[off + i][off + j] = s.sym[i][j]
        for ct, idx in s.components:
            comps.append((ct, tuple(off + k for k in idx)))
        off += s.rank
    return _assemble(A, G, comps)


def simple_reflection_matrix(rs: RootSystem, i: int) -> tuple[tuple[int, ...], ...]:
    """Matrix of s_i on simple-root coordinates (columns are images of sigma_j).

    s_i(sigma_j) = sigma_j - a_ji sigma_i.
    """
    n = rs.rank
    M = [[int(r == c) for c in range(n)] for r in range(n)]
    for j in range(n):
        M[i][j] -= rs.cartan[j][i]
    return tuple(tuple(r) for r in M)


def reflect(rs: RootSystem, i: int, v: Sequence) -> tuple:
    """s_i applied to a vector in simple-root coordinates."""
    pairing = sum(v[j] * rs.cartan[j][i] for j in range(rs.rank))
    out = list(v)
    out[i] = out[i] - pairing
    return tuple(out)


def weyl_order_by_orbit(rs: RootSystem, limit: int = 2_000_000) -> int:
    """|W| as the orbit size of 2*rho (a regular vector) under simple reflections."""
    n = rs.rank
    two_rho = tuple(sum(r[i] for r in rs.positive_roots) for i in range(n))
    seen = {two_rho}
    frontier = [two_rho]
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(n):
                w = reflect(rs, i, v)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        if len(seen) > limit:
            raise RootSystemError("Weyl group orbit exceeds limit")
        frontier = nxt
    return len(seen)


def exponents_from_heights(rs: RootSystem) -> tuple[int, ...]:
    """Exponents as the dual partition of the height distribution of Phi+."""
    counts: dict[int, int] = {}
    for r in rs.positive_roots:
        counts[sum(r)] = counts.get(sum(r), 0) + 1
    top = max(counts, default=0)
    exps = []
    for k in range(1, top + 1):
        exps += [k] * (counts.get(k, 0) - counts.get(k + 1, 0))
    return tuple(sorted(exps))
