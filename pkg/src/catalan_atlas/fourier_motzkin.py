"""Exact Fourier-Motzkin elimination over the rationals.

Used as an independent geometric oracle: nonemptiness, affine dimension and
an exact relative-interior sample point of a system of linear constraints
with strict and weak inequalities and equalities.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

RELATIONS = ("<", "<=", "=", ">", ">=")

MAX_VARIABLES = 12
MAX_ROWS = 50_000


class FMResourceError(RuntimeError):
    """System too large for exact elimination."""


@dataclass(frozen=True)
class Row:
    a: tuple[Fraction, ...]
    rel: str
    b: Fraction

    def __post_init__(self):
        if self.rel not in RELATIONS:
            raise ValueError(f"unknown relation {self.rel!r}")

    def holds(self, x: Sequence) -> bool:
        v = sum(Fraction(c) * xi for c, xi in zip(self.a, x))
        return {
            "<": v < self.b,
            "<=": v <= self.b,
            "=": v == self.b,
            ">": v > self.b,
            ">=": v >= self.b,
        }[self.rel]


@dataclass
class IneqSystem:
    nvars: int
    rows: list[Row] = field(default_factory=list)

    def add(self, a: Sequence, rel: str, b) -> "IneqSystem":
        if len(a) != self.nvars:
            raise ValueError("coefficient vector has wrong length")
        self.rows.append(Row(tuple(Fraction(c) for c in a), rel, Fraction(b)))
        return self

    def extended(self, rows: Sequence[Row]) -> "IneqSystem":
        return IneqSystem(self.nvars, list(self.rows) + list(rows))

    def satisfied_by(self, x: Sequence) -> bool:
        return all(r.holds(x) for r in self.rows)


@dataclass(frozen=True)
class FMResult:
    nonempty: bool
    dimension: int | None = None
    sample: tuple[Fraction, ...] | None = None

    def __bool__(self) -> bool:
        return self.nonempty


# Internal rows: (coeffs, strict, rhs) meaning coeffs . x (< | <=) rhs.

def _normalize(rows):
    """Scale rows to a canonical direction and keep the tightest of each
    parallel family (pairwise dominance)."""
    best: dict = {}
    out_const = []
    for a, strict, b in rows:
        lead = next((c for c in a if c != 0), None)
        if lead is None:
            out_const.append((a, strict, b))
            continue
        s = abs(lead)
        a = tuple(c / s for c in a)
        b = b / s
        cur = best.get(a)
        if cur is None or b < cur[1] or (b == cur[1] and strict and not cur[0]):
            best[a] = (strict, b)
    return out_const + [(a, st, b) for a, (st, b) in best.items()]


def _consts_ok(rows) -> bool:
    for a, strict, b in rows:
        if all(c == 0 for c in a):
            if strict and not 0 < b:
                return False
            if not strict and not 0 <= b:
                return False
    return True


def _fm_sample(n: int, rows) -> tuple[Fraction, ...] | None:
    """Point satisfying all rows, or None.  Midpoints keep strict rows strict."""
    stages = []
    active = set(range(n))
    cur = _normalize(rows)
    while active:
        occ = {k: sum(1 for a, _, _ in cur if a[k] != 0) for k in active}
        k = min(active, key=lambda v: (occ[v], v))
        pos = [r for r in cur if r[0][k] > 0]
        neg = [r for r in cur if r[0][k] < 0]
        rest = [r for r in cur if r[0][k] == 0]
        stages.append((k, pos, neg))
        new = list(rest)
        for pa, ps, pb in pos:
            for na, ns, nb in neg:
                cp, cn = pa[k], -na[k]
                a = tuple(x / cp + y / cn for x, y in zip(pa, na))
                new.append((a, ps or ns, pb / cp + nb / cn))
        if len(new) > MAX_ROWS:
            raise FMResourceError(f"elimination produced {len(new)} rows")
        cur = _normalize(new)
        if not _consts_ok(cur):
            return None
        active.discard(k)
    if not _consts_ok(cur):
        return None
    x = [Fraction(0)] * n
    for k, pos, neg in reversed(stages):
        lo = hi = None
        lo_strict = hi_strict = False
        for a, strict, b in pos:
            rhs = (b - sum(a[j] * x[j] for j in range(n) if j != k)) / a[k]
            if hi is None or rhs < hi or (rhs == hi and strict):
                hi, hi_strict = rhs, strict
        for a, strict, b in neg:
            rhs = (b - sum(a[j] * x[j] for j in range(n) if j != k)) / a[k]
            if lo is None or rhs > lo or (rhs == lo and strict):
                lo, lo_strict = rhs, strict
        if lo is not None and hi is not None:
            if lo > hi or (lo == hi and (lo_strict or hi_strict)):
                return None
            x[k] = (lo + hi) / 2
        elif lo is not None:
            x[k] = lo + 1
        elif hi is not None:
            x[k] = hi - 1
        else:
            x[k] = Fraction(0)
    return tuple(x)


def _solve_equalities(n: int, eqs):
    """Row-reduce a.x = b.  Returns (x0, basis) with solutions x0 + basis.z,
    or None if inconsistent."""
    M = [list(a) + [b] for a, b in eqs]
    pivots = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        piv = M[r][c]
        M[r] = [v / piv for v in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [u - f * v for u, v in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    for i in range(r, len(M)):
        if M[i][n] != 0:
            return None
    free = [c for c in range(n) if c not in pivots]
    x0 = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x0[c] = M[i][n]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -M[i][f]
        basis.append(v)
    return x0, basis


def fm_feasible(system: IneqSystem) -> FMResult:
    """Exact emptiness test, affine dimension and relative-interior sample."""
    n = system.nvars
    if n > MAX_VARIABLES:
        raise FMResourceError(f"{n} variables exceeds limit {MAX_VARIABLES}")
    eqs = []
    ineqs = []
    for r in system.rows:
        if r.rel == "=":
            eqs.append((r.a, r.b))
        elif r.rel in ("<", "<="):
            ineqs.append((r.a, r.rel == "<", r.b))
        else:
            ineqs.append((tuple(-c for c in r.a), r.rel == ">", -r.b))

    while True:
        sol = _solve_equalities(n, eqs)
        if sol is None:
            return FMResult(False)
        x0, basis = sol
        d = len(basis)
        # restrict inequalities to the affine subspace x0 + basis.z
        sub = []
        for a, strict, b in ineqs:
            coeffs = tuple(sum(a[i] * v[i] for i in range(n)) for v in basis)
            rhs = b - sum(a[i] * x0[i] for i in range(n))
            sub.append((coeffs, strict, rhs))
        if _fm_sample(d, sub) is None:
            return FMResult(False)
        implicit = None
        for idx, (coeffs, strict, rhs) in enumerate(sub):
            if strict:
                continue
            trial = sub[:idx] + [(coeffs, True, rhs)] + sub[idx + 1:]
            if _fm_sample(d, trial) is None:
                implicit = idx
                break
        if implicit is None:
            z = _fm_sample(d, [(c, True, r) for c, _, r in sub])
            assert z is not None
            x = tuple(x0[i] + sum(v[i] * zj for v, zj in zip(basis, z)) for i in range(n))
            return FMResult(True, d, x)
        a, _, b = ineqs[implicit]
        eqs.append((a, b))
        ineqs = [r for k, r in enumerate(ineqs) if k != implicit]
