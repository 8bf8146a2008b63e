"""Closed-form counts, f/h transforms and the cross-route verification suite."""
from __future__ import annotations

import os
from dataclasses import astuple, dataclass, field, is_dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, prod
from typing import Any, Callable, Sequence

from .rootsys import CartanType, RootSystem, build_root_system

DEFAULT_MAX_WORK = 20_000


class ScaleError(RuntimeError):
    """Requested computation exceeds the configured work guard."""


def max_work() -> int:
    env = os.environ.get("CATALAN_ATLAS_MAX_WORK")
    return int(env) if env else DEFAULT_MAX_WORK


# --- product formulas --------------------------------------------------------


def _irreducible_parts(rs: RootSystem) -> list[RootSystem]:
    if rs.is_irreducible:
        return [rs]
    return [build_root_system(ct) for ct, _ in rs.components]


def _as_int(x: Fraction) -> int:
    if x.denominator != 1:
        raise AssertionError(f"product formula gave a non-integer {x}")
    return int(x)


def n_plus_formula(rs: RootSystem, m: int) -> int:
    """prod (e_i + mh - 1)/(e_i + 1), taken over irreducible components."""
    if m < 0:
        raise ValueError("m must be >= 0")
    out = Fraction(1)
    for part in _irreducible_parts(rs):
        h = part.coxeter_number
        out *= prod(Fraction(e + m * h - 1, e + 1) for e in part.exponents)
    return _as_int(out)


def n_total_formula(rs: RootSystem, m: int) -> int:
    """prod (e_i + mh + 1)/(e_i + 1); m may be negative."""
    out = Fraction(1)
    for part in _irreducible_parts(rs):
        h = part.coxeter_number
        out *= prod(Fraction(e + m * h + 1, e + 1) for e in part.exponents)
    return _as_int(out)


# --- classical closed forms ----------------------------------------------------


def _binom(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def classical_parameters(ct: CartanType) -> tuple[str, int]:
    """(family, n) in the conventions A_{n-1}, B_n, C_n, D_n."""
    if ct.family == "A":
        return "A", ct.rank + 1
    if ct.family in ("B", "C", "D"):
        return ct.family, ct.rank
    raise ValueError(f"{ct} is not of classical type")


def h_plus_closed_form(family: str, n: int, m: int, i: int) -> int:
    if family == "A":
        v = Fraction(_binom(n - 1, i) * _binom(m * n - 2, i), i + 1)
        return _as_int(v)
    if family in ("B", "C"):
        return _binom(n, i) * _binom(m * n - 1, i)
    if family == "D":
        return _binom(n, i) * _binom(m * (n - 1) - 1, i) + _binom(n - 2, i - 2) * _binom(m * (n - 1), i)
    raise ValueError(f"unknown family {family!r}")


def f_plus_closed_form(family: str, n: int, m: int, k: int) -> int:
    if family == "A":
        return _as_int(Fraction(_binom(n - 1, k) * _binom(m * n + k - 1, k), k + 1))
    if family in ("B", "C"):
        return _binom(n, k) * _binom(m * n + k - 1, k)
    if family == "D":
        return _binom(n, k) * _binom(m * (n - 1) + k - 1, k) + _binom(n - 2, k - 2) * _binom(
            m * (n - 1) + k - 2, k
        )
    raise ValueError(f"unknown family {family!r}")


def f_cluster_closed_form(family: str, n: int, m: int, k: int) -> int:
    """Face numbers of the positive part of the cluster complex (type D only for m = 1)."""
    if family == "D":
        if m != 1:
            raise ValueError("type D closed form is only available for m = 1")
        return _binom(n, k) * _binom(n + k - 2, k) + _binom(n - 2, k - 2) * _binom(n + k - 3, k)
    return f_plus_closed_form(family, n, m, k)


def rank_of_family(family: str, n: int) -> int:
    return n - 1 if family == "A" else n


def h_plus_vector_closed_form(family: str, n: int, m: int) -> tuple[int, ...]:
    return tuple(h_plus_closed_form(family, n, m, i) for i in range(rank_of_family(family, n) + 1))


def f_plus_vector_closed_form(family: str, n: int, m: int) -> tuple[int, ...]:
    return tuple(f_plus_closed_form(family, n, m, k) for k in range(rank_of_family(family, n) + 1))


# --- f/h transforms ----------------------------------------------------------------


def f_from_h(h: Sequence[int]) -> tuple[int, ...]:
    """f_{k-1} = sum_{i <= k} h_i C(l - i, k - i)."""
    ell = len(h) - 1
    return tuple(sum(h[i] * comb(ell - i, k - i) for i in range(k + 1)) for k in range(ell + 1))


def h_from_f(f: Sequence[int]) -> tuple[int, ...]:
    """h_k = sum_{i <= k} (-1)^{k-i} C(l - i, k - i) f_{i-1}."""
    ell = len(f) - 1
    return tuple(
        sum((-1) ** (k - i) * comb(ell - i, k - i) * f[i] for i in range(k + 1)) for k in range(ell + 1)
    )


def poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


# --- reports -------------------------------------------------------------------------


@dataclass
class StatReport:
    phi: str
    m: int
    N: int
    N_plus: int
    h: tuple[int, ...]
    h_plus: tuple[int, ...]
    f: tuple[int, ...]
    f_plus: tuple[int, ...]
    sources: dict[str, str] = field(default_factory=dict)

    def as_dict(self) -> dict[str, Any]:
        return {
            "type": self.phi,
            "m": self.m,
            "N": self.N,
            "N_plus": self.N_plus,
            "h": list(self.h),
            "h_plus": list(self.h_plus),
            "f": list(self.f),
            "f_plus": list(self.f_plus),
            "sources": dict(sorted(self.sources.items())),
        }


def stat_report(rs: RootSystem, m: int) -> StatReport:
    """h, h+, f, f+ from chain enumeration, N and N+ from the product formulas."""
    from .chains import h_plus_vector_from_chains, h_vector_from_chains
    from .poset import build_poset

    N = n_total_formula(rs, m)
    if N > max_work():
        raise ScaleError(f"{rs.name}, m={m}: {N} regions exceeds the work guard {max_work()}")
    p = build_poset(rs)
    h = h_vector_from_chains(p, m)
    hp = h_plus_vector_from_chains(p, m)
    return StatReport(
        rs.name, m, N, n_plus_formula(rs, m), h, hp, f_from_h(h), f_from_h(hp),
        sources={
            "N": "formula", "N_plus": "formula", "h": "chains", "h_plus": "chains",
            "f": "chains", "f_plus": "chains",
        },
    )


@dataclass
class Check:
    name: str
    passed: bool
    expected: Any = None
    actual: Any = None
    sources: tuple[str, ...] = ()

    def as_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "expected": _jsonable(self.expected),
            "actual": _jsonable(self.actual),
            "sources": list(self.sources),
        }


def _jsonable(x):
    if is_dataclass(x) and not isinstance(x, type):
        return _jsonable(astuple(x))
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (tuple, list)):
        return [_jsonable(v) for v in x]
    return x


@dataclass
class VerificationReport:
    phi: str
    m: int
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, expected, actual, sources: Sequence[str] = ()) -> Check:
        c = Check(name, expected == actual, expected, actual, tuple(sources))
        self.checks.append(c)
        return c

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def as_dict(self) -> dict[str, Any]:
        return {"passed": self.passed, "checks": [c.as_dict() for c in self.checks]}


def _histogram_vector(hist: dict[int, int], ell: int) -> tuple[int, ...]:
    """Entry i of the result counts objects with l - i features."""
    return tuple(hist.get(ell - i, 0) for i in range(ell + 1))


def _positive_f_poly(rs: RootSystem, m: int, cache: dict) -> list[int]:
    from .chains import h_plus_vector_from_chains
    from .poset import build_poset

    poly = [1]
    for ct, _ in rs.components:
        if ct not in cache:
            cache[ct] = list(f_from_h(h_plus_vector_from_chains(build_poset(build_root_system(ct)), m)))
        poly = poly_mul(poly, cache[ct])
    return poly


def parabolic_sum(rs: RootSystem, m: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Both sides of f_{k-1}(Phi_I, m) = sum_J f+_{k-|J|-1}(Phi_{I - J}, m), using
    the actual parabolic subsystems."""
    from .chains import h_vector_from_chains
    from .poset import build_poset
    from .rootsys import parabolic

    ell = rs.rank
    lhs = f_from_h(h_vector_from_chains(build_poset(rs), m))
    rhs = [0] * (ell + 1)
    cache: dict = {}
    for size in range(ell + 1):
        for J in combinations(range(ell), size):
            rest = [v for v in range(ell) if v not in J]
            poly = _positive_f_poly(parabolic(rs, rest), m, cache) if rest else [1]
            for i, c in enumerate(poly):
                rhs[i + size] += c
    return lhs, tuple(rhs)


def verify_all(rs: RootSystem, m: int, depth: str = "quick") -> VerificationReport:
    """Run every applicable cross-check for (rs, m).

    ``quick`` covers formulas, chains, filters and lattice points; ``full``
    adds regions via alcoves, exact cell search (rank <= 3), the wall
    transfer of rho, torus orbits, polygon models and parabolic sums.
    """
    from .chains import (
        enumerate_ideal_chains,
        h_plus_vector_from_chains,
        h_vector_from_chains,
        rank_table,
    )
    from .alcoves import is_shi_vector
    from .lattice import LatticeError, enumerate_Dm, incidence_histogram, orbit_count_bruteforce
    from .poset import build_poset, count_filters_by_min_elements, histogram_vector

    if depth not in ("quick", "full"):
        raise ValueError("depth must be 'quick' or 'full'")
    if not rs.is_irreducible:
        raise ValueError("verification needs an irreducible root system")
    if m < 1:
        raise ValueError("m must be >= 1")
    N = n_total_formula(rs, m)
    if N > max_work():
        raise ScaleError(f"{rs.name}, m={m}: {N} regions exceeds the work guard {max_work()}")

    ell = rs.rank
    p = build_poset(rs)
    rep = VerificationReport(rs.name, m)
    Np = n_plus_formula(rs, m)

    rep.add("highest root height is h - 1", 2 * len(rs.positive_roots) // ell - 1, sum(rs.highest_root),
            ("rootsys",))

    positive = list(enumerate_ideal_chains(p, m, positive_only=True))
    rep.add("positive chains = N+", Np, len(positive), ("formula", "chains"))
    h = h_vector_from_chains(p, m)
    hp = h_plus_vector_from_chains(p, m)
    rep.add("sum of h = N", N, sum(h), ("formula", "chains"))
    rep.add("sum of h+ = N+", Np, sum(hp), ("formula", "chains"))
    D = enumerate_Dm(rs, m)
    rep.add("|D_m| = N+", Np, len(D), ("formula", "lattice"))
    rep.add("h+ by lattice wall incidence", hp, _histogram_vector(incidence_histogram(rs, m), ell),
            ("chains", "lattice"))
    rep.add("alcove inequalities for every rank table", True,
            all(is_shi_vector(p, rank_table(c).r) for c in positive), ("chains",))
    rep.add("reciprocity N+(m-1) = (-1)^l N(-m)", n_plus_formula(rs, m - 1), (-1) ** ell * n_total_formula(rs, -m),
            ("formula",))
    rep.add("top entry of h+ = N+(m-1)", n_plus_formula(rs, m - 1), hp[ell], ("formula", "chains"))
    if m == 1:
        rep.add("h+ by positive filters and minimal elements",
                hp, histogram_vector(count_filters_by_min_elements(p, positive_only=True), ell + 1),
                ("chains", "poset"))
        rep.add("h symmetric", h, tuple(reversed(h)), ("chains",))
    ct = rs.ctype
    if ct.family in "ABCD":
        fam, n = classical_parameters(ct)
        rep.add("h+ closed form", h_plus_vector_closed_form(fam, n, m), hp, ("formula", "chains"))
        rep.add("f+ closed form", f_plus_vector_closed_form(fam, n, m), f_from_h(hp), ("formula", "chains"))

    if depth == "full":
        _full_checks(rep, rs, p, m, h, hp, D)
        try:
            rep.add("torus orbits = N+", Np, orbit_count_bruteforce(rs, m), ("formula", "lattice"))
        except LatticeError:
            pass
    return rep


def _full_checks(rep: VerificationReport, rs, p, m, h, hp, D) -> None:
    from collections import Counter

    from .chains import indecomposable_profile
    from .cluster import build_complex
    from .lattice import SimplexSigma, rho_table, transferred_walls, w_f, walls_containing
    from .regions import (
        FM_MAX_RANK,
        bounded_cell_counts_by_separating_pairs,
        bounded_regions_by_alcoves,
        cell_counts,
        cell_counts_by_pairs,
        enumerate_regions,
        m_wall_counts,
        nonseparating_profile,
        region_feasibility,
        chain_of_point,
    )

    ell = rs.rank
    f, fp = f_from_h(h), f_from_h(hp)
    by_alcove = bounded_regions_by_alcoves(p, m)
    rep.add("bounded regions by alcoves = N+", sum(hp), len(by_alcove), ("formula", "regions"))
    bounded = list(enumerate_regions(p, m, bounded_only=True))
    method = "fm" if ell <= FM_MAX_RANK else "alcoves"
    hist = Counter(m_wall_counts(R, method)[0] for R in bounded)
    rep.add("h+ by non-separating walls", hp, _histogram_vector(dict(hist), ell), ("chains", "regions"))
    rep.add("wall profile = indecomposable profile", True,
            all(nonseparating_profile(R, method) == indecomposable_profile(R.ideal_chain) for R in bounded),
            ("chains", "regions"))
    rep.add("f by pairs (chains)", f, cell_counts_by_pairs(p, m), ("chains", "cells"))
    rep.add("f+ by pairs (chains)", fp, cell_counts_by_pairs(p, m, True), ("chains", "cells"))
    rep.add("f+ by forced separating pairs", fp, bounded_cell_counts_by_separating_pairs(p, m),
            ("chains", "cells"))
    if ell <= FM_MAX_RANK:
        regions = list(enumerate_regions(p, m))
        ok = True
        for R in regions:
            res = region_feasibility(R)
            ok &= bool(res) and res.dimension == ell and chain_of_point(p, m, res.sample) == R.chain
        rep.add("every chain region is nonempty and round-trips", True, ok, ("chains", "regions"))
        rep.add("f by cells", f, cell_counts(p, m), ("chains", "cells"))
        rep.add("f+ by cells", fp, cell_counts(p, m, True), ("chains", "cells"))

    wf = w_f(p, m)
    table = rho_table(p, m)
    rep.add("rho is a bijection onto D_m", sorted(D), sorted(pt for _, _, pt in table), ("regions", "lattice"))
    ok = True
    for s, w, pt in table:
        tw = transferred_walls(p, m, w, wf)
        for r in range(1, m + 1):
            on = walls_containing(rs, pt, SimplexSigma(r, m))
            for i, (k, lev) in tw.items():
                ok &= (i in on) == (lev == r and s[k] <= lev)
    rep.add("rho transfers wall statistics", True, ok, ("regions", "lattice"))

    if ell <= 4:
        lhs, rhs = parabolic_sum(rs, m)
        rep.add("parabolic sum of f+", lhs, rhs, ("chains",))
    ct = rs.ctype
    if ct.family in "ABC":
        fam, n = classical_parameters(ct)
        fam = "A" if fam == "A" else "B"
        rep.add("h of positive polygon complex = h+", hp, build_complex(fam, n, m, True).h,
                ("chains", "cluster"))
        rep.add("h of polygon complex = h", h, build_complex(fam, n, m).h, ("chains", "cluster"))
