"""Command-line interface: JSON/CSV reports and rank-2 SVG figures.

Exit status is 0 on success, 2 when a verification check fails and 1 on
usage errors (bad arguments, unknown types, exceeded scale guards).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections import Counter
from dataclasses import dataclass
from typing import Any, Callable, Sequence

from . import __version__
from .chains import (
    ChainError,
    enumerate_ideal_chains,
    h_plus_vector_from_chains,
    h_vector_from_chains,
    indecomposable_profile,
    top_indecomposables,
)
from .cluster import ClusterError, allowable_diagonals, build_complex, snake
from .figure import FigureError, render_svg
from .lattice import LatticeError, SimplexSigma, enumerate_Dm, wall_incidence
from .poset import build_poset, count_filters_by_min_elements, histogram_vector, transitive_reduction
from .regions import RegionError, enumerate_regions, max_alcove, m_wall_counts
from .rootsys import CartanType, RootSystem, RootSystemError, build_root_system
from .stats import ScaleError, classical_parameters, max_work, n_total_formula, stat_report, verify_all

COMMANDS = ("roots", "poset", "chains", "regions", "lattice", "cluster", "stats", "verify", "figure")
FORMATS = ("json", "csv", "svg")
EXIT_OK, EXIT_USAGE, EXIT_FAILED = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    ctype: CartanType
    m: int
    positive: bool
    fmt: str
    out: str | None
    depth: str
    max_work: int

    def __post_init__(self):
        if self.m < 1:
            raise UsageError("--m must be >= 1")
        if self.fmt == "svg" and self.command != "figure":
            raise UsageError("svg output is only available for the figure command")
        if self.command == "figure" and self.fmt != "svg":
            raise UsageError("the figure command only writes svg")


@dataclass
class Result:
    """Command output: a JSON payload, CSV rows and an exit status."""

    data: Any
    rows: list[tuple] | None = None
    status: int = EXIT_OK


def _guard(rs: RootSystem, m: int, limit: int) -> None:
    n = n_total_formula(rs, m)
    if n > limit:
        raise ScaleError(
            f"{rs.name}, m={m}: {n} regions exceeds the work guard {limit} "
            "(raise it with CATALAN_ATLAS_MAX_WORK)"
        )


def _rows(vec: Sequence[int], source: str) -> list[tuple]:
    return [(i, v, source) for i, v in enumerate(vec)]


def _roots(rs: RootSystem) -> list[list[int]]:
    return [list(r) for r in rs.positive_roots]


def cmd_roots(cfg: RunConfig, rs: RootSystem) -> Result:
    data = {
        "rank": rs.rank,
        "cartan": [list(r) for r in rs.cartan],
        "positive_roots": _roots(rs),
        "highest_root": list(rs.highest_root),
        "coxeter_number": rs.coxeter_number,
        "exponents": list(rs.exponents),
        "weyl_order": rs.weyl_order(),
    }
    heights = Counter(sum(r) for r in rs.positive_roots)
    rows = [(k, heights[k], "rootsys") for k in sorted(heights)]
    return Result(data, rows)


def cmd_poset(cfg: RunConfig, rs: RootSystem) -> Result:
    p = build_poset(rs)
    hist = count_filters_by_min_elements(p, positive_only=cfg.positive)
    vec = histogram_vector(hist, rs.rank + 1)
    data = {
        "positive_roots": _roots(rs),
        "covers": sorted([a, b] for a, b in transitive_reduction(p)),
        "positive_filters_only": cfg.positive,
        "filters_by_minimal_elements": list(vec),
        "filter_count": sum(vec),
    }
    return Result(data, _rows(vec, "poset"))


def cmd_chains(cfg: RunConfig, rs: RootSystem) -> Result:
    _guard(rs, cfg.m, cfg.max_work)
    p = build_poset(rs)
    chains = []
    for c in enumerate_ideal_chains(p, cfg.m, positive_only=cfg.positive):
        chains.append({
            "ideals": [sorted(J) for J in c.ideals],
            "rank_m_indecomposables": sorted(top_indecomposables(c)),
            "indecomposable_profile": list(indecomposable_profile(c)),
        })
    vec = h_plus_vector_from_chains(p, cfg.m) if cfg.positive else h_vector_from_chains(p, cfg.m)
    data = {
        "positive_only": cfg.positive,
        "count": len(chains),
        "h_plus" if cfg.positive else "h": list(vec),
        "chains": chains,
    }
    return Result(data, _rows(vec, "chains"))


def cmd_regions(cfg: RunConfig, rs: RootSystem) -> Result:
    _guard(rs, cfg.m, cfg.max_work)
    p = build_poset(rs)
    ell = rs.rank
    regions = []
    hist: Counter = Counter()
    for R in enumerate_regions(p, cfg.m, bounded_only=cfg.positive):
        entry: dict[str, Any] = {
            "filters": [sorted(I) for I in R.chain.filters],
            "bounded": R.bounded,
        }
        if R.bounded:
            ns, sep, sep_simple = m_wall_counts(R)
            entry["max_alcove_shi"] = list(max_alcove(R.ideal_chain).r)
            entry["nonseparating_m_walls"] = ns
            hist[ns] += 1
        regions.append(entry)
    data = {"bounded_only": cfg.positive, "count": len(regions), "regions": regions}
    rows = None
    if cfg.positive:
        vec = [hist.get(ell - i, 0) for i in range(ell + 1)]
        data["h_plus"] = vec
        rows = _rows(vec, "regions")
    else:
        bounded = sum(1 for r in regions if r["bounded"])
        rows = [(0, len(regions), "regions"), (1, bounded, "regions")]
    return Result(data, rows)


def cmd_lattice(cfg: RunConfig, rs: RootSystem) -> Result:
    _guard(rs, cfg.m, cfg.max_work)
    sigma = SimplexSigma(cfg.m, cfg.m)
    points = []
    hist: Counter = Counter()
    for pt in enumerate_Dm(rs, cfg.m):
        k = wall_incidence(rs, pt, sigma)
        hist[k] += 1
        points.append({"coroot": list(pt.coords), "walls": k})
    ell = rs.rank
    vec = [hist.get(ell - i, 0) for i in range(ell + 1)]
    data = {"p": cfg.m * rs.coxeter_number - 1, "count": len(points), "h_plus": vec, "points": points}
    return Result(data, _rows(vec, "lattice"))


def cmd_cluster(cfg: RunConfig, rs: RootSystem) -> Result:
    ct = rs.ctype
    if ct.family not in "ABC":
        raise UsageError("polygon models exist for types A, B and C only")
    fam, n = classical_parameters(ct)
    fam = "A" if fam == "A" else "B"
    summary = build_complex(fam, n, cfg.m, positive_only=cfg.positive, limit=cfg.max_work * 100)
    verts = allowable_diagonals(fam, n, cfg.m)
    data = {
        "model": fam,
        "n": n,
        "positive_part": cfg.positive,
        "vertices": len(verts),
        "negative_simples": [str(d) for d in snake(fam, n, cfg.m)],
        "f": list(summary.f),
        "h": list(summary.h),
    }
    return Result(data, _rows(summary.h, "cluster"))


def cmd_stats(cfg: RunConfig, rs: RootSystem) -> Result:
    rep = stat_report(rs, cfg.m)
    return Result(rep.as_dict(), _rows(rep.h_plus, rep.sources["h_plus"]))


def cmd_verify(cfg: RunConfig, rs: RootSystem) -> Result:
    rep = verify_all(rs, cfg.m, cfg.depth)
    stats = stat_report(rs, cfg.m)
    data = {
        "depth": cfg.depth,
        "N_plus": stats.N_plus,
        "h_plus": list(stats.h_plus),
        "f_plus": list(stats.f_plus),
        **rep.as_dict(),
    }
    rows = [(i, int(c.passed), c.name) for i, c in enumerate(rep.checks)]
    return Result(data, rows, EXIT_OK if rep.passed else EXIT_FAILED)


def cmd_figure(cfg: RunConfig, rs: RootSystem) -> Result:
    return Result(render_svg(rs, cfg.m))


HANDLERS: dict[str, Callable[[RunConfig, RootSystem], Result]] = {
    "roots": cmd_roots,
    "poset": cmd_poset,
    "chains": cmd_chains,
    "regions": cmd_regions,
    "lattice": cmd_lattice,
    "cluster": cmd_cluster,
    "stats": cmd_stats,
    "verify": cmd_verify,
    "figure": cmd_figure,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="catalan-atlas", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--type", required=True, help="Cartan type such as A3, B2, F4")
        sp.add_argument("--m", type=int, default=1)
        sp.add_argument("--positive", action="store_true", help="restrict to positive / bounded objects")
        sp.add_argument("--format", choices=FORMATS, default="svg" if name == "figure" else "json")
        sp.add_argument("--out", help="write to this file instead of stdout")
        sp.add_argument("--depth", choices=("quick", "full"), default="quick")
    return parser


def parse_config(argv: Sequence[str] | None) -> RunConfig:
    ns = build_parser().parse_args(argv)
    try:
        ctype = CartanType.parse(ns.type)
    except RootSystemError as exc:
        raise UsageError(str(exc)) from None
    return RunConfig(ns.command, ctype, ns.m, ns.positive, ns.format, ns.out, ns.depth, max_work())


def render(cfg: RunConfig, res: Result) -> str:
    if cfg.fmt == "svg":
        return res.data
    if cfg.fmt == "csv":
        if res.rows is None:
            raise UsageError(f"{cfg.command} has no tabular output")
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(("i", "value", "source"))
        w.writerows(res.rows)
        return buf.getvalue()
    payload = {"meta": {"type": str(cfg.ctype), "m": cfg.m, "version": __version__}, "data": res.data}
    return json.dumps(payload, indent=2) + "\n"


def main(argv: Sequence[str] | None = None) -> int:
    try:
        cfg = parse_config(argv)
        rs = build_root_system(cfg.ctype)
        res = HANDLERS[cfg.command](cfg, rs)
        text = render(cfg, res)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ScaleError as exc:
        print(f"scale guard: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ChainError, RegionError, LatticeError, ClusterError, FigureError, RootSystemError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return res.status


if __name__ == "__main__":
    sys.exit(main())
