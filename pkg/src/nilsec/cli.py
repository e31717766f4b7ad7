"""Command-line interface.

    nilsec info so11:[2^4,1^3] [--json]
    nilsec list sl9 [--defective] [--json]
    nilsec poset sp4 [--dot | --json]
    nilsec verify [--type sl9] [--suite ranks,iso]
    nilsec export sl6 E6 --format csv [-o out.csv]
    nilsec higher-secant 4 2

Exit codes: 0 ok, 1 verification or data failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import DataIntegrityError, DataLoadError, NilsecError, ParseError, UnsupportedOperationError
from .orbits import enumerate_orbits, hasse, is_spherical, parse_algebra, parse_orbit, weighted_dynkin
from .rootsys import LieType
from .secant import build_secant_report, higher_secant_dim_sp_min
from .verify import DEFAULT_SUITES, SUITES, desk_range, run_suites

CSV_COLUMNS = ["algebra", "label", "dim", "marks", "spherical", "upsilon", "r", "c", "sStar", "dimCS",
               "defect", "descriptor", "tilde"]


@dataclass(frozen=True)
class Config:
    max_sl_n: int = 12
    max_rank: int = 10
    force: bool = False

    def allows(self, t: LieType) -> bool:
        if self.force or not t.is_classical:
            return True
        if t.series == "A":
            return t.N <= self.max_sl_n
        return t.rank <= self.max_rank


class UsageError(Exception):
    pass


def _guard(cfg: Config, t: LieType) -> None:
    if not cfg.allows(t):
        raise UsageError(f"{t.name} exceeds the desk-scale cap (sl_N N <= {cfg.max_sl_n}, "
                         f"sp/so rank <= {cfg.max_rank}); pass --force to run anyway")


def _rows(t: LieType) -> list[dict]:
    """One catalog row per orbit; the zero orbit carries no secant data."""
    rows = []
    for o in enumerate_orbits(t):
        row = {"algebra": t.name, "label": o.name, "dim": 0, "marks": " ".join(map(str, weighted_dynkin(o))),
               "spherical": is_spherical(o)}
        if o.is_zero:
            row.update(upsilon="", r="", c="", sStar="", dimCS=0, defect="", descriptor="point", tilde="")
        else:
            rep = build_secant_report(o)
            row.update(dim=rep.orbit_dim, upsilon=str(rep.upsilon) if rep.upsilon else "", r=rep.r, c=rep.c,
                       sStar=str(rep.s_star), dimCS=rep.dim_cs, defect="" if rep.defect is None else rep.defect,
                       descriptor=rep.descriptor.kind, tilde=rep.tilde.name)
        rows.append(row)
    return rows


def _format_report(rep) -> str:
    lines = [
        f"orbit       {rep.orbit}",
        f"dim O       {rep.orbit_dim}",
        f"class       {rep.upsilon or '-'}",
        f"r, c        {rep.r}, {rep.c}",
        f"s*          {rep.s_star}",
        f"l*          {rep.l_star}",
        f"dim CS      {rep.dim_cs}",
        f"defective   {'yes, defect ' + str(rep.defect) if rep.defective else 'no'}",
        f"CS(O)       {rep.descriptor} (dim {rep.descriptor.dim})",
        f"embedding   {rep.embedding}",
        "t_O basis   " + ("; ".join("(" + ", ".join(map(str, v)) + ")" for v in rep.t_O_basis) or "-"),
        f"tilde O     {rep.tilde}",
    ]
    return "\n".join(lines)


def cmd_info(args, cfg: Config, out) -> int:
    rep = build_secant_report(parse_orbit(args.orbit))
    if args.json:
        out.write(json.dumps(rep.to_json(), indent=2) + "\n")
    else:
        out.write(_format_report(rep) + "\n")
    return 0


def cmd_list(args, cfg: Config, out) -> int:
    t = parse_algebra(args.algebra)
    _guard(cfg, t)
    rows = _rows(t)
    if args.defective:
        rows = [r for r in rows if r["defect"] != ""]
    if args.json:
        out.write(json.dumps(rows, indent=2) + "\n")
        return 0
    out.write(f"{'label':<16}{'dim':>5}{'r':>4}{'c':>4}{'defect':>8}  descriptor\n")
    for r in rows:
        out.write(f"{r['label']:<16}{r['dim']:>5}{r['r']!s:>4}{r['c']!s:>4}{r['defect']!s:>8}  {r['descriptor']}\n")
    return 0


def cmd_poset(args, cfg: Config, out) -> int:
    t = parse_algebra(args.algebra)
    _guard(cfg, t)
    h = hasse(t)
    rows = {r["label"]: r for r in _rows(t)}
    if args.json:
        payload = {
            "algebra": t.name,
            "nodes": [{"label": o.name, "dim": rows[o.name]["dim"], "defective": rows[o.name]["defect"] != ""}
                      for o in h.nodes],
            "edges": [[a.name, b.name] for a, b in h.covers],
        }
        out.write(json.dumps(payload, indent=2) + "\n")
        return 0
    ids = {o: f"n{i}" for i, o in enumerate(h.nodes)}
    out.write(f'digraph "{t.name}" {{\n  rankdir=BT;\n')
    for o in h.nodes:
        style = ", style=filled, fillcolor=lightgray" if rows[o.name]["defect"] != "" else ""
        out.write(f'  {ids[o]} [label="{o.name} ({rows[o.name]["dim"]})"{style}];\n')
    for a, b in h.covers:
        out.write(f"  {ids[a]} -> {ids[b]};\n")
    out.write("}\n")
    return 0


def cmd_verify(args, cfg: Config, out) -> int:
    suites = args.suite.split(",") if args.suite else list(DEFAULT_SUITES)
    for s in suites:
        if s not in SUITES:
            raise UsageError(f"unknown suite {s!r}; choose from {', '.join(SUITES)}")
    if args.type:
        types = [parse_algebra(x) for x in args.type.split(",")]
        for t in types:
            _guard(cfg, t)
    else:
        types = desk_range()
    results = run_suites(types, suites)
    for r in results:
        out.write(r.line() + "\n")
        for f in r.failures:
            out.write(f"    {f}\n")
    failed = sum(not r.ok for r in results)
    out.write(f"{len(results) - failed}/{len(results)} suite runs passed\n")
    return 1 if failed else 0


def cmd_export(args, cfg: Config, out) -> int:
    types = [parse_algebra(x) for x in args.algebras]
    for t in types:
        _guard(cfg, t)
    rows = [row for t in types for row in sorted(_rows(t), key=lambda r: (r["dim"], r["label"]))]
    buf = io.StringIO()
    if args.format == "json":
        buf.write(json.dumps(rows, indent=2) + "\n")
    else:
        w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
    if args.output:
        with open(args.output, "w", newline="") as fh:
            fh.write(buf.getvalue())
    else:
        out.write(buf.getvalue())
    return 0


def cmd_higher_secant(args, cfg: Config, out) -> int:
    if args.n < 1 or args.r < 1:
        raise UsageError("need n >= 1 and r >= 1")
    out.write(f"{higher_secant_dim_sp_min(args.n, args.r)}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nilsec", description="Secant invariants of nilpotent orbits.")
    p.add_argument("--data-dir", help="directory with the exceptional orbit tables (overrides NILSEC_DATA_DIR)")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("info", help="secant report for one orbit, e.g. so11:[2^4,1^3] or E7:A2")
    s.add_argument("orbit")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_info)

    s = sub.add_parser("list", help="catalog of the orbits of one algebra")
    s.add_argument("algebra")
    s.add_argument("--defective", action="store_true", help="only defective orbits")
    s.add_argument("--json", action="store_true")
    s.add_argument("--force", action="store_true")
    s.set_defaults(func=cmd_list)

    s = sub.add_parser("poset", help="Hasse diagram of the closure order (classical)")
    s.add_argument("algebra")
    fmt = s.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true", help="Graphviz DOT (default)")
    fmt.add_argument("--json", action="store_true", help="JSON node and edge lists")
    s.add_argument("--force", action="store_true")
    s.set_defaults(func=cmd_poset)

    s = sub.add_parser("verify", help="run verification suites")
    s.add_argument("--type", help="algebra or comma list (default: the whole desk range)")
    s.add_argument("--suite", help=f"comma list from {','.join(SUITES)}")
    s.add_argument("--force", action="store_true")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("export", help="write the catalog of one or more algebras")
    s.add_argument("algebras", nargs="+")
    s.add_argument("--format", choices=("json", "csv"), default="json")
    s.add_argument("-o", "--output")
    s.add_argument("--force", action="store_true")
    s.set_defaults(func=cmd_export)

    s = sub.add_parser("higher-secant", help="dim of the r-th secant cone of the minimal orbit of sp_2n")
    s.add_argument("n", type=int)
    s.add_argument("r", type=int)
    s.set_defaults(func=cmd_higher_secant)
    return p


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.data_dir:
        os.environ["NILSEC_DATA_DIR"] = args.data_dir
    cfg = Config(force=getattr(args, "force", False))
    try:
        return args.func(args, cfg, out)
    except (UsageError, ParseError, UnsupportedOperationError) as exc:
        err.write(f"{parser.prog} {args.command}: error: {exc}\n")
        return 2
    except (DataIntegrityError, DataLoadError) as exc:
        err.write(f"{parser.prog}: data failure: {exc}\n")
        return 1
    except NilsecError as exc:
        err.write(f"{parser.prog}: {type(exc).__name__}: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
