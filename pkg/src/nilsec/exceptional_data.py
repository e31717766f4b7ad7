"""Bundled orbit tables for E6, E7, E8, F4 and G2.

Each data file lists every orbit with its Bala-Carter label and weighted
Dynkin marks.  Defective orbits additionally carry their secant data
(dim, r, c, generic stabilizer), the label of the dense Richardson orbit
in the secant variety, and the canonical embedding of the generic
stabilizer (black nodes and arcs on the Dynkin diagram).

Labels and marks are produced by ``regenerate`` from two independent
computations (characteristic search and Bala-Carter induction); the
secant data is transcribed into ``DEFECTIVE`` below and cross-checked on
every load.  Set NILSEC_DATA_DIR to read the files from elsewhere.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Optional

from .errors import DataLoadError
from .reductive import ReductiveType, parse_reductive
from .rootsys import LieType, build_root_system, dim_borel, orbit_dim_from_marks

SCHEMA_VERSION = 1
ORBIT_COUNTS = {"E6": 21, "E7": 45, "E8": 70, "F4": 16, "G2": 5}

# label -> (dim, r, c, generic stabilizer, Richardson label, black nodes, arcs)
DEFECTIVE: dict[str, dict[str, tuple]] = {
    "E6": {
        "A1": (22, 1, 0, "A5", "A2", (1, 3, 4, 5, 6), ()),
        "2A1": (32, 2, 0, "A3+t1", "A4", (3, 4, 5), ((1, 6),)),
        "3A1": (40, 4, 0, "t2", "E6", (), ((1, 6), (3, 5))),
        "A2": (42, 4, 2, "t2", "E6", (), ((1, 6), (3, 5))),
    },
    "E7": {
        "A1": (34, 1, 0, "D6", "A2", (2, 3, 4, 5, 6, 7), ()),
        "2A1": (52, 2, 0, "D4+A1", "A4", (2, 3, 4, 5, 7), ()),
        "(3A1)''": (54, 3, 0, "D4", "(A5)''", (2, 3, 4, 5), ()),
        "(3A1)'": (64, 4, 0, "3A1", "E6", (2, 5, 7), ()),
        "A2": (66, 4, 2, "3A1", "E6", (2, 5, 7), ()),
    },
    "E8": {
        "A1": (58, 1, 0, "E7", "A2", (1, 2, 3, 4, 5, 6, 7), ()),
        "2A1": (92, 2, 0, "D6", "A4", (2, 3, 4, 5, 6, 7), ()),
        "3A1": (112, 4, 0, "D4", "E6", (2, 3, 4, 5), ()),
        "A2": (114, 4, 2, "D4", "E6", (2, 3, 4, 5), ()),
    },
    "F4": {
        "A1": (16, 1, 0, "C3", "A2", (2, 3, 4), ()),
        "~A1": (22, 2, 0, "C2", "F4(a3)", (2, 3), ()),
    },
    "G2": {
        "A1": (6, 1, 0, "A1", "G2(a1)", (1,), ()),
    },
}


@dataclass(frozen=True)
class DefectiveRow:
    dim: int
    r: int
    c: int
    s_star: ReductiveType


@dataclass(frozen=True)
class ExceptionalRecord:
    algebra: str
    label: str
    marks: tuple[int, ...]
    spherical: bool
    defective: Optional[DefectiveRow] = None
    tilde: Optional[str] = None
    black: tuple[int, ...] = field(default=())
    arcs: tuple[tuple[int, int], ...] = field(default=())


def data_dir() -> Path:
    override = os.environ.get("NILSEC_DATA_DIR")
    if override:
        return Path(override)
    return Path(__file__).resolve().parent / "data"


def _height(lt: LieType, marks) -> int:
    rs = build_root_system(lt)
    return sum(a * b for a, b in zip(rs.highest_root, marks))


def _fail(algebra: str, label: str | None, msg: str) -> DataLoadError:
    where = f"{algebra}:{label}" if label is not None else algebra
    return DataLoadError(f"{where}: {msg}")


@lru_cache(maxsize=None)
def _load_cached(algebra: str, directory: str) -> tuple[ExceptionalRecord, ...]:
    path = Path(directory) / f"{algebra}.json"
    try:
        raw = json.loads(path.read_text())
    except FileNotFoundError as exc:
        raise _fail(algebra, None, f"data file {path} not found") from exc
    except json.JSONDecodeError as exc:
        raise _fail(algebra, None, f"data file {path} is not valid JSON: {exc}") from exc
    return tuple(_validate(algebra, raw))


def _validate(algebra: str, raw) -> list[ExceptionalRecord]:
    if not isinstance(raw, dict) or raw.get("algebra") != algebra or not isinstance(raw.get("orbits"), list):
        raise _fail(algebra, None, "schema violation: need {'algebra', 'orbits': [...]}")
    lt = LieType.exceptional(algebra)
    records = []
    seen = set()
    table = DEFECTIVE[algebra]
    for entry in raw["orbits"]:
        if not isinstance(entry, dict) or "label" not in entry or "marks" not in entry:
            raise _fail(algebra, None, f"schema violation in record {entry!r}")
        label = entry["label"]
        marks = tuple(entry["marks"])
        if label in seen:
            raise _fail(algebra, label, "duplicate label")
        seen.add(label)
        if len(marks) != lt.rank or any(m not in (0, 1, 2) for m in marks):
            raise _fail(algebra, label, f"bad marks {list(marks)}")
        if (label == "0") != (not any(marks)):
            raise _fail(algebra, label, "only the zero orbit has all marks zero")
        spherical = _height(lt, marks) <= 3
        if "spherical" in entry and bool(entry["spherical"]) != spherical:
            raise _fail(algebra, label, "spherical flag disagrees with height <= 3")
        dim = orbit_dim_from_marks(lt, marks)
        row = tilde = None
        black: tuple[int, ...] = ()
        arcs: tuple[tuple[int, int], ...] = ()
        if "defective" in entry:
            d = entry["defective"]
            try:
                row = DefectiveRow(int(d["dim"]), int(d["r"]), int(d["c"]), parse_reductive(d["sStar"]))
            except (KeyError, TypeError, ValueError) as exc:
                raise _fail(algebra, label, f"bad defective row {d!r}") from exc
            if label not in table:
                raise _fail(algebra, label, "marked defective but absent from the defective table")
            t_dim, t_r, t_c, t_s, t_tilde, t_black, t_arcs = table[label]
            if (row.dim, row.r, row.c, row.s_star) != (t_dim, t_r, t_c, parse_reductive(t_s)):
                raise _fail(algebra, label, f"defective row {d} differs from the table")
            if row.dim != dim:
                raise _fail(algebra, label, f"table dim {row.dim} but marks give {dim}")
            if row.s_star.rank != lt.rank - row.r:
                raise _fail(algebra, label, "rank of generic stabilizer is not rk g - r")
            tilde = entry.get("tilde")
            if tilde != t_tilde:
                raise _fail(algebra, label, f"tilde {tilde!r} differs from {t_tilde!r}")
            emb = entry.get("embedding", {})
            black = tuple(emb.get("black", ()))
            arcs = tuple(tuple(a) for a in emb.get("arcs", ()))
            if black != t_black or arcs != t_arcs:
                raise _fail(algebra, label, "embedding differs from the table")
        elif label in table:
            raise _fail(algebra, label, "defective orbit lacks its defective row")
        records.append(ExceptionalRecord(algebra, label, marks, spherical, row, tilde, black, arcs))
    if len(records) != ORBIT_COUNTS[algebra]:
        raise _fail(algebra, None, f"expected {ORBIT_COUNTS[algebra]} orbits, found {len(records)}")
    labels = {r.label for r in records}
    for r in records:
        if r.tilde is not None and r.tilde not in labels:
            raise _fail(algebra, r.label, f"unknown tilde label {r.tilde!r}")
    return records


def load_exceptional(algebra: str) -> list[ExceptionalRecord]:
    """Validated records for one exceptional algebra, in file order (by dimension)."""
    if algebra not in ORBIT_COUNTS:
        raise DataLoadError(f"no data for {algebra!r}")
    return list(_load_cached(algebra, str(data_dir())))


def record(algebra: str, label: str) -> ExceptionalRecord:
    for r in load_exceptional(algebra):
        if r.label == label:
            return r
    raise KeyError(f"{algebra} has no orbit labelled {label!r}")


@dataclass(frozen=True)
class Table1Check:
    algebra: str
    label: str
    ok: bool
    detail: str


def validate_against_table1() -> list[Table1Check]:
    """Recompute every defective row: dim from marks, defect = 2c + r, rank of the stabilizer."""
    out = []
    for algebra, rows in DEFECTIVE.items():
        lt = LieType.exceptional(algebra)
        for label, (dim, r, c, s, *_rest) in rows.items():
            problems = []
            try:
                rec = record(algebra, label)
            except (KeyError, DataLoadError) as exc:
                out.append(Table1Check(algebra, label, False, str(exc)))
                continue
            got = orbit_dim_from_marks(lt, rec.marks)
            if got != dim:
                problems.append(f"dim {got} != {dim}")
            s_star = parse_reductive(s)
            if s_star.rank != lt.rank - r:
                problems.append(f"rk s* {s_star.rank} != {lt.rank} - {r}")
            two_c_r = 2 * dim - _dim(lt) + s_star.dim
            if two_c_r != 2 * c + r:
                problems.append(f"2dimO - dim g + dim s* = {two_c_r} != 2c + r = {2 * c + r}")
            detail = "; ".join(problems) or f"dim {dim}, r {r}, c {c}, s* {s_star}, defect {2 * c + r}"
            out.append(Table1Check(algebra, label, not problems, detail))
    return out


def _dim(lt: LieType) -> int:
    from .rootsys import dim_algebra

    return dim_algebra(lt)


def non_defective_complexity(algebra: str, label: str) -> int:
    lt = LieType.exceptional(algebra)
    return orbit_dim_from_marks(lt, record(algebra, label).marks) - dim_borel(lt)


# --- regeneration -----------------------------------------------------------------


def build_payload(algebra: str) -> dict:
    """Fresh data for one algebra from the characteristic search and Bala-Carter induction."""
    from .bala_carter import bala_carter_table
    from .oracle import enumerate_characteristics

    lt = LieType.exceptional(algebra)
    table = bala_carter_table(algebra)
    found = set(enumerate_characteristics(lt))
    if {m for _, m, _ in table} != found:
        raise DataLoadError(f"{algebra}: Bala-Carter marks and characteristic search disagree")
    orbits = []
    for label, marks, _dim in table:
        entry: dict = {"label": label, "marks": list(marks), "spherical": _height(lt, marks) <= 3}
        if label in DEFECTIVE[algebra]:
            dim, r, c, s, tilde, black, arcs = DEFECTIVE[algebra][label]
            entry["defective"] = {"dim": dim, "r": r, "c": c, "sStar": s}
            entry["tilde"] = tilde
            entry["embedding"] = {"black": list(black), "arcs": [list(a) for a in arcs]}
        orbits.append(entry)
    return {"schema_version": SCHEMA_VERSION, "algebra": algebra, "orbits": orbits}


def dump_payload(payload: dict) -> str:
    """One orbit per line, stable and diff-friendly."""
    lines = ["{", f'  "schema_version": {payload["schema_version"]},', f'  "algebra": "{payload["algebra"]}",', '  "orbits": [']
    body = [f"    {json.dumps(o, ensure_ascii=True)}" for o in payload["orbits"]]
    lines.append(",\n".join(body))
    lines += ["  ]", "}"]
    return "\n".join(lines) + "\n"


def regenerate(directory: Path | None = None) -> list[Path]:
    directory = Path(directory) if directory else Path(__file__).resolve().parent / "data"
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for algebra in ORBIT_COUNTS:
        path = directory / f"{algebra}.json"
        path.write_text(dump_payload(build_payload(algebra)))
        written.append(path)
    _load_cached.cache_clear()
    return written


if __name__ == "__main__":
    for p in regenerate():
        print(p)
