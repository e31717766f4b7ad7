"""Catalog of nilpotent orbits: labels, dimensions, weighted Dynkin diagrams, closure order.

Classical orbits are labelled by partitions of N (the zero orbit is the
partition (1^N)); very even partitions in type D carry a tag "I" or "II".
Tag I is the orbit whose weighted Dynkin diagram comes out of the
standard recipe below (for (2^2m) its mark 2 sits on the last node);
tag II swaps the last two marks.  Exceptional orbits are labelled by
their Bala-Carter names from the bundled data, with "~" for a short-root
factor ("~A1" for A1-tilde) and "0" for the zero orbit.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .errors import DataIntegrityError, ParseError, UnsupportedOperationError
from .partitions import (
    Partition,
    admissible_partitions,
    dominance_leq,
    format_partition,
    is_admissible,
    is_very_even,
    parse_partition,
    transpose,
)
from .rootsys import EXCEPTIONAL_RANKS, LieType, build_root_system, dim_algebra, orbit_dim_from_marks


@dataclass(frozen=True)
class Orbit:
    algebra: LieType
    partition: Optional[Partition] = None
    tag: Optional[str] = None
    label: Optional[str] = None

    def __post_init__(self) -> None:
        t = self.algebra
        if t.is_classical:
            if self.partition is None or self.label is not None:
                raise ValueError(f"classical orbit of {t.name} needs a partition")
            if not is_admissible(t, self.partition):
                raise ValueError(f"{format_partition(self.partition)} is not admissible for {t.name}")
            needs_tag = t.series == "D" and is_very_even(self.partition)
            if needs_tag and self.tag not in ("I", "II"):
                raise ValueError(f"very even partition {format_partition(self.partition)} needs tag I or II")
            if not needs_tag and self.tag is not None:
                raise ValueError("only very even partitions in type D carry a tag")
        else:
            if self.label is None or self.partition is not None or self.tag is not None:
                raise ValueError(f"exceptional orbit of {t.name} needs a label")
            from .exceptional_data import record

            record(t.series, self.label)

    @property
    def is_zero(self) -> bool:
        if self.algebra.is_classical:
            return all(x == 1 for x in self.partition.parts)
        return self.label == "0"

    @property
    def name(self) -> str:
        """Label without the algebra prefix: '3,2^2', '2^4:I', '(3A1)'''."""
        if self.label is not None:
            return self.label
        s = format_partition(self.partition)
        return f"{s}:{self.tag}" if self.tag else s

    def __str__(self) -> str:
        if self.label is not None:
            return f"{self.algebra.name}:{self.label}"
        s = f"{self.algebra.name}:[{format_partition(self.partition)}]"
        return f"{s}:{self.tag}" if self.tag else s


# --- parsing ----------------------------------------------------------------------

_ALG = re.compile(r"^(sl|so|sp)(\d+)$|^([ABCD])(\d+)$|^(E6|E7|E8|F4|G2)$")


def parse_algebra(text: str) -> LieType:
    """'sl7', 'so11', 'sp8', 'E7', or Cartan names 'A6', 'B5', 'C4', 'D4'."""
    s = text.strip()
    m = _ALG.match(s)
    if not m:
        raise ParseError(f"unknown algebra {text!r}")
    try:
        if m.group(1):
            kind, N = m.group(1), int(m.group(2))
            if kind == "sl":
                return LieType("A", N - 1)
            if kind == "sp":
                if N % 2:
                    raise ParseError(f"sp needs an even size, got {N}")
                return LieType("C", N // 2)
            return LieType("B", (N - 1) // 2) if N % 2 else LieType("D", N // 2)
        if m.group(3):
            return LieType(m.group(3), int(m.group(4)))
        return LieType.exceptional(m.group(5))
    except ValueError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(str(exc)) from exc


def parse_orbit(text: str) -> Orbit:
    """'sl7:[3,2,2]', 'so8:[2^4]:I', 'E7:A2', 'F4:~A1', "E7:(3A1)''"."""
    s = text.strip()
    if ":" not in s:
        raise ParseError(f"orbit must look like ALGEBRA:LABEL, got {text!r}")
    alg_text, rest = s.split(":", 1)
    t = parse_algebra(alg_text)
    try:
        if t.is_classical:
            tag = None
            m = re.match(r"^\s*([\[(].*[\])])\s*(?::\s*(I|II))?\s*$", rest)
            if m:
                body, tag = m.group(1), m.group(2)
            else:
                body = rest
                if re.search(r":\s*(I|II)\s*$", body):
                    body, tag = body.rsplit(":", 1)
                    tag = tag.strip()
            return Orbit(t, partition=parse_partition(body), tag=tag)
        label = rest.strip().replace("Ã", "~")
        return Orbit(t, label=label)
    except ParseError:
        raise
    except (ValueError, KeyError) as exc:
        raise ParseError(f"{text!r}: {exc}") from exc


# --- enumeration ------------------------------------------------------------------


def enumerate_orbits(lie_type: LieType) -> list[Orbit]:
    """All nilpotent orbits including zero, sorted by dimension and then label."""
    return list(_enumerate(lie_type))


@lru_cache(maxsize=None)
def _enumerate(lie_type: LieType) -> tuple[Orbit, ...]:
    if not lie_type.is_classical:
        from .exceptional_data import load_exceptional

        return tuple(Orbit(lie_type, label=r.label) for r in load_exceptional(lie_type.series))
    out = []
    for p in admissible_partitions(lie_type.series, lie_type.N):
        if lie_type.series == "D" and is_very_even(p):
            out += [Orbit(lie_type, p, "I"), Orbit(lie_type, p, "II")]
        else:
            out.append(Orbit(lie_type, p))
    out.sort(key=lambda o: (partition_dim(o), tuple(-x for x in o.partition.parts), o.tag or ""))
    return tuple(out)


def zero_orbit(lie_type: LieType) -> Orbit:
    if lie_type.is_classical:
        return Orbit(lie_type, Partition((1,) * lie_type.N))
    return Orbit(lie_type, label="0")


# --- dimensions and marks ---------------------------------------------------------


def partition_dim(o: Orbit) -> int:
    """Dimension from the centralizer formulas in terms of the transposed partition."""
    t = o.algebra
    lt = transpose(o.partition)
    sq = sum(x * x for x in lt.parts)
    odd = sum(1 for x in o.partition.parts if x % 2)
    if t.series == "A":
        return t.N * t.N - sq
    if t.series == "C":
        return dim_algebra(t) - (sq + odd) // 2
    return dim_algebra(t) - (sq - odd) // 2


def weighted_dynkin(o: Orbit) -> tuple[int, ...]:
    """Marks alpha_i(h) of the dominant characteristic."""
    t = o.algebra
    if not t.is_classical:
        from .exceptional_data import record

        return record(t.series, o.label).marks
    return classical_marks(t.series, t.rank, o.partition, o.tag)


def classical_marks(series: str, rank: int, p: Partition, tag: Optional[str] = None) -> tuple[int, ...]:
    h = sorted((x - 1 - 2 * k for x in p.parts for k in range(x)), reverse=True)
    n = rank
    if series == "A":
        return tuple(h[i] - h[i + 1] for i in range(n))
    half = h[:n]
    if series == "B":
        assert h[n] == 0
    marks = [half[i] - half[i + 1] for i in range(n - 1)]
    if series == "B":
        marks.append(half[n - 1])
    elif series == "C":
        marks.append(2 * half[n - 1])
    else:
        marks.append(half[n - 2] + half[n - 1])
        if tag == "II":
            marks[-1], marks[-2] = marks[-2], marks[-1]
    return tuple(marks)


def dim_orbit(o: Orbit) -> int:
    t = o.algebra
    by_marks = orbit_dim_from_marks(t, weighted_dynkin(o))
    if t.is_classical:
        by_formula = partition_dim(o)
        if by_formula != by_marks:
            raise DataIntegrityError(
                f"dim mismatch for {o}: partition formula {by_formula}, root count {by_marks}"
            )
    return by_marks


def height(o: Orbit) -> int:
    """theta(h) for the highest root theta: the largest degree of the grading."""
    rs = build_root_system(o.algebra)
    return sum(c * m for c, m in zip(rs.highest_root, weighted_dynkin(o)))


def is_spherical(o: Orbit) -> bool:
    t = o.algebra
    if not t.is_classical:
        from .exceptional_data import record

        return record(t.series, o.label).spherical
    parts = o.partition.parts
    if t.series in ("A", "C"):
        return parts[0] <= 2
    second = parts[1] if len(parts) > 1 else 0
    return parts[0] + second <= 5


# --- closure order ----------------------------------------------------------------


def _require_classical(o: Orbit) -> None:
    if not o.algebra.is_classical:
        raise UnsupportedOperationError("closure order is only implemented for classical algebras")


def closure_leq(a: Orbit, b: Orbit) -> bool:
    """a is contained in the closure of b."""
    _require_classical(a)
    _require_classical(b)
    if a.algebra != b.algebra:
        raise ValueError("orbits of different algebras")
    if not dominance_leq(a.partition, b.partition):
        return False
    if a.tag is None or b.tag is None or a.tag == b.tag:
        return True
    if a.partition == b.partition:
        return False
    series, N = a.algebra.series, a.algebra.N
    return any(
        not is_very_even(v) and dominance_leq(a.partition, v) and dominance_leq(v, b.partition)
        for v in admissible_partitions(series, N)
    )


@dataclass(frozen=True)
class HasseDiagram:
    nodes: tuple[Orbit, ...]
    covers: tuple[tuple[Orbit, Orbit], ...]


def hasse(lie_type: LieType) -> HasseDiagram:
    nodes = enumerate_orbits(lie_type)
    if not lie_type.is_classical:
        raise UnsupportedOperationError("closure order is only implemented for classical algebras")
    return HasseDiagram(tuple(nodes), tuple(covers_of(nodes, closure_leq)))


def covers_of(nodes, leq) -> list[tuple]:
    """Transitive reduction of a partial order given by leq."""
    below = {i: {j for j in range(len(nodes)) if j != i and leq(nodes[j], nodes[i])} for i in range(len(nodes))}
    covers = []
    for i in range(len(nodes)):
        for j in below[i]:
            if not any(j in below[k] for k in below[i]):
                covers.append((nodes[j], nodes[i]))
    return covers


# --- landmarks --------------------------------------------------------------------


def minimal_orbit(lie_type: LieType) -> Orbit:
    t = lie_type
    if not t.is_classical:
        return Orbit(t, label="A1")
    N = t.N
    if t.series in ("A", "C"):
        return Orbit(t, Partition((2,) + (1,) * (N - 2)))
    return Orbit(t, Partition((2, 2) + (1,) * (N - 4)))


def regular_orbit(lie_type: LieType) -> Orbit:
    t = lie_type
    if not t.is_classical:
        return Orbit(t, label=t.series)
    if t.series == "D":
        return Orbit(t, Partition((t.N - 1, 1)))
    return Orbit(t, Partition((t.N,)))


MAX_SPHERICAL_EXCEPTIONAL = {"E6": "3A1", "E7": "4A1", "E8": "4A1", "F4": "A1+~A1", "G2": "~A1"}


def max_spherical(lie_type: LieType) -> Orbit:
    """The largest spherical orbit."""
    t = lie_type
    if not t.is_classical:
        return Orbit(t, label=MAX_SPHERICAL_EXCEPTIONAL[t.series])
    N = t.N
    if t.series in ("A", "C"):
        parts = (2,) * (N // 2) + (1,) * (N % 2)
    elif N % 4 == 3:
        parts = (3,) + (2,) * ((N - 3) // 2)
    elif N % 4 == 1:
        parts = (3,) + (2,) * ((N - 5) // 2) + (1, 1)
    elif N % 4 == 0:
        parts = (3,) + (2,) * ((N - 4) // 2) + (1,)
    else:
        parts = (3,) + (2,) * ((N - 6) // 2) + (1, 1, 1)
    return Orbit(t, Partition(parts))


def is_exceptional_name(name: str) -> bool:
    return name in EXCEPTIONAL_RANKS
