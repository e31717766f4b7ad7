"""Formal reductive Lie algebras: a multiset of simple factors plus a central torus."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass

from .errors import ParseError
from .rootsys import simple_dim

_ORDER = {"E8": 0, "E7": 1, "E6": 2, "F4": 3, "G2": 4, "D": 5, "C": 6, "B": 7, "A": 8}


def _normalize_factor(series: str, rank: int) -> tuple[list[tuple[str, int]], int]:
    """Rewrite small classical members into canonical form; returns (factors, extra torus)."""
    if series in ("E6", "E7", "E8", "F4", "G2"):
        return [(series, rank)], 0
    if rank <= 0:
        return [], 0
    if series == "A":
        return [("A", rank)], 0
    if series == "B":
        return ([("A", 1)], 0) if rank == 1 else ([("B", rank)], 0)
    if series == "C":
        if rank == 1:
            return [("A", 1)], 0
        if rank == 2:
            return [("B", 2)], 0
        return [("C", rank)], 0
    if series == "D":
        if rank == 1:
            return [], 1
        if rank == 2:
            return [("A", 1), ("A", 1)], 0
        if rank == 3:
            return [("A", 3)], 0
        return [("D", rank)], 0
    raise ValueError(f"unknown series {series!r}")


def _key(f: tuple[str, int]):
    return (_ORDER[f[0]], -f[1])


@dataclass(frozen=True)
class ReductiveType:
    factors: tuple[tuple[str, int], ...] = ()
    torus: int = 0

    def __post_init__(self) -> None:
        out: list[tuple[str, int]] = []
        torus = self.torus
        for s, r in self.factors:
            fs, t = _normalize_factor(s, r)
            out += fs
            torus += t
        if torus < 0:
            raise ValueError("negative torus dimension")
        object.__setattr__(self, "factors", tuple(sorted(out, key=_key)))
        object.__setattr__(self, "torus", torus)

    # constructors
    @classmethod
    def zero(cls) -> "ReductiveType":
        return cls()

    @classmethod
    def simple(cls, series: str, rank: int) -> "ReductiveType":
        return cls(((series, rank),))

    @classmethod
    def gl(cls, k: int) -> "ReductiveType":
        if k <= 0:
            return cls()
        return cls((("A", k - 1),), 1)

    @classmethod
    def sl(cls, k: int) -> "ReductiveType":
        return cls((("A", k - 1),)) if k >= 2 else cls()

    @classmethod
    def so(cls, k: int) -> "ReductiveType":
        if k <= 1:
            return cls()
        return cls((("D", k // 2),)) if k % 2 == 0 else cls((("B", (k - 1) // 2),))

    @classmethod
    def sp(cls, k: int) -> "ReductiveType":
        if k % 2:
            raise ValueError("sp needs an even size")
        return cls((("C", k // 2),))

    @classmethod
    def t(cls, k: int) -> "ReductiveType":
        return cls((), k)

    def __add__(self, other: "ReductiveType") -> "ReductiveType":
        return ReductiveType(self.factors + other.factors, self.torus + other.torus)

    def times(self, k: int) -> "ReductiveType":
        return ReductiveType(self.factors * k, self.torus * k)

    @property
    def dim(self) -> int:
        return sum(simple_dim(s, r) for s, r in self.factors) + self.torus

    @property
    def rank(self) -> int:
        return sum(r for _, r in self.factors) + self.torus

    @property
    def semisimple(self) -> "ReductiveType":
        return ReductiveType(self.factors, 0)

    @property
    def is_zero(self) -> bool:
        return not self.factors and self.torus == 0

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        counts = Counter(self.factors)
        for f in sorted(counts, key=_key):
            name = f[0] if f[0] in _ORDER and len(f[0]) == 2 else f"{f[0]}{f[1]}"
            parts.append(name if counts[f] == 1 else f"{counts[f]}{name}")
        if self.torus:
            parts.append(f"t{self.torus}")
        return "+".join(parts)

    def to_json(self) -> dict:
        return {"simpleFactors": [[s, r] for s, r in self.factors], "torusDim": self.torus}

    @classmethod
    def from_json(cls, data: dict) -> "ReductiveType":
        return cls(tuple((s, int(r)) for s, r in data["simpleFactors"]), int(data["torusDim"]))


_TERM = re.compile(r"^(\d*)\(?(E6|E7|E8|F4|G2|[ABCD]\d+|t\d+)\)?(?:\^(\d+))?$")


def parse_reductive(text: str) -> ReductiveType:
    """Parse '0', 'A5', 'A3+t1', 'D4+A1', '3A1', '(A1)^3', 't2'."""
    s = text.replace(" ", "")
    if s in ("0", ""):
        return ReductiveType()
    factors: list[tuple[str, int]] = []
    torus = 0
    for term in s.split("+"):
        m = _TERM.match(term)
        if not m:
            raise ParseError(f"bad reductive type term {term!r}")
        mult = int(m.group(1) or 1) * int(m.group(3) or 1)
        body = m.group(2)
        if body.startswith("t"):
            torus += mult * int(body[1:])
        elif len(body) == 2 and body[0] in "EFG":
            factors += [(body, int(body[1]))] * mult
        else:
            factors += [(body[0], int(body[1:]))] * mult
    return ReductiveType(tuple(factors), torus)
