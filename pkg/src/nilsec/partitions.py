"""Partitions labelling nilpotent orbits of the classical algebras."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate
from typing import Iterable, Iterator

from .errors import ParseError, PartitionSizeError
from .rootsys import LieType


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        """Build from parts in any order (zeros dropped)."""
        return cls(sorted((p for p in parts if p), reverse=True))

    @property
    def total(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def multiplicities(self) -> Counter:
        return Counter(self.parts)

    def __str__(self) -> str:
        return format_partition(self)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"


def format_partition(p: Partition) -> str:
    """Exponent form, e.g. (3,2,2,1,1,1) -> '3,2^2,1^3'."""
    out = []
    for part, mult in sorted(Counter(p.parts).items(), reverse=True):
        out.append(str(part) if mult == 1 else f"{part}^{mult}")
    return ",".join(out)


_TOKEN = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")


def parse_partition(text: str) -> Partition:
    """Accepts '3,2,2,1', '2^4,1^3', optionally wrapped in brackets or parentheses."""
    s = text.strip()
    if s[:1] in "[(" and s[-1:] in "])":
        s = s[1:-1]
    if not s.strip():
        return Partition(())
    parts: list[int] = []
    for tok in s.split(","):
        m = _TOKEN.match(tok)
        if not m:
            raise ParseError(f"bad partition token {tok!r} in {text!r}")
        part = int(m.group(1))
        mult = int(m.group(2)) if m.group(2) is not None else 1
        if part <= 0:
            raise ParseError(f"parts must be positive in {text!r}")
        parts.extend([part] * mult)
    return Partition.from_parts(parts)


def transpose(p: Partition) -> Partition:
    if not p.parts:
        return Partition(())
    return Partition(tuple(sum(1 for x in p.parts if x > i) for i in range(p.parts[0])))


def _natural_size(lie_type: LieType) -> int:
    return lie_type.N


def is_admissible(lie_type: LieType, p: Partition) -> bool:
    if p.total != _natural_size(lie_type):
        raise PartitionSizeError(f"partition of {p.total} for {lie_type.name} (needs {lie_type.N})")
    return admissible_for_series(lie_type.series, p)


def admissible_for_series(series: str, p: Partition) -> bool:
    mult = p.multiplicities()
    if series == "A":
        return True
    if series == "C":
        return all(m % 2 == 0 for part, m in mult.items() if part % 2)
    if series in ("B", "D"):
        return all(m % 2 == 0 for part, m in mult.items() if part % 2 == 0)
    raise ValueError(series)


def is_very_even(p: Partition) -> bool:
    return all(x % 2 == 0 for x in p.parts)


def _check_totals(a: Partition, b: Partition) -> None:
    if a.total != b.total:
        raise PartitionSizeError(f"cannot compare partitions of {a.total} and {b.total}")


def dominance_leq(a: Partition, b: Partition) -> bool:
    _check_totals(a, b)
    sa, sb = list(accumulate(a.parts)), list(accumulate(b.parts))
    k = max(len(sa), len(sb))
    sa += [a.total] * (k - len(sa))
    sb += [b.total] * (k - len(sb))
    return all(x <= y for x, y in zip(sa, sb))


def erase_column(p: Partition) -> Partition:
    """(l1, ..., lp) -> (l1 - 1, ..., lp - 1), dropping zeros."""
    return Partition(tuple(x - 1 for x in p.parts if x > 1))


def matrix_rank(lie_type: LieType, p: Partition) -> int:
    """Rank of a nilpotent matrix with Jordan type p."""
    if p.total != lie_type.N:
        raise PartitionSizeError(f"partition of {p.total} for {lie_type.name}")
    return p.total - p.length


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n in reverse lexicographic order."""
    for parts in _partitions(n, n if max_part is None else max_part):
        yield Partition(parts)


@lru_cache(maxsize=None)
def _partitions(n: int, max_part: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def admissible_partitions(series: str, n: int) -> list[Partition]:
    """Partitions of n allowed for the series (C: odd parts paired; B, D: even parts paired)."""
    return [p for p in partitions_of(n) if admissible_for_series(series, p)]
