"""Bala-Carter names for the orbits of the exceptional algebras.

Every nilpotent orbit meets a Levi subalgebra l in a distinguished orbit,
uniquely up to conjugacy; its label is the type of l decorated with the
name of the distinguished orbit.  This module runs over all subsets of
simple roots, sums the characteristics of distinguished orbits of the
factors, conjugates the result into the dominant chamber and records the
label against the resulting marks.  Together with
``oracle.enumerate_characteristics`` it regenerates the bundled data.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from fractions import Fraction
from itertools import combinations, product

from .orbits import classical_marks
from .partitions import partitions_of
from .rootsys import LieType, _solve, grading, root_system_data, simple_dim, subdiagram_components

DISTINGUISHED_NAMES = {
    "E6": ["E6", "E6(a1)", "E6(a3)"],
    "E7": ["E7", "E7(a1)", "E7(a2)", "E7(a3)", "E7(a4)", "E7(a5)"],
    "E8": ["E8", "E8(a1)", "E8(a2)", "E8(a3)", "E8(a4)", "E8(b4)", "E8(a5)", "E8(b5)", "E8(a6)", "E8(b6)", "E8(a7)"],
    "F4": ["F4", "F4(a1)", "F4(a2)", "F4(a3)"],
    "G2": ["G2", "G2(a1)"],
}

_LETTER_ORDER = {"E": 0, "F": 0, "G": 0, "D": 1, "C": 2, "B": 3, "A": 4}


def _dim_from_marks(series: str, rank: int, marks) -> int:
    g = grading(series, rank, marks)
    return simple_dim(series, rank) - g[0] - g.get(1, 0)


def _is_distinguished(series: str, rank: int, marks) -> bool:
    g = grading(series, rank, marks)
    return g.get(1, 0) == 0 and g[0] == g.get(2, 0)


def distinguished_orbits(series: str, rank: int) -> list[tuple[str, tuple[int, ...]]]:
    """(name, marks) of distinguished orbits, largest first."""
    if series == "A":
        return [(f"A{rank}", (2,) * rank)]
    if series in ("B", "C", "D"):
        N = 2 * rank + 1 if series == "B" else 2 * rank
        want_odd = series != "C"
        found = []
        for p in partitions_of(N):
            if len(set(p.parts)) != len(p.parts) or any((x % 2 == 1) != want_odd for x in p.parts):
                continue
            marks = classical_marks(series, rank, p)
            found.append((_dim_from_marks(series, rank, marks), marks))
        found.sort(reverse=True)
        return [(f"{series}{rank}" + (f"(a{i})" if i else ""), m) for i, (_, m) in enumerate(found)]
    from .oracle import enumerate_characteristics

    lt = LieType.exceptional(series)
    found = sorted(
        ((_dim_from_marks(series, rank, m), m) for m in enumerate_characteristics(lt) if any(m) and _is_distinguished(series, rank, m)),
        reverse=True,
    )
    names = DISTINGUISHED_NAMES[series]
    dims = [d for d, _ in found]
    if len(found) != len(names) or len(set(dims)) != len(dims):
        raise ValueError(f"unexpected distinguished orbits in {series}: dims {dims}")
    return [(n, m) for n, (_, m) in zip(names, found)]


def _dominant(values: list[Fraction], cartan) -> tuple[int, ...]:
    """Weyl-conjugate an element of the Cartan (given by alpha_i-values) into the dominant chamber."""
    v = list(values)
    n = len(v)
    while True:
        j = next((k for k in range(n) if v[k] < 0), None)
        if j is None:
            break
        vj = v[j]
        for i in range(n):
            v[i] -= vj * cartan[j][i]
    assert all(x.denominator == 1 for x in v)
    return tuple(int(x) for x in v)


def _factor_label(comp, name: str) -> str:
    return ("~" if comp.short else "") + name


def format_label(factors: list[tuple[str, str, int, bool]]) -> str:
    """factors: (letter, full name, rank, short).  Sorted E/F/G > D > C > B > A, rank descending."""
    if not factors:
        return "0"
    counts = Counter(factors)
    keys = sorted(counts, key=lambda f: (_LETTER_ORDER[f[0]], -f[2], f[3], f[1]))
    parts = []
    for f in keys:
        c = counts[f]
        text = ("~" if f[3] else "") + f[1]
        parts.append(text if c == 1 else f"{c}{text}")
    return "+".join(parts)


def bala_carter_table(series: str) -> list[tuple[str, tuple[int, ...], int]]:
    """(label, marks, dim) for every orbit of the exceptional algebra, sorted by dim then label."""
    lt = LieType.exceptional(series)
    n = lt.rank
    rs = root_system_data(series, n)
    cartan = rs.cartan_matrix
    labels: dict[tuple[int, ...], set[str]] = defaultdict(set)
    dist_cache: dict[tuple[str, int], list] = {}
    for size in range(0, n + 1):
        for J in combinations(range(1, n + 1), size):
            comps = subdiagram_components(series, n, J)
            choices = []
            for c in comps:
                key = (c.series, c.rank)
                if key not in dist_cache:
                    dist_cache[key] = distinguished_orbits(*key)
                choices.append(dist_cache[key])
            for pick in product(*choices):
                target = {}
                factors = []
                for c, (name, marks) in zip(comps, pick):
                    for node, m in zip(c.nodes, marks):
                        target[node] = m
                    letter = c.series[0]
                    factors.append((letter, name, c.rank, c.short))
                Jl = list(J)
                rows = [[Fraction(cartan[k - 1][j - 1]) for k in Jl] + [Fraction(target[j])] for j in Jl]
                coeff = _solve(rows, len(Jl)) if Jl else []
                values = [sum((c * cartan[k - 1][i] for c, k in zip(coeff, Jl)), Fraction(0)) for i in range(n)]
                labels[_dominant(values, cartan)].add(format_label(factors))
    by_label: dict[str, list[tuple[int, ...]]] = defaultdict(list)
    for marks, names in labels.items():
        if len(names) != 1:
            raise ValueError(f"{series}: marks {marks} received several labels {sorted(names)}")
        by_label[next(iter(names))].append(marks)
    table = []
    for name, marks_list in by_label.items():
        if len(marks_list) == 1:
            m = marks_list[0]
            table.append((name, m, _dim_from_marks(series, n, m)))
            continue
        if len(marks_list) != 2:
            raise ValueError(f"{series}: label {name} on {len(marks_list)} orbits")
        ranked = sorted(marks_list, key=lambda m: _dim_from_marks(series, n, m))
        dims = [_dim_from_marks(series, n, m) for m in ranked]
        if dims[0] == dims[1]:
            raise ValueError(f"{series}: cannot order the two orbits labelled {name}")
        table.append((f"({name})''", ranked[0], dims[0]))
        table.append((f"({name})'", ranked[1], dims[1]))
    table.sort(key=lambda r: (r[2], r[0]))
    return table
