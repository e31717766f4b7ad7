"""Verification suites: exhaustive checks of the secant identities at desk scale.

Each suite takes one algebra and returns a SuiteResult; failures name the
identity that broke.  Results are deterministic: orbits are visited in
catalog order and any randomness (oracle suites) uses a fixed seed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .errors import DataIntegrityError, NilsecError, UndefinedClassError
from .exceptional_data import DEFECTIVE, validate_against_table1
from .orbits import closure_leq, dim_orbit, enumerate_orbits, partition_dim, weighted_dynkin
from .rootsys import LieType, orbit_dim_from_marks
from .secant import (
    SecantReport,
    achieved_ranks,
    build_secant_report,
    forbidden_ranks,
    maximal_defective,
    rank_complexity,
    upsilon_classes,
    upsilon_isomorphism,
)


@dataclass
class SuiteResult:
    suite: str
    algebra: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    note: str = ""

    @property
    def ok(self) -> bool:
        return not self.failures

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = f" ({self.note})" if self.note else ""
        return f"{status} {self.suite:<11} {self.algebra:<6} {self.checked} checks{extra}"


def _nonzero(t: LieType):
    return [o for o in enumerate_orbits(t) if not o.is_zero]


def suite_dims(t: LieType) -> SuiteResult:
    res = SuiteResult("dims", t.name)
    for o in enumerate_orbits(t):
        res.checked += 1
        try:
            d = dim_orbit(o)
        except DataIntegrityError as exc:
            res.failures.append(str(exc))
            continue
        if not t.is_classical and o.label in DEFECTIVE[t.series] and DEFECTIVE[t.series][o.label][0] != d:
            res.failures.append(f"{o}: table dim {DEFECTIVE[t.series][o.label][0]} != {d}")
    return res


def suite_identities(t: LieType) -> SuiteResult:
    res = SuiteResult("identities", t.name)
    for o in _nonzero(t):
        res.checked += 1
        try:
            rep = build_secant_report(o)
        except DataIntegrityError as exc:
            res.failures.append(str(exc))
            continue
        if SecantReport.from_json(rep.to_json()) != rep:
            res.failures.append(f"{o}: JSON round trip")
    return res


def suite_richardson(t: LieType) -> SuiteResult:
    res = SuiteResult("richardson", t.name)
    for o in _nonzero(t):
        rep = build_secant_report(o)
        res.checked += 1
        til = rep.tilde
        d = partition_dim(til) if t.is_classical else orbit_dim_from_marks(t, weighted_dynkin(til))
        if d != rep.dim_cs - rep.r:
            res.failures.append(f"{o}: dim {til} = {d} != dim CS - r = {rep.dim_cs - rep.r}")
        if t.is_classical and not closure_leq(o, til):
            res.failures.append(f"{o}: not in the closure of {til}")
    return res


def parity_expected(t: LieType, defective: bool) -> bool | None:
    """Whether c must be even (None when no parity constraint applies)."""
    if t.series == "A":
        return None
    if t.series == "D" and t.rank % 2:
        return defective
    return True


def suite_parity(t: LieType) -> SuiteResult:
    res = SuiteResult("parity", t.name)
    for o in _nonzero(t):
        r, c = rank_complexity(o)
        want = parity_expected(t, r < t.rank)
        if want is None:
            continue
        res.checked += 1
        if (c % 2 == 0) != want:
            res.failures.append(f"{o}: c = {c}, expected {'even' if want else 'odd'}")
    if t.series == "A":
        res.note = "no parity rule for sl"
    return res


def suite_ranks(t: LieType) -> SuiteResult:
    res = SuiteResult("ranks", t.name)
    achieved = achieved_ranks(t)
    res.checked = 1
    if not t.is_classical:
        res.note = f"achieved {sorted(achieved)}"
        return res
    forbidden = forbidden_ranks(t)
    missing = set(range(1, t.rank + 1)) - achieved
    if missing != forbidden:
        res.failures.append(f"ranks never achieved {sorted(missing)} != forbidden {sorted(forbidden)}")
    res.note = f"forbidden {{{', '.join(map(str, sorted(forbidden)))}}}"
    return res


def suite_iso(t: LieType) -> SuiteResult:
    res = SuiteResult("iso", t.name)
    if not t.is_classical:
        res.note = "classical only"
        return res
    for cls in upsilon_classes(t):
        if cls.variant != "J":
            continue
        res.checked += 1
        iso = upsilon_isomorphism(t, cls)
        for flag, what in ((iso.bijective, "bijective"), (iso.order_preserving, "order preserving"),
                           (iso.codimension_preserving, "codimension preserving")):
            if not flag:
                res.failures.append(f"{cls} -> {iso.target_series}({iso.target_size}): not {what}")
    return res


def suite_table1(t: LieType | None = None) -> SuiteResult:
    res = SuiteResult("table1", t.name if t else "all")
    if t is not None and t.is_classical:
        res.note = "exceptional only"
        return res
    for chk in validate_against_table1():
        if t is not None and chk.algebra != t.series:
            continue
        res.checked += 1
        if not chk.ok:
            res.failures.append(f"{chk.algebra} {chk.label}: {chk.detail}")
    return res


def suite_maximal(t: LieType) -> SuiteResult:
    """Maxima of the defective subposet against the closed forms (classical)."""
    res = SuiteResult("maximal", t.name)
    if not t.is_classical:
        res.note = "closure order not available"
        return res
    d = [o for o in _nonzero(t) if rank_complexity(o)[0] < t.rank]
    mx = {o for o in d if not any(o != p and closure_leq(o, p) for p in d)}
    res.checked = 1
    if mx != set(maximal_defective(t)):
        res.failures.append(f"maxima {sorted(map(str, mx))} != {sorted(map(str, maximal_defective(t)))}")
    return res


def suite_stabilizer(t: LieType) -> SuiteResult:
    """F_p oracle: dim and rank of g^x & g^y for a generic pair on the orbit."""
    from . import oracle
    from .secant import generic_stabilizer

    res = SuiteResult("stabilizer", t.name)
    for o in _nonzero(t):
        res.checked += 1
        s = generic_stabilizer(o)
        got = oracle.generic_stabilizer(t, weighted_dynkin(o), oracle.DEFAULT_SEED)
        if (got.dim, got.rank) != (s.dim, s.rank):
            res.failures.append(f"{o}: oracle (dim {got.dim}, rk {got.rank}) != s* {s}")
    return res


SUITES: dict[str, Callable[[LieType], SuiteResult]] = {
    "dims": suite_dims,
    "identities": suite_identities,
    "richardson": suite_richardson,
    "parity": suite_parity,
    "ranks": suite_ranks,
    "iso": suite_iso,
    "table1": suite_table1,
    "maximal": suite_maximal,
    "stabilizer": suite_stabilizer,
}
DEFAULT_SUITES = ("dims", "identities", "richardson", "parity", "ranks", "iso", "table1", "maximal")


def desk_range() -> list[LieType]:
    """sl_N (4 <= N <= 9), sp_2n (2 <= n <= 8), so_N (7 <= N <= 17), and the exceptional algebras."""
    out = [LieType("A", N - 1) for N in range(4, 10)]
    out += [LieType("C", n) for n in range(2, 9)]
    out += [LieType("B", (N - 1) // 2) if N % 2 else LieType("D", N // 2) for N in range(7, 18)]
    out += [LieType.exceptional(x) for x in ("E6", "E7", "E8", "F4", "G2")]
    return out


def run_suites(types: list[LieType], suites: list[str]) -> list[SuiteResult]:
    results = []
    for name in suites:
        if name not in SUITES:
            raise KeyError(f"unknown suite {name!r}")
        for t in types:
            try:
                results.append(SUITES[name](t))
            except (NilsecError, UndefinedClassError) as exc:
                results.append(SuiteResult(name, t.name, 1, [f"{type(exc).__name__}: {exc}"]))
    return results
