"""Secant invariants of nilpotent orbits.

For a nonzero orbit O in a simple algebra g, let s* be the generic
stabilizer of the diagonal action on O x O.  Then

    r(O)     = rk g - rk s*
    2c + r   = 2 dim O - dim g + dim s*
    dim CS   = dim g - dim s* = 2 dim O - 2c - r

and CS(O) is the whole algebra exactly when r(O) = rk g; otherwise the
secant defect is 2c + r.  For the classical algebras the nonzero orbits
split into classes (Max, J(j), Spherical(m)) according to the matrix rank
of e and whether e^2 = 0; s*, r and CS(O) only depend on the class.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .detvar import DetKind, dim_determinantal
from .errors import DataIntegrityError, UndefinedClassError, UnsupportedOperationError
from .orbits import (
    Orbit,
    closure_leq,
    dim_orbit,
    enumerate_orbits,
    partition_dim,
    weighted_dynkin,
)
from .partitions import Partition, admissible_for_series, dominance_leq, erase_column, matrix_rank, transpose
from .reductive import ReductiveType
from .rootsys import (
    LieType,
    build_root_system,
    characteristic_vector,
    dim_algebra,
    dim_borel,
    orthocomplement_in_cartan,
    simple_coroot_vector,
    subdiagram_components,
)

# --- classes ----------------------------------------------------------------------


@dataclass(frozen=True)
class UpsilonClass:
    variant: str  # "Max", "J" or "Spherical"
    index: Optional[int]
    algebra: LieType

    def __str__(self) -> str:
        if self.variant == "Max":
            return self.variant
        return f"{self.variant}({self.index})"

    def to_json(self) -> dict:
        return {"variant": self.variant, "index": self.index}


def classify_upsilon(o: Orbit) -> UpsilonClass:
    t = o.algebra
    if not t.is_classical:
        raise UnsupportedOperationError("rank/sphericity classes are defined for classical algebras")
    if o.is_zero:
        raise UndefinedClassError("the zero orbit has no class")
    p = o.partition
    N = t.N
    rank = matrix_rank(t, p)
    if t.series == "A":
        if p[0] >= 3:
            return UpsilonClass("Max", None, t) if 2 * rank >= N else UpsilonClass("J", rank, t)
        return UpsilonClass("Spherical", sum(1 for x in p if x == 2), t)
    if t.series == "C":
        return UpsilonClass("Max", None, t) if rank >= t.rank else UpsilonClass("J", rank, t)
    if p[0] >= 3:
        return UpsilonClass("Max", None, t) if rank >= N // 2 else UpsilonClass("J", rank // 2, t)
    return UpsilonClass("Spherical", sum(1 for x in p if x == 2) // 2, t)


def class_members(lie_type: LieType, cls: UpsilonClass) -> list[Orbit]:
    if not lie_type.is_classical:
        raise UnsupportedOperationError("rank/sphericity classes are defined for classical algebras")
    return [o for o in enumerate_orbits(lie_type) if not o.is_zero and classify_upsilon(o) == cls]


def upsilon_classes(lie_type: LieType) -> list[UpsilonClass]:
    if not lie_type.is_classical:
        raise UnsupportedOperationError("rank/sphericity classes are defined for classical algebras")
    seen = []
    for o in enumerate_orbits(lie_type):
        if not o.is_zero:
            c = classify_upsilon(o)
            if c not in seen:
                seen.append(c)
    return seen


# --- generic stabilizer, rank and complexity --------------------------------------


def generic_stabilizer(o: Orbit) -> ReductiveType:
    t = o.algebra
    if o.is_zero:
        return ReductiveType.simple(t.series, t.rank)
    if not t.is_classical:
        from .exceptional_data import record

        row = record(t.series, o.label).defective
        return row.s_star if row else ReductiveType.zero()
    cls = classify_upsilon(o)
    N = t.N
    if cls.variant == "Max":
        return ReductiveType.zero()
    k = cls.index
    if t.series == "A":
        if cls.variant == "J":
            return ReductiveType.gl(N - 2 * k)
        if 2 * k < N:
            return ReductiveType.gl(N - 2 * k) + ReductiveType.t(k - 1)
        return ReductiveType.t(k - 1)
    if t.series == "C":
        return ReductiveType.sp(2 * t.rank - 2 * k)
    if cls.variant == "J":
        return ReductiveType.so(N - 4 * k)
    return ReductiveType.sl(2).times(k) + ReductiveType.so(N - 4 * k)


def rank_complexity(o: Orbit) -> tuple[int, int]:
    """(r(O), c(O)) from the generic stabilizer."""
    t = o.algebra
    if o.is_zero:
        raise UndefinedClassError("rank and complexity are not defined for the zero orbit")
    s = generic_stabilizer(o)
    r = t.rank - s.rank
    twice = 2 * dim_orbit(o) - dim_algebra(t) + s.dim - r
    if twice % 2 or twice < 0 or r < 1:
        raise DataIntegrityError(f"2c = {twice}, r = {r} for {o}: stabilizer data inconsistent")
    return r, twice // 2


def dim_cs(o: Orbit) -> int:
    if o.is_zero:
        return 0
    return dim_algebra(o.algebra) - generic_stabilizer(o).dim


def is_defective(o: Orbit) -> bool:
    if o.is_zero:
        return False
    return rank_complexity(o)[0] < o.algebra.rank


def secant_defect(o: Orbit) -> Optional[int]:
    if not is_defective(o):
        return None
    r, c = rank_complexity(o)
    return 2 * c + r


# --- descriptors of CS(O) ---------------------------------------------------------


@dataclass(frozen=True)
class FullAlgebra:
    algebra_dim: int
    kind: str = field(default="FullAlgebra", init=False)

    @property
    def dim(self) -> int:
        return self.algebra_dim

    def params(self) -> dict:
        return {"algebraDim": self.algebra_dim}

    def __str__(self) -> str:
        return "whole algebra"


@dataclass(frozen=True)
class DetTraceless:
    r: int
    N: int
    odd_trace_eqs: tuple[int, ...] = ()
    kind: str = field(default="DetTraceless", init=False)

    @property
    def dim(self) -> int:
        return dim_determinantal(DetKind("Traceless", self.r, self.N)) - len(self.odd_trace_eqs)

    def params(self) -> dict:
        return {"r": self.r, "N": self.N, "oddTraceEqs": list(self.odd_trace_eqs)}

    def __str__(self) -> str:
        base = f"traceless {self.N}x{self.N} matrices of rank <= {self.r}"
        if self.odd_trace_eqs:
            base += " with tr(M^k) = 0 for k = " + ",".join(map(str, self.odd_trace_eqs))
        return base


@dataclass(frozen=True)
class DetSymplecticSym:
    m: int
    two_n: int
    kind: str = field(default="DetSymplecticSym", init=False)

    @property
    def dim(self) -> int:
        return dim_determinantal(DetKind("SymAsSp", self.m, self.two_n))

    def params(self) -> dict:
        return {"m": self.m, "twoN": self.two_n}

    def __str__(self) -> str:
        return f"elements of sp_{self.two_n} of rank <= {self.m} (symmetric {self.two_n}x{self.two_n} of rank <= {self.m})"


@dataclass(frozen=True)
class DetSkew:
    two_p: int
    N: int
    kind: str = field(default="DetSkew", init=False)

    @property
    def dim(self) -> int:
        return dim_determinantal(DetKind("Skew", self.two_p, self.N))

    def params(self) -> dict:
        return {"twoP": self.two_p, "N": self.N}

    def __str__(self) -> str:
        return f"skew-symmetric {self.N}x{self.N} matrices of rank <= {self.two_p}"


@dataclass(frozen=True)
class SphericalSOSlice:
    m: int
    N: int
    kind: str = field(default="SphericalSOSlice", init=False)

    @property
    def codim_in_ambient(self) -> int:
        return 3 * self.m

    @property
    def dim(self) -> int:
        return dim_determinantal(DetKind("Skew", 4 * self.m, self.N)) - self.codim_in_ambient

    def params(self) -> dict:
        return {"m": self.m, "N": self.N, "codimInAmbient": self.codim_in_ambient}

    def __str__(self) -> str:
        return f"codimension {3 * self.m} subvariety of skew-symmetric {self.N}x{self.N} matrices of rank <= {4 * self.m}"


@dataclass(frozen=True)
class E6CompleteIntersection:
    degrees: tuple[int, ...] = (5, 9)
    kind: str = field(default="E6CompleteIntersection", init=False)

    @property
    def dim(self) -> int:
        return 78 - len(self.degrees)

    def params(self) -> dict:
        return {"degrees": list(self.degrees)}

    def __str__(self) -> str:
        return "zero set in E6 of the basic invariants of degrees " + " and ".join(map(str, self.degrees))


@dataclass(frozen=True)
class DixmierClosure:
    """Closure of G.t_O, where the Levi l* = s* + t_O centralizes t_O."""

    levi: ReductiveType
    slice_dim: int
    algebra_dim: int
    kind: str = field(default="DixmierClosure", init=False)

    @property
    def dim(self) -> int:
        return self.algebra_dim - self.levi.dim + self.slice_dim

    def params(self) -> dict:
        return {"levi": self.levi.to_json(), "sliceDim": self.slice_dim, "algebraDim": self.algebra_dim}

    def __str__(self) -> str:
        return f"closure of G.t_O with Levi {self.levi}"


VarietyDescriptor = Union[
    FullAlgebra, DetTraceless, DetSymplecticSym, DetSkew, SphericalSOSlice, E6CompleteIntersection, DixmierClosure
]


def descriptor_to_json(d: VarietyDescriptor) -> dict:
    return {"kind": d.kind, **d.params(), "dim": d.dim}


def descriptor_from_json(data: dict) -> VarietyDescriptor:
    k = data["kind"]
    if k == "FullAlgebra":
        return FullAlgebra(data["algebraDim"])
    if k == "DetTraceless":
        return DetTraceless(data["r"], data["N"], tuple(data["oddTraceEqs"]))
    if k == "DetSymplecticSym":
        return DetSymplecticSym(data["m"], data["twoN"])
    if k == "DetSkew":
        return DetSkew(data["twoP"], data["N"])
    if k == "SphericalSOSlice":
        return SphericalSOSlice(data["m"], data["N"])
    if k == "E6CompleteIntersection":
        return E6CompleteIntersection(tuple(data["degrees"]))
    if k == "DixmierClosure":
        return DixmierClosure(ReductiveType.from_json(data["levi"]), data["sliceDim"], data["algebraDim"])
    raise ValueError(f"unknown descriptor kind {k!r}")


def cs_descriptor(o: Orbit) -> VarietyDescriptor:
    t = o.algebra
    if o.is_zero:
        raise UndefinedClassError("CS of the zero orbit is a point")
    if not is_defective(o):
        return FullAlgebra(dim_algebra(t))
    if not t.is_classical:
        if t.series == "E6" and o.label in ("3A1", "A2"):
            return E6CompleteIntersection((5, 9))
        r, _ = rank_complexity(o)
        return DixmierClosure(generic_stabilizer(o) + ReductiveType.t(r), r, dim_algebra(t))
    cls = classify_upsilon(o)
    N, k = t.N, cls.index
    if t.series == "A":
        if cls.variant == "J":
            return DetTraceless(2 * k, N)
        return DetTraceless(2 * k, N, tuple(range(3, 2 * k, 2)))
    if t.series == "C":
        return DetSymplecticSym(2 * k, N)
    if cls.variant == "J":
        return DetSkew(4 * k, N)
    return SphericalSOSlice(k, N)


# --- canonical embedding ----------------------------------------------------------


@dataclass(frozen=True)
class EnhancedDiagram:
    black: frozenset[int] = frozenset()
    arcs: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self) -> None:
        arcs = frozenset(tuple(sorted(a)) for a in self.arcs)
        object.__setattr__(self, "arcs", arcs)
        object.__setattr__(self, "black", frozenset(self.black))
        used = [i for a in arcs for i in a]
        if len(used) != len(set(used)):
            raise ValueError("arcs must be pairwise disjoint")
        if set(used) & self.black:
            raise ValueError("arcs must join white nodes")

    def to_json(self) -> dict:
        return {"black": sorted(self.black), "arcs": [list(a) for a in sorted(self.arcs)]}

    @classmethod
    def from_json(cls, data: dict) -> "EnhancedDiagram":
        return cls(frozenset(data["black"]), frozenset(tuple(a) for a in data["arcs"]))

    def __str__(self) -> str:
        b = ",".join(map(str, sorted(self.black))) or "-"
        a = " ".join(f"{i}~{j}" for i, j in sorted(self.arcs)) or "-"
        return f"black {{{b}}} arcs {a}"


def _rng(a: int, b: int) -> set[int]:
    return set(range(a, b + 1))


def enhanced_diagram(o: Orbit) -> EnhancedDiagram:
    t = o.algebra
    if o.is_zero:
        raise UndefinedClassError("no embedding for the zero orbit")
    if not t.is_classical:
        from .exceptional_data import record

        rec = record(t.series, o.label)
        if rec.defective is None:
            return EnhancedDiagram()
        return EnhancedDiagram(frozenset(rec.black), frozenset(rec.arcs))
    cls = classify_upsilon(o)
    if cls.variant == "Max":
        return EnhancedDiagram()
    n, N, k = t.rank, t.N, cls.index
    if t.series == "A":
        if cls.variant == "J":
            return EnhancedDiagram(frozenset(_rng(k + 1, N - 1 - k)), frozenset({(k, N - k)}))
        if 2 * k < N:
            return EnhancedDiagram(frozenset(_rng(k + 1, N - 1 - k)), frozenset((i, N - i) for i in range(1, k + 1)))
        return EnhancedDiagram(frozenset(), frozenset((i, N - i) for i in range(1, k)))
    if t.series == "C":
        return EnhancedDiagram(frozenset(_rng(k + 1, n)))
    m = k
    odd = set(range(1, 2 * m, 2))
    if t.series == "B":
        if cls.variant == "J":
            return EnhancedDiagram(frozenset(_rng(2 * m + 1, n)))
        return EnhancedDiagram(frozenset(odd | _rng(2 * m + 1, n)))
    if cls.variant == "J":
        if n - 2 * m >= 2:
            return EnhancedDiagram(frozenset(_rng(2 * m + 1, n)))
        return EnhancedDiagram(frozenset(), frozenset({(n - 1, n)}))
    if n - 2 * m >= 2:
        return EnhancedDiagram(frozenset(odd | _rng(2 * m + 1, n)))
    if n - 2 * m == 1:
        return EnhancedDiagram(frozenset(odd), frozenset({(n - 1, n)}))
    if o.tag == "I":
        return EnhancedDiagram(frozenset(odd))
    return EnhancedDiagram(frozenset((odd - {2 * m - 1}) | {2 * m}))


def t_star_vectors(o: Orbit) -> list[tuple[Fraction, ...]]:
    """Spanning vectors of the Cartan of s*: black coroots and arc differences."""
    t = o.algebra
    d = enhanced_diagram(o)
    vecs = [simple_coroot_vector(t, i) for i in sorted(d.black)]
    for i, j in sorted(d.arcs):
        a, b = simple_coroot_vector(t, i), simple_coroot_vector(t, j)
        vecs.append(tuple(x - y for x, y in zip(a, b)))
    return vecs


def t_O_basis(o: Orbit) -> list[tuple[Fraction, ...]]:
    return orthocomplement_in_cartan(o.algebra, t_star_vectors(o))


def embedding_type(o: Orbit) -> ReductiveType:
    """Reductive type read off the enhanced diagram (black subdiagram plus one torus per arc)."""
    t = o.algebra
    d = enhanced_diagram(o)
    comps = subdiagram_components(t.series, t.rank, d.black)
    return ReductiveType(tuple((c.series, c.rank) for c in comps), len(d.arcs))


def check_embedding(o: Orbit) -> list[str]:
    """Structural invariants of the enhanced diagram; returns failed identity names."""
    problems = []
    t = o.algebra
    d = enhanced_diagram(o)
    s = generic_stabilizer(o)
    inv = build_root_system(t).involution
    if {inv[i - 1] for i in d.black} != set(d.black):
        problems.append("black nodes not stable under the diagram involution")
    if {tuple(sorted((inv[i - 1], inv[j - 1]))) for i, j in d.arcs} != set(d.arcs):
        problems.append("arcs not stable under the diagram involution")
    if embedding_type(o) != s:
        problems.append(f"diagram type {embedding_type(o)} differs from s* = {s}")
    return problems


# --- dense nilpotent orbit in CS(O) ------------------------------------------------


def tilde_orbit(o: Orbit) -> Orbit:
    t = o.algebra
    if o.is_zero:
        raise UndefinedClassError("no Richardson orbit for the zero orbit")
    if not t.is_classical:
        from .exceptional_data import record

        rec = record(t.series, o.label)
        return Orbit(t, label=rec.tilde if rec.tilde else t.series)
    cls = classify_upsilon(o)
    N, n = t.N, t.rank
    if cls.variant == "Max":
        from .orbits import regular_orbit

        return regular_orbit(t)
    k = cls.index

    def orbit(parts, tag=None):
        return Orbit(t, Partition.from_parts(parts), tag)

    if t.series == "A":
        if 2 * k < N:
            return orbit([2 * k + 1] + [1] * (N - 2 * k - 1))
        return orbit([N])
    if t.series == "C":
        return orbit([2 * k, 2] + [1] * (2 * n - 2 * k - 2))
    m = k
    if cls.variant == "J":
        return orbit([4 * m + 1] + [1] * (N - 4 * m - 1))
    if N == 4 * m:
        return orbit([2 * m, 2 * m], o.tag)
    if N == 4 * m + 1:
        return orbit([2 * m + 1, 2 * m - 1, 1])
    return orbit([2 * m + 1, 2 * m + 1] + [1] * (N - 4 * m - 2))


# --- maximal defective orbits, rank gaps, class isomorphisms -----------------------


def maximal_defective(lie_type: LieType) -> list[Orbit]:
    """The maximal orbits among the defective ones (closed forms)."""
    t = lie_type

    def orbit(parts, tag=None):
        return Orbit(t, Partition.from_parts(parts), tag)

    if not t.is_classical:
        labels = {"E6": ["A2"], "E7": ["A2", "(3A1)''"], "E8": ["A2"], "F4": ["~A1"], "G2": ["A1"]}[t.series]
        return [Orbit(t, label=x) for x in labels]
    N = t.N
    if t.series == "A":
        if N == 2:
            return []
        if N == 4:
            return [orbit([2, 2])]
        if N % 2 == 0:
            n = N // 2
            return [orbit([2] * n), orbit([n] + [1] * n)]
        n = N // 2
        return [orbit([n + 1] + [1] * n)]
    if t.series == "C":
        n = t.rank
        if n % 2 == 0:
            return [orbit([n] + [1] * n)]
        return [orbit([n - 1, 2] + [1] * (n - 1))]
    m, rem = divmod(N, 4)
    if rem == 0:
        return [orbit([2 * m - 1] + [1] * (2 * m + 1)), orbit([2] * (2 * m), "I"), orbit([2] * (2 * m), "II")]
    if rem == 1:
        return [orbit([2 * m - 1] + [1] * (2 * m + 2)), orbit([2] * (2 * m) + [1])]
    if rem == 2:
        return [orbit([2 * m + 1] + [1] * (2 * m + 1))]
    return [orbit([2 * m + 1] + [1] * (2 * m + 2))]


def forbidden_ranks(lie_type: LieType) -> set[int]:
    """Values in [1, rk g] that r(O) never takes."""
    t = lie_type
    if not t.is_classical:
        raise UnsupportedOperationError("rank gaps are stated for classical algebras only")
    N = t.N
    if t.series == "A":
        return {2 * p for p in range(1, N) if Fraction(N, 2) < 2 * p < N - 1}
    if t.series == "C":
        return set()
    return {2 * p + 1 for p in range(0, N) if N // 4 < 2 * p + 1 < N // 2}


def achieved_ranks(lie_type: LieType) -> set[int]:
    return {rank_complexity(o)[0] for o in enumerate_orbits(lie_type) if not o.is_zero}


def partition_dim_generic(series: str, N: int, p: Partition) -> int:
    """Orbit dimension for a partition of N in sl_N / sp_N / so_N, any N >= 0."""
    lt = transpose(p)
    sq = sum(x * x for x in lt.parts)
    odd = sum(1 for x in p.parts if x % 2)
    if series == "A":
        return N * N - sq
    if series == "C":
        return N * (N + 1) // 2 - (sq + odd) // 2
    return N * (N - 1) // 2 - (sq - odd) // 2


@dataclass(frozen=True)
class UpsilonIsomorphism:
    """Column erasure from one J-class onto the orbits of a smaller algebra.

    ``target_series`` is "A" (sl_k, nonzero orbits), "B/D" (so_k, all
    orbits, compared at the level of partitions) or "C" (sp_k, nonzero
    orbits); ``target_size`` is k.
    """

    source: UpsilonClass
    target_series: str
    target_size: int
    mapping: tuple[tuple[Orbit, Partition], ...]
    bijective: bool
    order_preserving: bool
    codimension_preserving: bool

    @property
    def ok(self) -> bool:
        return self.bijective and self.order_preserving and self.codimension_preserving


def upsilon_isomorphism(lie_type: LieType, cls: UpsilonClass) -> UpsilonIsomorphism:
    t = lie_type
    if not t.is_classical or cls.variant != "J":
        raise UnsupportedOperationError("column erasure is defined on the J classes of classical algebras")
    k = cls.index
    if t.series == "A":
        tseries, size, include_zero = "A", k, False
    elif t.series == "C":
        tseries, size, include_zero = "D", k, True
    else:
        tseries, size, include_zero = "C", 2 * k, False
    members = class_members(t, cls)
    images = [erase_column(o.partition) for o in members]
    check_series = "B" if tseries == "D" else tseries
    targets = [
        p
        for p in _partitions_upto(size)
        if admissible_for_series(check_series, p) and (include_zero or any(x > 1 for x in p.parts))
    ]
    bijective = len(set(images)) == len(images) and set(images) == set(targets)
    order = all(
        closure_leq(a, b) == dominance_leq(pa, pb)
        for a, pa in zip(members, images)
        for b, pb in zip(members, images)
    )
    tdim = "B" if tseries == "D" else tseries
    codim = all(
        partition_dim(b) - partition_dim(a) == partition_dim_generic(tdim, size, pb) - partition_dim_generic(tdim, size, pa)
        for a, pa in zip(members, images)
        for b, pb in zip(members, images)
    )
    label = "B/D" if tseries == "D" else tseries
    return UpsilonIsomorphism(cls, label, size, tuple(zip(members, images)), bijective, order, codim)


def _partitions_upto(n: int):
    from .partitions import partitions_of

    return list(partitions_of(n))


# --- higher secants of the minimal orbit in sp_2n ----------------------------------


def higher_secant_dim_sp_min(n: int, r: int) -> int:
    """dim of the cone over the r-th secant variety of the minimal orbit of sp_2n."""
    if n < 1 or r < 1:
        raise ValueError("need n >= 1 and r >= 1")
    g = n * (2 * n + 1)
    if r >= 2 * n:
        return g
    m = r // 2
    stab = (n - m) * (2 * n - 2 * m + 1)
    if r % 2:
        stab -= 2 * n - 2 * m
    return g - stab


# --- full report ------------------------------------------------------------------


@dataclass(frozen=True)
class SecantReport:
    orbit: Orbit
    orbit_dim: int
    upsilon: Optional[UpsilonClass]  # None for exceptional algebras
    r: int
    c: int
    s_star: ReductiveType
    l_star: ReductiveType
    dim_cs: int
    defect: Optional[int]
    defective: bool
    descriptor: VarietyDescriptor
    embedding: EnhancedDiagram
    t_O_basis: tuple[tuple[Fraction, ...], ...]
    tilde: Orbit

    def to_json(self) -> dict:
        return {
            "orbit": str(self.orbit),
            "algebra": self.orbit.algebra.name,
            "dim": self.orbit_dim,
            "upsilon": self.upsilon.to_json() if self.upsilon else None,
            "r": self.r,
            "c": self.c,
            "sStar": self.s_star.to_json(),
            "lStar": self.l_star.to_json(),
            "dimCS": self.dim_cs,
            "defect": self.defect,
            "defective": self.defective,
            "descriptor": descriptor_to_json(self.descriptor),
            "embedding": self.embedding.to_json(),
            "tOBasis": [[str(x) for x in v] for v in self.t_O_basis],
            "tilde": str(self.tilde),
        }

    @classmethod
    def from_json(cls, data: dict) -> "SecantReport":
        from .orbits import parse_orbit

        orbit = parse_orbit(data["orbit"])
        up = data["upsilon"]
        return cls(
            orbit=orbit,
            orbit_dim=data["dim"],
            upsilon=UpsilonClass(up["variant"], up["index"], orbit.algebra) if up else None,
            r=data["r"],
            c=data["c"],
            s_star=ReductiveType.from_json(data["sStar"]),
            l_star=ReductiveType.from_json(data["lStar"]),
            dim_cs=data["dimCS"],
            defect=data["defect"],
            defective=data["defective"],
            descriptor=descriptor_from_json(data["descriptor"]),
            embedding=EnhancedDiagram.from_json(data["embedding"]),
            t_O_basis=tuple(tuple(Fraction(x) for x in v) for v in data["tOBasis"]),
            tilde=parse_orbit(data["tilde"]),
        )


def report_problems(rep: SecantReport) -> list[str]:
    """Names of identities violated by a report (empty when consistent)."""
    o, t = rep.orbit, rep.orbit.algebra
    g = dim_algebra(t)
    out = []
    if g - rep.s_star.dim != 2 * rep.orbit_dim - 2 * rep.c - rep.r:
        out.append("dim g - dim s* = 2 dim O - 2c - r")
    if rep.dim_cs != g - rep.s_star.dim:
        out.append("dim CS = dim g - dim s*")
    if rep.r != t.rank - rep.s_star.rank:
        out.append("r = rk g - rk s*")
    if rep.l_star != rep.s_star + ReductiveType.t(rep.r):
        out.append("l* = s* + t_O")
    if rep.defective != (rep.r < t.rank):
        out.append("defective iff r < rk g")
    if rep.defective != (rep.descriptor.kind != "FullAlgebra"):
        out.append("defective iff CS is not the whole algebra")
    if rep.defective and rep.defect != 2 * rep.c + rep.r:
        out.append("defect = 2c + r")
    if not rep.defective and rep.defect is not None:
        out.append("defect only for defective orbits")
    if rep.descriptor.dim != rep.dim_cs:
        out.append("descriptor dimension = dim CS")
    if len(rep.t_O_basis) != rep.r:
        out.append("dim t_O = r")
    if dim_orbit(rep.tilde) != rep.dim_cs - rep.r:
        out.append("dim tilde = dim CS - r")
    if not rep.defective and rep.c != rep.orbit_dim - dim_borel(t):
        out.append("c = dim O - dim b for non-defective orbits")
    out += check_embedding(o)
    return out


def build_secant_report(o: Orbit) -> SecantReport:
    if o.is_zero:
        raise UndefinedClassError("secant invariants are not defined for the zero orbit")
    r, c = rank_complexity(o)
    s = generic_stabilizer(o)
    defective = r < o.algebra.rank
    rep = SecantReport(
        orbit=o,
        orbit_dim=dim_orbit(o),
        upsilon=classify_upsilon(o) if o.algebra.is_classical else None,
        r=r,
        c=c,
        s_star=s,
        l_star=s + ReductiveType.t(r),
        dim_cs=dim_cs(o),
        defect=2 * c + r if defective else None,
        defective=defective,
        descriptor=cs_descriptor(o),
        embedding=enhanced_diagram(o),
        t_O_basis=tuple(t_O_basis(o)),
        tilde=tilde_orbit(o),
    )
    problems = report_problems(rep)
    if problems:
        raise DataIntegrityError(f"{o}: failed identities: {'; '.join(problems)}")
    return rep


def characteristic_in_t_O(o: Orbit) -> bool:
    """Whether the characteristic h of O lies in t_O."""
    t = o.algebra
    h = characteristic_vector(t, weighted_dynkin(o))
    basis = t_O_basis(o)
    from .rootsys import rank_q

    dim = len(h)
    return rank_q(list(basis) + [h], dim) == len(basis)
