"""Root systems, Cartan data and gradings of simple Lie algebras.

Simple roots are numbered as in Bourbaki's tables:

    A_n   1 - 2 - ... - n
    B_n   1 - 2 - ... - (n-1) => n          (alpha_n short)
    C_n   1 - 2 - ... - (n-1) <= n          (alpha_n long)
    D_n   1 - 2 - ... - (n-2) < (n-1), n    (fork at n-2)
    E_n   1 - 3 - 4 - 5 - ... - n, with 2 attached to 4
    F_4   1 - 2 => 3 - 4                    (alpha_3, alpha_4 short)
    G_2   1 <= 2                            (alpha_1 short)

Elements of the Cartan subalgebra (``CartanVector``) use epsilon
coordinates for the classical series and simple-coroot coordinates for
the exceptional ones.  For type A the epsilon model has N = n + 1
coordinates constrained to sum to zero, which is the diagonal of sl_N.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import DegeneracyError, InvalidMarksError, InvalidTypeError

CLASSICAL = ("A", "B", "C", "D")
EXCEPTIONAL_RANKS = {"E6": 6, "E7": 7, "E8": 8, "F4": 4, "G2": 2}
MIN_RANK = {"A": 1, "B": 3, "C": 2, "D": 4}


@dataclass(frozen=True, order=True)
class LieType:
    """A simple Lie algebra, e.g. ``LieType("B", 5)`` for so_11 or ``LieType("E6", 6)``."""

    series: str
    rank: int

    def __post_init__(self) -> None:
        if self.series in EXCEPTIONAL_RANKS:
            if self.rank != EXCEPTIONAL_RANKS[self.series]:
                raise InvalidTypeError(f"{self.series} has rank {EXCEPTIONAL_RANKS[self.series]}, not {self.rank}")
        elif self.series in MIN_RANK:
            if not isinstance(self.rank, int) or self.rank < MIN_RANK[self.series]:
                raise InvalidTypeError(
                    f"type {self.series}{self.rank} unsupported: need rank >= {MIN_RANK[self.series]}"
                )
        else:
            raise InvalidTypeError(f"unknown series {self.series!r}")

    @classmethod
    def exceptional(cls, name: str) -> "LieType":
        if name not in EXCEPTIONAL_RANKS:
            raise InvalidTypeError(f"unknown exceptional type {name!r}")
        return cls(name, EXCEPTIONAL_RANKS[name])

    @property
    def is_classical(self) -> bool:
        return self.series in CLASSICAL

    @property
    def N(self) -> int:
        """Size of the natural representation (classical types only)."""
        n = self.rank
        if self.series == "A":
            return n + 1
        if self.series == "B":
            return 2 * n + 1
        if self.series in ("C", "D"):
            return 2 * n
        raise InvalidTypeError(f"{self.series} has no natural matrix size")

    @property
    def name(self) -> str:
        """Matrix-style name: sl7, so11, sp8, or the exceptional symbol."""
        if self.series == "A":
            return f"sl{self.N}"
        if self.series in ("B", "D"):
            return f"so{self.N}"
        if self.series == "C":
            return f"sp{self.N}"
        return self.series

    @property
    def cartan_name(self) -> str:
        if self.is_classical:
            return f"{self.series}{self.rank}"
        return self.series

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class RootSystem:
    series: str
    rank: int
    positive_roots: tuple[tuple[int, ...], ...]
    cartan_matrix: tuple[tuple[int, ...], ...]
    involution: tuple[int, ...]
    gram: tuple[tuple[Fraction, ...], ...]

    @property
    def highest_root(self) -> tuple[int, ...]:
        return max(self.positive_roots, key=sum)

    @property
    def simple_lengths(self) -> tuple[Fraction, ...]:
        return tuple(self.gram[i][i] for i in range(self.rank))

    def pairing(self, root: Sequence[int], i: int) -> int:
        """<root, alpha_i^vee> for a root given by simple-root coefficients."""
        return sum(c * self.cartan_matrix[i][j] for j, c in enumerate(root))


def _gram_classical(series: str, n: int) -> list[list[Fraction]]:
    vecs = simple_roots_epsilon(series, n)
    return [[Fraction(sum(a * b for a, b in zip(u, v))) for v in vecs] for u in vecs]


def simple_roots_epsilon(series: str, n: int) -> list[tuple[Fraction, ...]]:
    """Simple roots in epsilon coordinates (N coordinates for type A, n otherwise)."""
    dim = n + 1 if series == "A" else n
    roots = []
    for i in range(n - 1 if series != "A" else n):
        v = [Fraction(0)] * dim
        v[i], v[i + 1] = Fraction(1), Fraction(-1)
        roots.append(tuple(v))
    if series == "A":
        return roots
    v = [Fraction(0)] * dim
    if series == "B":
        v[n - 1] = Fraction(1)
    elif series == "C":
        v[n - 1] = Fraction(2)
    elif series == "D":
        v[n - 2], v[n - 1] = Fraction(1), Fraction(1)
    else:
        raise InvalidTypeError(series)
    roots.append(tuple(v))
    return roots


def _gram_exceptional(series: str) -> list[list[Fraction]]:
    if series in ("E6", "E7", "E8"):
        n = EXCEPTIONAL_RANKS[series]
        edges = [(1, 3), (3, 4), (2, 4)] + [(k, k + 1) for k in range(4, n)]
        g = [[Fraction(2 if i == j else 0) for j in range(n)] for i in range(n)]
        for a, b in edges:
            g[a - 1][b - 1] = g[b - 1][a - 1] = Fraction(-1)
        return g
    if series == "F4":
        h = Fraction(1, 2)
        return [
            [Fraction(2), Fraction(-1), Fraction(0), Fraction(0)],
            [Fraction(-1), Fraction(2), Fraction(-1), Fraction(0)],
            [Fraction(0), Fraction(-1), Fraction(1), -h],
            [Fraction(0), Fraction(0), -h, Fraction(1)],
        ]
    if series == "G2":
        return [[Fraction(2), Fraction(-3)], [Fraction(-3), Fraction(6)]]
    raise InvalidTypeError(series)


def gram_matrix(series: str, rank: int) -> list[list[Fraction]]:
    """Gram matrix of the simple roots (long roots of squared length 2, except C_n where it is 4)."""
    if series in CLASSICAL:
        return _gram_classical(series, rank)
    return _gram_exceptional(series)


def cartan_from_gram(gram: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    """Cartan integers a_ij = <alpha_i^vee, alpha_j> = 2(alpha_i, alpha_j)/(alpha_i, alpha_i)."""
    n = len(gram)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            val = 2 * gram[i][j] / gram[i][i]
            if val.denominator != 1:
                raise DegeneracyError("Gram matrix does not define a root system")
            row.append(int(val))
        out.append(row)
    return out


def positive_roots_from_cartan(cartan: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """All positive roots via the root-string algorithm, sorted by height."""
    n = len(cartan)
    simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    found = set(simple)
    layer = list(simple)
    ordered = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                p = 0
                cur = list(beta)
                while True:
                    cur[i] -= 1
                    if tuple(cur) in found:
                        p += 1
                    else:
                        break
                pairing = sum(c * cartan[i][j] for j, c in enumerate(beta))
                q = p - pairing
                if q > 0:
                    gamma = list(beta)
                    gamma[i] += 1
                    gamma = tuple(gamma)
                    if gamma not in found:
                        found.add(gamma)
                        nxt.append(gamma)
        nxt.sort()
        ordered.extend(nxt)
        layer = nxt
    return ordered


def _involution(cartan: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """-w0 as a permutation of nodes (1-based).

    The dominant Weyl conjugate of -w_i is w_sigma(i).  Weights are kept in
    fundamental-weight coordinates m_k = <weight, alpha_k^vee>.
    """
    n = len(cartan)
    perm = []
    for i in range(n):
        m = [0] * n
        m[i] = -1
        while True:
            j = next((k for k in range(n) if m[k] < 0), None)
            if j is None:
                break
            mj = m[j]
            for k in range(n):
                m[k] -= mj * cartan[k][j]
        if sorted(m) != [0] * (n - 1) + [1]:
            raise DegeneracyError("longest-element computation failed")
        perm.append(m.index(1) + 1)
    return tuple(perm)


@lru_cache(maxsize=None)
def root_system_data(series: str, rank: int) -> RootSystem:
    """Root system for (series, rank) without the rank bounds of ``LieType``.

    Used internally for small Levi factors (A1, B2, D3, ...).
    """
    gram = gram_matrix(series, rank)
    cartan = cartan_from_gram(gram)
    roots = positive_roots_from_cartan(cartan)
    inv = _involution(cartan)
    return RootSystem(
        series=series,
        rank=rank,
        positive_roots=tuple(roots),
        cartan_matrix=tuple(tuple(r) for r in cartan),
        involution=inv,
        gram=tuple(tuple(r) for r in gram),
    )


def build_root_system(lie_type: LieType) -> RootSystem:
    if not isinstance(lie_type, LieType):
        raise InvalidTypeError(f"expected LieType, got {lie_type!r}")
    return root_system_data(lie_type.series, lie_type.rank)


def simple_dim(series: str, rank: int) -> int:
    """Dimension of the simple algebra of the given Cartan type (small ranks allowed)."""
    n = rank
    if series == "A":
        return n * (n + 2)
    if series in ("B", "C"):
        return n * (2 * n + 1)
    if series == "D":
        return n * (2 * n - 1)
    dims = {"E6": 78, "E7": 133, "E8": 248, "F4": 52, "G2": 14}
    if series in dims:
        return dims[series]
    raise InvalidTypeError(series)


def dim_algebra(lie_type: LieType) -> int:
    return simple_dim(lie_type.series, lie_type.rank)


def dim_borel(lie_type: LieType) -> int:
    return (dim_algebra(lie_type) + lie_type.rank) // 2


def check_marks(lie_type: LieType, marks: Sequence[int]) -> tuple[int, ...]:
    marks = tuple(marks)
    if len(marks) != lie_type.rank:
        raise InvalidMarksError(f"{lie_type.name} needs {lie_type.rank} marks, got {len(marks)}")
    for m in marks:
        if m not in (0, 1, 2):
            raise InvalidMarksError(f"mark {m!r} not in {{0, 1, 2}}")
    return marks


def graded_dims(lie_type: LieType, marks: Sequence[int]) -> dict[int, int]:
    """dim g(i) for the grading defined by alpha_j(h) = marks[j]."""
    marks = check_marks(lie_type, marks)
    return grading(lie_type.series, lie_type.rank, marks)


def grading(series: str, rank: int, marks: Sequence[int]) -> dict[int, int]:
    """As graded_dims, for any Cartan type including small ranks (no validation)."""
    rs = root_system_data(series, rank)
    out: dict[int, int] = {0: rank}
    for beta in rs.positive_roots:
        d = sum(c * m for c, m in zip(beta, marks))
        if d == 0:
            out[0] += 2
        else:
            out[d] = out.get(d, 0) + 1
            out[-d] = out.get(-d, 0) + 1
    return dict(sorted(out.items()))


def orbit_dim_from_marks(lie_type: LieType, marks: Sequence[int]) -> int:
    g = graded_dims(lie_type, marks)
    return dim_algebra(lie_type) - g[0] - g.get(1, 0)


# --- Cartan subalgebra geometry -------------------------------------------------

CartanVector = tuple  # tuple of Fraction


def cartan_coordinate_dim(lie_type: LieType) -> int:
    return lie_type.N if lie_type.series == "A" else lie_type.rank


@lru_cache(maxsize=None)
def cartan_form(series: str, rank: int) -> tuple[tuple[Fraction, ...], ...]:
    """Invariant form on the coordinate space of CartanVector.

    Epsilon coordinates carry the Euclidean form.  For the exceptional
    types the coordinates are simple coroots and the Gram matrix is
    (a_i^vee, a_j^vee) = 4(a_i, a_j) / ((a_i, a_i)(a_j, a_j)).
    """
    if series in CLASSICAL:
        dim = rank + 1 if series == "A" else rank
        return tuple(tuple(Fraction(int(i == j)) for j in range(dim)) for i in range(dim))
    g = gram_matrix(series, rank)
    n = len(g)
    return tuple(tuple(4 * g[i][j] / (g[i][i] * g[j][j]) for j in range(n)) for i in range(n))


def simple_coroot_vector(lie_type: LieType, i: int) -> CartanVector:
    """The i-th simple coroot (1-based) as a CartanVector, up to a positive scalar."""
    if lie_type.is_classical:
        return simple_roots_epsilon(lie_type.series, lie_type.rank)[i - 1]
    return tuple(Fraction(int(k == i - 1)) for k in range(lie_type.rank))


def characteristic_vector(lie_type: LieType, marks: Sequence[int]) -> CartanVector:
    """The element h of the Cartan with alpha_i(h) = marks[i], as a CartanVector."""
    marks = check_marks(lie_type, marks)
    n = lie_type.rank
    rs = build_root_system(lie_type)
    if lie_type.is_classical:
        simple = simple_roots_epsilon(lie_type.series, n)
        dim = cartan_coordinate_dim(lie_type)
        rows = [list(s) + [Fraction(m)] for s, m in zip(simple, marks)]
        if lie_type.series == "A":
            rows.append([Fraction(1)] * dim + [Fraction(0)])
        return tuple(_solve(rows, dim))
    # coroot coordinates x: alpha_i(sum x_k a_k^vee) = sum_k x_k * cartan[k][i]
    rows = [[Fraction(rs.cartan_matrix[k][i]) for k in range(n)] + [Fraction(marks[i])] for i in range(n)]
    return tuple(_solve(rows, n))


def _solve(rows: list[list[Fraction]], nvars: int) -> list[Fraction]:
    """Solve a consistent square-or-overdetermined system with a unique solution."""
    m = [list(r) for r in rows]
    pivots = _rref(m, nvars)
    if len(pivots) != nvars:
        raise DegeneracyError("system does not have a unique solution")
    sol = [Fraction(0)] * nvars
    for r, c in enumerate(pivots):
        sol[c] = m[r][nvars]
    return sol


def _rref(m: list[list[Fraction]], ncols: int) -> list[int]:
    pivots = []
    row = 0
    for col in range(ncols):
        piv = next((r for r in range(row, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = 1 / m[row][col]
        m[row] = [x * inv for x in m[row]]
        for r in range(len(m)):
            if r != row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[row])]
        pivots.append(col)
        row += 1
        if row == len(m):
            break
    return pivots


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> list[tuple[Fraction, ...]]:
    """Basis of {x : row . x = 0 for every row} over Q."""
    m = [[Fraction(x) for x in r] for r in rows]
    pivots = _rref(m, ncols) if m else []
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -m[r][f]
        basis.append(tuple(v))
    return basis


def rank_q(rows: Sequence[Sequence[Fraction]], ncols: int) -> int:
    m = [[Fraction(x) for x in r] for r in rows]
    return len(_rref(m, ncols)) if m else 0


def inner(lie_type: LieType, u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    form = cartan_form(lie_type.series, lie_type.rank)
    return sum((u[i] * form[i][j] * v[j] for i in range(len(u)) for j in range(len(v)) if form[i][j]), Fraction(0))


def in_cartan(lie_type: LieType, v: Sequence[Fraction]) -> bool:
    if len(v) != cartan_coordinate_dim(lie_type):
        return False
    return lie_type.series != "A" or sum(v) == 0


def orthocomplement_in_cartan(lie_type: LieType, vectors: Iterable[Sequence[Fraction]]) -> list[CartanVector]:
    """Basis of the orthogonal complement of span(vectors) inside the Cartan subalgebra."""
    vecs = [tuple(Fraction(x) for x in v) for v in vectors]
    dim = cartan_coordinate_dim(lie_type)
    for v in vecs:
        if not in_cartan(lie_type, v):
            raise DegeneracyError(f"{v} is not a Cartan vector of {lie_type.name}")
    if rank_q(vecs, dim) != len(vecs):
        raise DegeneracyError("input vectors are linearly dependent")
    form = cartan_form(lie_type.series, lie_type.rank)
    rows = [[sum(v[i] * form[i][j] for i in range(dim)) for j in range(dim)] for v in vecs]
    if lie_type.series == "A":
        rows.append([Fraction(1)] * dim)
    return nullspace(rows, dim)


# --- subdiagrams ------------------------------------------------------------------


@dataclass(frozen=True)
class Component:
    """A connected subdiagram identified with a standard Dynkin diagram.

    ``nodes`` lists the ambient node indices (1-based) in the standard
    Bourbaki order of the component type; ``short`` is set for type A
    components made of short roots of a non-simply-laced algebra.
    """

    series: str
    rank: int
    nodes: tuple[int, ...]
    short: bool = False


def subdiagram_components(series: str, rank: int, nodes: Iterable[int]) -> list[Component]:
    rs = root_system_data(series, rank)
    a = rs.cartan_matrix
    lengths = rs.simple_lengths
    longest = max(lengths)
    laced = len(set(lengths)) > 1
    todo = set(nodes)
    comps = []
    while todo:
        start = min(todo)
        comp = {start}
        stack = [start]
        while stack:
            i = stack.pop()
            for j in list(todo):
                if j not in comp and a[i - 1][j - 1] != 0:
                    comp.add(j)
                    stack.append(j)
        todo -= comp
        comps.append(_identify(sorted(comp), a, lengths, longest, laced))
    return sorted(comps, key=lambda c: c.nodes)


def _identify(comp, a, lengths, longest, laced) -> Component:
    nbr = {i: [j for j in comp if j != i and a[i - 1][j - 1] != 0] for i in comp}
    k = len(comp)

    def short(i):
        return laced and lengths[i - 1] < longest

    def mult(i, j):
        return a[i - 1][j - 1] * a[j - 1][i - 1]

    branch = [i for i in comp if len(nbr[i]) == 3]
    if branch:
        b = branch[0]
        arms = []
        for first in nbr[b]:
            arm, prev, cur = [first], b, first
            while True:
                nxt = [j for j in nbr[cur] if j != prev]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                arm.append(cur)
            arms.append(arm)
        arms.sort(key=len)
        lens = tuple(len(x) for x in arms)
        if lens[:2] == (1, 1):
            order = list(reversed(arms[2])) + [b, arms[0][0], arms[1][0]]
            return Component("D", k, tuple(order))
        kind = {(1, 2, 2): "E6", (1, 2, 3): "E7", (1, 2, 4): "E8"}[lens]
        two, last = arms[1], arms[2]
        order = [two[1], arms[0][0], two[0], b] + last
        return Component(kind, k, tuple(order))
    ends = [i for i in comp if len(nbr[i]) <= 1]
    path = [ends[0]]
    while len(path) < k:
        path.append(next(j for j in nbr[path[-1]] if j not in path))
    bonds = [mult(path[i], path[i + 1]) for i in range(k - 1)]
    top = max(bonds, default=1)
    if top == 1:
        return Component("A", k, tuple(path), short=short(path[0]))
    if top == 3:
        if not short(path[0]):
            path.reverse()
        return Component("G2", 2, tuple(path))
    pos = bonds.index(2)
    if k == 2:
        if short(path[0]):
            path.reverse()
        return Component("B", 2, tuple(path))
    if 0 < pos < k - 2:
        if short(path[0]):
            path.reverse()
        return Component("F4", 4, tuple(path))
    if pos == 0:
        path.reverse()
    return Component("B" if short(path[-1]) else "C", k, tuple(path))
