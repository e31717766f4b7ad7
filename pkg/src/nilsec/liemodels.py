"""Concrete models of simple Lie algebras over F_p, used by the oracles.

Three constructions share one interface:

* ``MatrixModel``: sl_N, so_N, sp_2n as matrices.  so and sp preserve the
  antidiagonal form Omega (symmetric for so, with signs (1,..,1,-1,..,-1)
  for sp), so the diagonal Cartan is diag(e_1..e_n, (0), -e_n..-e_1) and
  the Borel subalgebra is upper triangular.
* ``KacModel``: simply-laced types from the root lattice with the
  Frenkel-Kac sign cocycle.
* ``FoldedModel``: F4 inside E6 and G2 inside D4 as fixed points of a
  diagram automorphism, with root vectors built by bracketing.

Vectors live in an ambient coordinate space (flattened matrices, or the
ambient simply-laced algebra).  ``basis`` lists the Cartan coroots
H_1..H_n followed by one root vector per root.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import modp
from .modp import P
from .rootsys import _solve, root_system_data, simple_roots_epsilon


class LieModel:
    series: str
    rank: int
    ambient_dim: int
    H: np.ndarray  # rank x ambient, simple coroots
    root_vectors: dict[tuple[int, ...], np.ndarray]

    def bracket(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def ad_on_basis(self, x: np.ndarray) -> np.ndarray:
        """Columns are [x, b_j] for the basis vectors b_j (ambient x dim)."""
        raise NotImplementedError

    @property
    def roots(self):
        return root_system_data(self.series, self.rank)

    @property
    def cartan(self):
        return self.roots.cartan_matrix

    @property
    def dim(self) -> int:
        return self.rank + len(self.root_vectors)

    @property
    def basis(self) -> np.ndarray:
        cached = getattr(self, "_basis", None)
        if cached is None:
            rows = [self.H[i] for i in range(self.rank)]
            rows += [self.root_vectors[r] for r in self.sorted_roots()]
            cached = np.array(rows, dtype=np.int64) % P
            self._basis = cached
        return cached

    def sorted_roots(self) -> list[tuple[int, ...]]:
        return sorted(self.root_vectors, key=lambda r: (-sum(r), r))

    def cartan_element(self, coroot_coords) -> np.ndarray:
        """sum_k c_k H_k for rational coefficients c_k."""
        out = np.zeros(self.ambient_dim, dtype=np.int64)
        for k, c in enumerate(coroot_coords):
            out = (out + modp.to_mod(Fraction(c)) * self.H[k]) % P
        return out

    def characteristic(self, marks) -> np.ndarray:
        """The element h with alpha_i(h) = marks[i]."""
        n = self.rank
        a = self.cartan
        rows = [[Fraction(a[k][i]) for k in range(n)] + [Fraction(marks[i])] for i in range(n)]
        return self.cartan_element(_solve(rows, n))

    def degree(self, root, marks) -> int:
        return sum(c * m for c, m in zip(root, marks))

    def random_in_degree(self, marks, d: int, rng: np.random.Generator) -> np.ndarray:
        out = np.zeros(self.ambient_dim, dtype=np.int64)
        for r, v in self.root_vectors.items():
            if self.degree(r, marks) == d:
                out = (out + int(rng.integers(1, P)) * v) % P
        return out

    def exp_ad(self, u: np.ndarray, x: np.ndarray) -> np.ndarray:
        """exp(ad u) x for nilpotent u."""
        total = x % P
        term = x % P
        for k in range(1, 4 * self.ambient_dim):
            term = self.bracket(u, term) * modp.inv(k) % P
            if not term.any():
                return total
            total = (total + term) % P
        raise ArithmeticError("ad u is not nilpotent")

    def random_conjugate(self, x: np.ndarray, rng: np.random.Generator, rounds: int = 3) -> np.ndarray:
        """Ad(g) x for g a random product of unipotent elements of both signs."""
        pos = [r for r in self.root_vectors if sum(r) > 0]
        y = x
        for _ in range(rounds):
            for sign in (1, -1):
                u = np.zeros(self.ambient_dim, dtype=np.int64)
                for r in pos:
                    key = tuple(sign * c for c in r)
                    u = (u + int(rng.integers(1, P)) * self.root_vectors[key]) % P
                y = self.exp_ad(u, y)
        return y

    def coefficients_to_ambient(self, coeffs: np.ndarray) -> np.ndarray:
        return modp.matmul(coeffs, self.basis)


# --- matrix models ----------------------------------------------------------------


class MatrixModel(LieModel):
    def __init__(self, series: str, rank: int):
        self.series, self.rank = series, rank
        n = rank
        self.N = N = {"A": n + 1, "B": 2 * n + 1, "C": 2 * n, "D": 2 * n}[series]
        self.ambient_dim = N * N
        simple = simple_roots_epsilon(series, n)
        edim = len(simple[0])

        def unit(i, j):
            m = np.zeros((N, N), dtype=np.int64)
            m[i, j] = 1
            return m

        def to_root(eps):
            rows = [[simple[k][c] for k in range(n)] + [eps[c]] for c in range(edim)]
            sol = _solve(rows, n)
            assert all(s.denominator == 1 for s in sol)
            return tuple(int(s) for s in sol)

        roots: dict[tuple[int, ...], np.ndarray] = {}
        H = []
        if series == "A":
            for i in range(N):
                for j in range(N):
                    if i != j:
                        eps = [Fraction(0)] * N
                        eps[i] += 1
                        eps[j] -= 1
                        roots[to_root(eps)] = unit(i, j).reshape(-1)
            for i in range(n):
                H.append((unit(i, i) - unit(i + 1, i + 1)).reshape(-1))
        else:
            w = [1] * N if series in ("B", "D") else [1] * n + [-1] * n

            def weight(k):
                e = [Fraction(0)] * n
                if k < n:
                    e[k] = Fraction(1)
                elif k >= N - n:
                    e[N - 1 - k] = Fraction(-1)
                return e

            for i in range(N):
                for j in range(N):
                    if i == j:
                        continue
                    ip, jp = N - 1 - i, N - 1 - j
                    s = -w[ip] * w[jp]
                    m = unit(i, j)
                    if (jp, ip) == (i, j):
                        if s == -1:
                            continue
                    else:
                        m = m + s * unit(jp, ip)
                    eps = [a - b for a, b in zip(weight(i), weight(j))]
                    if not any(eps):
                        continue
                    key = to_root(eps)
                    if key not in roots:
                        roots[key] = m.reshape(-1) % P
            for k in range(n):
                a = simple[k]
                length = sum(x * x for x in a)
                cor = [2 * x / length for x in a]
                d = [Fraction(0)] * N
                for c in range(n):
                    d[c] += cor[c]
                    d[N - 1 - c] -= cor[c]
                H.append(np.array([int(x) for x in np.diag(d).reshape(-1)], dtype=np.int64))
        self.root_vectors = {r: v % P for r, v in roots.items()}
        self.H = np.array(H, dtype=np.int64) % P

    def _mat(self, v):
        return np.asarray(v, dtype=np.int64).reshape(self.N, self.N)

    def bracket(self, a, b):
        A, B = self._mat(a), self._mat(b)
        return ((A @ B - B @ A) % P).reshape(-1)

    def ad_on_basis(self, x):
        X = self._mat(x)
        Bs = self.basis.reshape(-1, self.N, self.N)
        out = (np.matmul(X, Bs) - np.matmul(Bs, X)) % P
        return out.reshape(len(Bs), -1).T

    def power_ranks(self, x) -> list[int]:
        """rank(x^k) for k = 0, 1, ... until 0, for x in the natural representation."""
        X = self._mat(x) % P
        ranks = [self.N]
        cur = np.eye(self.N, dtype=np.int64)
        while ranks[-1] > 0:
            cur = cur @ X % P
            ranks.append(modp.rank(cur))
            if len(ranks) > self.N + 2:
                raise ArithmeticError("matrix is not nilpotent")
        return ranks


def jordan_type(power_ranks: list[int]) -> tuple[int, ...]:
    """Jordan block sizes of a nilpotent operator from rank(x^k), k = 0, 1, ..."""
    at_least = [power_ranks[k - 1] - power_ranks[k] for k in range(1, len(power_ranks))]
    parts = []
    for k in range(len(at_least)):
        exact = at_least[k] - (at_least[k + 1] if k + 1 < len(at_least) else 0)
        parts += [k + 1] * exact
    return tuple(sorted(parts, reverse=True))


# --- simply-laced Kac construction -----------------------------------------------


class KacModel(LieModel):
    def __init__(self, series: str, rank: int):
        self.series, self.rank = series, rank
        rs = root_system_data(series, rank)
        gram = [[int(x) for x in row] for row in rs.gram]
        n = rank
        pos = list(rs.positive_roots)
        allroots = pos + [tuple(-c for c in r) for r in pos]
        index = {r: n + k for k, r in enumerate(allroots)}
        dim = n + len(allroots)
        self.ambient_dim = dim

        def form(a, b):
            return sum(a[i] * gram[i][j] * b[j] for i in range(n) for j in range(n))

        def eps(a, b):
            e = sum(a[i] * b[i] for i in range(n))
            e += sum(a[i] * b[j] for i in range(n) for j in range(i + 1, n) if gram[i][j])
            return -1 if e % 2 else 1

        I, J, K, C = [], [], [], []

        def put(i, j, k, c):
            I.append(i)
            J.append(j)
            K.append(k)
            C.append(c)

        for a in allroots:
            ia = index[a]
            for i in range(n):
                unit = tuple(int(k == i) for k in range(n))
                v = form(a, unit)
                if v:
                    put(i, ia, ia, v)
                    put(ia, i, ia, -v)
            for b in allroots:
                s = tuple(x + y for x, y in zip(a, b))
                if not any(s):
                    for k in range(n):
                        if a[k]:
                            put(ia, index[b], k, -a[k])
                elif s in index:
                    put(ia, index[b], index[s], eps(a, b))
        self._I = np.array(I)
        self._J = np.array(J)
        self._K = np.array(K)
        self._C = np.array(C, dtype=np.int64)
        eye = np.eye(dim, dtype=np.int64)
        self.H = eye[:n].copy()
        self.root_vectors = {r: eye[index[r]].copy() for r in allroots}

    def ad(self, x: np.ndarray) -> np.ndarray:
        m = np.zeros((self.ambient_dim, self.ambient_dim), dtype=np.int64)
        np.add.at(m, (self._K, self._J), (np.asarray(x)[self._I] % P) * self._C)
        return m % P

    def bracket(self, a, b):
        return modp.matmul(self.ad(a), b)

    def ad_on_basis(self, x):
        return modp.matmul(self.ad(x), self.basis.T)


class FoldedModel(LieModel):
    """Fixed points of a diagram automorphism of a simply-laced KacModel.

    ``orbits[i]`` lists the ambient nodes (1-based) folded into node i+1.
    """

    def __init__(self, series: str, rank: int, ambient: KacModel, orbits):
        self.series, self.rank = series, rank
        self.ambient = ambient
        self.ambient_dim = ambient.ambient_dim
        amb_simple = {k + 1: ambient.root_vectors[tuple(int(j == k) for j in range(ambient.rank))] for k in range(ambient.rank)}
        amb_neg = {k + 1: ambient.root_vectors[tuple(-int(j == k) for j in range(ambient.rank))] for k in range(ambient.rank)}
        E = [sum(amb_simple[k] for k in orb) % P for orb in orbits]
        F = [sum(amb_neg[k] for k in orb) % P for orb in orbits]
        self.H = np.array([sum(ambient.H[k - 1] for k in orb) % P for orb in orbits], dtype=np.int64)
        rs = root_system_data(series, rank)
        posset = set(rs.positive_roots)
        vectors: dict[tuple[int, ...], np.ndarray] = {}
        for sign, gens in ((1, E), (-1, F)):
            layer = []
            for i in range(rank):
                r = tuple(sign * int(j == i) for j in range(rank))
                vectors[r] = gens[i]
                layer.append(r)
            while layer:
                nxt = []
                for r in layer:
                    for i in range(rank):
                        s = list(r)
                        s[i] += sign
                        s = tuple(s)
                        if s in vectors or tuple(sign * c for c in s) not in posset:
                            continue
                        v = ambient.bracket(gens[i], vectors[r])
                        if not v.any():
                            raise ArithmeticError(f"bracket vanished building root {s}")
                        vectors[s] = v
                        nxt.append(s)
                layer = nxt
        self.root_vectors = vectors

    def bracket(self, a, b):
        return self.ambient.bracket(a, b)

    def ad_on_basis(self, x):
        return modp.matmul(self.ambient.ad(x), self.basis.T)


FOLDINGS = {
    "F4": ("E6", [[2], [4], [3, 5], [1, 6]]),
    "G2": ("D4", [[1, 3, 4], [2]]),
}


@lru_cache(maxsize=None)
def model_for(series: str, rank: int) -> LieModel:
    if series in ("A", "B", "C", "D"):
        return MatrixModel(series, rank)
    if series in ("E6", "E7", "E8"):
        return KacModel(series, rank)
    if series in FOLDINGS:
        amb, orbits = FOLDINGS[series]
        amb_rank = 4 if amb == "D4" else 6
        return FoldedModel(series, rank, KacModel(amb[0] if amb == "D4" else amb, amb_rank), orbits)
    raise ValueError(series)
