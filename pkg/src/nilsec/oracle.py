"""Independent numerical oracles over F_p.

These routines never consult the closed formulas of ``secant``: they
work directly inside a concrete model of the Lie algebra.

* ``is_characteristic`` decides whether dominant marks are a weighted
  Dynkin diagram: h is the characteristic of a generic e in g(2) iff
  h lies in [e, g(-2)] (then (h, e, f) is an sl2-triple).
* ``generic_stabilizer`` computes dim and rank of g^x ∩ g^y for two
  random points x, y of an orbit.
* ``richardson_signature`` takes the Levi subalgebra centralizing a
  generic element of a toral slice and returns the rank sequence of a
  random element of the nilradical.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

import numpy as np

from . import modp
from .liemodels import LieModel, MatrixModel, jordan_type, model_for
from .rootsys import LieType, graded_dims, simple_roots_epsilon

DEFAULT_SEED = 20240611


def _rng(seed: int | None) -> np.random.Generator:
    return np.random.default_rng(DEFAULT_SEED if seed is None else seed)


def model(lie_type: LieType) -> LieModel:
    return model_for(lie_type.series, lie_type.rank)


def _plausible(lie_type: LieType, marks) -> bool:
    """Necessary condition from sl2 theory: dim g(k) >= dim g(k+2) for k >= 0."""
    g = graded_dims(lie_type, marks)
    top = max(g)
    return all(g.get(k, 0) >= g.get(k + 2, 0) for k in range(0, top + 1))


def is_characteristic(lie_type: LieType, marks: Sequence[int], seed: int | None = None) -> bool:
    marks = tuple(marks)
    if not any(marks):
        return True
    if not _plausible(lie_type, marks):
        return False
    m = model(lie_type)
    rng = _rng(seed)
    e = m.random_in_degree(marks, 2, rng)
    if not e.any():
        return False
    h = m.characteristic(marks)
    images = [m.bracket(e, v) for r, v in m.root_vectors.items() if m.degree(r, marks) == -2]
    base = modp.rank(np.array(images))
    return modp.rank(np.array(images + [h])) == base


def enumerate_characteristics(lie_type: LieType, seed: int | None = None) -> list[tuple[int, ...]]:
    """All weighted Dynkin diagrams of the algebra, by exhaustive search over {0,1,2}^rank."""
    return [
        marks
        for marks in product((0, 1, 2), repeat=lie_type.rank)
        if is_characteristic(lie_type, marks, seed)
    ]


@dataclass(frozen=True)
class StabilizerData:
    dim: int
    rank: int
    orbit_dim: int


def generic_stabilizer(lie_type: LieType, marks: Sequence[int], seed: int | None = None) -> StabilizerData:
    """dim and rank of the stabilizer of a generic pair of points of the orbit with these marks."""
    m = model(lie_type)
    rng = _rng(seed)
    x = m.random_in_degree(tuple(marks), 2, rng)
    y = m.random_conjugate(x, rng)
    ax = m.ad_on_basis(x)
    ay = m.ad_on_basis(y)
    orbit_dim = modp.rank(ax)
    ker = modp.nullspace(np.vstack([ax, ay]))
    k = ker.shape[0]
    if k == 0:
        return StabilizerData(0, 0, orbit_dim)
    elems = m.coefficients_to_ambient(ker)
    z = modp.matmul(modp.random_vector(rng, k), elems)
    az = modp.matmul(m.ad_on_basis(z), ker.T)
    return StabilizerData(k, k - modp.rank(az), orbit_dim)


def _simple_values(lie_type: LieType, t: Sequence[Fraction]) -> list[Fraction]:
    """alpha_i(t) for a CartanVector t (up to a positive factor per node, which keeps signs)."""
    n = lie_type.rank
    if lie_type.is_classical:
        simple = simple_roots_epsilon(lie_type.series, n)
        return [sum((a * b for a, b in zip(s, t)), Fraction(0)) for s in simple]
    cm = model(lie_type).cartan
    return [sum((t[k] * cm[k][i] for k in range(n)), Fraction(0)) for i in range(n)]


def nilradical_roots(lie_type: LieType, slice_basis: Sequence[Sequence[Fraction]], seed: int | None = None):
    """Roots positive (resp. zero) on a generic element of span(slice_basis)."""
    rng = _rng(seed)
    coeffs = [int(c) for c in rng.integers(1, 10**6, size=len(slice_basis))]
    dim = len(slice_basis[0]) if slice_basis else 0
    t = [sum((c * Fraction(v[i]) for c, v in zip(coeffs, slice_basis)), Fraction(0)) for i in range(dim)]
    if not slice_basis:
        t = [Fraction(0)] * (lie_type.N if lie_type.series == "A" else lie_type.rank)
    vals = _simple_values(lie_type, t)
    m = model(lie_type)
    positive, levi = [], []
    for r in m.root_vectors:
        v = sum(c * a for c, a in zip(r, vals))
        if v > 0:
            positive.append(r)
        elif v == 0:
            levi.append(r)
    return positive, levi


def richardson_element(lie_type: LieType, slice_basis, seed: int | None = None) -> np.ndarray:
    rng = _rng(seed)
    pos, _ = nilradical_roots(lie_type, slice_basis, seed)
    m = model(lie_type)
    x = np.zeros(m.ambient_dim, dtype=np.int64)
    for r in pos:
        x = (x + int(rng.integers(1, modp.P)) * m.root_vectors[r]) % modp.P
    return x


def richardson_partition(lie_type: LieType, slice_basis, seed: int | None = None) -> tuple[int, ...]:
    """Jordan type in the natural representation of the Richardson orbit (classical types)."""
    m = model(lie_type)
    assert isinstance(m, MatrixModel)
    return jordan_type(m.power_ranks(richardson_element(lie_type, slice_basis, seed)))


def ad_signature(lie_type: LieType, x: np.ndarray) -> tuple[int, ...]:
    """rank of (ad x)^k on g for k = 1, 2, ... until zero; an orbit invariant."""
    m = model(lie_type)
    cur = m.basis
    out = []
    while True:
        cur = np.array([m.bracket(x, v) for v in cur])
        r = modp.rank(cur)
        out.append(r)
        if r == 0 or len(out) > 2 * m.ambient_dim:
            return tuple(out)


def orbit_signature(lie_type: LieType, marks, seed: int | None = None) -> tuple[int, ...]:
    m = model(lie_type)
    return ad_signature(lie_type, m.random_in_degree(tuple(marks), 2, _rng(seed)))


def richardson_signature(lie_type: LieType, slice_basis, seed: int | None = None) -> tuple[int, ...]:
    return ad_signature(lie_type, richardson_element(lie_type, slice_basis, seed))


def isotropic_family(lie_type: LieType, x: np.ndarray, k: int) -> int:
    """Family (0 or 1) of the maximal isotropic subspace Im(x^k) of so_2n, relative to span(e_1..e_n).

    Two maximal isotropic subspaces L, L0 lie in the same family iff n - dim(L & L0) is even;
    with L0 the first n coordinates this is rank of the last n rows of x^k, mod 2.
    """
    m = model(lie_type)
    assert isinstance(m, MatrixModel) and lie_type.series == "D"
    n = lie_type.rank
    X = m._mat(x) % modp.P
    cur = np.eye(m.N, dtype=np.int64)
    for _ in range(k):
        cur = cur @ X % modp.P
    if modp.rank(cur) != n:
        raise ValueError("image is not maximal isotropic")
    return modp.rank(cur[n:, :]) % 2


def orbit_family(lie_type: LieType, marks, k: int, seed: int | None = None) -> int:
    x = model(lie_type).random_in_degree(tuple(marks), 2, _rng(seed))
    return isotropic_family(lie_type, x, k)


def richardson_family(lie_type: LieType, slice_basis, k: int, seed: int | None = None) -> int:
    return isotropic_family(lie_type, richardson_element(lie_type, slice_basis, seed), k)


def e7_minuscule_ranks(marks: Sequence[int], seed: int | None = None) -> tuple[int, ...]:
    """rank of x^k on the 56-dimensional representation, for x generic in the E7 orbit with these marks.

    E7 sits in E8 on the nodes 1..7 and the E8 root spaces with alpha_8
    coefficient 1 form its 56-dimensional module.  A generic element of
    g(2) lies in the orbit, so no conjugation is needed.  Ranks of x^k are
    lower semicontinuous, which makes them closure certificates.
    """
    rng = _rng(seed)
    m8 = model_for("E8", 8)
    x = np.zeros(m8.ambient_dim, dtype=np.int64)
    for r, v in m8.root_vectors.items():
        if r[7] == 0 and sum(c * k for c, k in zip(r[:7], marks)) == 2:
            x = (x + int(rng.integers(1, modp.P)) * v) % modp.P
    idx = [int(np.flatnonzero(v)[0]) for r, v in sorted(m8.root_vectors.items()) if r[7] == 1]
    M = m8.ad(x)[np.ix_(idx, idx)] % modp.P
    out, cur = [], np.eye(len(idx), dtype=np.int64)
    while True:
        cur = cur @ M % modp.P
        k = modp.rank(cur)
        out.append(k)
        if k == 0:
            return tuple(out)
