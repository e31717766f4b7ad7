"""Linear algebra over the prime field F_p with numpy int64 arrays.

Ranks over F_p are lower bounds for ranks over Q; with random inputs and
p close to 2^25 a drop in rank has probability of order dim/p.  The
oracles in this package only use these routines for cross-checks of
results that are also derived by closed formulas.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

P = 33554393  # largest prime below 2**25, so products of two residues fit in int64


def to_mod(x: int | Fraction) -> int:
    """Reduce an integer or a rational number with denominator prime to P."""
    if isinstance(x, Fraction):
        return (x.numerator % P) * pow(x.denominator % P, P - 2, P) % P
    return int(x) % P


def inv(a: int) -> int:
    return pow(int(a) % P, P - 2, P)


def rref(mat: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod P and the pivot columns."""
    m = np.array(mat, dtype=np.int64) % P
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        m[r] = m[r] * inv(m[r, c]) % P
        col = m[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col)[0]
        if nzr.size:
            m[nzr] = (m[nzr] - np.outer(col[nzr], m[r]) % P) % P
        pivots.append(c)
        r += 1
    return m, pivots


def rank(mat: np.ndarray) -> int:
    mat = np.asarray(mat)
    if mat.size == 0:
        return 0
    return len(rref(mat)[1])


def nullspace(mat: np.ndarray) -> np.ndarray:
    """Rows form a basis of {x : mat @ x = 0 mod P}."""
    mat = np.asarray(mat, dtype=np.int64)
    cols = mat.shape[1]
    if mat.shape[0] == 0:
        return np.eye(cols, dtype=np.int64)
    m, pivots = rref(mat)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for r, c in enumerate(pivots):
            basis[k, c] = (-m[r, f]) % P
    return basis


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Product mod P.  Inner dimensions stay far below 2^13, so int64 cannot overflow."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if a.shape[-1] > 8000:
        raise ValueError("inner dimension too large for exact int64 accumulation")
    return (a % P) @ (b % P) % P


def random_vector(rng: np.random.Generator, size: int) -> np.ndarray:
    return rng.integers(1, P, size=size, dtype=np.int64)
