"""Dimensions of determinantal varieties of bounded-rank matrices.

* Generic(r, N): N x N matrices of rank <= r, dimension r(2N - r).
* Traceless(r, N): the same intersected with sl_N, one less.
* Skew(2p, N): skew-symmetric N x N matrices of rank <= 2p, dimension p(2N - 2p - 1).
* SymAsSp(m, 2n): symmetric 2n x 2n matrices of rank <= m, dimension 2n*m - m(m-1)/2.
  Through the antidiagonal symplectic form these are the elements of sp_2n of rank <= m.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class DetKind:
    kind: str  # "Generic", "Traceless", "Skew", "SymAsSp"
    r: int
    N: int

    def __post_init__(self) -> None:
        if self.kind not in ("Generic", "Traceless", "Skew", "SymAsSp"):
            raise ValueError(f"unknown determinantal kind {self.kind!r}")
        if self.N < 1 or self.r < 0 or self.r > self.N:
            raise ValueError(f"rank bound {self.r} outside [0, {self.N}]")
        if self.kind == "Skew" and self.r % 2:
            raise ValueError("skew-symmetric rank bound must be even")
        if self.kind == "SymAsSp" and self.N % 2:
            raise ValueError("symplectic model needs an even size")


def dim_determinantal(k: DetKind) -> int:
    r, N = k.r, k.N
    if k.kind == "Generic":
        return r * (2 * N - r)
    if k.kind == "Traceless":
        return max(r * (2 * N - r) - 1, 0)
    if k.kind == "Skew":
        p = r // 2
        return p * (2 * N - 2 * p - 1)
    return r * N - r * (r - 1) // 2
