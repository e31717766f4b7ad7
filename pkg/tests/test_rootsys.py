from __future__ import annotations

from fractions import Fraction

import pytest

from nilsec.errors import DegeneracyError, InvalidMarksError, InvalidTypeError
from nilsec.rootsys import (
    LieType,
    build_root_system,
    cartan_form,
    characteristic_vector,
    dim_algebra,
    dim_borel,
    graded_dims,
    inner,
    orbit_dim_from_marks,
    orthocomplement_in_cartan,
    simple_coroot_vector,
    subdiagram_components,
)

ALL = [LieType("A", 6), LieType("B", 5), LieType("C", 4), LieType("D", 5)] + [
    LieType.exceptional(x) for x in ("E6", "E7", "E8", "F4", "G2")
]


def test_dimensions():
    dims = {"sl7": 48, "so11": 55, "sp8": 36, "so10": 45, "E6": 78, "E7": 133, "E8": 248, "F4": 52, "G2": 14}
    for t in ALL:
        assert dim_algebra(t) == dims[t.name]
        rs = build_root_system(t)
        assert dim_algebra(t) == t.rank + 2 * len(rs.positive_roots)
        assert dim_borel(t) == t.rank + len(rs.positive_roots)


def test_invalid_types():
    for series, rank in (("A", 0), ("B", 2), ("C", 1), ("D", 3), ("E6", 7), ("X", 3)):
        with pytest.raises(InvalidTypeError):
            LieType(series, rank)


def test_names():
    assert LieType("A", 6).name == "sl7"
    assert LieType("B", 5).name == "so11"
    assert LieType("C", 4).name == "sp8"
    assert LieType("D", 4).name == "so8"
    assert LieType.exceptional("F4").cartan_name == "F4"


def test_highest_root():
    assert build_root_system(LieType.exceptional("E8")).highest_root == (2, 3, 4, 6, 5, 4, 3, 2)
    assert build_root_system(LieType.exceptional("G2")).highest_root == (3, 2)
    assert build_root_system(LieType("C", 3)).highest_root == (2, 2, 1)
    assert build_root_system(LieType("B", 3)).highest_root == (1, 2, 2)


def test_cartan_convention():
    # a_ij = <alpha_i^vee, alpha_j>; in B3 alpha_2 is long and alpha_3 short
    a = build_root_system(LieType("B", 3)).cartan_matrix
    assert a[1][2] == -1 and a[2][1] == -2
    g = build_root_system(LieType.exceptional("G2")).cartan_matrix
    assert sorted((g[0][1], g[1][0])) == [-3, -1]


def test_involutions():
    assert build_root_system(LieType.exceptional("E6")).involution == (6, 2, 5, 4, 3, 1)
    assert build_root_system(LieType("D", 5)).involution == (1, 2, 3, 5, 4)
    assert build_root_system(LieType("D", 4)).involution == (1, 2, 3, 4)
    assert build_root_system(LieType("A", 4)).involution == (4, 3, 2, 1)
    for x in ("E7", "E8", "F4", "G2"):
        t = LieType.exceptional(x)
        assert build_root_system(t).involution == tuple(range(1, t.rank + 1))


def test_graded_dims():
    g = graded_dims(LieType("A", 6), (1, 0, 1, 1, 0, 1))
    assert g[0] == 10 and sum(g.values()) == 48
    assert graded_dims(LieType("C", 4), (0, 1, 0, 0))[2] == 3
    # the regular orbit: marks all 2
    t = LieType.exceptional("E8")
    assert orbit_dim_from_marks(t, (2,) * 8) == 240


def test_bad_marks():
    with pytest.raises(InvalidMarksError):
        graded_dims(LieType("A", 3), (1, 0))
    with pytest.raises(InvalidMarksError):
        graded_dims(LieType("A", 3), (3, 0, 0))


def test_characteristic_vector():
    t = LieType("A", 2)
    assert characteristic_vector(t, (2, 2)) == (2, 0, -2)
    t = LieType("C", 2)
    assert characteristic_vector(t, (0, 2)) == (1, 1)


def test_orthocomplement():
    t = LieType("B", 5)
    vecs = [simple_coroot_vector(t, i) for i in (1, 3, 5)]
    basis = orthocomplement_in_cartan(t, vecs)
    assert len(basis) == 2
    assert all(inner(t, u, v) == 0 for u in basis for v in vecs)
    t = LieType("A", 3)
    assert len(orthocomplement_in_cartan(t, [])) == 3
    with pytest.raises(DegeneracyError):
        orthocomplement_in_cartan(t, [simple_coroot_vector(t, 1)] * 2)


def test_exceptional_form_is_coroot_gram():
    f = cartan_form("G2", 2)
    assert f[0][0] * f[1][1] != f[0][1] ** 2
    assert all(f[i][j] == f[j][i] for i in range(2) for j in range(2))
    assert f[0][0] in (Fraction(2), Fraction(2, 3), Fraction(6))


def test_subdiagrams():
    comps = subdiagram_components("E7", 7, (2, 3, 4, 5))
    assert [(c.series, c.rank) for c in comps] == [("D", 4)]
    comps = subdiagram_components("E7", 7, (2, 5, 7))
    assert [(c.series, c.rank) for c in comps] == [("A", 1)] * 3
    comps = subdiagram_components("F4", 4, (2, 3))
    assert [(c.series, c.rank) for c in comps] == [("B", 2)]
    comps = subdiagram_components("F4", 4, (2, 3, 4))
    assert [(c.series, c.rank) for c in comps] == [("C", 3)]
    comps = subdiagram_components("E8", 8, range(1, 8))
    assert [(c.series, c.rank) for c in comps] == [("E7", 7)]
