from __future__ import annotations

from fractions import Fraction

import pytest

from nilsec.errors import UndefinedClassError, UnsupportedOperationError
from nilsec.orbits import Orbit, dim_orbit, enumerate_orbits, minimal_orbit, parse_algebra, parse_orbit
from nilsec.partitions import Partition
from nilsec.reductive import ReductiveType, parse_reductive
from nilsec.rootsys import LieType, dim_algebra
from nilsec.secant import (
    DetSymplecticSym,
    DetTraceless,
    E6CompleteIntersection,
    SecantReport,
    build_secant_report,
    characteristic_in_t_O,
    classify_upsilon,
    cs_descriptor,
    descriptor_from_json,
    descriptor_to_json,
    dim_cs,
    enhanced_diagram,
    forbidden_ranks,
    generic_stabilizer,
    higher_secant_dim_sp_min,
    is_defective,
    maximal_defective,
    rank_complexity,
    secant_defect,
    t_O_basis,
    tilde_orbit,
    upsilon_isomorphism,
)


def o(text):
    return parse_orbit(text)


def test_classes():
    assert str(classify_upsilon(o("sl9:[3,1^6]"))) == "J(2)"
    assert str(classify_upsilon(o("sp8:[2^4]"))) == "Max"
    assert str(classify_upsilon(o("so11:[2^4,1^3]"))) == "Spherical(2)"
    assert str(classify_upsilon(o("so11:[3,1^8]"))) == "J(1)"
    with pytest.raises(UndefinedClassError):
        classify_upsilon(o("sl4:[1^4]"))
    with pytest.raises(UnsupportedOperationError):
        classify_upsilon(o("E6:A1"))


def test_generic_stabilizer():
    assert generic_stabilizer(o("sl9:[3,1^6]")) == ReductiveType.gl(5)
    assert generic_stabilizer(o("so11:[2^4,1^3]")) == ReductiveType.sl(2).times(2) + ReductiveType.so(3)
    assert generic_stabilizer(o("E7:2A1")) == parse_reductive("D4+A1")
    assert generic_stabilizer(o("E7:A2+A1")).is_zero
    assert generic_stabilizer(o("sl8:[2^4]")) == ReductiveType.t(3)
    t = LieType("C", 3)
    assert generic_stabilizer(Orbit(t, Partition((1,) * 6))).dim == dim_algebra(t)


def test_rank_complexity():
    assert rank_complexity(o("sl9:[3,1^6]")) == (3, 1)
    assert rank_complexity(o("E6:A2")) == (4, 2)
    assert rank_complexity(o("sp8:[2^4]")) == (4, 0)
    with pytest.raises(UndefinedClassError):
        rank_complexity(o("sp8:[1^8]"))


def test_dims_and_defects():
    assert dim_cs(o("so11:[2^4,1^3]")) == 46
    assert secant_defect(o("so11:[2^4,1^3]")) == 2
    assert not is_defective(o("sl4:[4]")) and dim_cs(o("sl4:[4]")) == 15
    assert secant_defect(o("sl4:[4]")) is None
    assert dim_cs(o("sl4:[1^4]")) == 0
    for name in ("sl3", "sl9", "sp4", "so7", "so12", "E6", "E7", "E8", "F4", "G2"):
        assert secant_defect(minimal_orbit(parse_algebra(name))) == 1


def test_descriptors():
    d = cs_descriptor(o("sp8:[2^2,1^4]"))
    assert str(classify_upsilon(o("sp8:[2^2,1^4]"))) == "J(2)"
    assert d == DetSymplecticSym(4, 8) and d.dim == 26
    d = cs_descriptor(o("sl8:[2^4]"))
    assert d == DetTraceless(8, 8, (3, 5, 7)) and d.dim == 60
    assert cs_descriptor(o("E6:3A1")) == E6CompleteIntersection((5, 9))
    assert cs_descriptor(o("sl9:[3,1^6]")).dim == 55
    d = cs_descriptor(o("E7:2A1"))
    assert d.kind == "DixmierClosure" and d.dim == dim_cs(o("E7:2A1"))
    assert cs_descriptor(o("sl4:[4]")).kind == "FullAlgebra"


def test_descriptor_json():
    for name in ("sl8", "sp8", "so11", "so12", "E6", "E7", "F4"):
        for x in enumerate_orbits(parse_algebra(name))[1:]:
            d = cs_descriptor(x)
            assert descriptor_from_json(descriptor_to_json(d)) == d


def test_enhanced_diagrams():
    d = enhanced_diagram(o("sl9:[3,1^6]"))
    assert d.black == {3, 4, 5, 6} and d.arcs == {(2, 7)}
    d = enhanced_diagram(o("so10:[3,1^7]"))  # n - 2m = 3
    assert d.black == {3, 4, 5} and not d.arcs
    d = enhanced_diagram(o("so14:[5,1^9]"))
    assert d.black == {5, 6, 7}
    d = enhanced_diagram(o("so10:[5,1^5]"))  # n - 2m = 1
    assert not d.black and d.arcs == {(4, 5)}
    d = enhanced_diagram(o("E6:2A1"))
    assert d.black == {3, 4, 5} and d.arcs == {(1, 6)}
    assert not enhanced_diagram(o("E6:A2+A1")).black
    assert enhanced_diagram(o("so8:[2^4]:I")).black == {1, 3}
    assert enhanced_diagram(o("so8:[2^4]:II")).black == {1, 4}


def test_t_O():
    assert t_O_basis(o("so11:[2^4,1^3]")) == [
        tuple(map(Fraction, (1, 1, 0, 0, 0))),
        tuple(map(Fraction, (0, 0, 1, 1, 0))),
    ]
    assert len(t_O_basis(o("E7:(3A1)''"))) == 3
    for name in ("sl8", "sp8", "so10", "so11", "E6", "E7", "F4", "G2"):
        for x in enumerate_orbits(parse_algebra(name))[1:]:
            assert characteristic_in_t_O(x), str(x)


def test_tilde():
    til = tilde_orbit(o("sl9:[3,1^6]"))
    assert til == o("sl9:[5,1^4]") and dim_orbit(til) == 52
    assert tilde_orbit(o("G2:A1")) == o("G2:G2(a1)")
    assert tilde_orbit(o("so8:[2^4]:I")) == o("so8:[4^2]:I")
    assert tilde_orbit(o("so8:[2^4]:II")) == o("so8:[4^2]:II")
    assert tilde_orbit(o("so11:[2^4,1^3]")) == o("so11:[5^2,1]")
    assert tilde_orbit(o("E7:(3A1)''")) == o("E7:(A5)''")


def test_maximal_defective():
    assert maximal_defective(LieType("A", 3)) == [o("sl4:[2^2]")]
    assert maximal_defective(LieType("D", 7)) == [o("so14:[7,1^7]")]
    assert {x.label for x in maximal_defective(LieType.exceptional("E7"))} == {"A2", "(3A1)''"}
    assert {x.label for x in maximal_defective(LieType.exceptional("E8"))} == {"A2"}


def test_forbidden_ranks():
    assert forbidden_ranks(parse_algebra("sl9")) == {6}
    assert forbidden_ranks(parse_algebra("sl10")) == {6, 8}
    assert forbidden_ranks(parse_algebra("so16")) == {5, 7}
    assert forbidden_ranks(parse_algebra("sp12")) == set()
    with pytest.raises(UnsupportedOperationError):
        forbidden_ranks(LieType.exceptional("E6"))


def test_upsilon_isomorphism():
    t = parse_algebra("sl9")
    iso = upsilon_isomorphism(t, classify_upsilon(o("sl9:[4,1^5]")))
    assert iso.ok and iso.target_series == "A" and iso.target_size == 3
    assert {str(src.partition): str(p) for src, p in iso.mapping} == {"4,1^5": "3", "3,2,1^4": "2,1"}
    with pytest.raises(UnsupportedOperationError):
        upsilon_isomorphism(t, classify_upsilon(o("sl9:[2,1^7]")))


def test_higher_secant():
    assert higher_secant_dim_sp_min(2, 2) == 7 == dim_cs(o("sp4:[2,1^2]"))
    assert higher_secant_dim_sp_min(3, 3) == 15
    assert higher_secant_dim_sp_min(4, 8) == 36 == higher_secant_dim_sp_min(4, 20)
    assert higher_secant_dim_sp_min(5, 1) == dim_orbit(minimal_orbit(LieType("C", 5)))
    with pytest.raises(ValueError):
        higher_secant_dim_sp_min(0, 1)


def test_reports():
    rep = build_secant_report(o("sl9:[3,1^6]"))
    assert (rep.r, rep.c, rep.dim_cs, rep.defect) == (3, 1, 55, 5)
    assert rep.s_star == ReductiveType.gl(5) and rep.tilde == o("sl9:[5,1^4]")
    rep = build_secant_report(o("E6:A1"))
    assert (rep.orbit_dim, rep.r, rep.c, str(rep.s_star), rep.defect) == (22, 1, 0, "A5", 1)
    rep = build_secant_report(o("sp8:[2^4]"))
    assert (rep.r, rep.c, rep.dim_cs, rep.defective) == (4, 0, 36, False) and rep.s_star.is_zero
    assert SecantReport.from_json(rep.to_json()) == rep
    with pytest.raises(UndefinedClassError):
        build_secant_report(o("E6:0"))
