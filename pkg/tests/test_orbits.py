from __future__ import annotations

import pytest

from nilsec.errors import ParseError, UnsupportedOperationError
from nilsec.orbits import (
    Orbit,
    closure_leq,
    dim_orbit,
    enumerate_orbits,
    hasse,
    height,
    is_spherical,
    max_spherical,
    minimal_orbit,
    parse_algebra,
    parse_orbit,
    partition_dim,
    regular_orbit,
    weighted_dynkin,
)
from nilsec.partitions import Partition
from nilsec.rootsys import LieType, dim_algebra


def test_parse_algebra():
    assert parse_algebra("sl7") == LieType("A", 6)
    assert parse_algebra("so11") == LieType("B", 5)
    assert parse_algebra("so8") == LieType("D", 4)
    assert parse_algebra("sp8") == LieType("C", 4)
    assert parse_algebra("C4") == LieType("C", 4)
    assert parse_algebra("E7") == LieType.exceptional("E7")
    for bad in ("sp7", "so4", "H4", "sl"):
        with pytest.raises(ParseError):
            parse_algebra(bad)


def test_parse_orbit():
    o = parse_orbit("so8:[2^4]:I")
    assert o.tag == "I" and str(o) == "so8:[2^4]:I"
    assert parse_orbit("sl7:3,2,2") == Orbit(LieType("A", 6), Partition((3, 2, 2)))
    assert parse_orbit("E7:(3A1)''").label == "(3A1)''"
    assert parse_orbit("F4:~A1").label == "~A1"
    for bad in ("sl7", "so8:[2^4]", "sp4:[3,1]", "E6:A9", "sl7:[3,3]"):
        with pytest.raises(ParseError):
            parse_orbit(bad)


def test_counts():
    counts = {"sl6": 11, "sp4": 4, "so8": 12, "so7": 7, "G2": 5, "F4": 16, "E6": 21, "E7": 45, "E8": 70}
    for name, n in counts.items():
        assert len(enumerate_orbits(parse_algebra(name))) == n


def test_dimensions_agree():
    for name in ("sl8", "sp10", "so12", "so13"):
        for o in enumerate_orbits(parse_algebra(name)):
            assert dim_orbit(o) == partition_dim(o)


def test_known_values():
    o = parse_orbit("so11:[2^4,1^3]")
    assert dim_orbit(o) == 24
    assert weighted_dynkin(parse_orbit("sl7:[3,2,2]")) == (1, 0, 1, 1, 0, 1)
    assert weighted_dynkin(parse_orbit("so8:[2^4]:I")) == (0, 0, 0, 2)
    assert weighted_dynkin(parse_orbit("so8:[2^4]:II")) == (0, 0, 2, 0)
    t = LieType.exceptional("E8")
    assert dim_orbit(minimal_orbit(t)) == 58
    assert dim_orbit(regular_orbit(t)) == dim_algebra(t) - 8


def test_spherical_by_height():
    for name in ("sl7", "sp8", "so11", "so12", "E6", "F4"):
        for o in enumerate_orbits(parse_algebra(name)):
            assert is_spherical(o) == (height(o) <= 3)


def test_max_spherical():
    for name in ("sl7", "sp8", "so9", "so10", "so11", "so12", "E7", "G2"):
        t = parse_algebra(name)
        sph = [o for o in enumerate_orbits(t) if is_spherical(o)]
        assert max(dim_orbit(o) for o in sph) == dim_orbit(max_spherical(t))


def test_very_even_closure():
    t = LieType("D", 4)
    a, b = Orbit(t, Partition((2,) * 4), "I"), Orbit(t, Partition((2,) * 4), "II")
    c, d = Orbit(t, Partition((4, 4)), "I"), Orbit(t, Partition((4, 4)), "II")
    assert not closure_leq(a, b) and not closure_leq(b, a)
    assert closure_leq(a, c) and closure_leq(a, d)
    assert not closure_leq(c, d)


def test_hasse_is_reduction():
    t = LieType("A", 5)
    h = hasse(t)
    nodes = h.nodes
    expected = {
        (a, b) for a in nodes for b in nodes
        if a != b and closure_leq(a, b) and not any(c not in (a, b) and closure_leq(a, c) and closure_leq(c, b) for c in nodes)
    }
    assert set(h.covers) == expected
    with pytest.raises(UnsupportedOperationError):
        hasse(LieType.exceptional("G2"))
