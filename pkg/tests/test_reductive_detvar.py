from __future__ import annotations

import pytest

from nilsec.detvar import DetKind, dim_determinantal
from nilsec.errors import ParseError
from nilsec.reductive import ReductiveType, parse_reductive


def test_parse_and_print():
    assert str(parse_reductive("A3+t1")) == "A3+t1"
    assert parse_reductive("(A1)^3") == parse_reductive("3A1")
    assert str(parse_reductive("D4+A1")) == "D4+A1"
    assert parse_reductive("C2") == parse_reductive("B2")
    assert parse_reductive("0").is_zero
    with pytest.raises(ParseError):
        parse_reductive("Q5")


def test_normalisation():
    assert ReductiveType.so(2) == ReductiveType.t(1)
    assert ReductiveType.so(3) == ReductiveType.sl(2)
    assert ReductiveType.so(4) == ReductiveType.sl(2).times(2)
    assert ReductiveType.so(6) == ReductiveType.sl(4)
    assert ReductiveType.gl(5).dim == 25 and ReductiveType.gl(5).rank == 5


def test_json_round_trip():
    r = parse_reductive("D4+A1+t2")
    assert ReductiveType.from_json(r.to_json()) == r
    assert r.dim == 28 + 3 + 2 and r.rank == 7


def test_determinantal():
    assert dim_determinantal(DetKind("Generic", 2, 3)) == 8
    assert dim_determinantal(DetKind("Traceless", 4, 9)) == 55
    assert dim_determinantal(DetKind("Skew", 8, 11)) == 52
    assert dim_determinantal(DetKind("SymAsSp", 2, 8)) == 15
    # full rank recovers the ambient spaces
    assert dim_determinantal(DetKind("Skew", 10, 11)) == 55
    assert dim_determinantal(DetKind("SymAsSp", 8, 8)) == 36
    for bad in (("Skew", 3, 6), ("SymAsSp", 2, 7), ("Generic", 5, 3), ("Nope", 1, 1)):
        with pytest.raises(ValueError):
            DetKind(*bad)
