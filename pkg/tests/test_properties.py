from __future__ import annotations

from hypothesis import given, settings
from hypothesis import strategies as st

from nilsec.liemodels import jordan_type
from nilsec.orbits import closure_leq, dim_orbit, enumerate_orbits, partition_dim
from nilsec.partitions import Partition, dominance_leq, format_partition, parse_partition, partitions_of, transpose
from nilsec.reductive import ReductiveType, parse_reductive
from nilsec.rootsys import LieType, dim_algebra, inner, orthocomplement_in_cartan, simple_coroot_vector
from nilsec.secant import (
    SecantReport,
    build_secant_report,
    check_embedding,
    dim_cs,
    higher_secant_dim_sp_min,
    rank_complexity,
)

partitions = st.lists(st.integers(1, 7), min_size=1, max_size=9).map(Partition.from_parts)

classical = st.one_of(
    st.integers(3, 11).map(lambda n: LieType("A", n)),
    st.integers(3, 8).map(lambda n: LieType("B", n)),
    st.integers(2, 8).map(lambda n: LieType("C", n)),
    st.integers(4, 8).map(lambda n: LieType("D", n)),
)
any_type = st.one_of(classical, st.sampled_from(["E6", "E7", "E8", "F4", "G2"]).map(LieType.exceptional))


@st.composite
def orbit_of(draw, types=any_type):
    t = draw(types)
    orbits = enumerate_orbits(t)
    return orbits[draw(st.integers(1, len(orbits) - 1))]


@st.composite
def orbit_pair(draw):
    t = draw(classical)
    orbits = enumerate_orbits(t)
    i = draw(st.integers(1, len(orbits) - 1))
    j = draw(st.integers(1, len(orbits) - 1))
    return orbits[i], orbits[j]


@given(partitions)
def test_partition_text_round_trip(p):
    assert parse_partition(format_partition(p)) == p


@given(partitions)
def test_transpose_involution(p):
    assert transpose(transpose(p)) == p
    assert transpose(p).total == p.total


@given(st.integers(1, 9).flatmap(lambda n: st.tuples(st.sampled_from(list(partitions_of(n))),
                                                    st.sampled_from(list(partitions_of(n))))))
def test_transpose_reverses_dominance(pair):
    a, b = pair
    assert dominance_leq(a, b) == dominance_leq(transpose(b), transpose(a))


@given(partitions)
def test_jordan_type_from_power_ranks(p):
    n = p.total
    ranks = [sum(max(x - k, 0) for x in p.parts) for k in range(p.parts[0] + 1)]
    assert ranks[0] == n and ranks[-1] == 0
    assert jordan_type(ranks) == p.parts


@given(st.lists(st.tuples(st.sampled_from(["A", "B", "C", "D"]), st.integers(1, 6)), max_size=4), st.integers(0, 3))
def test_reductive_text_round_trip(factors, torus):
    r = ReductiveType(tuple(factors), torus)
    assert parse_reductive(str(r)) == r
    assert ReductiveType.from_json(r.to_json()) == r


@settings(max_examples=60, deadline=None)
@given(orbit_of())
def test_secant_identities(o):
    rep = build_secant_report(o)  # raises if any identity fails
    t = o.algebra
    assert rep.dim_cs == 2 * rep.orbit_dim - 2 * rep.c - rep.r
    assert rep.r == t.rank - rep.s_star.rank
    assert rep.descriptor.dim == rep.dim_cs <= dim_algebra(t)
    assert dim_orbit(rep.tilde) == rep.dim_cs - rep.r
    assert rep.orbit_dim <= rep.dim_cs
    assert not check_embedding(o)
    assert SecantReport.from_json(rep.to_json()) == rep


@settings(max_examples=60, deadline=None)
@given(orbit_of(classical))
def test_partition_dim_matches_marks(o):
    assert partition_dim(o) == dim_orbit(o)


@settings(max_examples=80, deadline=None)
@given(orbit_pair())
def test_cs_monotone_in_closure(pair):
    a, b = pair
    if closure_leq(a, b):
        assert dim_orbit(a) <= dim_orbit(b)
        assert dim_cs(a) <= dim_cs(b)
        assert rank_complexity(a)[0] <= rank_complexity(b)[0]


@given(any_type, st.data())
def test_orthocomplement_dimension(t, data):
    nodes = data.draw(st.sets(st.integers(1, t.rank), max_size=t.rank))
    vecs = [simple_coroot_vector(t, i) for i in sorted(nodes)]
    basis = orthocomplement_in_cartan(t, vecs)
    assert len(basis) == t.rank - len(vecs)
    assert all(inner(t, u, v) == 0 for u in basis for v in vecs)


@given(st.integers(1, 9), st.integers(1, 25))
def test_higher_secants_grow(n, r):
    a, b = higher_secant_dim_sp_min(n, r), higher_secant_dim_sp_min(n, r + 1)
    assert a <= b <= n * (2 * n + 1)
    if r >= 2 * n:
        assert a == n * (2 * n + 1)
