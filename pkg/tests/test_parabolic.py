from __future__ import annotations

import itertools

import pytest
from hypothesis import given, strategies as st

from flagcontact.parabolic import (
    InvalidNode,
    betti2,
    build_parabolic,
    invariant_lattice_basis,
    is_in_invariant_lattice,
    maximal_parabolic,
)
from flagcontact.rootsys import Root, Weight, all_kinds, build_root_system, to_fundamental_basis
from oracles import count_with_node


def test_a1_borel():
    rs = build_root_system("A1")
    pd = build_parabolic(rs, set())
    assert pd.nilrad == (Root((1,)),)
    assert (pd.dim, pd.b2) == (1, 1)
    assert pd.mu_S == Weight((2,))


def test_d4_contact_parabolic():
    rs = build_root_system("D4")
    pd = maximal_parabolic(rs, 1)
    assert pd.dim == count_with_node(rs.positive_roots, 1) == 9
    assert pd.b2 == 1


def test_a3_grassmannian():
    rs = build_root_system("A3")
    pd = maximal_parabolic(rs, 1)
    expected = {(0, 1, 0), (1, 1, 0), (0, 1, 1), (1, 1, 1)}
    assert {r.coords for r in pd.nilrad} == expected
    assert pd.dim == 4 and pd.b2 == 1


def test_invalid_node():
    rs = build_root_system("A2")
    with pytest.raises(InvalidNode):
        build_parabolic(rs, {0, 2})
    with pytest.raises(InvalidNode):
        build_parabolic(rs, {-1})


def test_invariant_lattice_basis():
    a1 = build_root_system("A1")
    assert invariant_lattice_basis(build_parabolic(a1, {0})) == []
    assert invariant_lattice_basis(build_parabolic(a1, set())) == [Weight((1,))]
    d5 = build_root_system("D5")
    assert invariant_lattice_basis(maximal_parabolic(d5, 1)) == [Weight((0, 1, 0, 0, 0))]


def test_is_in_invariant_lattice():
    d4 = build_root_system("D4")
    pd = maximal_parabolic(d4, 1)
    assert not is_in_invariant_lattice(Weight((1, 0, 0, 0)), pd)
    assert is_in_invariant_lattice(to_fundamental_basis(d4.highest, d4), pd)
    a3 = build_root_system("A3")
    assert not is_in_invariant_lattice(to_fundamental_basis(a3.highest, a3), maximal_parabolic(a3, 1))


def test_betti2():
    a2 = build_root_system("A2")
    assert betti2(maximal_parabolic(a2, 0)) == 1
    assert betti2(build_parabolic(a2, set())) == 2
    assert betti2(build_parabolic(a2, {0, 1})) == 0


def test_nilrad_preserves_enumeration_order():
    rs = build_root_system("E6")
    pd = maximal_parabolic(rs, 3)
    positions = [rs.positive_roots.index(r) for r in pd.nilrad]
    assert positions == sorted(positions)


@given(st.sampled_from(all_kinds(7)), st.data())
def test_parabolic_invariants(kind, data):
    rs = build_root_system(kind)
    S = data.draw(st.sets(st.integers(0, rs.rank - 1)))
    pd = build_parabolic(rs, S)
    assert pd.dim + len(pd.delta_S_plus) == len(rs.positive_roots)
    assert set(pd.nilrad).isdisjoint(pd.delta_S_plus)
    assert set(pd.nilrad) | set(pd.delta_S_plus) == set(rs.positive_roots)
    assert all(r.support() <= S for r in pd.delta_S_plus)
    assert pd.b2 == betti2(pd) == rs.rank - len(S)
    assert (pd.b2 == 1) == (len(S) == rs.rank - 1)
    assert is_in_invariant_lattice(pd.mu_S, pd)
    assert pd.mu_S.is_dominant()


@pytest.mark.parametrize("kind", all_kinds(8), ids=str)
def test_mu_of_maximal_parabolics(kind):
    rs = build_root_system(kind)
    for node in range(rs.rank):
        pd = maximal_parabolic(rs, node)
        assert is_in_invariant_lattice(pd.mu_S, pd)
        assert pd.mu_S.coords[node] > 0


def test_full_flag_mu_is_twice_rho():
    # mu for S = {} is 2 rho = 2 (sum of fundamental weights)
    for k in ("A3", "D4"):
        rs = build_root_system(k)
        assert build_parabolic(rs, set()).mu_S == Weight((2,) * rs.rank)


def test_subsets_are_exhaustive_for_small_rank():
    rs = build_root_system("A3")
    dims = {S: build_parabolic(rs, S).dim for r in range(4) for S in itertools.combinations(range(3), r)}
    assert dims[()] == 6 and dims[(0, 1, 2)] == 0
    assert dims[(1, 2)] == 3  # P^3
