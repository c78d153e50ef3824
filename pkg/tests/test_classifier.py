from __future__ import annotations

import json

import pytest

from flagcontact.classifier import (
    ContactReport,
    DimensionNotOdd,
    Verdict,
    certify_corank_one_uniqueness,
    classify,
    contact_parabolic,
    non_orthogonal_simple_roots,
    verify_line_bundle_identity,
)
from flagcontact.parabolic import build_parabolic, is_in_invariant_lattice, maximal_parabolic
from flagcontact.rootsys import (
    CartanKind,
    Root,
    Weight,
    all_kinds,
    build_root_system,
    dual_coxeter_number,
    to_fundamental_basis,
)


def test_non_orthogonal_nodes():
    assert non_orthogonal_simple_roots(build_root_system("A3")) == (0, 2)
    assert non_orthogonal_simple_roots(build_root_system("A1")) == (0,)
    for n in range(4, 10):
        assert non_orthogonal_simple_roots(build_root_system(f"D{n}")) == (1,)


def test_a5_has_none():
    r = classify("A5")
    assert r.verdict is Verdict.NONE_EXISTS
    assert r.non_orthogonal_nodes == (0, 4)
    assert r.dim is None and r.contact_node is None


def test_d4():
    r = classify("D4")
    assert r.verdict is Verdict.EXISTS
    assert (r.contact_node, r.dim, r.n, r.line_bundle_coefficient) == (1, 9, 4, 1)
    assert r.Lambda == (0, 2, 3)
    assert r.line_bundle_weight == Weight((0, 1, 0, 0))
    assert r.anticanonical_weight == Weight((0, 5, 0, 0))
    assert r.identity_checked


def test_e8():
    r = classify(CartanKind("E", 8))
    rs = build_root_system("E8")
    assert r.dim == 57 == 2 * dual_coxeter_number(rs) - 3
    assert r.n == 28
    assert r.contact_node == 7


def test_identity_by_direct_summation():
    # sum the nine D4 nilradical roots by hand and convert
    rs = build_root_system("D4")
    pd = contact_parabolic(rs)
    total = [0, 0, 0, 0]
    for r in pd.nilrad:
        total = [a + b for a, b in zip(total, r.coords)]
    assert total == [5, 10, 5, 5]
    assert to_fundamental_basis(Root(tuple(total)), rs) == Weight((0, 5, 0, 0))
    assert verify_line_bundle_identity(pd, Weight((0, 1, 0, 0)))
    assert not verify_line_bundle_identity(pd, Weight((0, 2, 0, 0)))


def test_identity_a1():
    rs = build_root_system("A1")
    assert verify_line_bundle_identity(build_parabolic(rs, set()), Weight((2,)))


def test_even_dimension_rejected():
    rs = build_root_system("A3")
    with pytest.raises(DimensionNotOdd):
        verify_line_bundle_identity(maximal_parabolic(rs, 1), Weight((1, 0, 1)))


@pytest.mark.parametrize("kind", all_kinds(8), ids=str)
def test_report_invariants(kind):
    rs = build_root_system(kind)
    r = classify(kind)
    assert r.exists == (len(non_orthogonal_simple_roots(rs)) == 1)
    if not r.exists:
        assert kind.series == "A" and kind.rank >= 2
        assert len(r.non_orthogonal_nodes) == 2
        return
    pd = contact_parabolic(rs)
    lam = to_fundamental_basis(rs.highest, rs)
    assert r.dim % 2 == 1
    assert tuple(x * (r.n + 1) for x in r.line_bundle_weight.coords) == r.anticanonical_weight.coords
    assert r.line_bundle_coefficient == (2 if kind == CartanKind("A", 1) else 1)
    assert lam == r.line_bundle_coefficient * Weight(tuple(int(i == r.contact_node) for i in range(rs.rank)))
    assert is_in_invariant_lattice(lam, pd)
    assert r.dim == 2 * dual_coxeter_number(rs) - 3


@pytest.mark.parametrize("n", range(4, 13))
def test_d_series_dimension(n):
    assert classify(f"D{n}").dim == 4 * n - 7


def test_exists_set():
    exists = {str(k) for k in all_kinds(8) if classify(k).exists}
    assert exists == {"A1", "D4", "D5", "D6", "D7", "D8", "E6", "E7", "E8"}


def test_classify_is_deterministic():
    assert classify("E7") == classify("E7")
    assert classify("E7").to_dict() == classify(CartanKind("E", 7)).to_dict()


@pytest.mark.parametrize("kind", ["A1", "A4", "D6", "E8"])
def test_report_json_roundtrip(kind):
    r = classify(kind)
    assert ContactReport.from_dict(json.loads(json.dumps(r.to_dict()))) == r


@pytest.mark.parametrize("kind, count", [("A1", 1), ("D4", 9), ("E6", 21)])
def test_corank_one_uniqueness(kind, count):
    rs = build_root_system(kind)
    pd = contact_parabolic(rs)
    m = certify_corank_one_uniqueness(pd)
    assert len(m) == count
    assert sorted(m.values()) == sorted(pd.nilrad)
    for w, g in m.items():
        assert to_fundamental_basis(g, rs) == w
