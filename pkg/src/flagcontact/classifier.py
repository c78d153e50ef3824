"""Decide which ADE kinds carry an invariant contact structure on a b2 = 1 flag variety.

The necessary conditions are checked here: b2 = 1 forces a maximal
parabolic, the contact line bundle must be L(highest root), so the
highest root must be a multiple of a single fundamental weight. The
nondegeneracy half lives in :mod:`flagcontact.chevalley`.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from enum import Enum
from typing import Any

from flagcontact.parabolic import ParabolicData, build_parabolic
from flagcontact.rootsys import (
    CartanKind,
    Root,
    RootSystem,
    Weight,
    build_root_system,
    to_fundamental_basis,
)


class DimensionNotOdd(ValueError):
    """The flag variety has even dimension and cannot be contact."""


class Verdict(str, Enum):
    EXISTS = "Exists"
    NONE_EXISTS = "NoneExists"


@dataclass(frozen=True)
class ContactReport:
    kind: CartanKind
    verdict: Verdict
    non_orthogonal_nodes: tuple[int, ...]
    contact_node: int | None = None
    Lambda: tuple[int, ...] | None = None
    dim: int | None = None
    n: int | None = None
    line_bundle_weight: Weight | None = None
    line_bundle_coefficient: int | None = None
    anticanonical_weight: Weight | None = None
    identity_checked: bool = False

    @property
    def exists(self) -> bool:
        return self.verdict is Verdict.EXISTS

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        d["kind"] = str(self.kind)
        d["verdict"] = self.verdict.value
        d["non_orthogonal_nodes"] = list(self.non_orthogonal_nodes)
        if self.Lambda is not None:
            d["Lambda"] = list(self.Lambda)
        for key in ("line_bundle_weight", "anticanonical_weight"):
            w = getattr(self, key)
            d[key] = None if w is None else list(w.coords)
        return d

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> ContactReport:
        def weight(v):
            return None if v is None else Weight(tuple(v))

        return cls(
            kind=CartanKind.parse(d["kind"]),
            verdict=Verdict(d["verdict"]),
            non_orthogonal_nodes=tuple(d["non_orthogonal_nodes"]),
            contact_node=d.get("contact_node"),
            Lambda=None if d.get("Lambda") is None else tuple(d["Lambda"]),
            dim=d.get("dim"),
            n=d.get("n"),
            line_bundle_weight=weight(d.get("line_bundle_weight")),
            line_bundle_coefficient=d.get("line_bundle_coefficient"),
            anticanonical_weight=weight(d.get("anticanonical_weight")),
            identity_checked=d.get("identity_checked", False),
        )


def non_orthogonal_simple_roots(rs: RootSystem) -> tuple[int, ...]:
    """Nodes b with (highest, b) != 0, i.e. where the highest root has a nonzero fundamental coordinate."""
    lam = to_fundamental_basis(rs.highest, rs)
    return tuple(i for i, c in enumerate(lam.coords) if c != 0)


def contact_parabolic(rs: RootSystem) -> ParabolicData:
    """Parabolic for the simple roots orthogonal to the highest root."""
    bad = set(non_orthogonal_simple_roots(rs))
    return build_parabolic(rs, set(range(rs.rank)) - bad)


def verify_line_bundle_identity(pd: ParabolicData, lam: Weight) -> bool:
    """Check (n + 1) * lam == mu_S where dim G/P_S = 2n + 1."""
    if pd.dim % 2 == 0:
        raise DimensionNotOdd(f"dim G/P_S = {pd.dim} is even; no contact structure possible")
    n = (pd.dim - 1) // 2
    return (n + 1) * lam == pd.mu_S


def certify_corank_one_uniqueness(pd: ParabolicData) -> dict[Weight, Root]:
    """Map each quotient line-bundle weight back to the discarded root.

    Every torus weight space of g/p_S is one-dimensional, so a corank-1
    invariant subspace is fixed by the single weight it omits. The map is
    injective exactly when the nilradical weights are pairwise distinct.
    """
    out: dict[Weight, Root] = {}
    for gamma in pd.nilrad:
        w = to_fundamental_basis(gamma, pd.rs)
        if w in out:
            raise AssertionError(f"repeated nilradical weight {w} for {pd.rs.kind}")
        out[w] = gamma
    return out


def classify(kind: CartanKind | str, rs: RootSystem | None = None) -> ContactReport:
    if isinstance(kind, str):
        kind = CartanKind.parse(kind)
    if rs is None:
        rs = build_root_system(kind)
    witnesses = non_orthogonal_simple_roots(rs)
    if len(witnesses) != 1:
        return ContactReport(kind=kind, verdict=Verdict.NONE_EXISTS, non_orthogonal_nodes=witnesses)

    (alpha,) = witnesses
    pd = contact_parabolic(rs)
    lam = to_fundamental_basis(rs.highest, rs)
    return ContactReport(
        kind=kind,
        verdict=Verdict.EXISTS,
        non_orthogonal_nodes=witnesses,
        contact_node=alpha,
        Lambda=tuple(sorted(pd.S)),
        dim=pd.dim,
        n=(pd.dim - 1) // 2,
        line_bundle_weight=lam,
        line_bundle_coefficient=lam.coords[alpha],
        anticanonical_weight=pd.mu_S,
        identity_checked=verify_line_bundle_identity(pd, lam),
    )
