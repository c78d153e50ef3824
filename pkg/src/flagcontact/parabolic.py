"""Combinatorics of the standard parabolic attached to a subset S of simple roots."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from flagcontact.rootsys import Root, RootSystem, Weight, to_fundamental_basis


class InvalidNode(ValueError):
    pass


@dataclass(frozen=True)
class ParabolicData:
    """Parabolic data for ``S``.

    ``delta_S_plus`` are the positive roots supported on S; ``nilrad`` the
    remaining positive roots (the torus weights of g/p_S, one per tangent
    direction of G/P_S at the base point). ``mu_S`` is their sum in the
    fundamental basis, the weight of the anticanonical bundle.
    """

    rs: RootSystem
    S: frozenset[int]
    delta_S_plus: tuple[Root, ...]
    nilrad: tuple[Root, ...]
    mu_S: Weight
    dim: int
    b2: int


def build_parabolic(rs: RootSystem, S: Iterable[int]) -> ParabolicData:
    S = frozenset(S)
    bad = sorted(i for i in S if not (isinstance(i, int) and 0 <= i < rs.rank))
    if bad:
        raise InvalidNode(f"node indices {bad} out of range for {rs.kind} (0..{rs.rank - 1})")
    levi: list[Root] = []
    nil: list[Root] = []
    for r in rs.positive_roots:
        (levi if r.support() <= S else nil).append(r)
    total = Root((0,) * rs.rank)
    for r in nil:
        total = total + r
    return ParabolicData(
        rs=rs,
        S=S,
        delta_S_plus=tuple(levi),
        nilrad=tuple(nil),
        mu_S=to_fundamental_basis(total, rs),
        dim=len(nil),
        b2=rs.rank - len(S),
    )


def maximal_parabolic(rs: RootSystem, node: int) -> ParabolicData:
    """The parabolic with S = all simple roots except ``node``."""
    return build_parabolic(rs, set(range(rs.rank)) - {node})


def invariant_lattice_basis(pd: ParabolicData) -> list[Weight]:
    """Z-basis {omega_b : b not in S} of the W_S-invariant weights."""
    n = pd.rs.rank
    out = []
    for i in range(n):
        if i not in pd.S:
            c = [0] * n
            c[i] = 1
            out.append(Weight(tuple(c)))
    return out


def is_in_invariant_lattice(w: Weight, pd: ParabolicData) -> bool:
    # W_S-fixed <=> orthogonal to every simple root in S <=> zero coordinate there
    return all(w.coords[i] == 0 for i in pd.S)


def betti2(pd: ParabolicData) -> int:
    """Second Betti number of G/P_S: one codimension-1 Schubert cell per node outside S."""
    return pd.rs.rank - len(pd.S)
