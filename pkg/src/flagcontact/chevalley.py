"""Simply-laced Lie algebras in a Chevalley basis with integer structure constants.

Signs come from a bimultiplicative function eps on the root lattice with
eps(a_i, a_i) = -1, eps(a_i, a_j) = -1 for an edge oriented i -> j (i < j),
and +1 otherwise. Writing E_b for the resulting root vectors, one has
[E_a, E_b] = eps(a, b) E_{a+b} and [E_a, E_{-a}] = -h_a. The exposed basis
rescales negative root vectors, e_{-a} = -E_{-a} for a > 0, so that

    [e_b, e_{-b}] = h_b            for every root b,
    [e_b, e_c] = N_{b,c} e_{b+c},  N = s(b) s(c) s(b+c) eps(b, c),

with s = +1 on positive roots and -1 on negative ones. Correctness of the
whole table is checked by the Jacobi identity, not assumed.
"""

from __future__ import annotations

import itertools
import random
from collections.abc import Iterable, Sequence
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any

from flagcontact.parabolic import ParabolicData
from flagcontact.rootsys import Root, RootSystem, dynkin_edges, to_fundamental_basis

Sparse = dict[int, int]


class JacobiFailure(RuntimeError):
    pass


class NotContactParabolic(ValueError):
    pass


@dataclass(frozen=True)
class ChevalleyAlgebra:
    """Basis order: h_1..h_r, then e_b for b in ``rs.roots``.

    ``n_const`` is keyed by pairs of root positions in ``rs.roots``.
    ``cocycle`` is the 0/1 exponent matrix of eps on simple roots.
    """

    rs: RootSystem
    n_const: dict[tuple[int, int], int] = field(repr=False)
    cocycle: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return self.rs.rank

    @property
    def dim(self) -> int:
        return self.rs.rank + len(self.rs.roots)

    def h(self, i: int) -> int:
        """Basis position of the simple coroot h_i."""
        return i

    def e(self, root: Root | Sequence[int]) -> int:
        """Basis position of e_root."""
        return self.rs.rank + self.rs.root_index(root)

    def weight(self, k: int) -> tuple[int, ...]:
        if k < self.rank:
            return (0,) * self.rank
        return self.rs.roots[k - self.rank].coords

    def basis_label(self, k: int) -> str:
        if k < self.rank:
            return f"h{k + 1}"
        return "e" + str(self.weight(k))

    def vector(self, terms: dict[int, int | Fraction] | None = None) -> list:
        v: list = [0] * self.dim
        for k, c in (terms or {}).items():
            v[k] = c
        return v

    def bracket_basis(self, i: int, j: int) -> Sparse:
        """[b_i, b_j] for basis positions i, j as a sparse vector."""
        r = self.rank
        if i < r and j < r:
            return {}
        if i < r:
            c = _root_pairing(self.rs, j - r, i)
            return {j: c} if c else {}
        if j < r:
            c = _root_pairing(self.rs, i - r, j)
            return {i: -c} if c else {}
        ki, kj = i - r, j - r
        n = self.n_const.get((ki, kj))
        if n is not None:
            s = tuple(a + b for a, b in zip(self.rs.roots[ki].coords, self.rs.roots[kj].coords))
            return {r + self.rs.root_index(s): n}
        bi = self.rs.roots[ki].coords
        if all(a + b == 0 for a, b in zip(bi, self.rs.roots[kj].coords)):
            return {m: c for m, c in enumerate(bi) if c}
        return {}

    def bracket_sparse(self, x: Sparse, y: Sparse) -> Sparse:
        out: Sparse = {}
        for i, a in x.items():
            if not a:
                continue
            for j, b in y.items():
                if not b:
                    continue
                for k, c in self.bracket_basis(i, j).items():
                    out[k] = out.get(k, 0) + a * b * c
        return {k: v for k, v in out.items() if v}


def _root_pairing(rs: RootSystem, k: int, i: int) -> int:
    # gamma(h_i) for gamma = rs.roots[k]
    g = rs.roots[k].coords
    return sum(rs.cartan[i][j] * g[j] for j in range(rs.rank))


def _eps_exponents(rs: RootSystem) -> tuple[tuple[int, ...], ...]:
    n = rs.rank
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = 1
    for i, j in dynkin_edges(rs.cartan):
        m[i][j] = 1
    return tuple(tuple(row) for row in m)


def eps(alg_or_cocycle, beta: Sequence[int], gamma: Sequence[int]) -> int:
    m = alg_or_cocycle.cocycle if isinstance(alg_or_cocycle, ChevalleyAlgebra) else alg_or_cocycle
    n = len(m)
    e = sum(beta[i] * m[i][j] * gamma[j] for i in range(n) for j in range(n) if m[i][j])
    return -1 if e % 2 else 1


def build_chevalley(rs: RootSystem, jacobi_samples: int = 200, seed: int = 0) -> ChevalleyAlgebra:
    """Build the algebra and spot-check Jacobi on ``jacobi_samples`` random triples."""
    cocycle = _eps_exponents(rs)
    roots = rs.roots
    npos = len(rs.positive_roots)
    n_const: dict[tuple[int, int], int] = {}
    for ki, b in enumerate(roots):
        sb = 1 if ki < npos else -1
        for kj, c in enumerate(roots):
            s = tuple(x + y for x, y in zip(b.coords, c.coords))
            if not rs.is_root(s):
                continue
            sc = 1 if kj < npos else -1
            ss = 1 if rs.root_index(s) < npos else -1
            n_const[(ki, kj)] = sb * sc * ss * eps(cocycle, b.coords, c.coords)
    alg = ChevalleyAlgebra(rs, n_const, cocycle)
    if jacobi_samples:
        bad = jacobi_random(alg, jacobi_samples, seed)
        if bad:
            raise JacobiFailure(f"{len(bad)} Jacobi violations in {rs.kind}, first {bad[0]}")
    return alg


def bracket(alg: ChevalleyAlgebra, x: Sequence, y: Sequence) -> list:
    """Bracket of two dense coordinate vectors (ints or Fractions)."""
    xs = {i: a for i, a in enumerate(x) if a}
    ys = {j: b for j, b in enumerate(y) if b}
    return alg.vector(alg.bracket_sparse(xs, ys))


# -- Jacobi checks ----------------------------------------------------------


def jacobiator(alg: ChevalleyAlgebra, i: int, j: int, k: int) -> Sparse:
    """[x,[y,z]] + [y,[z,x]] + [z,[x,y]] on basis elements."""
    out: Sparse = {}
    for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
        for m, v in alg.bracket_sparse({a: 1}, alg.bracket_basis(b, c)).items():
            out[m] = out.get(m, 0) + v
    return {m: v for m, v in out.items() if v}


def _may_be_nonzero(alg: ChevalleyAlgebra, i: int, j: int, k: int) -> bool:
    # the jacobiator lies in the weight space of wt(i)+wt(j)+wt(k)
    s = tuple(a + b + c for a, b, c in zip(alg.weight(i), alg.weight(j), alg.weight(k)))
    return not any(s) or alg.rs.is_root(s)


def jacobi_exhaustive(alg: ChevalleyAlgebra) -> tuple[int, list[tuple[int, int, int]]]:
    """Check every triple of distinct basis elements.

    Triples with a repeated element reduce to antisymmetry, checked separately.
    Returns (number of triples evaluated, violations).
    """
    bad = []
    evaluated = 0
    for t in itertools.combinations(range(alg.dim), 3):
        if not _may_be_nonzero(alg, *t):
            continue
        evaluated += 1
        if jacobiator(alg, *t):
            bad.append(t)
    return evaluated, bad


def jacobi_random(alg: ChevalleyAlgebra, samples: int, seed: int = 0) -> list[tuple[int, int, int]]:
    """Check ``samples`` random triples whose weights sum to a root or zero.

    Triples outside that set vanish by weight grading alone, so they are not
    drawn; every sampled triple exercises the structure constants.
    """
    rng = random.Random(seed)
    rs = alg.rs
    r = alg.rank
    targets = [(0,) * r] + [b.coords for b in rs.roots]
    bad = []
    done = 0
    while done < samples:
        i = rng.randrange(alg.dim)
        j = rng.randrange(alg.dim)
        t = rng.choice(targets)
        w = tuple(a - b - c for a, b, c in zip(t, alg.weight(i), alg.weight(j)))
        if not any(w):
            k = rng.randrange(r)
        elif rs.is_root(w):
            k = alg.e(w)
        else:
            continue
        done += 1
        if jacobiator(alg, i, j, k):
            bad.append((i, j, k))
    return bad


def antisymmetry_violations(alg: ChevalleyAlgebra) -> list[tuple[int, int]]:
    return [(a, b) for (a, b), n in alg.n_const.items() if alg.n_const.get((b, a)) != -n]


# -- contact form ------------------------------------------------------------


def perp_complement_weights(pd: ParabolicData) -> tuple[Root, ...]:
    """Positive roots other than the highest root and those of the Levi part.

    These index the fibre (g_{-lambda})^perp / p_Lambda of the contact
    distribution at the base point of G/P_Lambda.
    """
    rs = pd.rs
    lam = to_fundamental_basis(rs.highest, rs)
    orth = frozenset(i for i, c in enumerate(lam.coords) if c == 0)
    if pd.S != orth:
        raise NotContactParabolic(
            f"S = {sorted(pd.S)} is not the set {sorted(orth)} of nodes orthogonal to the highest root"
        )
    return tuple(b for b in pd.nilrad if b != rs.highest)


@dataclass(frozen=True)
class ContactFormMatrix:
    weights: tuple[Root, ...]
    entries: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.weights)


def contact_form_matrix(alg: ChevalleyAlgebra, pd: ParabolicData) -> ContactFormMatrix:
    """M[i][j] = coefficient of e_lambda in [e_{b_i}, e_{b_j}]."""
    weights = perp_complement_weights(pd)
    top = alg.e(alg.rs.highest)
    pos = [alg.e(b) for b in weights]
    entries = tuple(tuple(alg.bracket_basis(p, q).get(top, 0) for q in pos) for p in pos)
    return ContactFormMatrix(weights, entries)


def exact_rank(rows: Iterable[Sequence[int]]) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = next((r for r in range(rank, nrows) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, nrows):
            f = m[r][col]
            row, prow = m[r], m[rank]
            for c in range(col, ncols):
                # exact division is guaranteed by Sylvester's identity
                row[c] = (p * row[c] - f * prow[c]) // prev
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


@dataclass(frozen=True)
class Certificate:
    nondegenerate: bool
    rank: int
    size: int


def certify_nondegenerate(M: ContactFormMatrix) -> Certificate:
    r = exact_rank(M.entries)
    return Certificate(nondegenerate=r == M.size, rank=r, size=M.size)


def involution_is_fixed_point_free(M: ContactFormMatrix, highest: Root) -> bool:
    """b -> highest - b permutes the weights with no fixed points."""
    ws = set(M.weights)
    return all((highest - b) in ws and highest - b != b for b in M.weights)


def is_antisymmetric(M: ContactFormMatrix) -> bool:
    e = M.entries
    return all(e[i][j] == -e[j][i] for i in range(M.size) for j in range(M.size))


@dataclass(frozen=True)
class CertificateRecord:
    """Serializable summary of the contact certificate for one kind."""

    kind: str
    size: int
    rank: int
    nondegenerate: bool
    antisymmetric: bool
    involution_ok: bool
    weight_balance_ok: bool
    jacobi_samples: int
    jacobi_violations: int
    matrix: list[list[int]] | None = None

    @property
    def ok(self) -> bool:
        return (
            self.nondegenerate
            and self.antisymmetric
            and self.involution_ok
            and self.weight_balance_ok
            and self.jacobi_violations == 0
        )

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> CertificateRecord:
        return cls(**d)


def certify_kind(
    rs: RootSystem,
    pd: ParabolicData,
    jacobi_samples: int = 2000,
    seed: int = 0,
    include_matrix: bool = False,
) -> CertificateRecord:
    """Build the algebra and the contact-form certificate for the contact parabolic ``pd``."""
    alg = build_chevalley(rs, jacobi_samples=0)
    bad = jacobi_random(alg, jacobi_samples, seed) if jacobi_samples else []
    M = contact_form_matrix(alg, pd)
    cert = certify_nondegenerate(M)
    n = M.size // 2
    total = Root((0,) * rs.rank)
    for b in M.weights:
        total = total + b
    balance = to_fundamental_basis(total, rs) == n * to_fundamental_basis(rs.highest, rs)
    return CertificateRecord(
        kind=str(rs.kind),
        size=M.size,
        rank=cert.rank,
        nondegenerate=cert.nondegenerate,
        antisymmetric=is_antisymmetric(M),
        involution_ok=involution_is_fixed_point_free(M, rs.highest),
        weight_balance_ok=balance,
        jacobi_samples=jacobi_samples,
        jacobi_violations=len(bad),
        matrix=[list(r) for r in M.entries] if include_matrix else None,
    )
