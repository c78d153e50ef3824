"""Numerical model of the isotropic Grassmannian Gr_B(2, C^{2n}) and its contact distribution.

B is the complex-bilinear dot product B(x, y) = sum x_k y_k (no conjugation).
A point is a 2-plane V with B|V = 0, stored as a 2n x 2 frame. Tangent
vectors are maps V -> C^{2n}/V; the quotient is represented by the
Hermitian-orthogonal complement of V, a bookkeeping choice only. Every
reported quantity is checked to be independent of that choice.

The contact distribution is E = Hom(V, V^perp/V) and the quotient map
T -> wedge^2 V^* is theta(phi) = B(phi(f_0), f_1) for the frame (f_0, f_1).
"""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence
from dataclasses import asdict, dataclass
from typing import Any

import numpy as np

TAU_ISO = 1e-9
TAU_TAN = 1e-9
TAU_RANK = 1e-6
RANK_RTOL = 1e-6


class InvalidN(ValueError):
    pass


class NotIsotropic(ValueError):
    pass


class NotAntisymmetric(ValueError):
    pass


class InsufficientSamples(RuntimeError):
    pass


class BasisNotFound(RuntimeError):
    pass


def _check_n(n: int) -> None:
    if not isinstance(n, (int, np.integer)) or n < 4:
        raise InvalidN(f"n must be an integer >= 4, got {n!r}")


@dataclass(frozen=True, eq=False)
class IsotropicPoint:
    n: int
    frame: np.ndarray

    def __post_init__(self) -> None:
        _check_n(self.n)
        f = np.asarray(self.frame, dtype=complex)
        if f.shape != (2 * self.n, 2):
            raise ValueError(f"frame must have shape {(2 * self.n, 2)}, got {f.shape}")
        object.__setattr__(self, "frame", f)
        s = np.linalg.svd(f, compute_uv=False)
        if s[-1] < TAU_RANK * s[0]:
            raise ValueError("frame is rank deficient")
        if isotropy_residual(f) > TAU_ISO:
            raise NotIsotropic(f"B-Gram residual {isotropy_residual(f):.3e} exceeds {TAU_ISO}")
        q, _ = np.linalg.qr(f)
        object.__setattr__(self, "_q", q)

    def reduce(self, m: np.ndarray) -> np.ndarray:
        """Canonical representative of the columns of ``m`` modulo V."""
        q = self._q
        return m - q @ (q.conj().T @ m)

    def perp_basis(self) -> np.ndarray:
        """Orthonormal (Hermitian) basis of V^perp = {x : B(x, V) = 0}."""
        _, _, vh = np.linalg.svd(self.frame.T)
        return vh[2:].conj().T


@dataclass(frozen=True, eq=False)
class TangentVector:
    phi: np.ndarray

    def vec(self) -> np.ndarray:
        return self.phi.reshape(-1, order="F")


def isotropy_residual(frame: np.ndarray) -> float:
    """||F^T F|| relative to ||F||^2."""
    f = np.asarray(frame)
    return float(np.linalg.norm(f.T @ f) / np.linalg.norm(f) ** 2)


def base_point(n: int) -> IsotropicPoint:
    """The plane spanned by e_1 + i e_2 and e_3 + i e_4."""
    _check_n(n)
    f = np.zeros((2 * n, 2), dtype=complex)
    f[0, 0], f[1, 0] = 1, 1j
    f[2, 1], f[3, 1] = 1, 1j
    return IsotropicPoint(n, f)


def tangent(p: IsotropicPoint, phi: np.ndarray) -> TangentVector:
    """Tangent vector from arbitrary lifted images of the frame columns."""
    return TangentVector(p.reduce(np.asarray(phi, dtype=complex)))


def so_action_tangent(p: IsotropicPoint, xi: np.ndarray) -> TangentVector:
    """Differential of the orbit map: v -> xi v mod V."""
    xi = np.asarray(xi, dtype=complex)
    if np.linalg.norm(xi + xi.T) > TAU_ISO:
        raise NotAntisymmetric("xi + xi^T is not zero")
    return tangent(p, xi @ p.frame)


def bilinear_form(p: IsotropicPoint, t: TangentVector) -> np.ndarray:
    """A[k, l] = B(phi(f_k), f_l). Independent of the lift by isotropy of V."""
    return t.phi.T @ p.frame


def membership_residual(p: IsotropicPoint, t: TangentVector) -> float:
    """Size of (v, w) -> B(phi v, w) + B(v, phi w); zero exactly on T Gr_B."""
    a = bilinear_form(p, t)
    return float(np.linalg.norm(a + a.T) / np.linalg.norm(p.frame) ** 2)


def theta(p: IsotropicPoint, t: TangentVector) -> complex:
    """Image of t in wedge^2 V^*, as the coefficient of f_0^* ^ f_1^*."""
    return complex(t.phi[:, 0] @ p.frame[:, 1])


def theta_wedge(p: IsotropicPoint, t: TangentVector) -> complex:
    """theta computed from the antisymmetrised form; agrees with :func:`theta` on T."""
    a = bilinear_form(p, t)
    return complex((a[0, 1] - a[1, 0]) / 2)


# -- group side ---------------------------------------------------------------


def random_antisymmetric(n: int, rng: np.random.Generator) -> np.ndarray:
    z = rng.standard_normal((2 * n, 2 * n)) + 1j * rng.standard_normal((2 * n, 2 * n))
    return (z - z.T) / (2 * n)


def expm_series(a: np.ndarray, max_terms: int = 30) -> np.ndarray:
    """Matrix exponential by scaling and squaring around a truncated Taylor series."""
    a = np.asarray(a, dtype=complex)
    norm = np.linalg.norm(a, 1)
    s = max(0, math.ceil(math.log2(norm))) + 1 if norm > 0.5 else 0
    b = a / 2**s
    result = np.eye(a.shape[0], dtype=complex)
    term = result.copy()
    for k in range(1, max_terms + 1):
        term = term @ b / k
        result = result + term
        if np.linalg.norm(term, 1) <= np.finfo(float).eps * np.linalg.norm(result, 1):
            break
    for _ in range(s):
        result = result @ result
    return result


def block_rotation(angles: Sequence[float]) -> np.ndarray:
    """Block-diagonal R(t_1) + ... + R(t_n) of 2x2 rotations."""
    n = len(angles)
    r = np.zeros((2 * n, 2 * n))
    for j, t in enumerate(angles):
        c, s = math.cos(t), math.sin(t)
        r[2 * j : 2 * j + 2, 2 * j : 2 * j + 2] = [[c, -s], [s, c]]
    return r


def wedge(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """so(2n) element z -> B(y, z) x - B(x, z) y."""
    x = np.asarray(x, dtype=complex)
    y = np.asarray(y, dtype=complex)
    return np.outer(x, y) - np.outer(y, x)


def isotropic_vectors(n: int) -> tuple[list[np.ndarray], list[np.ndarray]]:
    """Torus weight vectors u_j = e_{2j-1} + i e_{2j} and their conjugates."""
    u, ubar = [], []
    for j in range(n):
        v = np.zeros(2 * n, dtype=complex)
        v[2 * j], v[2 * j + 1] = 1, 1j
        u.append(v)
        ubar.append(v.conj())
    return u, ubar


def act(g: np.ndarray, p: IsotropicPoint) -> IsotropicPoint:
    return IsotropicPoint(p.n, g @ p.frame)


def random_point(n: int, rng: np.random.Generator) -> IsotropicPoint:
    """g . base_point(n) for g = exp(xi) with random antisymmetric xi."""
    return act(expm_series(random_antisymmetric(n, rng)), base_point(n))


# -- audits ---------------------------------------------------------------------


def numerical_rank(m: np.ndarray, rtol: float = RANK_RTOL) -> int:
    if m.size == 0:
        return 0
    s = np.linalg.svd(m, compute_uv=False)
    if s[0] == 0:
        return 0
    return int(np.sum(s > rtol * s[0]))


def _null_of_row(row: np.ndarray) -> np.ndarray:
    # orthonormal basis of {c : row . c = 0}
    _, _, vh = np.linalg.svd(row[None, :])
    return vh[1:].conj().T


Functional = Callable[[IsotropicPoint, TangentVector], complex]


def _images(p: IsotropicPoint, xis: Sequence[np.ndarray], functional: Functional):
    ts = [so_action_tangent(p, xi) for xi in xis]
    phi = np.stack([t.vec() for t in ts], axis=1)
    th = np.array([functional(p, t) for t in ts])
    return phi, th


@dataclass(frozen=True)
class DimensionAudit:
    dimT: int
    dimE: int


def dimension_audit(p: IsotropicPoint, samples: int, seed: int) -> DimensionAudit:
    """Numerical dimensions of T (orbit-map image) and of E = T cap ker(theta)."""
    if samples < 4 * p.n:
        raise InsufficientSamples(f"need at least {4 * p.n} samples, got {samples}")
    rng = np.random.default_rng(seed)
    xis = [random_antisymmetric(p.n, rng) for _ in range(samples)]
    phi, th = _images(p, xis, theta)
    dim_t = numerical_rank(phi)
    if numerical_rank(phi[:, :-1]) != dim_t:
        raise InsufficientSamples(f"rank still growing at sample {samples}")
    dim_e = numerical_rank(phi @ _null_of_row(th))
    return DimensionAudit(dim_t, dim_e)


def _distribution_lift(p: IsotropicPoint, seed: int, functional: Functional):
    # Random spanning set of so(2n), then the combinations whose tangent
    # image lies in ker(functional): a spanning set of its preimage q.
    rng = np.random.default_rng(seed)
    k = p.n * (2 * p.n - 1) + 8
    xis = np.stack([random_antisymmetric(p.n, rng) for _ in range(k)])
    phi, th = _images(p, xis, functional)
    null = _null_of_row(th)
    return xis, phi, null


def _bracket_form(p: IsotropicPoint, elems: np.ndarray, functional: Functional) -> np.ndarray:
    m = len(elems)
    omega = np.zeros((m, m), dtype=complex)
    for a in range(m):
        for b in range(a + 1, m):
            c = elems[a] @ elems[b] - elems[b] @ elems[a]
            omega[a, b] = functional(p, so_action_tangent(p, c))
            omega[b, a] = -omega[a, b]
    return omega


def contact_rank(p: IsotropicPoint, seed: int, functional: Functional = theta) -> int:
    """Rank of (X, Y) -> theta([X, Y]) on a basis of E at ``p``.

    The basis comes from algebra elements whose orbit-map images span E;
    the brackets are taken in so(2n). Full nondegeneracy means rank dim E.
    """
    xis, phi, null = _distribution_lift(p, seed, functional)
    y = phi @ null
    r = numerical_rank(y)
    if r == 0 or numerical_rank(y[:, :-1]) != r:
        raise BasisNotFound("distribution basis did not stabilise")
    _, _, vh = np.linalg.svd(y)
    coeffs = null @ vh[:r].conj().T
    elems = np.einsum("ka,kij->aij", coeffs, xis)
    return numerical_rank(_bracket_form(p, elems, functional))


def lifted_form_rank(p: IsotropicPoint, seed: int, functional: Functional = theta) -> int:
    """Rank of functional([X, Y]) on the whole preimage of the distribution in so(2n).

    For an invariant distribution the stabiliser is in the radical, so this
    equals :func:`contact_rank`; for a non-invariant hyperplane it does not.
    """
    xis, _, null = _distribution_lift(p, seed, functional)
    elems = np.einsum("ka,kij->aij", null, xis)
    return numerical_rank(_bracket_form(p, elems, functional))


def random_functional(p: IsotropicPoint, rng: np.random.Generator) -> Functional:
    """A random linear functional on tangent representatives (degenerate control)."""
    w = rng.standard_normal(4 * p.n) + 1j * rng.standard_normal(4 * p.n)

    def f(_p: IsotropicPoint, t: TangentVector) -> complex:
        return complex(w @ t.vec())

    return f


def random_e_vector(p: IsotropicPoint, rng: np.random.Generator) -> TangentVector:
    """A random element of E = Hom(V, V^perp / V)."""
    perp = p.perp_basis()
    c = rng.standard_normal((perp.shape[1], 2)) + 1j * rng.standard_normal((perp.shape[1], 2))
    phi = perp @ c
    return tangent(p, phi / np.linalg.norm(phi))


def invariance_residual(
    p: IsotropicPoint,
    trials: int,
    seed: int,
    group_elements: Sequence[np.ndarray] | None = None,
) -> float:
    """Push E-vectors forward by group elements and measure how far they leave E.

    For each g, an E-vector phi at V becomes g phi g^{-1} at gV. The residual
    is the largest of the isotropy defect of gV, the orthogonality defect
    ||g^T g - 1||, and ||B(phi'(f'_k), f'_l)||, which vanishes exactly when
    the image lies in E at gV (it contains both theta and tangent membership).
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = np.random.default_rng(seed)
    if group_elements is None:
        group_elements = [expm_series(random_antisymmetric(p.n, rng)) for _ in range(trials)]
    worst = 0.0
    for g in group_elements:
        g = np.asarray(g, dtype=complex)
        t = random_e_vector(p, rng)
        frame2 = g @ p.frame
        orth = np.linalg.norm(g.T @ g - np.eye(2 * p.n))
        iso = isotropy_residual(frame2)
        q = IsotropicPoint(p.n, frame2)
        t2 = tangent(q, g @ t.phi)
        form = np.linalg.norm(bilinear_form(q, t2)) / (np.linalg.norm(frame2) * np.linalg.norm(t2.phi))
        worst = max(worst, float(orth), iso, float(form))
    return worst


# -- records ------------------------------------------------------------------


@dataclass(frozen=True)
class GrassmannianRecord:
    n: int
    seed: int
    point: str
    dimT: int
    dimE: int
    contact_rank: int
    max_residual: float

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> GrassmannianRecord:
        return cls(**d)


def trial_seeds(seed: int, trials: int) -> list[int]:
    """Per-trial integer seeds derived from ``seed``."""
    ss = np.random.SeedSequence(seed)
    return [int(c.generate_state(1)[0]) for c in ss.spawn(trials)]


def run_trial(n: int, seed: int, at_base: bool, group_trials: int = 5) -> GrassmannianRecord:
    rng = np.random.default_rng(seed)
    p = base_point(n) if at_base else random_point(n, rng)
    sub = [int(x) for x in rng.integers(0, 2**31, size=3)]
    audit = dimension_audit(p, samples=8 * n, seed=sub[0])
    rank = contact_rank(p, seed=sub[1])
    resid = invariance_residual(p, group_trials, seed=sub[2])
    return GrassmannianRecord(
        n=n,
        seed=seed,
        point="base" if at_base else "random",
        dimT=audit.dimT,
        dimE=audit.dimE,
        contact_rank=rank,
        max_residual=resid,
    )


def run_audit(n: int, trials: int, seed: int, group_trials: int = 5) -> list[GrassmannianRecord]:
    """Trial 0 at the base point, the rest at random points g . W."""
    _check_n(n)
    if trials < 1:
        raise ValueError("trials must be >= 1")
    return [
        run_trial(n, s, at_base=(k == 0), group_trials=group_trials)
        for k, s in enumerate(trial_seeds(seed, trials))
    ]
