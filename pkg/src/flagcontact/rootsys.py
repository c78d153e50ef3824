"""Simply-laced root systems with exact integer arithmetic.

Node numbering follows Bourbaki. Indices in code are 0-based; the labels
below (and in all human-readable output) are 1-based.

    A_n   1 - 2 - ... - n
    D_n   1 - 2 - ... - (n-2) < (n-1), n      (n-2 joined to both n-1 and n)
    E_n   1 - 3 - 4 - 5 - ... - n,  2 joined to 4

For D_n realised inside so(2n) with torus weights t_1..t_n, node j < n is
t_j - t_{j+1} and node n is t_{n-1} + t_n. The highest root is t_1 + t_2,
which is the fundamental weight of node 2 (0-based index 1).
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from fractions import Fraction


class InvalidKind(ValueError):
    """Raised for a Cartan kind outside A_n (n>=1), D_n (n>=4), E_6/E_7/E_8."""


_KIND_RE = re.compile(r"^\s*([ADEade])\s*_?\s*(\d+)\s*$")


@dataclass(frozen=True, order=True)
class CartanKind:
    series: str
    rank: int

    def __post_init__(self) -> None:
        if self.series not in ("A", "D", "E"):
            raise InvalidKind(f"unsupported series {self.series!r}; only A, D, E are simply-laced")
        if not isinstance(self.rank, int) or isinstance(self.rank, bool):
            raise InvalidKind(f"rank must be an int, got {self.rank!r}")
        ok = {
            "A": self.rank >= 1,
            "D": self.rank >= 4,
            "E": self.rank in (6, 7, 8),
        }[self.series]
        if not ok:
            raise InvalidKind(f"{self.series}{self.rank} is not a valid simply-laced kind")

    @classmethod
    def parse(cls, text: str) -> CartanKind:
        """Parse ``"D4"``, ``"e8"``, ``"A_3"`` and similar."""
        m = _KIND_RE.match(text)
        if m is None:
            raise InvalidKind(f"cannot parse Cartan kind {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.series}{self.rank}"


def all_kinds(max_rank: int) -> list[CartanKind]:
    """Every A/D/E kind of rank <= max_rank, in series then rank order."""
    kinds = [CartanKind("A", r) for r in range(1, max_rank + 1)]
    kinds += [CartanKind("D", r) for r in range(4, max_rank + 1)]
    kinds += [CartanKind("E", r) for r in (6, 7, 8) if r <= max_rank]
    return kinds


class _Vec:
    __slots__ = ()
    coords: tuple[int, ...]

    def __add__(self, other):
        return type(self)(tuple(a + b for a, b in zip(self.coords, other.coords, strict=True)))

    def __sub__(self, other):
        return type(self)(tuple(a - b for a, b in zip(self.coords, other.coords, strict=True)))

    def __neg__(self):
        return type(self)(tuple(-a for a in self.coords))

    def __mul__(self, k: int):
        return type(self)(tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, i: int) -> int:
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)


@dataclass(frozen=True, order=True)
class Root(_Vec):
    """Coefficients in the simple-root basis."""

    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    @property
    def height(self) -> int:
        return sum(self.coords)

    def is_positive(self) -> bool:
        return all(c >= 0 for c in self.coords) and any(self.coords)

    def support(self) -> frozenset[int]:
        return frozenset(i for i, c in enumerate(self.coords) if c)

    def __repr__(self) -> str:
        return f"Root{self.coords}"


@dataclass(frozen=True, order=True)
class Weight(_Vec):
    """Coefficients in the fundamental-weight basis."""

    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def __repr__(self) -> str:
        return f"Weight{self.coords}"


def cartan_matrix(kind: CartanKind) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix of ``kind`` in Bourbaki numbering (0-based rows)."""
    n = kind.rank
    edges: list[tuple[int, int]]
    if kind.series == "A":
        edges = [(i, i + 1) for i in range(n - 1)]
    elif kind.series == "D":
        edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    else:
        # 1-3, 3-4, 4-5, ..., 2-4 in 1-based labels
        edges = [(0, 2), (1, 3)] + [(i, i + 1) for i in range(2, n - 1)]
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
    for i, j in edges:
        a[i][j] = a[j][i] = -1
    return tuple(tuple(row) for row in a)


def dynkin_edges(cartan: Sequence[Sequence[int]]) -> list[tuple[int, int]]:
    """Edges ``(i, j)`` with ``i < j`` of the Dynkin diagram."""
    n = len(cartan)
    return [(i, j) for i in range(n) for j in range(i + 1, n) if cartan[i][j]]


@dataclass(frozen=True)
class RootSystem:
    kind: CartanKind
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[Root, ...]
    highest: Root
    _index: dict[tuple[int, ...], int] = field(repr=False, compare=False)

    @property
    def rank(self) -> int:
        return self.kind.rank

    @property
    def simple_roots(self) -> tuple[Root, ...]:
        return tuple(_unit(self.rank, i, Root) for i in range(self.rank))

    @cached_property
    def roots(self) -> tuple[Root, ...]:
        """All roots: positive roots in enumeration order, then their negatives."""
        return self.positive_roots + tuple(-r for r in self.positive_roots)

    def is_root(self, v: Root | Sequence[int]) -> bool:
        return tuple(v) in self._index

    def root_index(self, v: Root | Sequence[int]) -> int:
        """Position of ``v`` in :attr:`roots`; raises KeyError if not a root."""
        return self._index[tuple(v)]

    def node_label(self, i: int) -> str:
        return f"a{i + 1}"


def _unit(n: int, i: int, cls):
    c = [0] * n
    c[i] = 1
    return cls(tuple(c))


def _enumerate_positive(cartan: Sequence[Sequence[int]]) -> list[Root]:
    # Breadth-first by height. For a positive root b and simple a_i, the
    # a_i-string through b is b - p a_i, ..., b + q a_i with p - q = <b, a_i^v>.
    n = len(cartan)
    layer = [_unit(n, i, Root) for i in range(n)]
    found: set[tuple[int, ...]] = {r.coords for r in layer}
    out: list[Root] = []
    while layer:
        layer.sort(key=lambda r: tuple(-c for c in r.coords))
        out.extend(layer)
        nxt: dict[tuple[int, ...], Root] = {}
        for r in layer:
            c = list(r.coords)
            for i in range(n):
                pairing = sum(cartan[i][j] * c[j] for j in range(n))
                p = 0
                down = c.copy()
                while True:
                    down[i] -= 1
                    if tuple(down) in found:
                        p += 1
                    else:
                        break
                if p - pairing > 0:
                    up = c.copy()
                    up[i] += 1
                    nxt.setdefault(tuple(up), Root(tuple(up)))
        layer = list(nxt.values())
        found.update(nxt)
    return out


def build_root_system(kind: CartanKind | str) -> RootSystem:
    """Build the root system of ``kind``.

    Positive roots are ordered by height, then by descending coefficient
    tuple, so the simple roots come first in node order.
    """
    if isinstance(kind, str):
        kind = CartanKind.parse(kind)
    cartan = cartan_matrix(kind)
    pos = _enumerate_positive(cartan)
    highest = pos[-1]
    if any(any(h < c for h, c in zip(highest.coords, r.coords)) for r in pos):
        raise AssertionError(f"no unique highest root found for {kind}")
    index = {r.coords: k for k, r in enumerate(pos)}
    index.update({(-r).coords: k + len(pos) for k, r in enumerate(pos)})
    return RootSystem(kind, cartan, tuple(pos), highest, index)


def pairing(delta: Weight, beta_index: int, rs: RootSystem) -> int:
    """delta(h_beta) = 2(delta, beta)/(beta, beta) for the simple root at ``beta_index``."""
    if not 0 <= beta_index < rs.rank:
        raise IndexError(f"node index {beta_index} out of range for {rs.kind}")
    return delta.coords[beta_index]


def to_fundamental_basis(r: Root, rs: RootSystem) -> Weight:
    n = rs.rank
    a = rs.cartan
    return Weight(tuple(sum(a[i][j] * r.coords[j] for j in range(n)) for i in range(n)))


def to_root_basis(w: Weight, rs: RootSystem) -> Root:
    """Inverse of :func:`to_fundamental_basis`.

    Raises ValueError when ``w`` does not lie in the root lattice.
    """
    sol = solve_rational(rs.cartan, w.coords)
    if any(x.denominator != 1 for x in sol):
        raise ValueError(f"{w} is not in the root lattice of {rs.kind}")
    return Root(tuple(int(x) for x in sol))


def solve_rational(a: Sequence[Sequence[int]], b: Sequence[int]) -> list[Fraction]:
    """Solve the square nonsingular system ``a x = b`` over the rationals."""
    n = len(a)
    m = [[Fraction(v) for v in row] + [Fraction(b[i])] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular system")
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [v * inv for v in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[i][n] for i in range(n)]


def inner_product(x: Root, y: Root, rs: RootSystem) -> int:
    """(x, y) normalised so that every root has norm-squared 2."""
    a = rs.cartan
    n = rs.rank
    return sum(x.coords[i] * a[i][j] * y.coords[j] for i in range(n) for j in range(n))


def reflect(r: Root, i: int, rs: RootSystem) -> Root:
    """Simple reflection s_i(r) = r - <r, a_i^v> a_i."""
    c = list(r.coords)
    c[i] -= sum(rs.cartan[i][j] * r.coords[j] for j in range(rs.rank))
    return Root(tuple(c))


def dual_coxeter_number(rs: RootSystem) -> int:
    """1 + height of the highest root (equal to h for simply-laced kinds)."""
    return 1 + rs.highest.height


def expected_positive_root_count(kind: CartanKind) -> int:
    n = kind.rank
    if kind.series == "A":
        return n * (n + 1) // 2
    if kind.series == "D":
        return n * (n - 1)
    return {6: 36, 7: 63, 8: 120}[n]


def dominates(x: Root, y: Root) -> bool:
    """True iff x - y is a nonnegative combination of simple roots."""
    return all(a >= b for a, b in zip(x.coords, y.coords))


def format_root(r: Root | Iterable[int], symbol: str = "a") -> str:
    """Human-readable ``a1 + 2a2 + a3`` style rendering."""
    terms = []
    for i, c in enumerate(r):
        if c == 0:
            continue
        coef = "" if abs(c) == 1 else str(abs(c))
        sign = "-" if c < 0 else "+"
        terms.append((sign, f"{coef}{symbol}{i + 1}"))
    if not terms:
        return "0"
    head_sign, head = terms[0]
    s = ("-" if head_sign == "-" else "") + head
    for sign, t in terms[1:]:
        s += f" {sign} {t}"
    return s
