"""Independent reference computations used to freeze expected values."""

from __future__ import annotations

import itertools

import numpy as np

from flagcontact.rootsys import CartanKind, cartan_matrix


def reflection_closure(kind: CartanKind) -> set[tuple[int, ...]]:
    """All roots, as the orbit of the simple roots under simple reflections."""
    a = cartan_matrix(kind)
    n = kind.rank
    frontier = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(frontier)
    while frontier:
        nxt = []
        for r in frontier:
            for i in range(n):
                c = list(r)
                c[i] -= sum(a[i][j] * r[j] for j in range(n))
                t = tuple(c)
                if t not in seen:
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
    return seen


def norm_two_vectors(kind: CartanKind, bound: int) -> set[tuple[int, ...]]:
    """Nonnegative lattice vectors of norm-squared 2 with coefficients <= bound."""
    a = np.array(cartan_matrix(kind))
    grid = np.array(list(itertools.product(range(bound + 1), repeat=kind.rank)))
    norms = np.einsum("ki,ij,kj->k", grid, a, grid)
    return {tuple(int(x) for x in v) for v in grid[norms == 2]}


def count_with_node(roots, node: int) -> int:
    return sum(1 for r in roots if r[node] != 0)
