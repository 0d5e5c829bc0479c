"""
Enumeration of Grassmannians G(k, n) over F_q and the orders built on them.

Subspaces of the same dimension are ordered by comparing reduced generators
(u_1, ..., u_k) lexicographically; unrefinable chains are ordered
reverse-lexicographically, top member first.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Sequence

from .errors import BudgetExceeded
from .gf import FieldSpec, gaussian_binomial
from .linalg import Subspace, kernel_rows, members, rref_rows

DEFAULT_SUBSPACE_BUDGET = 10**7


def subspace_key(U: Subspace):
    """Sort key realizing the order on G(k, n): the reduced generator."""
    return U.rows[::-1]


@dataclass(frozen=True)
class GrassmannianIndex:
    field: FieldSpec
    n: int
    k: int
    spaces: tuple[Subspace, ...]
    position: dict = dc_field(repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.spaces)

    def __iter__(self):
        return iter(self.spaces)

    def __getitem__(self, i):
        return self.spaces[i]


def _rrefs_by_pivots(field: FieldSpec, n: int, k: int):
    elems = list(field.elements)
    for pivots in itertools.combinations(range(n), k):
        pset = set(pivots)
        free = [(i, j) for i, p in enumerate(pivots) for j in range(p + 1, n) if j not in pset]
        for values in itertools.product(elems, repeat=len(free)):
            rows = [[0] * n for _ in range(k)]
            for i, p in enumerate(pivots):
                rows[i][p] = 1
            for (i, j), a in zip(free, values):
                rows[i][j] = a
            yield tuple(tuple(r) for r in rows)


def enumerate_subspaces(
    n: int, k: int, field: FieldSpec, budget: int = DEFAULT_SUBSPACE_BUDGET
) -> GrassmannianIndex:
    """All k-dimensional subspaces of F_q^n, sorted by reduced generator."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    count = gaussian_binomial(n, k, field.q)
    if count > budget:
        raise BudgetExceeded(f"G({k},{n}) over {field}", count, budget)
    rows = sorted(_rrefs_by_pivots(field, n, k), key=lambda r: r[::-1])
    spaces = tuple(Subspace(field, n, r) for r in rows)
    return GrassmannianIndex(field, n, k, spaces, {U: i for i, U in enumerate(spaces)})


def compare_chains_revlex(A: Sequence[Subspace], B: Sequence[Subspace]) -> int:
    """-1, 0 or 1 as A precedes, equals or follows B in reverse-lex order.

    Both chains must be unrefinable (member i has dimension i) and of equal
    length.
    """
    if len(A) != len(B):
        raise ValueError(f"chains of different lengths {len(A)} and {len(B)}")
    for chain in (A, B):
        for i, U in enumerate(chain, 1):
            if U.dim != i:
                raise ValueError(f"chain is refinable: member {i} has dimension {U.dim}")
    for U, V in zip(reversed(A), reversed(B)):
        if U != V:
            return -1 if subspace_key(U) < subspace_key(V) else 1
    return 0


def chain_key(chain: Sequence[Subspace]):
    """Sort key equivalent to ``compare_chains_revlex``."""
    return tuple(subspace_key(U) for U in reversed(chain))


class SubspaceLattice:
    """Every subspace of F_q^n, indexed, with inclusion data.

    Indices run through dimensions 0..n, each block sorted by reduced
    generator, so index 0 is the zero space and the last index is F_q^n.
    Each subspace carries a bitmask of the vectors it contains (bit i set
    for the vector whose base-q digits are its coordinates), which makes
    inclusion and intersection bit operations.
    """

    def __init__(self, field: FieldSpec, n: int, budget: int = DEFAULT_SUBSPACE_BUDGET):
        total = sum(gaussian_binomial(n, k, field.q) for k in range(n + 1))
        if total > budget:
            raise BudgetExceeded(f"subspaces of {field}^{n}", total, budget)
        self.field = field
        self.n = n
        q = field.q
        self.spaces: list[Subspace] = []
        self.by_dim: list[range] = []
        for k in range(n + 1):
            start = len(self.spaces)
            self.spaces.extend(enumerate_subspaces(n, k, field, budget).spaces)
            self.by_dim.append(range(start, len(self.spaces)))
        self.index = {U.rows: i for i, U in enumerate(self.spaces)}
        self.dims = [U.dim for U in self.spaces]
        weights = [q ** (n - 1 - i) for i in range(n)]
        self.masks = []
        for U in self.spaces:
            m = 0
            for v in members(U):
                m |= 1 << sum(a * w for a, w in zip(v, weights))
            self.masks.append(m)
        self.by_mask = {m: i for i, m in enumerate(self.masks)}
        self.perp = [
            self.index[rref_rows(field, kernel_rows(field, U.rows, n), n)] for U in self.spaces
        ]
        # covering relations
        self.hyperplanes: list[list[int]] = [[] for _ in self.spaces]
        self.covers: list[list[int]] = [[] for _ in self.spaces]
        for k in range(1, n + 1):
            for i in self.by_dim[k]:
                mi = self.masks[i]
                for j in self.by_dim[k - 1]:
                    if self.masks[j] & ~mi == 0:
                        self.hyperplanes[i].append(j)
                        self.covers[j].append(i)
        self._below = None

    def __len__(self) -> int:
        return len(self.spaces)

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return len(self.spaces) - 1

    def idx(self, U: Subspace) -> int:
        return self.index[U.rows]

    def leq(self, i: int, j: int) -> bool:
        return self.masks[i] & ~self.masks[j] == 0

    def meet(self, i: int, j: int) -> int:
        return self.by_mask[self.masks[i] & self.masks[j]]

    def join(self, i: int, j: int) -> int:
        perp = self.perp
        return perp[self.meet(perp[i], perp[j])]

    def below(self, i: int) -> list[int]:
        """Indices of all subspaces strictly contained in subspace ``i``."""
        if self._below is None:
            masks = self.masks
            self._below = [
                [j for j in range(len(masks)) if j != i and masks[j] & ~mi == 0]
                for i, mi in enumerate(masks)
            ]
        return self._below[i]


@lru_cache(maxsize=32)
def subspace_lattice(field: FieldSpec, n: int, budget: int = DEFAULT_SUBSPACE_BUDGET) -> SubspaceLattice:
    """Shared, cached ``SubspaceLattice``; treat the result as read-only."""
    return SubspaceLattice(field, n, budget)
