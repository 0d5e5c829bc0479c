"""
q-matroids on F_q^n given by a rank function on all subspaces.

The rank function is materialized as a tuple aligned with the indices of
the shared ``SubspaceLattice`` of the ambient space.  Derived structure
(independent spaces, bases, circuits, cycles, flats, loops, coloops) is
computed from that table and cached on the instance.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from .errors import AxiomError, ConsistencyError
from .gf import FieldSpec, make_field
from .grassmann import DEFAULT_SUBSPACE_BUDGET, SubspaceLattice, subspace_lattice
from .linalg import Subspace, matmul, rank as matrix_rank, rref_of

EXHAUSTIVE_AXIOM_LIMIT = 4


@dataclass(frozen=True)
class CycleRecord:
    space: Subspace
    nullity: int


class QMatroid:
    """A q-matroid (F_q^n, rho).

    ``kind`` records provenance: "representable", "uniform", "table", or a
    derived kind such as "dual", "restriction" or "truncation".  ``info``
    carries the construction data (matrix, m, k, ...).
    """

    def __init__(
        self,
        field: FieldSpec,
        n: int,
        ranks: Sequence[int],
        kind: str = "table",
        info: dict | None = None,
        budget: int = DEFAULT_SUBSPACE_BUDGET,
    ):
        self.field = field
        self.n = n
        self.lattice: SubspaceLattice = subspace_lattice(field, n, budget)
        if len(ranks) != len(self.lattice):
            raise ValueError(f"rank table has {len(ranks)} entries, expected {len(self.lattice)}")
        self.ranks = tuple(ranks)
        self.kind = kind
        self.info = dict(info or {})
        self._cache: dict = {}

    # basic data

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def r(self) -> int:
        return self.ranks[-1]

    @property
    def nullity(self) -> int:
        return self.n - self.r

    def rank(self, U: Subspace) -> int:
        return self.ranks[self.lattice.idx(U)]

    def eta(self, U: Subspace) -> int:
        return U.dim - self.rank(U)

    def space(self, i: int) -> Subspace:
        return self.lattice.spaces[i]

    @property
    def ground(self) -> Subspace:
        return self.lattice.spaces[-1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, QMatroid):
            return NotImplemented
        return self.field == other.field and self.n == other.n and self.ranks == other.ranks

    def __hash__(self) -> int:
        return hash((self.field, self.n, self.ranks))

    def __repr__(self) -> str:
        return f"QMatroid({self.field}^{self.n}, rank={self.r}, kind={self.kind!r})"

    def _cached(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]


# construction


def from_rank_function(field: FieldSpec, n: int, rho: Callable[[Subspace], int], kind="table", info=None,
                       check: bool = True) -> QMatroid:
    L = subspace_lattice(field, n)
    M = QMatroid(field, n, [rho(U) for U in L.spaces], kind, info)
    if check:
        check_axioms(M)
    return M


def uniform(k: int, n: int, field: FieldSpec) -> QMatroid:
    """U(k, n): rho(U) = min(k, dim U)."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    L = subspace_lattice(field, n)
    return QMatroid(field, n, [min(k, d) for d in L.dims], "uniform", {"k": k})


def extension_field(field: FieldSpec, m: int) -> FieldSpec:
    """F_{q^m} containing F_q as the constant polynomials; q must be prime."""
    if field.e != 1:
        raise ValueError(f"representations are supported over prime base fields only, not {field}")
    return make_field(field.p, m, cap=max(16, field.p**m))


def from_representation(G: Sequence[Sequence[int]], field: FieldSpec, m: int, check: bool = True) -> QMatroid:
    """q-matroid of a k x n matrix over F_{q^m}: rho(U) = rank(G Y^T), Y spanning U.

    Rank-deficient matrices are rejected.
    """
    ext = extension_field(field, m)
    G = [list(row) for row in G]
    if not G:
        raise ValueError("empty matrix; give n explicitly via uniform(0, n, field)")
    n = len(G[0])
    for row in G:
        if len(row) != n:
            raise ValueError("ragged representation matrix")
        for a in row:
            if not 0 <= a < ext.q:
                raise ValueError(f"entry {a} is not an element of {ext}")
    k = matrix_rank(ext, G, n)
    if k != len(G):
        raise ValueError(f"representation matrix has rank {k} < {len(G)} rows")
    L = subspace_lattice(field, n)
    ranks = []
    for U in L.spaces:
        if U.dim == 0:
            ranks.append(0)
        else:
            prod = matmul(ext, G, [list(c) for c in zip(*U.rows)])
            ranks.append(matrix_rank(ext, prod, U.dim))
    M = QMatroid(field, n, ranks, "representable", {"matrix": [tuple(r) for r in G], "m": m})
    if check:
        check_axioms(M)
    return M


def from_table(field: FieldSpec, n: int, table: Mapping[Subspace, int], check: bool = True) -> QMatroid:
    """Explicit rank table; must assign a rank to every subspace."""
    L = subspace_lattice(field, n)
    ranks = [None] * len(L)
    for U, r in table.items():
        ranks[L.idx(U)] = int(r)
    missing = [str(L.spaces[i]) for i, r in enumerate(ranks) if r is None]
    if missing:
        raise ValueError(f"rank table misses {len(missing)} subspaces, e.g. {missing[0]}")
    M = QMatroid(field, n, ranks, "table")
    if check:
        check_axioms(M)
    return M


def rank_table(M: QMatroid) -> dict[Subspace, int]:
    return {U: M.ranks[i] for i, U in enumerate(M.lattice.spaces)}


def check_axioms(M: QMatroid, exhaustive_limit: int = EXHAUSTIVE_AXIOM_LIMIT, samples: int = 5000,
                 seed: int = 0) -> None:
    """Raise ``AxiomError`` unless (P1)-(P3) hold.

    (P1) and monotonicity along covering pairs are always checked in full
    (monotonicity on covers implies (P2)).  Submodularity is checked on all
    pairs when n <= exhaustive_limit, otherwise on random pairs.
    """
    L, rho = M.lattice, M.ranks
    if rho[0] != 0:
        raise AxiomError("rank of the zero space is not 0")
    for i, d in enumerate(L.dims):
        if not 0 <= rho[i] <= d:
            raise AxiomError(f"(P1) fails at {L.spaces[i]}: rank {rho[i]}, dim {d}")
    for i, hyps in enumerate(L.hyperplanes):
        for j in hyps:
            if rho[j] > rho[i]:
                raise AxiomError(f"(P2) fails: {L.spaces[j]} <= {L.spaces[i]}")
    N = len(L)
    if M.n <= exhaustive_limit:
        pairs = ((i, j) for i in range(N) for j in range(i + 1, N))
    else:
        rng = random.Random(seed)
        pairs = ((rng.randrange(N), rng.randrange(N)) for _ in range(samples))
    for i, j in pairs:
        if rho[L.join(i, j)] + rho[L.meet(i, j)] > rho[i] + rho[j]:
            raise AxiomError(f"(P3) fails on {L.spaces[i]} and {L.spaces[j]}")


# derived structure (index level)


def _independent_idx(M: QMatroid) -> list[int]:
    return M._cached("indep", lambda: [i for i, d in enumerate(M.lattice.dims) if M.ranks[i] == d])


def _basis_idx(M: QMatroid) -> list[int]:
    return M._cached("bases", lambda: [i for i in _independent_idx(M) if M.lattice.dims[i] == M.r])


def _cycle_idx(M: QMatroid) -> list[tuple[int, int]]:
    """(index, nullity) of every cycle of nullity >= 1, by nullity then index."""

    def compute():
        L, rho = M.lattice, M.ranks
        eta = [d - r for d, r in zip(L.dims, rho)]
        out = []
        for i, e in enumerate(eta):
            # minimal in its nullity class iff every hyperplane has smaller nullity
            if e >= 1 and all(eta[j] < e for j in L.hyperplanes[i]):
                out.append((i, e))
        out.sort(key=lambda t: (t[1], t[0]))
        return out

    return M._cached("cycles", compute)


def _flat_idx(M: QMatroid) -> list[int]:
    def compute():
        L, rho = M.lattice, M.ranks
        return [i for i in range(len(L)) if all(rho[j] > rho[i] for j in L.covers[i])]

    return M._cached("flats", compute)


# derived structure (public)


def independents(M: QMatroid) -> list[Subspace]:
    return [M.space(i) for i in _independent_idx(M)]


def bases(M: QMatroid) -> list[Subspace]:
    return [M.space(i) for i in _basis_idx(M)]


def cycles(M: QMatroid) -> list[CycleRecord]:
    return [CycleRecord(M.space(i), e) for i, e in _cycle_idx(M)]


def circuits(M: QMatroid) -> list[Subspace]:
    return [M.space(i) for i, e in _cycle_idx(M) if e == 1]


def flats(M: QMatroid) -> list[Subspace]:
    return [M.space(i) for i in _flat_idx(M)]


def dual_rank_table(M: QMatroid) -> list[int]:
    L, rho, r = M.lattice, M.ranks, M.r
    return [d - r + rho[L.perp[i]] for i, d in enumerate(L.dims)]


def loops(M: QMatroid) -> list[Subspace]:
    return [M.space(i) for i in M.lattice.by_dim[1] if M.ranks[i] == 0] if M.n else []


def coloops(M: QMatroid) -> list[Subspace]:
    if not M.n:
        return []
    dual_rho = dual_rank_table(M)
    return [M.space(i) for i in M.lattice.by_dim[1] if dual_rho[i] == 0]


def _top_cycle_idx(M: QMatroid) -> int:
    def compute():
        L = M.lattice
        top = 0
        for i, e in _cycle_idx(M):
            if e == 1:
                top = L.join(top, i)
        cyc = _cycle_idx(M)
        if cyc:
            tops = [i for i, e in cyc if e == M.nullity]
            if tops != [top]:
                raise ConsistencyError("span of circuits is not the unique cycle of maximal nullity")
        return top

    return M._cached("top", compute)


def top_cycle(M: QMatroid) -> Subspace:
    """Span of all circuits (zero space when there are none)."""
    return M.space(_top_cycle_idx(M))


def has_coloop(M: QMatroid) -> bool:
    by_coloops = bool(coloops(M))
    by_span = _top_cycle_idx(M) != M.lattice.top
    if by_coloops != by_span:
        raise ConsistencyError("coloop test disagrees with the top-cycle test")
    return by_coloops


def basis_intersection(M: QMatroid) -> Subspace:
    L = M.lattice
    acc = L.top
    for b in _basis_idx(M):
        acc = L.meet(acc, b)
    return M.space(acc)


def check_basis_axioms(M: QMatroid, exchange_limit: int = 3) -> None:
    """(B1), (B2) always; the exchange axiom (B3) when n <= exchange_limit."""
    L = M.lattice
    B = _basis_idx(M)
    Bset = set(B)
    if not B:
        raise AxiomError("(B1): no bases")
    for a in B:
        for b in B:
            if a != b and L.leq(a, b):
                raise AxiomError("(B2): nested bases")
    if M.n > exchange_limit:
        return
    lines = list(L.by_dim[1])
    for b1 in B:
        for b2 in B:
            common = L.meet(b1, b2)
            for A in L.hyperplanes[b1]:
                if not L.leq(common, A):
                    continue
                if not any(L.join(A, u) in Bset for u in lines if L.leq(u, b2)):
                    raise AxiomError(f"(B3) fails for {L.spaces[b1]}, {L.spaces[b2]}, {L.spaces[A]}")


# new q-matroids from old


def dual(M: QMatroid, verify: bool = True) -> QMatroid:
    """rho*(X) = dim X - rho(E) + rho(X^perp).

    With ``verify`` the flats of the dual are checked to be exactly the
    orthogonal complements of the cycles of M (zero space included), with
    rank/nullity correspondence.
    """
    D = QMatroid(M.field, M.n, dual_rank_table(M), "dual", {"of": M.kind})
    if verify:
        L = M.lattice
        expected = {L.perp[0]: D.r}
        expected.update({L.perp[i]: D.r - e for i, e in _cycle_idx(M)})
        got = {i: D.ranks[i] for i in _flat_idx(D)}
        if got != expected:
            raise ConsistencyError("flats of the dual are not the complements of the cycles")
    return D


def restrict(M: QMatroid, X: Subspace) -> QMatroid:
    """M restricted to X, re-coordinatized on F_q^dim(X) via the rref rows of X."""
    f = M.field
    basis = X.rows
    d = X.dim
    L = subspace_lattice(f, d)
    ranks = []
    for U in L.spaces:
        image = [_lin_comb(f, coeffs, basis, M.n) for coeffs in U.rows]
        ranks.append(M.rank(rref_of(f, image, M.n)))
    return QMatroid(f, d, ranks, "restriction", {"to": [list(r) for r in X.rows]})


def _lin_comb(f: FieldSpec, coeffs, basis, n):
    acc = [0] * n
    for c, b in zip(coeffs, basis):
        if c:
            acc = [f.add[x][f.mul[c][y]] for x, y in zip(acc, b)]
    return acc


def truncate(M: QMatroid, t: int) -> QMatroid:
    """rho_t(X) = min(rho(X), t)."""
    return QMatroid(M.field, M.n, [min(r, t) for r in M.ranks], "truncation", {"t": t})


def is_free(M: QMatroid) -> bool:
    """True iff every subspace is independent (the U(n,n) type)."""
    return M.r == M.n
