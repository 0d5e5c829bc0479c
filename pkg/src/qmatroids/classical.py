"""
Ordinary matroids on {1..n}, subsets encoded as bitmasks.

This is a separate code path from the q-matroid pipeline: faces, chains and
cycles are counted directly on the Boolean lattice, so the classical
statements serve as an independent check of the q = 1 picture.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import AxiomError, ConsistencyError
from .gf import FieldSpec
from .lattice import build_cycle_lattice, mobius, rota_crosscut
from .linalg import rank as matrix_rank


def popcount(x: int) -> int:
    return bin(x).count("1")


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


class ClassicalMatroid:
    def __init__(self, n: int, ranks: Sequence[int], kind: str = "table", info: dict | None = None,
                 check: bool = True):
        if len(ranks) != 1 << n:
            raise ValueError(f"rank table has {len(ranks)} entries, expected {1 << n}")
        self.n = n
        self.ranks = tuple(ranks)
        self.kind = kind
        self.info = dict(info or {})
        if check:
            check_axioms(self)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def r(self) -> int:
        return self.ranks[self.full]

    @property
    def nullity(self) -> int:
        return self.n - self.r

    def label(self, mask: int) -> str:
        return "{" + ",".join(str(i + 1) for i in range(self.n) if mask >> i & 1) + "}"

    def cycle_masks(self) -> list[tuple[int, int]]:
        """(mask, nullity) of the cycles: minimal sets of each positive nullity."""
        rho = self.ranks
        out = []
        for X in range(1 << self.n):
            e = popcount(X) - rho[X]
            if e >= 1 and all(
                popcount(X) - 1 - rho[X & ~(1 << i)] < e for i in range(self.n) if X >> i & 1
            ):
                out.append((X, e))
        out.sort(key=lambda t: (t[1], popcount(t[0]), t[0]))
        return out

    def circuits(self) -> list[int]:
        return [m for m, e in self.cycle_masks() if e == 1]

    def coloops(self) -> list[int]:
        return [i for i in range(self.n) if self.ranks[self.full & ~(1 << i)] < self.r]

    def has_coloop(self) -> bool:
        by_bases = bool(self.coloops())
        union = 0
        for c in self.circuits():
            union |= c
        if by_bases != (union != self.full):
            raise ConsistencyError("coloop test disagrees with the union of circuits")
        return by_bases

    def __repr__(self) -> str:
        return f"ClassicalMatroid(n={self.n}, rank={self.r}, kind={self.kind!r})"


def check_axioms(M: ClassicalMatroid, exhaustive_limit: int = 8) -> None:
    rho, n = M.ranks, M.n
    if rho[0] != 0:
        raise AxiomError("(R1): rank of the empty set is not 0")
    for X in range(1 << n):
        if not 0 <= rho[X] <= popcount(X):
            raise AxiomError(f"(R1) fails at {M.label(X)}")
        for i in range(n):
            if not X >> i & 1 and rho[X | 1 << i] < rho[X]:
                raise AxiomError(f"(R2) fails at {M.label(X)} + {i + 1}")
    if n <= exhaustive_limit:
        for X in range(1 << n):
            for Y in range(X + 1, 1 << n):
                if rho[X & Y] + rho[X | Y] > rho[X] + rho[Y]:
                    raise AxiomError(f"(R3) fails on {M.label(X)}, {M.label(Y)}")
    else:
        # local submodularity is equivalent to (R3)
        for X in range(1 << n):
            for i, j in itertools.combinations(range(n), 2):
                a, b = 1 << i, 1 << j
                if X & (a | b):
                    continue
                if rho[X | a | b] + rho[X] > rho[X | a] + rho[X | b]:
                    raise AxiomError(f"(R3) fails near {M.label(X)}")


def uniform(k: int, n: int) -> ClassicalMatroid:
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    return ClassicalMatroid(n, [min(k, popcount(X)) for X in range(1 << n)], "uniform", {"k": k},
                            check=False)


def from_matrix(matrix: Sequence[Sequence[int]], field: FieldSpec) -> ClassicalMatroid:
    """Column matroid of a matrix over F_q."""
    rows = [list(r) for r in matrix]
    n = len(rows[0]) if rows else 0
    cols = list(zip(*rows)) if rows else []
    ranks = []
    for X in range(1 << n):
        sel = [cols[i] for i in range(n) if X >> i & 1]
        ranks.append(matrix_rank(field, sel, len(rows)) if sel else 0)
    return ClassicalMatroid(n, ranks, "representable", {"matrix": rows, "q": field.q})


def graphic(num_vertices: int, edges: Sequence[tuple[int, int]]) -> ClassicalMatroid:
    """Cycle matroid: rank of an edge set is #vertices minus #components it leaves."""
    n = len(edges)
    ranks = []
    for X in range(1 << n):
        parent = list(range(num_vertices))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        r = 0
        for i, (u, v) in enumerate(edges):
            if X >> i & 1:
                a, b = find(u), find(v)
                if a != b:
                    parent[a] = b
                    r += 1
        ranks.append(r)
    return ClassicalMatroid(n, ranks, "graphic", {"vertices": num_vertices, "edges": list(edges)})


def dual(M: ClassicalMatroid) -> ClassicalMatroid:
    full = M.full
    return ClassicalMatroid(
        M.n, [popcount(X) - M.r + M.ranks[full & ~X] for X in range(1 << M.n)], "dual", check=False
    )


# complexes and chains


@dataclass(frozen=True)
class FaceCensus:
    f: tuple[int, ...]
    d: tuple[int, ...]
    chi: int


def face_census(M: ClassicalMatroid) -> FaceCensus:
    f = [0] * (M.n + 1)
    d = [0] * (M.n + 1)
    for X in range(1 << M.n):
        k = popcount(X)
        if M.ranks[X] == k:
            f[k] += 1
        else:
            d[k] += 1
    chi = sum(_sign(k - 1) * c for k, c in enumerate(f))
    if M.n >= 2 and chi != sum(_sign(k) * c for k, c in enumerate(d)):
        raise ConsistencyError("face-count alternating sums disagree")
    return FaceCensus(tuple(f), tuple(d), chi)


def _submasks(X: int):
    """Proper nonempty submasks of X."""
    s = (X - 1) & X
    while s:
        yield s
        s = (s - 1) & X


def _chains_by_top(n: int, include_empty: bool = False) -> list[list[int]]:
    """c[X][k]: chains Y_1 < ... < Y_k = X of subsets (empty set allowed iff include_empty)."""
    c = [[0] * (n + 2) for _ in range(1 << n)]
    order = sorted(range(1 << n), key=popcount)
    for X in order:
        if X == 0 and not include_empty:
            continue
        cx = c[X]
        cx[1] = 1
        subs = list(_submasks(X))
        if include_empty and X:
            subs.append(0)
        for Y in subs:
            cy = c[Y]
            for k in range(1, n + 1):
                if cy[k]:
                    cx[k + 1] += cy[k]
    return c


def _alt(counts) -> int:
    return sum(_sign(k) * c for k, c in enumerate(counts))


def chain_census(M: ClassicalMatroid) -> tuple[list[int], list[int], int]:
    """(f, d, chi) for chains of nonempty subsets; f counts independent tops."""
    n = M.n
    c = _chains_by_top(n)
    f = [1] + [0] * (n + 1)
    d = [0] * (n + 2)
    for X in range(1, 1 << n):
        target = f if M.ranks[X] == popcount(X) else d
        for k in range(1, n + 2):
            target[k] += c[X][k]
    chi = -_alt(f)
    if chi != _alt(d):
        raise ConsistencyError("chain alternating sums disagree")
    return f, d, chi


def lemma36_sums(n: int) -> tuple[int, int, int, int, int]:
    """Alternating chain sums on the Boolean lattice of an n-set (see ``euler.lemma41_sums``)."""
    c = _chains_by_top(n)
    E = (1 << n) - 1
    proper = [X for X in range(1, E)]
    p1 = _alt(c[E])
    p2 = 1 + sum(_alt(c[X]) for X in proper)
    p3 = -1 - sum(_alt(c[X]) for X in proper)
    p4 = 1 + sum(_alt(c[X]) for X in proper)
    c0 = _chains_by_top(n, include_empty=True)
    p5 = 1 + sum(_alt(c0[X]) for X in range(1 << n))
    return p1, p2, p3, p4, p5


def lemma36_expected(n: int) -> tuple[int, int, int, int, int]:
    v = _sign(n)
    return v, -v, v, -v, 0


@dataclass
class Theorem32Report:
    chi: int
    rank: int
    coloop: bool
    mu: int | None
    mu_crosscut: int | None
    lambdas: dict[int, int]
    ok: bool


def theorem32_check(M: ClassicalMatroid) -> Theorem32Report:
    """chi(S_M) == (-1)^(r-1) |mu(0,1)| without coloops, and 0 with one."""
    chi = face_census(M).chi
    coloop = M.has_coloop()
    mu = cross = None
    lam: dict[int, int] = {}
    if coloop:
        ok = chi == 0
    else:
        L = build_cycle_lattice(M)
        mu = mobius(L)
        ok = chi == _sign(M.r - 1) * abs(mu)
        if L.nullity[L.top] >= 2:
            cross, lam = rota_crosscut(L)
            ok = ok and cross == mu
            # first-proof identity: sum (-1)^k d_k = (-1)^(|E|-1) (lambda_2 - lambda_3 + ...)
            d = face_census(M).d
            ok = ok and _alt(d) == _sign(M.n - 1) * cross
    return Theorem32Report(chi, M.r, coloop, mu, cross, lam, ok)


@dataclass
class ChainProofReport:
    lemma36: tuple[int, ...]
    lemma36_ok: bool
    chi_chains: int
    chi_faces: int
    ok: bool


def chain_proof_check(M: ClassicalMatroid, max_n: int = 10) -> ChainProofReport:
    if M.n > max_n:
        raise ValueError(f"chain proof check limited to n <= {max_n}")
    parts = lemma36_sums(M.n)
    lemma_ok = parts == lemma36_expected(M.n)
    _, _, chi_chains = chain_census(M)
    chi_faces = face_census(M).chi
    return ChainProofReport(parts, lemma_ok, chi_chains, chi_faces, lemma_ok and chi_chains == chi_faces)
