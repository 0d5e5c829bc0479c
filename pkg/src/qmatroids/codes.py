"""
Rank-metric codes over F_{q^m}, their supports and generalized rank weights.

Elements of F_{q^m} are expanded in the polynomial basis 1, x, ..., x^(m-1)
(the digit expansion of the element code), so phi(a) is a length-m vector
over F_q.  The support of a codeword x in F_{q^m}^n is the F_q-rowspace of
the m x n matrix whose j-th column is phi(x_j); it lives in F_q^n, the same
ambient space as the associated q-matroid.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .errors import BudgetExceeded, ConsistencyError
from .gf import FieldSpec, gaussian_binomial
from .grassmann import enumerate_subspaces
from .linalg import Subspace, matmul, rank as matrix_rank, rref_of, sum_, zero_space
from .qmatroid import QMatroid, _cycle_idx, dual, extension_field, from_representation, uniform

DEFAULT_SUBCODE_BUDGET = 200_000
MEMBER_CHECK_LIMIT = 4096


@dataclass(frozen=True)
class RankMetricCode:
    field: FieldSpec
    m: int
    n: int
    matrix: tuple[tuple[int, ...], ...]
    ext: FieldSpec = dc_field(init=False, repr=False, compare=False)

    def __post_init__(self):
        ext = extension_field(self.field, self.m)
        object.__setattr__(self, "ext", ext)
        rows = tuple(tuple(r) for r in self.matrix)
        object.__setattr__(self, "matrix", rows)
        for r in rows:
            if len(r) != self.n:
                raise ValueError(f"generator row {r} does not have length {self.n}")
            for a in r:
                if not 0 <= a < ext.q:
                    raise ValueError(f"entry {a} is not an element of {ext}")
        if rows and matrix_rank(ext, rows, self.n) != len(rows):
            raise ValueError("generator matrix does not have full row rank")

    @property
    def k(self) -> int:
        return len(self.matrix)

    def encode(self, message: Sequence[int]) -> tuple[int, ...]:
        if self.k == 0:
            return (0,) * self.n
        return tuple(matmul(self.ext, [list(message)], [list(r) for r in self.matrix])[0])

    def __str__(self) -> str:
        return f"[{self.n},{self.k}] code over F_{self.ext.q} (m={self.m})"


def expand(code: RankMetricCode, x: Sequence[int]) -> list[tuple[int, ...]]:
    """The m x n matrix with columns phi(x_j)."""
    cols = [code.ext.coefficients(a) for a in x]
    return [tuple(c[i] for c in cols) for i in range(code.m)]


def support(code: RankMetricCode, x: Sequence[int]) -> Subspace:
    if len(x) != code.n:
        raise ValueError(f"codeword has length {len(x)}, expected {code.n}")
    return rref_of(code.field, expand(code, x), code.n)


def subcode_generators(code: RankMetricCode, coeff_space: Subspace) -> list[tuple[int, ...]]:
    """Codewords spanning the subcode whose message space is ``coeff_space``."""
    return [code.encode(c) for c in coeff_space.rows]


def _members(ext: FieldSpec, gens):
    for coeffs in itertools.product(ext.elements, repeat=len(gens)):
        yield tuple(coeffs)


def support_of_subcode(code: RankMetricCode, gens: Sequence[Sequence[int]], exhaustive: bool | None = None) -> Subspace:
    """Span of the supports of a generating set.

    When the subcode is small (or ``exhaustive`` is set) the span of the
    supports of every member is computed too and must agree.
    """
    S = zero_space(code.field, code.n)
    for g in gens:
        S = sum_(S, support(code, g))
    size = code.ext.q ** len(gens)
    if exhaustive or (exhaustive is None and size <= MEMBER_CHECK_LIMIT):
        T = zero_space(code.field, code.n)
        ext = code.ext
        for coeffs in _members(ext, gens):
            x = [0] * code.n
            for c, g in zip(coeffs, gens):
                x = [ext.add[a][ext.mul[c][b]] for a, b in zip(x, g)]
            T = sum_(T, support(code, x))
        if T != S:
            raise ConsistencyError("support of a generating set differs from support of all members")
    return S


@dataclass(frozen=True)
class Subcode:
    dim: int
    coefficients: Subspace          # message space inside F_{q^m}^k
    generators: tuple[tuple[int, ...], ...]
    support: Subspace


def subcodes(code: RankMetricCode, budget: int = DEFAULT_SUBCODE_BUDGET) -> list[Subcode]:
    """Every F_{q^m}-linear subcode, including {0} and the code itself."""
    k, Q = code.k, code.ext.q
    total = sum(gaussian_binomial(k, r, Q) for r in range(k + 1))
    if total > budget:
        raise BudgetExceeded("subcodes", total, budget)
    out = []
    for r in range(k + 1):
        for cs in enumerate_subspaces(k, r, code.ext):
            gens = tuple(subcode_generators(code, cs))
            out.append(Subcode(r, cs, gens, support_of_subcode(code, gens)))
    return out


def associated_qmatroid(code: RankMetricCode, reading: str = "dual") -> QMatroid:
    """The q-matroid whose cycles should be the subcode supports.

    ``reading="dual"`` takes the dual of the generator-matrix q-matroid;
    ``reading="generator"`` takes the generator-matrix q-matroid itself.
    """
    if code.k == 0:
        MG = uniform(0, code.n, code.field)
    else:
        MG = from_representation(code.matrix, code.field, code.m)
    if reading == "dual":
        return dual(MG)
    if reading == "generator":
        return MG
    raise ValueError(f"unknown reading {reading!r}")


@dataclass
class Lemma62Result:
    ok: bool
    reading: str | None
    attempts: dict[str, str]
    supports: list[Subspace]
    cycles: list[tuple[Subspace, int]]


def _check_reading(code: RankMetricCode, subs: list[Subcode], M: QMatroid) -> str | None:
    """None on success, otherwise a description of the first mismatch."""
    L = M.lattice
    cyc = {L.spaces[i]: e for i, e in _cycle_idx(M)}
    supp = {s.support for s in subs if s.dim > 0}
    if set(cyc) != supp:
        extra = sorted(str(U) for U in supp - set(cyc))[:3]
        missing = sorted(str(U) for U in set(cyc) - supp)[:3]
        return f"supports not cycles: {extra}; cycles not supports: {missing}"
    for U, e in cyc.items():
        largest = max(s.dim for s in subs if s.support <= U)
        if largest != e:
            return f"cycle {U} has nullity {e} but the largest subcode on it has dimension {largest}"
    return None


def verify_lemma62(code: RankMetricCode, budget: int = DEFAULT_SUBCODE_BUDGET) -> Lemma62Result:
    """Subcode supports versus q-cycles, trying the dual reading first."""
    subs = subcodes(code, budget)
    attempts: dict[str, str] = {}
    supports = sorted({s.support for s in subs}, key=lambda U: (U.dim, U.rows[::-1]))
    for reading in ("dual", "generator"):
        M = associated_qmatroid(code, reading)
        err = _check_reading(code, subs, M)
        if err is None:
            attempts[reading] = "ok"
            cyc = [(M.lattice.spaces[i], e) for i, e in _cycle_idx(M)]
            return Lemma62Result(True, reading, attempts, supports, cyc)
        attempts[reading] = err
    return Lemma62Result(False, None, attempts, supports, [])


@dataclass
class WeightReport:
    weights: list[int]
    by_subcodes: list[int]
    by_cycles: list[int]
    subcode_certificates: list[tuple[tuple[int, ...], ...]]
    cycle_certificates: list[Subspace]
    reading: str

    def to_json(self) -> dict:
        return {
            "d": self.weights,
            "certificates": [
                {"r": r, "subcode_generators": [list(g) for g in gens], "cycle": str(U), "dim": U.dim}
                for r, (gens, U) in enumerate(zip(self.subcode_certificates, self.cycle_certificates), 1)
            ],
            "reading": self.reading,
        }


def generalized_rank_weights(code: RankMetricCode, budget: int = DEFAULT_SUBCODE_BUDGET,
                             reading: str = "dual") -> WeightReport:
    """d_1..d_k from subcode supports and, independently, from cycle nullities."""
    subs = subcodes(code, budget)
    M = associated_qmatroid(code, reading)
    cyc = [(M.lattice.spaces[i], e) for i, e in _cycle_idx(M)]
    by_sub, by_cyc, sub_cert, cyc_cert = [], [], [], []
    for r in range(1, code.k + 1):
        best = min((s for s in subs if s.dim == r), key=lambda s: (s.support.dim, s.support.rows[::-1]))
        by_sub.append(best.support.dim)
        sub_cert.append(best.generators)
        cands = [U for U, e in cyc if e == r]
        if not cands:
            raise ConsistencyError(f"no cycle of nullity {r}")
        U = min(cands, key=lambda U: (U.dim, U.rows[::-1]))
        by_cyc.append(U.dim)
        cyc_cert.append(U)
    if by_sub != by_cyc:
        raise ConsistencyError(f"weight routes disagree: subcodes {by_sub}, cycles {by_cyc}")
    if any(a > b for a, b in zip(by_sub, by_sub[1:])):
        raise ConsistencyError(f"weights not monotone: {by_sub}")
    return WeightReport(by_sub, by_sub, by_cyc, sub_cert, cyc_cert, reading)
