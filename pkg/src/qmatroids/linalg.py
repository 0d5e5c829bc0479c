"""
Vectors and subspaces of F_q^n.

A vector is a plain tuple of field elements (integer codes, see ``gf``).
Because the integer codes follow the fixed element order, Python's tuple
comparison *is* the lexicographic order on F_q^n.

A ``Subspace`` stores its unique reduced row echelon matrix with the rows
ordered top to bottom as [u_k, ..., u_1]: pivot columns increase downward,
so u_1 (the last row) has the largest leading index.  The reduced generator
is the tuple (u_1, ..., u_k), i.e. the rows read bottom-up.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .gf import FieldSpec

Vector = tuple


@dataclass(frozen=True)
class Subspace:
    field: FieldSpec
    n: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def reduced_generator(self) -> tuple[tuple[int, ...], ...]:
        return self.rows[::-1]

    @property
    def pivots(self) -> tuple[int, ...]:
        """0-based pivot columns of the stored rows, top to bottom."""
        return tuple(leading_index(r) - 1 for r in self.rows)

    def __contains__(self, v) -> bool:
        return is_member(self, tuple(v))

    def __le__(self, other: "Subspace") -> bool:
        return contains(other, self)

    def __lt__(self, other: "Subspace") -> bool:
        return self.dim < other.dim and contains(other, self)

    def __str__(self) -> str:
        if not self.rows:
            return "<0>"
        return "<" + "; ".join(format_vector(r) for r in self.rows) + ">"


def format_vector(v: Sequence[int]) -> str:
    return ",".join(str(a) for a in v)


def parse_vector(text: str, field: FieldSpec, n: int | None = None) -> tuple[int, ...]:
    """Parse the textual notation ``"a1,a2,...,an"`` (element codes 0..q-1)."""
    try:
        v = tuple(int(tok) for tok in text.replace(" ", "").split(","))
    except ValueError as exc:
        raise ValueError(f"bad vector {text!r}: {exc}") from None
    if n is not None and len(v) != n:
        raise ValueError(f"vector {text!r} has length {len(v)}, expected {n}")
    for a in v:
        if not 0 <= a < field.q:
            raise ValueError(f"entry {a} of {text!r} is not an element of {field}")
    return v


def _check_vectors(vectors, n):
    for v in vectors:
        if len(v) != n:
            raise ValueError(f"vector of length {len(v)} in ambient dimension {n}")


def rref_rows(field: FieldSpec, vectors: Iterable[Sequence[int]], n: int) -> tuple[tuple[int, ...], ...]:
    """Reduced row echelon form (nonzero rows only, pivots normalized to 1)."""
    add, mul, neg, inv = field.add, field.mul, field.neg, field.inv
    rows = [list(v) for v in vectors]
    _check_vectors(rows, n)
    out: list[list[int]] = []
    r = 0
    for col in range(n):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        c = inv[prow[col]]
        if c != 1:
            prow = rows[r] = [mul[c][x] for x in prow]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = neg[rows[i][col]]
                frow = mul[f]
                rows[i] = [add[x][frow[y]] for x, y in zip(rows[i], prow)]
        r += 1
        if r == len(rows):
            break
    out = rows[:r]
    return tuple(tuple(row) for row in out)


def rref_of(field: FieldSpec, vectors: Iterable[Sequence[int]], n: int) -> Subspace:
    """Canonical subspace spanned by ``vectors``."""
    return Subspace(field, n, rref_rows(field, vectors, n))


def zero_space(field: FieldSpec, n: int) -> Subspace:
    return Subspace(field, n, ())


def full_space(field: FieldSpec, n: int) -> Subspace:
    return Subspace(field, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))


def rank(field: FieldSpec, vectors: Sequence[Sequence[int]], n: int | None = None) -> int:
    vectors = list(vectors)
    if not vectors:
        return 0
    return len(rref_rows(field, vectors, len(vectors[0]) if n is None else n))


def _same_ambient(U: Subspace, V: Subspace):
    if U.n != V.n or U.field != V.field:
        raise ValueError(f"ambient mismatch: {U.field}^{U.n} vs {V.field}^{V.n}")


def is_member(U: Subspace, v: tuple[int, ...]) -> bool:
    """Membership by reducing ``v`` against the echelon rows."""
    if len(v) != U.n:
        raise ValueError("vector length does not match ambient dimension")
    f = U.field
    v = list(v)
    for row in U.rows:
        col = leading_index(row) - 1
        c = v[col]
        if c:
            nc = f.neg[c]
            v = [f.add[x][f.mul[nc][y]] for x, y in zip(v, row)]
    return not any(v)


def sum_(U: Subspace, V: Subspace) -> Subspace:
    _same_ambient(U, V)
    return rref_of(U.field, U.rows + V.rows, U.n)


def contains(U: Subspace, V: Subspace) -> bool:
    """True iff V is a subspace of U."""
    _same_ambient(U, V)
    return all(is_member(U, r) for r in V.rows)


def kernel_rows(field: FieldSpec, rows: Sequence[Sequence[int]], n: int) -> list[tuple[int, ...]]:
    """A basis of {x : r . x = 0 for every row r}; ``rows`` must be in RREF."""
    pivots = [leading_index(r) - 1 for r in rows]
    pivset = set(pivots)
    basis = []
    for fcol in range(n):
        if fcol in pivset:
            continue
        x = [0] * n
        x[fcol] = 1
        for r, pc in zip(rows, pivots):
            x[pc] = field.neg[r[fcol]]
        basis.append(tuple(x))
    return basis


def orthogonal_complement(U: Subspace) -> Subspace:
    """U^perp under the standard dot product."""
    return rref_of(U.field, kernel_rows(U.field, U.rows, U.n), U.n)


def intersect(U: Subspace, V: Subspace) -> Subspace:
    """U ∩ V as the solution space of the stacked system U^perp x = V^perp x = 0."""
    _same_ambient(U, V)
    f, n = U.field, U.n
    stacked = rref_rows(f, kernel_rows(f, U.rows, n) + kernel_rows(f, V.rows, n), n)
    return rref_of(f, kernel_rows(f, stacked, n), n)


def dot(field: FieldSpec, u: Sequence[int], v: Sequence[int]) -> int:
    acc = 0
    for a, b in zip(u, v):
        acc = field.add[acc][field.mul[a][b]]
    return acc


def leading_index(v: Sequence[int]) -> int:
    """1-based position of the first nonzero entry."""
    for i, a in enumerate(v):
        if a:
            return i + 1
    raise ValueError("leading index of the zero vector")


def profile(vectors: Iterable[Sequence[int]]) -> set[int]:
    return {leading_index(v) for v in vectors if any(v)}


def members(U: Subspace) -> list[tuple[int, ...]]:
    """Every vector of U (q^dim of them)."""
    f = U.field
    out = [tuple([0] * U.n)]
    for row in U.rows:
        new = []
        for c in f.elements:
            crow = [f.mul[c][y] for y in row]
            for v in out:
                new.append(tuple(f.add[a][b] for a, b in zip(v, crow)))
        out = new
    return out


def min_nonzero_vector(U: Subspace) -> tuple[int, ...]:
    """The lexicographically least nonzero vector of U; always the last stored row."""
    if U.dim == 0:
        raise ValueError("zero space has no nonzero vector")
    u1 = U.rows[-1]
    # every nonzero vector has leading index among the pivots, and the
    # largest pivot belongs to u_1 alone
    assert all(v >= u1 for v in members(U) if any(v)), "least vector is not the last row"
    return u1


def scale(field: FieldSpec, c: int, v: Sequence[int]) -> tuple[int, ...]:
    return tuple(field.mul[c][a] for a in v)


def vadd(field: FieldSpec, u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    return tuple(field.add[a][b] for a, b in zip(u, v))


def matmul(field: FieldSpec, A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> list[list[int]]:
    """A @ B over ``field``; A is a x b, B is b x c."""
    add, mul = field.add, field.mul
    cols = list(zip(*B)) if B else []
    out = []
    for row in A:
        out_row = []
        for col in cols:
            acc = 0
            for x, y in zip(row, col):
                if x and y:
                    acc = add[acc][mul[x][y]]
            out_row.append(acc)
        out.append(out_row)
    return out
