"""
Lattices of cycles and their Möbius numbers.

A ``CycleLattice`` holds the zero space (or empty set) as bottom together
with every cycle, ordered by inclusion.  It works for q-matroids (nodes are
subspaces) and classical matroids (nodes are subsets), and offers three
routes to mu(0, 1): the defining recursion, a subset-count cross-cut sum
evaluated by dynamic programming over joins, and plain subset enumeration
for small atom counts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Hashable, Sequence

from .errors import BudgetExceeded, ConsistencyError
from .qmatroid import QMatroid, _cycle_idx, has_coloop

DEFAULT_CIRCUIT_CAP = 22


@dataclass
class CycleLattice:
    keys: list[Hashable]          # node 0 is the bottom, the last node the top
    size: list[int]               # dimension (q) or cardinality (classical)
    nullity: list[int]
    labels: list[str]
    ambient: int
    span: Callable[[Hashable, Hashable], Hashable] = field(repr=False)
    contains: Callable[[Hashable, Hashable], bool] = field(repr=False)
    below: list[set[int]] = field(default_factory=list, repr=False)
    join_table: list[list[int]] = field(default_factory=list, repr=False)
    mobius_values: list[int] = field(default_factory=list)
    diagnostics: list[str] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.keys)

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return len(self.keys) - 1

    @property
    def atoms(self) -> list[int]:
        return [i for i, e in enumerate(self.nullity) if e == 1]

    @property
    def top_is_ground(self) -> bool:
        return self.size[self.top] == self.ambient

    def leq(self, i: int, j: int) -> bool:
        return i == j or i in self.below[j]

    def join(self, i: int, j: int) -> int:
        return self.join_table[i][j]

    def codim(self, i: int) -> int:
        return self.ambient - self.size[i]


def _finish(L: CycleLattice) -> CycleLattice:
    N = len(L.keys)
    pos = {k: i for i, k in enumerate(L.keys)}
    L.below = [{j for j in range(N) if j != i and L.contains(L.keys[i], L.keys[j])} for i in range(N)]
    tops = [i for i in range(N) if len(L.below[i]) == N - 1]
    bots = [i for i in range(N) if all(i in L.below[j] for j in range(N) if j != i)]
    if tops != [N - 1] or bots != [0]:
        raise ConsistencyError("cycle poset lacks a unique bottom and top")
    L.join_table = [[0] * N for _ in range(N)]
    for i in range(N):
        for j in range(i, N):
            s = L.span(L.keys[i], L.keys[j])
            k = pos.get(s)
            if k is None:
                above = [c for c in range(N) if L.contains(L.keys[c], s)]
                least = [c for c in above if all(c == d or c in L.below[d] for d in above)]
                if len(least) != 1:
                    raise ConsistencyError("cycle poset is not a lattice")
                k = least[0]
                L.diagnostics.append(f"span of {L.labels[i]} and {L.labels[j]} is not a cycle")
            L.join_table[i][j] = L.join_table[j][i] = k
    order = sorted(range(N), key=lambda i: L.size[i])
    mu = [0] * N
    for y in order:
        mu[y] = 1 if y == 0 else -sum(mu[x] for x in L.below[y])
    L.mobius_values = mu
    return L


def build_cycle_lattice(M) -> CycleLattice:
    """Lattice of cycles of a ``QMatroid`` or ``ClassicalMatroid``."""
    if isinstance(M, QMatroid):
        S = M.lattice
        cyc = _cycle_idx(M)
        keys = [0] + [i for i, _ in cyc]
        return _finish(
            CycleLattice(
                keys=keys,
                size=[S.dims[i] for i in keys],
                nullity=[0] + [e for _, e in cyc],
                labels=[str(S.spaces[i]) for i in keys],
                ambient=M.n,
                span=S.join,
                contains=lambda big, small: S.leq(small, big),
            )
        )
    cyc = M.cycle_masks()
    keys = [0] + [m for m, _ in cyc]
    return _finish(
        CycleLattice(
            keys=keys,
            size=[bin(m).count("1") for m in keys],
            nullity=[0] + [e for _, e in cyc],
            labels=[M.label(m) for m in keys],
            ambient=M.n,
            span=lambda a, b: a | b,
            contains=lambda big, small: small & ~big == 0,
        )
    )


def mobius(L: CycleLattice) -> int:
    """mu(0, 1) by the recursion."""
    return L.mobius_values[L.top]


def join_counts(L: CycleLattice) -> list[list[int]]:
    """counts[z][i] = number of i-subsets of atoms whose join is node z.

    Atoms are added one at a time; the state is the current join, so the
    work is linear in the number of atoms rather than exponential.
    """
    N = len(L)
    atoms = L.atoms
    s = len(atoms)
    counts = [[0] * (s + 1) for _ in range(N)]
    counts[0][0] = 1
    for t, a in enumerate(atoms):
        row = L.join_table
        new = [c[:] for c in counts]
        for z in range(N):
            cz = counts[z]
            if not any(cz[: t + 1]):
                continue
            target = new[row[z][a]]
            for i in range(t + 1):
                if cz[i]:
                    target[i + 1] += cz[i]
        counts = new
    return counts


def brute_force_join_counts(L: CycleLattice, cap: int = DEFAULT_CIRCUIT_CAP) -> dict[Hashable, list[int]]:
    """Same counts as ``join_counts``, keyed by span, by visiting every subset.

    Spans are recomputed incrementally from the underlying subspaces/subsets
    (not through the join table).  Refuses more than ``cap`` atoms.
    """
    atoms = [L.keys[a] for a in L.atoms]
    s = len(atoms)
    if s > cap:
        raise BudgetExceeded("circuit subsets", 2**s, 2**cap)
    out: dict[Hashable, list[int]] = {}

    def visit(start, span, size):
        out.setdefault(span, [0] * (s + 1))[size] += 1
        for t in range(start, s):
            visit(t + 1, L.span(span, atoms[t]), size + 1)

    visit(0, L.keys[0], 0)
    return out


def rota_crosscut(L: CycleLattice) -> tuple[int, dict[int, int]]:
    """mu(0, 1) as sum_{i>=2} (-1)^i lambda_i over subsets of atoms joining to the top.

    Needs top nullity >= 2.
    """
    if L.nullity[L.top] < 2:
        raise ValueError(f"cross-cut form needs nullity >= 2, got {L.nullity[L.top]}")
    row = join_counts(L)[L.top]
    lam = {i: c for i, c in enumerate(row) if i >= 1 and c}
    if lam.get(1, 0):
        raise ConsistencyError("an atom equals the top of a lattice of nullity >= 2")
    return sum((-1) ** i * c for i, c in lam.items()), lam


def mu_bar(M) -> int:
    """|mu(L)| if M has no coloop, 0 otherwise."""
    if has_coloop(M) if isinstance(M, QMatroid) else M.has_coloop():
        return 0
    return abs(mobius(build_cycle_lattice(M)))


def poset_mobius(elements: Sequence[Hashable], leq: Callable[[Hashable, Hashable], bool]) -> int:
    """mu(bottom, top) of a finite bounded poset given by its order relation."""
    elems = list(elements)
    N = len(elems)
    below = [[j for j in range(N) if j != i and leq(elems[j], elems[i])] for i in range(N)]
    bottoms = [i for i in range(N) if not below[i]]
    tops = [i for i in range(N) if len(below[i]) == N - 1]
    if len(bottoms) != 1 or len(tops) != 1:
        raise ValueError("poset is not bounded")
    order = sorted(range(N), key=lambda i: len(below[i]))
    mu = [0] * N
    for y in order:
        mu[y] = 1 if y == bottoms[0] else -sum(mu[x] for x in below[y])
    return mu[tops[0]]


def to_dot(L: CycleLattice, name: str = "cycles") -> str:
    """Hasse diagram in DOT; nodes labelled with size, nullity and mu(0, x)."""
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for i, lab in enumerate(L.labels):
        text = f"{lab}\\nsize={L.size[i]} nullity={L.nullity[i]} mu={L.mobius_values[i]}"
        lines.append(f'  n{i} [label="{text}"];')
    for y in range(len(L)):
        for x in L.below[y]:
            if not any(x in L.below[z] for z in L.below[y]):
                lines.append(f"  n{x} -> n{y};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def binomial_alternating_sum(l: int) -> int:
    """sum_j (-1)^j C(l, j): the q = 1 collapse of the inner Gaussian sums."""
    return sum((-1) ** j * math.comb(l, j) for j in range(l + 1))
