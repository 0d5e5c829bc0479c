"""Fixed test populations: q-matroids, classical matroids and rank-metric codes."""

from __future__ import annotations

import random

from . import classical
from .codes import RankMetricCode
from .gf import make_field
from .qmatroid import QMatroid, dual, from_representation, from_table, rank_table, restrict, truncate, uniform
from .linalg import rref_of

# rank-1 q-matroid on F_2^3 represented by (0, 0, 1) over F_4
P1_MATRIX = ((0, 0, 1),)
# rank-2 companion on F_2^3 whose only circuit is <y,z>; alpha is the element code 2.
# Despite the customary name P1*, it is not dual(P1).
P1_STAR_MATRIX = ((1, 0, 0), (0, 2, 1))

# (label, m, matrix) over F_2 with entries in F_{2^m}
REPRESENTABLE_F2 = [
    ("P1", 2, P1_MATRIX),
    ("P1*", 2, P1_STAR_MATRIX),
    ("[1 a]/F4", 2, ((1, 2),)),
    ("[1 a a+1]/F4", 2, ((1, 2, 3),)),
    ("[1 0 a; 0 1 a+1]/F4", 2, ((1, 0, 2), (0, 1, 3))),
    ("[1 1 0]/F4", 2, ((1, 1, 0),)),
    ("[1 a a^2]/F8", 3, ((1, 2, 4),)),
    ("[1 a a^2 a+1]/F8", 3, ((1, 2, 4, 3),)),
    ("[1 0 a 1; 0 1 1 a]/F4", 2, ((1, 0, 2, 1), (0, 1, 1, 2))),
    ("[1 0 0 a; 0 1 0 a+1; 0 0 1 1]/F4", 2, ((1, 0, 0, 2), (0, 1, 0, 3), (0, 0, 1, 1))),
    ("[1 a 0 0]/F4", 2, ((1, 2, 0, 0),)),
    ("[1 0 a a^2; 0 1 a^2 a]/F8", 3, ((1, 0, 2, 4), (0, 1, 4, 2))),
]


def p1() -> QMatroid:
    return from_representation(P1_MATRIX, make_field(2), 2)


def p1_star() -> QMatroid:
    return from_representation(P1_STAR_MATRIX, make_field(2), 2)


def _as_table(M: QMatroid) -> QMatroid:
    return from_table(M.field, M.n, rank_table(M))


def q_battery() -> list[tuple[str, QMatroid]]:
    """Uniform, representable and explicit-table q-matroids with n <= 4."""
    out: list[tuple[str, QMatroid]] = []
    for q in (2, 3):
        F = make_field(q)
        for n in range(1, 5):
            for k in range(n + 1):
                out.append((f"U({k},{n})/F{q}", uniform(k, n, F)))
    F2 = make_field(2)
    for label, m, G in REPRESENTABLE_F2:
        out.append((label, from_representation(G, F2, m)))
    reps = {label: M for label, M in out}
    tables = [
        ("table(P1*)", _as_table(reps["P1*"])),
        ("table(dual P1)", _as_table(dual(reps["P1"]))),
        ("table(dual [1 0 a 1; 0 1 1 a])", _as_table(dual(reps["[1 0 a 1; 0 1 1 a]/F4"]))),
        ("table(truncate([1 0 0 a; ...], 2))", _as_table(truncate(reps["[1 0 0 a; 0 1 0 a+1; 0 0 1 1]/F4"], 2))),
        ("table(truncate([1 0 a; 0 1 a+1], 1))", _as_table(truncate(reps["[1 0 a; 0 1 a+1]/F4"], 1))),
        ("table(restrict(P1*, <x,z>))",
         _as_table(restrict(reps["P1*"], rref_of(F2, [(1, 0, 0), (0, 0, 1)], 3)))),
        ("table([1 a b]/F9)", _as_table(from_representation(((1, 3, 4),), make_field(3), 2))),
    ]
    out.extend(tables)
    return out


_GRAPHS = [
    ("triangle", 3, [(0, 1), (1, 2), (2, 0)]),
    ("C4", 4, [(0, 1), (1, 2), (2, 3), (3, 0)]),
    ("C5", 5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]),
    ("K4", 4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    ("K4-e", 4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
    ("theta", 2, [(0, 1), (0, 1), (0, 1)]),
    ("path+triangle", 4, [(0, 1), (1, 2), (2, 3), (3, 1)]),
    ("loop+edge", 2, [(0, 0), (0, 1)]),
    ("K23", 5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]),
    ("W4", 5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (4, 1)]),
    ("prism", 6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]),
    ("K5", 5, [(i, j) for i in range(5) for j in range(i + 1, 5)]),
    ("bowtie", 5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]),
]


def classical_battery(seed: int = 0, random_per_field: int = 30) -> list[tuple[str, classical.ClassicalMatroid]]:
    """Uniform (n <= 7), seeded random 3 x 6 representable over F_2 and F_3, and graphic matroids."""
    out = []
    for n in range(1, 8):
        for k in range(n + 1):
            out.append((f"U({k},{n})", classical.uniform(k, n)))
    rng = random.Random(seed)
    for q in (2, 3):
        F = make_field(q)
        for t in range(random_per_field):
            A = [[rng.randrange(q) for _ in range(6)] for _ in range(3)]
            out.append((f"rand{t}/F{q}", classical.from_matrix(A, F)))
    for name, v, edges in _GRAPHS:
        out.append((f"graph:{name}", classical.graphic(v, edges)))
    return out


def code_battery() -> list[tuple[str, RankMetricCode]]:
    """Codes with k <= 3 and m, n <= 4."""
    F2, F3 = make_field(2), make_field(3)
    return [
        ("(1,a)/F4", RankMetricCode(F2, 2, 2, [[1, 2]])),
        ("(0,0,1)/F4", RankMetricCode(F2, 2, 3, [[0, 0, 1]])),
        ("identity 3/F4", RankMetricCode(F2, 2, 3, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])),
        ("(1,a,a^2)/F8", RankMetricCode(F2, 3, 3, [[1, 2, 4]])),
        ("[4,2]/F4", RankMetricCode(F2, 2, 4, [[1, 2, 0, 1], [0, 1, 3, 2]])),
        ("(1,a,a+1)/F9", RankMetricCode(F3, 2, 3, [[1, 3, 4]])),
        ("Gabidulin-like [4,2]/F16", RankMetricCode(F2, 4, 4, [[1, 2, 4, 8], [1, 4, 3, 12]])),
        ("trivial", RankMetricCode(F2, 2, 3, [])),
    ]
