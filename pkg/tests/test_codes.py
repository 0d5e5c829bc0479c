import itertools

import pytest
from hypothesis import given, settings, strategies as st

from qmatroids.codes import (
    RankMetricCode,
    associated_qmatroid,
    generalized_rank_weights,
    subcodes,
    support,
    support_of_subcode,
    verify_lemma62,
)
from qmatroids.errors import BudgetExceeded
from qmatroids.gf import make_field
from qmatroids.linalg import rref_of, zero_space
from qmatroids.qmatroid import top_cycle, uniform

F2, F3 = make_field(2), make_field(3)


def test_support_examples():
    C = RankMetricCode(F2, 2, 3, [[0, 0, 1]])
    assert support(C, (0, 0, 0)) == zero_space(F2, 3)
    # phi(1) = (1, 0): the expansion matrix has a single nonzero column, the third
    assert support(C, (0, 0, 1)) == rref_of(F2, [(0, 0, 1)], 3)
    D = RankMetricCode(F2, 2, 2, [[1, 2]])
    assert support(D, (1, 2)).dim == 2
    assert support(D, (2, 3)) == support(D, (1, 2))  # alpha * (1, alpha)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(0, 8), min_size=3, max_size=3))
def test_support_invariant_under_base_field_scaling(x):
    C = RankMetricCode(F3, 2, 3, [[1, 0, 0]])
    # 2 in F_3 is the constant polynomial 2 in F_9
    assert support(C, x) == support(C, [C.ext.mul[2][a] for a in x])


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 15), st.integers(0, 15), st.integers(0, 15), st.integers(1, 15))
def test_support_invariant_under_change_of_generators(a, b, c, d):
    C = RankMetricCode(F2, 4, 4, [[1, 2, 4, 8], [1, 4, 3, 12]])
    E = C.ext
    det = E.add[E.mul[a][d]][E.mul[b][c]]
    if det == 0:
        return
    g1, g2 = C.matrix
    h1 = [E.add[E.mul[a][x]][E.mul[b][y]] for x, y in zip(g1, g2)]
    h2 = [E.add[E.mul[c][x]][E.mul[d][y]] for x, y in zip(g1, g2)]
    assert support_of_subcode(C, [h1, h2]) == support_of_subcode(C, [g1, g2])


def test_weights_examples():
    assert generalized_rank_weights(RankMetricCode(F2, 2, 2, [[1, 2]])).weights == [2]
    ident = RankMetricCode(F2, 2, 3, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert generalized_rank_weights(ident).weights == [1, 2, 3]
    assert generalized_rank_weights(RankMetricCode(F2, 2, 3, [])).weights == []


def test_top_weight_is_top_cycle():
    C = RankMetricCode(F2, 2, 4, [[1, 2, 0, 1], [0, 1, 3, 2]])
    w = generalized_rank_weights(C)
    assert w.weights[-1] == top_cycle(associated_qmatroid(C)).dim


def test_lemma62_readings():
    C = RankMetricCode(F2, 2, 2, [[1, 2]])
    res = verify_lemma62(C)
    assert res.ok and res.reading == "dual" and res.attempts == {"dual": "ok"}
    assert {U for U, _ in res.cycles} == {U for U in res.supports if U.dim}
    full = RankMetricCode(F2, 2, 2, [[1, 0], [0, 1]])
    M = associated_qmatroid(full)
    assert M == uniform(0, 2, F2)
    assert verify_lemma62(full).ok
    trivial = RankMetricCode(F2, 2, 3, [])
    r = verify_lemma62(trivial)
    assert r.ok and r.cycles == [] and r.supports == [zero_space(F2, 3)]


def test_subcode_enumeration_count():
    C = RankMetricCode(F2, 2, 3, [[1, 0, 0], [0, 1, 0]])
    assert len(subcodes(C)) == 1 + 5 + 1  # [2 1]_4 = 5
    with pytest.raises(BudgetExceeded):
        subcodes(C, budget=3)


def test_rejects_bad_generators():
    with pytest.raises(ValueError):
        RankMetricCode(F2, 2, 2, [[1, 2], [2, 3]])
    with pytest.raises(ValueError):
        RankMetricCode(F2, 2, 2, [[1, 4]])
    with pytest.raises(ValueError):
        RankMetricCode(F2, 2, 2, [[1]])
