import itertools
import math

import pytest
from hypothesis import given, strategies as st

from qmatroids.gf import (
    CONWAY_MODULI,
    field_of_order,
    gaussian_binomial,
    is_prime,
    make_field,
    q_binomial_theorem_lhs_rhs,
)

ORDERS = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]


def _poly_eval_mod(coeffs, x, F):
    acc = 0
    for c in reversed(coeffs):
        acc = F.add[F.mul[acc][x]][c]
    return acc


@pytest.mark.parametrize("q", ORDERS)
def test_field_axioms_exhaustive(q):
    F = field_of_order(q)
    E = range(q)
    for a, b in itertools.product(E, E):
        assert F.add[a][b] == F.add[b][a]
        assert F.mul[a][b] == F.mul[b][a]
        assert F.sub(F.add[a][b], b) == a
    for a in E:
        assert F.add[a][0] == a and F.mul[a][1] == a
        if a:
            assert F.mul[a][F.inv[a]] == 1
    # multiplicative group is cyclic of order q - 1
    orders = []
    for a in range(1, q):
        k, x = 1, a
        while x != 1:
            x = F.mul[x][a]
            k += 1
        orders.append(k)
    assert max(orders) == q - 1


@given(st.sampled_from(ORDERS), st.data())
def test_distributivity(q, data):
    F = field_of_order(q)
    a, b, c = (data.draw(st.integers(0, q - 1)) for _ in range(3))
    assert F.mul[a][F.add[b][c]] == F.add[F.mul[a][b]][F.mul[a][c]]
    assert F.mul[a][F.mul[b][c]] == F.mul[F.mul[a][b]][c]


def test_conway_moduli_fixed():
    assert make_field(2, 2).modulus == (1, 1, 1)
    assert make_field(2, 3).modulus == (1, 1, 0, 1)
    assert make_field(3, 2).modulus == (2, 2, 1)
    assert make_field(2, 4).modulus == (1, 1, 0, 0, 1)
    for (p, e), mod in CONWAY_MODULI.items():
        F = make_field(p, e)
        # the generator x (code p) is a root of the modulus
        assert _poly_eval_mod([c % p for c in mod], p, F) == 0


def test_element_order_starts_with_zero_one():
    F = make_field(2, 2)
    assert F.element_order[:2] == (0, 1)
    assert F.coefficients(2) == (0, 1) and F.from_coefficients((1, 1)) == 3


def test_cap_and_bad_orders():
    with pytest.raises(ValueError):
        make_field(2, 5)
    assert make_field(2, 5, cap=32).q == 32
    with pytest.raises(ValueError):
        field_of_order(6)
    with pytest.raises(ValueError):
        make_field(4)
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]


@pytest.mark.parametrize("q", [2, 3, 4])
@pytest.mark.parametrize("n", range(0, 5))
def test_gaussian_binomial_counts_subspaces(q, n):
    # oracle: count k-subsets of independent vectors and divide by |GL_k|
    for k in range(n + 1):
        ordered = math.prod(q**n - q**i for i in range(k))
        gl = math.prod(q**k - q**i for i in range(k))
        assert gaussian_binomial(n, k, q) == ordered // gl


def test_gaussian_binomial_edges():
    assert gaussian_binomial(5, 2, 1) == 10
    assert gaussian_binomial(4, 0, 3) == gaussian_binomial(4, 4, 3) == 1
    with pytest.raises(ValueError):
        gaussian_binomial(2, 3, 2)


@given(st.integers(2, 5), st.integers(0, 7), st.integers(-3, 6))
def test_q_binomial_theorem(q, n, t):
    lhs, rhs = q_binomial_theorem_lhs_rhs(n, q, t)
    assert lhs == rhs
