import itertools
import math

import pytest

from qmatroids.battery import p1, p1_star
from qmatroids.errors import ConsistencyError
from qmatroids.euler import (
    chain_census,
    chi_zero_characterization,
    euler_formula,
    euler_report,
    fixed_chain_count,
    homology_rank,
    independent_chains,
    lemma41_expected,
    lemma41_sums,
    maximal_chains,
    nonzero_chi_when_no_common_vector,
    reduced_homology,
    restriction_fixed_chains,
    verify_chain_shelling,
    verify_q_shelling,
)
from qmatroids.gf import make_field
from qmatroids.qmatroid import dual, uniform

F2, F3 = make_field(2), make_field(3)


def _census_bruteforce(M):
    """Reduced Euler characteristic by listing every chain of independent spaces."""
    L = M.lattice
    indep = [i for i in range(1, len(L)) if M.ranks[i] == L.dims[i]]
    chi = -1
    for k in range(1, M.r + 1):
        for combo in itertools.combinations(indep, k):
            ordered = sorted(combo, key=lambda i: L.dims[i])
            if all(L.leq(a, b) and a != b for a, b in zip(ordered, ordered[1:])):
                chi += (-1) ** (k - 1)
    return chi


@pytest.mark.parametrize("M", [uniform(1, 3, F2), uniform(2, 3, F2), p1(), p1_star(), uniform(1, 2, F3)],
                         ids=["U13", "U23", "P1", "P1*", "U12F3"])
def test_census_against_bruteforce(M):
    assert chain_census(M).chi == _census_bruteforce(M)


def test_p1_report():
    rep = euler_report(p1())
    js = rep.to_json()
    assert js["chi_census"] == js["chi_formula"] == 3
    assert js["lambda"] == {"1,2": 3, "2,1": 3, "3,1": 1}
    assert js["mu_bar"] == 0 and js["mu"] == 2
    assert js["homology"] == {"degree": 0, "rank": 3}
    assert js["f"] == [1, 4, 0, 0]
    assert rep.formula.forms["mu_bar"] == rep.formula.forms["collapsed"] == 3


def test_free_matroid_formula():
    res = euler_formula(uniform(3, 3, F2))
    assert res.chi == 0 and res.lambdas == {}


@pytest.mark.parametrize("q,n", [(2, 1), (2, 2), (2, 3), (3, 2), (3, 3)])
def test_lemma41(q, n):
    assert lemma41_sums(n, make_field(q)) == lemma41_expected(n, q)
    v = (-1) ** n * q ** math.comb(n, 2)
    assert lemma41_expected(n, q) == (v, -v, v, -v, 0)


def test_homology_by_boundary_ranks():
    assert reduced_homology(uniform(1, 3, F2)) == {0: 6}
    assert reduced_homology(uniform(0, 2, F2)) == {-1: 1}
    assert reduced_homology(uniform(2, 2, F2)) == {}
    assert homology_rank(uniform(2, 4, F2)) == (1, 56)
    chains = independent_chains(uniform(1, 3, F2))
    assert [len(c) for c in chains] == [1, 7]


def test_uniform_shelling_and_fixed_chains():
    for M in [uniform(2, 3, F2), uniform(2, 4, F2), uniform(1, 3, F3), p1()]:
        assert verify_q_shelling(M) and verify_chain_shelling(M)
        assert len(restriction_fixed_chains(M)) == abs(chain_census(M).chi)


def test_revlex_order_fails_to_shell_p1_star():
    """Documented counterexample: the rank-2 F_4 example is a connected graph with
    13 vertices and 18 edges, so H_1 has rank 6; in reverse-lex order its edges from
    <1,0,0; 0,1,0> begin with <0,1,0>, which touches nothing earlier."""
    M = p1_star()
    assert chain_census(M).chi == -6 and homology_rank(M) == (1, 6)
    assert verify_q_shelling(M)
    assert not verify_chain_shelling(M)
    assert fixed_chain_count(M) == (False, 8)
    L = M.lattice
    facets = [[str(L.spaces[i]) for i in A] for A in maximal_chains(M)]
    assert facets[6] == ["<0,1,0>", "<1,0,0; 0,1,0>"]
    seen = {v for A in facets[:6] for v in A}
    assert not seen & set(facets[6])


def test_chi_zero_and_common_vector():
    assert chi_zero_characterization(uniform(3, 3, F3))
    assert not chi_zero_characterization(uniform(2, 3, F3))
    assert nonzero_chi_when_no_common_vector(p1())
    assert nonzero_chi_when_no_common_vector(dual(p1()))


def test_homology_mismatch_is_reported(monkeypatch):
    import qmatroids.euler as E

    monkeypatch.setattr(E, "reduced_homology", lambda M, p=0: {0: 1})
    with pytest.raises(ConsistencyError):
        E.homology_rank(uniform(1, 3, F2))
