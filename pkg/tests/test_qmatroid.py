import pytest

from qmatroids.battery import P1_STAR_MATRIX, p1, p1_star
from qmatroids.errors import AxiomError
from qmatroids.gf import make_field
from qmatroids.grassmann import subspace_lattice
from qmatroids.linalg import full_space, orthogonal_complement, rref_of, zero_space
from qmatroids.qmatroid import (
    basis_intersection,
    bases,
    check_axioms,
    check_basis_axioms,
    circuits,
    coloops,
    cycles,
    dual,
    flats,
    from_representation,
    from_table,
    has_coloop,
    independents,
    loops,
    rank_table,
    restrict,
    top_cycle,
    truncate,
    uniform,
)

F2, F3 = make_field(2), make_field(3)


def span(*vs, n=3, F=F2):
    return rref_of(F, vs, n)


def test_uniform_one_three():
    M = uniform(1, 3, F2)
    assert len(bases(M)) == 7 and all(B.dim == 1 for B in bases(M))
    assert len(circuits(M)) == 7 and all(C.dim == 2 for C in circuits(M))
    assert [c.space for c in cycles(M) if c.nullity == 2] == [full_space(F2, 3)]
    assert not loops(M) and not coloops(M)


def test_uniform_extremes():
    M = uniform(0, 2, F2)
    assert all(r == 0 for r in M.ranks)
    free = uniform(3, 3, F3)
    assert cycles(free) == [] and circuits(free) == []
    assert basis_intersection(free) == full_space(F3, 3)
    with pytest.raises(ValueError):
        uniform(4, 3, F2)


def test_p1_structure():
    M = p1()
    assert M.r == 1 and M.n == 3
    # independent lines are the four with nonzero last coordinate
    lines = [U for U in independents(M) if U.dim == 1]
    assert len(lines) == 4 and all(U.rows[0][2] for U in lines)
    assert set(loops(M)) == {span((1, 0, 0)), span((0, 1, 0)), span((1, 1, 0))}
    assert set(circuits(M)) == set(loops(M))
    assert top_cycle(M) == span((1, 0, 0), (0, 1, 0))
    assert has_coloop(M)
    assert basis_intersection(M).dim == 0


def test_figure_versus_text_reading():
    """The drawn colouring in the F_4 rank-1 example disagrees with the stated
    representation; the rank function follows the representation."""
    M = p1()
    L = M.lattice
    z = L.idx(span((0, 0, 1)))
    x = L.idx(span((1, 0, 0)))
    assert M.ranks[z] == 1 and M.ranks[x] == 0


def test_small_representations():
    F4 = make_field(2, 2)
    M = from_representation([[1, 2]], F2, 2)
    assert M == uniform(1, 2, F2)
    I = from_representation([[1, 0, 0], [0, 1, 0], [0, 0, 1]], F2, 2)
    assert I == uniform(3, 3, F2)
    with pytest.raises(ValueError):
        from_representation([[1, 2], [2, 3]], F2, 2)  # second row is alpha times the first
    with pytest.raises(ValueError):
        from_representation([[1, 5]], F2, 2)
    with pytest.raises(ValueError):
        from_representation([[1, 1]], F4, 2)  # non-prime base field


def test_p1_star_is_named_example_not_dual():
    S = p1_star()
    assert S.r == 2
    assert circuits(S) == [span((0, 1, 0), (0, 0, 1))]
    assert S != dual(p1())
    assert P1_STAR_MATRIX == ((1, 0, 0), (0, 2, 1))


@pytest.mark.parametrize("q,n,k", [(2, 3, 1), (2, 4, 2), (3, 3, 2), (2, 2, 0)])
def test_dual_of_uniform(q, n, k):
    F = make_field(q)
    assert dual(uniform(k, n, F)) == uniform(n - k, n, F)


@pytest.mark.parametrize("M", [p1(), p1_star(), uniform(1, 3, F2), uniform(2, 3, F3)], ids=["P1", "P1*", "U13", "U23F3"])
def test_dual_involution_and_flats(M):
    D = dual(M)
    assert dual(D) == M
    L = M.lattice
    expected = {orthogonal_complement(c.space) for c in cycles(M)} | {full_space(M.field, M.n)}
    assert set(flats(D)) == expected
    for c in cycles(M):
        assert D.rank(orthogonal_complement(c.space)) == D.r - c.nullity


def test_restrictions():
    M = uniform(2, 4, F2)
    X = span((1, 0, 0, 0), (0, 1, 1, 0), (0, 0, 0, 1), n=4)
    assert restrict(M, X) == uniform(2, 3, F2)
    assert restrict(M, full_space(F2, 4)) == M
    R = restrict(p1(), span((1, 0, 0), (0, 1, 0)))
    assert R == uniform(0, 2, F2)


def test_axioms_reject_bad_tables():
    M = uniform(1, 2, F2)
    table = rank_table(M)
    assert from_table(F2, 2, table) == M
    bad = dict(table)
    bad[full_space(F2, 2)] = 0
    with pytest.raises(AxiomError):
        from_table(F2, 2, bad)
    bad = dict(table)
    bad[zero_space(F2, 2)] = 1
    with pytest.raises(AxiomError):
        from_table(F2, 2, bad)
    # submodularity: two lines of rank 1 in a rank-2 plane but a rank-0 line elsewhere
    L = subspace_lattice(F2, 2)
    ranks = {U: min(U.dim, 1) for U in L.spaces}
    ranks[full_space(F2, 2)] = 2
    ranks[span((0, 1), n=2)] = 0
    ranks[span((1, 0), n=2)] = 0
    with pytest.raises(AxiomError):
        from_table(F2, 2, ranks)
    with pytest.raises(ValueError):
        from_table(F2, 2, {full_space(F2, 2): 1})


@pytest.mark.parametrize("M", [p1(), p1_star(), uniform(2, 3, F2), truncate(uniform(3, 3, F2), 2)])
def test_basis_axioms(M):
    check_axioms(M)
    check_basis_axioms(M)


def test_coloop_three_ways():
    for M in [p1(), p1_star(), uniform(1, 3, F2), uniform(3, 3, F2), uniform(0, 2, F3)]:
        span_all = M.lattice.bottom
        for c in circuits(M):
            span_all = M.lattice.join(span_all, M.lattice.idx(c))
        assert has_coloop(M) == bool(coloops(M)) == (span_all != M.lattice.top)
