"""
Reduced Euler characteristic of the order complex of a q-matroid.

The order complex has as faces the chains V_1 < ... < V_k of nonzero
independent spaces (the empty chain included).  Two routes give its reduced
Euler characteristic:

* ``chain_census``: count chains by dynamic programming over the inclusion
  order of all nonzero subspaces;
* ``euler_formula``: the closed expression in the circuit-span counts
  lambda_{i,l} and the Möbius number of the cycle lattice.

Reduced homology is computed separately from boundary ranks.  The
reverse-lex facet order and its restriction operator are realized
explicitly and tested as a shelling; where that test passes, the number of
chains fixed by the restriction operator is the top homology rank.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import BudgetExceeded, ConsistencyError
from .gf import FieldSpec, gaussian_binomial
from .grassmann import DEFAULT_SUBSPACE_BUDGET, chain_key, subspace_lattice
from .lattice import build_cycle_lattice, join_counts, mobius
from .linalg import Subspace
from .qmatroid import (
    QMatroid,
    _basis_idx,
    _independent_idx,
    basis_intersection,
    has_coloop,
    is_free,
    uniform,
)

DEFAULT_CHAIN_BUDGET = 10**6


def sign(e: int) -> int:
    """(-1)^e as an int, for any integer e."""
    return -1 if e % 2 else 1


def _alt(counts, shift=0):
    return sum(sign(k + shift) * c for k, c in enumerate(counts))


@dataclass(frozen=True)
class ChainCensus:
    f: tuple[int, ...]    # legitimate chains (top independent), by length
    d: tuple[int, ...]    # illegitimate chains (top dependent)
    s: tuple[int, ...]    # all chains of nonzero subspaces
    chi: int


def _chains_by_top(lattice) -> list[list[int]]:
    """c[V][k] = number of chains 0 != V_1 < ... < V_k = V (index 0 unused)."""
    n = lattice.n
    c = [[0] * (n + 1) for _ in range(len(lattice))]
    for k in range(1, n + 1):
        for V in lattice.by_dim[k]:
            cv = c[V]
            cv[1] = 1
            for W in lattice.below(V):
                if W == 0:
                    continue
                cw = c[W]
                for length in range(1, lattice.dims[W] + 1):
                    cv[length + 1] += cw[length]
    return c


def chain_census(M: QMatroid) -> ChainCensus:
    L = M.lattice
    c = _chains_by_top(L)
    n = M.n
    f = [1] + [0] * n
    s = [1] + [0] * n
    for V in range(1, len(L)):
        for k in range(1, n + 1):
            s[k] += c[V][k]
    for V in _independent_idx(M):
        if V:
            for k in range(1, n + 1):
                f[k] += c[V][k]
    d = [a - b for a, b in zip(s, f)]
    chi = _alt(f, shift=-1)
    if chi != _alt(d):
        raise ConsistencyError("chi from legitimate chains differs from chi from illegitimate chains")
    return ChainCensus(tuple(f), tuple(d), tuple(s), chi)


def lemma41_sums(n: int, field: FieldSpec) -> tuple[int, int, int, int, int]:
    """The five alternating chain sums over the subspace lattice of F_q^n.

    1. chains of nonzero subspaces containing the whole space;
    2. chains of nonzero subspaces not containing it (empty chain included);
    3. chains containing the zero space but not the whole space;
    4. chains containing both;
    5. all chains (own DP over the lattice with the zero space included).
    """
    L = subspace_lattice(field, n)
    c = _chains_by_top(L)
    E = L.top
    proper = [V for V in range(1, len(L)) if V != E]
    part1 = _alt(c[E])
    part2 = 1 + sum(_alt(c[V]) for V in proper)
    # adding the zero space to a chain lengthens it by one
    part3 = -1 + sum(-_alt(c[V]) for V in proper)
    part4 = 1 + sum(_alt(c[V]) for V in proper)
    # all chains, zero space allowed as a member
    c0 = [[0] * (n + 2) for _ in range(len(L))]
    for V in range(len(L)):
        c0[V][1] = 1
        for W in L.below(V):
            for k in range(1, n + 1):
                c0[V][k + 1] += c0[W][k]
    part5 = 1 + sum(_alt(c0[V]) for V in range(len(L)))
    return part1, part2, part3, part4, part5


def lemma41_expected(n: int, q: int) -> tuple[int, int, int, int, int]:
    v = sign(n) * q ** math.comb(n, 2)
    return v, -v, v, -v, 0


@dataclass
class FormulaResult:
    chi: int
    lambdas: dict[tuple[int, int], int]       # (i, l) -> lambda_{i,l}
    mu: int | None                            # Möbius number of the cycle lattice
    mu_bar: int
    coloop: bool
    terms: list[tuple[int, int, int, list[int]]] = field(default_factory=list)
    # (i, l, lambda_{i,l}, [signed summands over j]) for l >= 1
    forms: dict[str, int] = field(default_factory=dict)


def lambda_table(M: QMatroid) -> dict[tuple[int, int], int]:
    """lambda_{i,l}: number of i-subsets of circuits whose span has codimension l."""
    L = build_cycle_lattice(M)
    if L.diagnostics:
        raise ConsistencyError("; ".join(L.diagnostics))
    counts = join_counts(L)
    out: dict[tuple[int, int], int] = {}
    for z in range(len(L)):
        for i, c in enumerate(counts[z]):
            if i >= 1 and c:
                key = (i, L.codim(z))
                out[key] = out.get(key, 0) + c
    return out


def _inner(n: int, i: int, l: int, q: int) -> list[int]:
    return [
        sign(n + i + j - 1) * q ** math.comb(n - j, 2) * gaussian_binomial(l, j, q)
        for j in range(l + 1)
    ]


def euler_formula(M: QMatroid) -> FormulaResult:
    """chi of the order complex from circuit spans and the cycle-lattice Möbius number.

    Three arrangements are evaluated and must agree: the mu-bar form with
    sign (-1)^(r-1), the same with sign (-1)^(n-1) and signed mu, and the
    collapsed sum with codimension 0 folded into the double sum.
    """
    n, q, r = M.n, M.q, M.r
    if M.nullity == 0:
        return FormulaResult(0, {}, None, 0, True, forms={"free": 0})
    coloop = has_coloop(M)
    mu = mobius(build_cycle_lattice(M))
    mbar = 0 if coloop else abs(mu)
    lam = lambda_table(M)
    terms = []
    tail = 0
    for (i, l), c in sorted(lam.items(), key=lambda t: (t[0][1] == 0, -t[0][1], t[0][0])):
        if l == 0:
            continue
        summands = _inner(n, i, l, q)
        terms.append((i, l, c, summands))
        tail += c * sum(summands)
    top_term = q ** math.comb(n, 2)
    form_rbar = sign(r - 1) * top_term * mbar + tail
    form_mu = (sign(n - 1) * top_term * mu if not coloop else 0) + tail
    collapsed = sum(c * sum(_inner(n, i, l, q)) for (i, l), c in lam.items())
    forms = {"mu_bar": form_rbar, "signed_mu": form_mu, "collapsed": collapsed}
    if form_rbar != form_mu:
        raise ConsistencyError(
            f"sign conversion (-1)^(r-1)|mu| vs (-1)^(n-1)mu fails: {form_rbar} != {form_mu}"
        )
    if collapsed != form_rbar:
        raise ConsistencyError(f"collapsed form {collapsed} != {form_rbar}")
    return FormulaResult(form_rbar, lam, mu, mbar, coloop, terms, forms)


def check_gpr_uniform_formula(k: int, n: int, field: FieldSpec) -> bool:
    """|chi(U(k,n))| == q^(k(k+1)/2) [n-1 k]_q, with [n-1 n]_q = 0."""
    q = field.q
    expected = 0 if k == n else q ** (k * (k + 1) // 2) * gaussian_binomial(n - 1, k, q)
    return abs(chain_census(uniform(k, n, field)).chi) == expected


def verify_q_shelling(M: QMatroid) -> bool:
    """Do the bases, in reduced-generator order, shell the complex of independent spaces?

    For each basis F_j (j >= 2) the subspaces of F_j lying in an earlier
    basis must be generated by a nonempty set of hyperplanes of F_j.
    """
    L = M.lattice
    B = sorted(_basis_idx(M), key=lambda i: L.spaces[i].rows[::-1])
    r = M.r
    for j in range(1, len(B)):
        Fj = B[j]
        inter = {L.meet(B[i], Fj) for i in range(j)}
        hyper = [x for x in inter if L.dims[x] == r - 1]
        if not hyper:
            return False
        for x in inter:
            if not any(L.leq(x, h) for h in hyper):
                return False
    return True


def maximal_chains(M: QMatroid, budget: int = DEFAULT_CHAIN_BUDGET) -> list[tuple[int, ...]]:
    """Maximal chains of the order complex (lattice indices V_1..V_r), reverse-lex sorted."""
    L = M.lattice
    out: list[tuple[int, ...]] = []

    def extend(chain):
        if len(out) > budget:
            raise BudgetExceeded("maximal chains", len(out), budget)
        bottom = chain[0]
        if L.dims[bottom] == 1:
            out.append(tuple(chain))
            return
        for h in L.hyperplanes[bottom]:
            extend([h] + chain)

    for b in _basis_idx(M):
        if M.r == 0:
            out.append(())
        else:
            extend([b])
    out.sort(key=lambda ch: chain_key([L.spaces[i] for i in ch]))
    return out


def restriction_fixed_chains(M: QMatroid) -> list[tuple[Subspace, ...]]:
    """Maximal chains A with R(A) = A under the reverse-lex shelling.

    R(A) is the set of members x of A such that A minus x already lies in a
    facet earlier in the order; it is computed from the faces of the
    preceding facets, not from any characterization.
    """
    L = M.lattice
    facets = maximal_chains(M)
    seen: set[frozenset] = set()
    fixed = []
    for j, A in enumerate(facets):
        restriction = [x for x in A if frozenset(A) - {x} in seen] if j else []
        if len(restriction) == len(A) and j:
            fixed.append(A)
        elif not A:
            fixed.append(A)
        for x in A:
            seen.add(frozenset(A) - {x})
    result = [tuple(L.spaces[i] for i in A) for A in fixed]
    _check_fixed_characterization(M, facets, {tuple(A) for A in fixed})
    return result


def _check_fixed_characterization(M, facets, fixed):
    """Cross-check: A is fixed iff some earlier basis contains A_{r-1} and no
    A_k (k < r) contains the least nonzero vector of A_{k+1}."""
    L = M.lattice
    r = M.r
    if r == 0:
        return
    B = sorted(_basis_idx(M), key=lambda i: L.spaces[i].rows[::-1])
    rankpos = {b: t for t, b in enumerate(B)}
    for A in facets:
        top = A[-1]
        below_top = A[-2] if r >= 2 else 0
        earlier = any(L.leq(below_top, b) for b in B[: rankpos[top]])
        # the last stored row of the canonical form is the least nonzero vector
        avoids = all(
            L.spaces[A[k + 1]].rows[-1] not in L.spaces[A[k]] for k in range(r - 1)
        )
        if (earlier and avoids) != (A in fixed):
            raise ConsistencyError(f"restriction characterization fails on chain {A}")


def verify_chain_shelling(M: QMatroid) -> bool:
    """Check that reverse-lex order shells the order complex.

    Shelling holds iff, for every facet, the faces not in the subcomplex of
    earlier facets are exactly the faces containing its restriction.
    """
    facets = maximal_chains(M)
    seen: set[frozenset] = set()
    for j, A in enumerate(facets):
        FA = frozenset(A)
        R = frozenset(x for x in A if FA - {x} in seen) if j else frozenset()
        elems = list(A)
        for mask in range(1 << len(elems)):
            G = frozenset(e for t, e in enumerate(elems) if mask >> t & 1)
            if (G in seen) == (R <= G):
                return False
        for mask in range(1 << len(elems)):
            seen.add(frozenset(e for t, e in enumerate(elems) if mask >> t & 1))
    return True


HOMOLOGY_PRIME = 2**31 - 1


def _rank_mod_p(rows: list[dict[int, int]], p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        row = {c: v % p for c, v in row.items() if v % p}
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                inv = pow(row[c], p - 2, p)
                pivots[c] = {k: v * inv % p for k, v in row.items()}
                break
            f = row[c]
            for k, v in piv.items():
                nv = (row.get(k, 0) - f * v) % p
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return len(pivots)


def independent_chains(M: QMatroid) -> list[list[tuple[int, ...]]]:
    """chains[k] = all chains of k nonzero independent spaces (k = 0 is the empty chain)."""
    L = M.lattice
    indep = [i for i in _independent_idx(M) if L.dims[i] > 0]
    by_top: dict[int, list[tuple[int, ...]]] = {}
    for i in sorted(indep, key=lambda i: L.dims[i]):
        acc = [(i,)]
        for j in L.below(i):
            if j in by_top:
                acc.extend(c + (i,) for c in by_top[j])
        by_top[i] = acc
    out: list[list[tuple[int, ...]]] = [[()]]
    for chains in by_top.values():
        for c in chains:
            while len(out) <= len(c):
                out.append([])
            out[len(c)].append(c)
    return out


def reduced_homology(M: QMatroid, p: int = HOMOLOGY_PRIME) -> dict[int, int]:
    """Reduced Betti numbers over F_p of the order complex, {degree: rank} for nonzero ranks.

    Computed from boundary-matrix ranks, independently of any shelling.  If
    the result is concentrated in one degree it is also the rational answer,
    since Betti numbers over Q are bounded by those over F_p and both have the
    same alternating sum.
    """
    chains = independent_chains(M)
    pos = [{c: t for t, c in enumerate(level)} for level in chains]
    ranks = [0] * (len(chains) + 1)
    for k in range(1, len(chains)):
        rows = []
        for c in chains[k]:
            rows.append({pos[k - 1][c[:t] + c[t + 1:]]: sign(t) for t in range(k)})
        ranks[k] = _rank_mod_p(rows, p)
    betti = {}
    for k in range(len(chains)):
        b = len(chains[k]) - ranks[k] - ranks[k + 1]
        if b:
            betti[k - 1] = b
    return betti


def homology_rank(M: QMatroid) -> tuple[int, int]:
    """(degree, rank) of the only nonzero reduced homology group, (r - 1, |chi|) when free of torsion."""
    betti = reduced_homology(M)
    chi = chain_census(M).chi
    if chi == 0:
        if betti:
            raise ConsistencyError(f"chi = 0 but homology {betti}")
        return M.r - 1, 0
    if set(betti) != {M.r - 1} or betti[M.r - 1] != abs(chi):
        raise ConsistencyError(f"homology {betti} is not |chi| = {abs(chi)} in degree {M.r - 1}")
    return M.r - 1, betti[M.r - 1]


def fixed_chain_count(M: QMatroid) -> tuple[bool, int]:
    """(is the reverse-lex order a shelling, number of chains fixed by its restriction operator)."""
    return verify_chain_shelling(M), len(restriction_fixed_chains(M))


def chi_zero_characterization(M: QMatroid) -> bool:
    """True iff chi == 0; asserted to coincide with every subspace being independent."""
    zero = chain_census(M).chi == 0
    if zero != is_free(M):
        raise ConsistencyError("chi == 0 does not match the U(n,n) type")
    return zero


def nonzero_chi_when_no_common_vector(M: QMatroid) -> bool:
    """If the bases share no nonzero vector, chi must be nonzero."""
    if basis_intersection(M).dim == 0:
        return chain_census(M).chi != 0
    return True


@dataclass
class EulerReport:
    chi_census: int
    chi_formula: int
    census: ChainCensus
    formula: FormulaResult
    homology: tuple[int, int]
    shelling_ok: bool
    fixed_chains: int

    def to_json(self) -> dict:
        return {
            "chi_census": self.chi_census,
            "chi_formula": self.chi_formula,
            "f": list(self.census.f),
            "d": list(self.census.d),
            "s": list(self.census.s),
            "lambda": {f"{i},{l}": c for (i, l), c in sorted(self.formula.lambdas.items())},
            "mu": self.formula.mu,
            "mu_bar": self.formula.mu_bar,
            "homology": {"degree": self.homology[0], "rank": self.homology[1]},
            "shelling_ok": self.shelling_ok,
            "fixed_chains": self.fixed_chains,
        }


def euler_report(M: QMatroid) -> EulerReport:
    census = chain_census(M)
    formula = euler_formula(M)
    if census.chi != formula.chi:
        raise ConsistencyError(f"census chi {census.chi} != formula chi {formula.chi}")
    chain_shelling, fixed = fixed_chain_count(M)
    shelling = verify_q_shelling(M) and chain_shelling
    return EulerReport(census.chi, formula.chi, census, formula, homology_rank(M), shelling, fixed)
