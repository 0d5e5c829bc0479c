"""Named verification batteries; each returns a ``BatteryResult``."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

from . import classical
from .battery import classical_battery, code_battery, q_battery
from .codes import generalized_rank_weights, verify_lemma62
from .errors import ConsistencyError
from .euler import (
    chain_census,
    euler_formula,
    fixed_chain_count,
    homology_rank,
    lemma41_expected,
    lemma41_sums,
    sign,
)
from .gf import gaussian_binomial, make_field, q_binomial_theorem_lhs_rhs
from .lattice import binomial_alternating_sum, build_cycle_lattice, mobius, rota_crosscut
from .qmatroid import basis_intersection, is_free, uniform


@dataclass
class BatteryResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.checked > 0 and not self.failures

    def fail(self, msg: str) -> None:
        self.failures.append(msg)

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, "checked": self.checked,
                "failures": self.failures, "notes": self.notes}


def _guard(res: BatteryResult, label: str, fn: Callable[[], bool | str | None]) -> None:
    res.checked += 1
    try:
        out = fn()
    except (ConsistencyError, ValueError) as exc:
        res.fail(f"{label}: {exc}")
        return
    if out is False:
        res.fail(label)
    elif isinstance(out, str):
        res.fail(f"{label}: {out}")


def theorem42(seed: int = 0) -> BatteryResult:
    """Closed formula equals the chain census on the q battery."""
    res = BatteryResult("theorem42")
    for name, M in q_battery():
        _guard(res, name, lambda M=M: euler_formula(M).chi == chain_census(M).chi)
    return res


def example45(seed: int = 0) -> BatteryResult:
    res = BatteryResult("example45")
    for q, n in [(2, 2), (2, 3), (2, 4), (3, 3), (3, 4)]:
        expected = sign(n - 1) * sum(q**i for i in range(n - 1)) * q ** math.comb(n - 1, 2)
        M = uniform(n - 2, n, make_field(q))
        _guard(res, f"U({n-2},{n})/F{q}",
               lambda M=M, e=expected: (c := chain_census(M).chi) == e == euler_formula(M).chi or f"got {c}, expected {e}")
    return res


def remark46(seed: int = 0) -> BatteryResult:
    res = BatteryResult("remark46")
    for q in (2, 3):
        for n in range(1, 5):
            for k in range(n + 1):
                expected = 0 if k == n else q ** (k * (k + 1) // 2) * gaussian_binomial(n - 1, k, q)
                M = uniform(k, n, make_field(q))
                _guard(res, f"U({k},{n})/F{q}",
                       lambda M=M, e=expected: (c := abs(chain_census(M).chi)) == e or f"|chi| {c}, expected {e}")
    return res


def lemma41(seed: int = 0) -> BatteryResult:
    res = BatteryResult("lemma41")
    for q in (2, 3):
        for n in range(1, 5):
            _guard(res, f"q={q}, n={n}",
                   lambda q=q, n=n: (s := lemma41_sums(n, make_field(q))) == lemma41_expected(n, q) or f"{s}")
    return res


def homology(seed: int = 0) -> BatteryResult:
    """Top homology rank equals |chi|; chi vanishes exactly on U(n,n); and the
    reverse-lex restriction operator fixes exactly |chi| maximal chains."""
    res = BatteryResult("homology")
    for name, M in q_battery():
        chi = chain_census(M).chi

        def check(M=M, chi=chi):
            deg, rk = homology_rank(M)
            if (deg, rk) != (M.r - 1, abs(chi)):
                return f"homology ({deg}, {rk}) vs |chi| = {abs(chi)}"
            if (chi == 0) != is_free(M):
                return f"chi = {chi} but free = {is_free(M)}"
            return True

        _guard(res, name, check)

        def shelled(M=M, chi=chi):
            ok, fixed = fixed_chain_count(M)
            if fixed != abs(chi):
                return f"reverse-lex order {'is' if ok else 'is not'} a shelling; {fixed} fixed chains vs |chi| = {abs(chi)}"
            return ok

        _guard(res, f"{name} [fixed chains]", shelled)
    return res


def basis(seed: int = 0) -> BatteryResult:
    res = BatteryResult("basis")
    for name, M in q_battery():
        if 0 < M.r < M.n:
            _guard(res, name, lambda M=M: basis_intersection(M).dim == 0 and chain_census(M).chi != 0)
    return res


def theorem32(seed: int = 0) -> BatteryResult:
    res = BatteryResult("theorem32")
    for name, M in classical_battery(seed):
        _guard(res, name, lambda M=M: classical.theorem32_check(M).ok)
        _guard(res, f"{name} [chains]", lambda M=M: classical.chain_proof_check(M).ok)
    return res


def crosscut(seed: int = 0) -> BatteryResult:
    res = BatteryResult("crosscut")
    pools = [(n, M) for n, M in q_battery()] + [(n, M) for n, M in classical_battery(seed)]
    for name, M in pools:
        L = build_cycle_lattice(M)
        if L.nullity[L.top] >= 2:
            _guard(res, name, lambda L=L: rota_crosscut(L)[0] == mobius(L))
    return res


def lemma62(seed: int = 0) -> BatteryResult:
    res = BatteryResult("lemma62")
    for name, C in code_battery():
        def check(C=C):
            r = verify_lemma62(C)
            if not r.ok:
                return str(r.attempts)
            w = generalized_rank_weights(C, reading=r.reading)
            return w.by_subcodes == w.by_cycles
        _guard(res, name, check)
    return res


def qbinomial(seed: int = 0) -> BatteryResult:
    res = BatteryResult("qbinomial")
    for q in (2, 3, 4):
        for n in range(0, 9):
            for t in sorted({0, 1, 2, q}):
                _guard(res, f"q={q} n={n} t={t}", lambda n=n, q=q, t=t: len(set(q_binomial_theorem_lhs_rhs(n, q, t))) == 1)
    for l in range(1, 13):
        _guard(res, f"l={l}", lambda l=l: binomial_alternating_sum(l) == 0)
    return res


BATTERIES: dict[str, Callable[[int], BatteryResult]] = {
    "example45": example45,
    "theorem42": theorem42,
    "remark46": remark46,
    "lemma41": lemma41,
    "homology": homology,
    "theorem32": theorem32,
    "crosscut": crosscut,
    "lemma62": lemma62,
    "basis": basis,
    "qbinomial": qbinomial,
}


def run(name: str, seed: int = 0) -> list[BatteryResult]:
    if name == "all":
        return [fn(seed) for fn in BATTERIES.values()]
    if name not in BATTERIES:
        raise ValueError(f"unknown battery {name!r}; choose from {', '.join(BATTERIES)} or all")
    return [BATTERIES[name](seed)]
