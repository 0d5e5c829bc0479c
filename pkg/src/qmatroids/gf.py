"""
Exact arithmetic in small finite fields F_q, q = p^e.

Elements are encoded as integers 0..q-1: the polynomial
c_0 + c_1 x + ... + c_{e-1} x^{e-1} over F_p is stored as
sum(c_i * p**i).  The integer order on these codes is the total element
order used everywhere else in the package, so 0 comes first and 1 second,
and vectors compare lexicographically as plain tuples.

Fixed moduli (coefficients low-to-high, leading 1 included):

    q    modulus
    4    x^2 + x + 1
    8    x^3 + x + 1
    9    x^2 + 2x + 2
    16   x^4 + x + 1

These are the Conway polynomials for those orders.  If the size cap is
raised beyond 16, the modulus for any other (p, e) is the monic irreducible
polynomial with the smallest integer code.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

DEFAULT_FIELD_CAP = 16

CONWAY_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (3, 2): (2, 2, 1),
}


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, math.isqrt(p) + 1))


@dataclass(frozen=True)
class FieldSpec:
    """Arithmetic tables for F_q.  Immutable; compare by (p, e, modulus)."""

    p: int
    e: int
    modulus: tuple[int, ...]
    add: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)
    mul: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)
    neg: tuple[int, ...] = field(repr=False, compare=False)
    inv: tuple[int, ...] = field(repr=False, compare=False)

    @property
    def q(self) -> int:
        return self.p**self.e

    @property
    def elements(self) -> range:
        """All elements in the fixed total order."""
        return range(self.q)

    @property
    def element_order(self) -> tuple[int, ...]:
        return tuple(range(self.q))

    def position(self, a: int) -> int:
        return a

    def sub(self, a: int, b: int) -> int:
        return self.add[a][self.neg[b]]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.q)
        return self.mul[a][self.inv[b]]

    def coefficients(self, a: int) -> tuple[int, ...]:
        """Coordinates of ``a`` in the basis 1, x, ..., x^(e-1) of F_q over F_p."""
        out = []
        for _ in range(self.e):
            a, r = divmod(a, self.p)
            out.append(r)
        return tuple(out)

    def from_coefficients(self, coeffs) -> int:
        return sum(c * self.p**i for i, c in enumerate(coeffs))

    def __str__(self) -> str:
        return f"F_{self.q}"


def _poly_mulmod(a, b, modulus, p):
    e = len(modulus) - 1
    prod = [0] * (2 * e - 1 if e else 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    for d in range(len(prod) - 1, e - 1, -1):
        c = prod[d]
        if c:
            for i in range(e + 1):
                prod[d - e + i] = (prod[d - e + i] - c * modulus[i]) % p
    return prod[:e]


def _is_irreducible(modulus, p) -> bool:
    # degree <= 4 in practice: no roots and (for degree 4) no quadratic factor
    e = len(modulus) - 1
    if e == 1:
        return True
    for cand_deg in range(1, e // 2 + 1):
        for code in range(p**cand_deg):
            cand = [(code // p**i) % p for i in range(cand_deg)] + [1]
            if _poly_divides(cand, modulus, p):
                return False
    return True


def _poly_divides(d, f, p) -> bool:
    f = list(f)
    dd = len(d) - 1
    for k in range(len(f) - 1, dd - 1, -1):
        c = f[k]
        if c:
            for i in range(dd + 1):
                f[k - dd + i] = (f[k - dd + i] - c * d[i]) % p
    return not any(f[:dd])


def _default_modulus(p: int, e: int) -> tuple[int, ...]:
    if e == 1:
        return (0, 1)
    if (p, e) in CONWAY_MODULI:
        return CONWAY_MODULI[(p, e)]
    for code in range(p**e):
        cand = tuple((code // p**i) % p for i in range(e)) + (1,)
        if cand[0] and _is_irreducible(cand, p):
            return cand
    raise AssertionError("no irreducible polynomial found")  # unreachable


@lru_cache(maxsize=None)
def make_field(p: int, e: int = 1, cap: int = DEFAULT_FIELD_CAP) -> FieldSpec:
    """Build F_{p^e} with the package's fixed modulus.

    >>> make_field(2, 2).modulus
    (1, 1, 1)
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if e < 1:
        raise ValueError(f"extension degree must be >= 1, got {e}")
    q = p**e
    if q > cap:
        raise ValueError(f"field order {q} exceeds cap {cap}")
    modulus = _default_modulus(p, e)
    polys = [tuple((a // p**i) % p for i in range(e)) for a in range(q)]
    code = {poly: a for a, poly in enumerate(polys)}
    add = tuple(
        tuple(code[tuple((x + y) % p for x, y in zip(polys[a], polys[b]))] for b in range(q))
        for a in range(q)
    )
    if e == 1:
        mul = tuple(tuple((a * b) % p for b in range(q)) for a in range(q))
    else:
        mul = tuple(
            tuple(code[tuple(_poly_mulmod(polys[a], polys[b], modulus, p))] for b in range(q))
            for a in range(q)
        )
    neg = tuple(row.index(0) for row in add)
    inv = [0] * q
    for a in range(1, q):
        row = mul[a]
        if 1 not in row:
            raise AssertionError(f"modulus {modulus} is reducible over F_{p}")
        inv[a] = row.index(1)
    return FieldSpec(p, e, modulus, add, mul, neg, tuple(inv))


def field_of_order(q: int, cap: int = DEFAULT_FIELD_CAP) -> FieldSpec:
    """F_q from its order, e.g. ``field_of_order(4)``."""
    if q < 2:
        raise ValueError(f"field order must be >= 2, got {q}")
    for p in range(2, q + 1):
        if q % p == 0:
            break
    e = 0
    r = q
    while r % p == 0:
        r //= p
        e += 1
    if r != 1:
        raise ValueError(f"{q} is not a prime power")
    return make_field(p, e, cap)


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """The q-binomial coefficient [n k]_q, exactly.

    For q = 1 this is the ordinary binomial coefficient.
    """
    if n < 0 or k < 0:
        raise ValueError(f"negative argument: n={n}, k={k}")
    if k > n:
        raise ValueError(f"k={k} exceeds n={n}")
    if q == 1:
        return math.comb(n, k)
    num = 1
    den = 1
    for i in range(k):
        num *= q**n - q**i
        den *= q**k - q**i
    value, rem = divmod(num, den)
    assert rem == 0
    return value


def q_binomial_theorem_lhs_rhs(n: int, q: int, t: int) -> tuple[int, int]:
    """Both sides of prod_{k<n} (1 - q^k t) = sum_k (-1)^k q^C(k,2) [n k]_q t^k."""
    lhs = 1
    for k in range(n):
        lhs *= 1 - q**k * t
    rhs = sum(
        (-1) ** k * q ** math.comb(k, 2) * gaussian_binomial(n, k, q) * t**k
        for k in range(n + 1)
    )
    return lhs, rhs
