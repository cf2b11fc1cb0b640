r"""Exact arithmetic in the ring of integers Z[xi] of the 9th cyclotomic field.

Elements are stored on the free Z-basis {1, xi, ..., xi^5}, where xi is a
primitive 9th root of unity with minimal polynomial x^6 + x^3 + 1 (so
xi^6 = -1 - xi^3).  Coefficients are arbitrary-precision Python ints; word
products of length ~60 produce entries with hundreds of digits and the core
must never truncate.

The prime pi = 1 - xi is the unique prime above 3 (pi^6 ~ 3), and the
pi-adic valuation drives everything downstream: the level map on scaled
unitaries is -2 * min-entry-valuation.
"""

from __future__ import annotations

import math
from functools import reduce as _reduce
from typing import Iterable, Sequence, Union


class NotDivisible(ArithmeticError):
    """Exact division requested by a non-divisor."""


# xi^m on the basis, for m = 0..13 (products of basis monomials reach xi^10,
# Galois images reach xi^8; a few extra rows cost nothing).
_XI_POW: list[tuple[int, ...]] = []
for _m in range(14):
    if _m < 6:
        _row = tuple(1 if _i == _m else 0 for _i in range(6))
    else:
        # xi^m = -xi^(m-6) - xi^(m-3)
        _a, _b = _XI_POW[_m - 6], _XI_POW[_m - 3]
        _row = tuple(-_a[_i] - _b[_i] for _i in range(6))
    _XI_POW.append(_row)


class CycInt:
    """An element c0 + c1*xi + ... + c5*xi^5 of Z[xi]."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        cs = tuple(int(c) for c in coeffs)
        if len(cs) != 6:
            raise ValueError(f"need 6 coefficients, got {len(cs)}")
        self.coeffs = cs

    @staticmethod
    def from_int(n: int) -> "CycInt":
        return CycInt((n, 0, 0, 0, 0, 0))

    @staticmethod
    def xi_pow(m: int) -> "CycInt":
        """xi^m for any integer m (xi has order 9)."""
        return CycInt(_XI_POW[m % 9])

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __add__(self, other: "CycInt") -> "CycInt":
        a, b = self.coeffs, other.coeffs
        return CycInt((a[0] + b[0], a[1] + b[1], a[2] + b[2],
                       a[3] + b[3], a[4] + b[4], a[5] + b[5]))

    def __sub__(self, other: "CycInt") -> "CycInt":
        a, b = self.coeffs, other.coeffs
        return CycInt((a[0] - b[0], a[1] - b[1], a[2] - b[2],
                       a[3] - b[3], a[4] - b[4], a[5] - b[5]))

    def __neg__(self) -> "CycInt":
        return CycInt(tuple(-c for c in self.coeffs))

    def __mul__(self, other: "CycInt") -> "CycInt":
        a, b = self.coeffs, other.coeffs
        # convolution up to degree 10, then fold with x^d = -x^(d-6) - x^(d-3)
        prod = [0] * 11
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        for d in range(10, 5, -1):
            v = prod[d]
            if v:
                prod[d - 6] -= v
                prod[d - 3] -= v
                prod[d] = 0
        return CycInt(prod[:6])

    def __pow__(self, n: int) -> "CycInt":
        if n < 0:
            raise ValueError("negative powers leave the ring")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CycInt) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"CycInt{self.coeffs}"

    def conj(self) -> "CycInt":
        """Complex conjugation, the Galois element phi^3 (xi -> xi^-1)."""
        return galois(self, 3)


Scalar = Union[CycInt, int]


def _as_cyc(x: Scalar) -> CycInt:
    return x if isinstance(x, CycInt) else CycInt.from_int(x)


def add(a: CycInt, b: CycInt) -> CycInt:
    return a + b


def mul(a: CycInt, b: CycInt) -> CycInt:
    return a * b


def neg(a: CycInt) -> CycInt:
    return -a


# Gal(E/Q) = <phi> with phi(xi) = xi^2; phi^k sends xi^i to xi^(i * 2^k mod 9).
# Row [k][i] is the basis representation of phi^k(xi^i).
_GALOIS_TABLE = [
    [CycInt(_XI_POW[(i * pow(2, k, 9)) % 9]) for i in range(6)]
    for k in range(6)
]


def galois(a: CycInt, k: int) -> CycInt:
    """Apply phi^k, where phi(xi) = xi^2 generates Gal(E/Q) = Z/6."""
    k %= 6
    if k == 0:
        return a
    row = _GALOIS_TABLE[k]
    out = ZERO
    for i, c in enumerate(a.coeffs):
        if c:
            out = out + CycInt(tuple(c * v for v in row[i].coeffs))
    return out


def norm(a: CycInt) -> int:
    """Absolute norm N(a): the product of all six Galois conjugates.

    The product of a full Galois orbit is rational; a nonvanishing xi-part
    signals an arithmetic bug, not bad input.
    """
    prod = _reduce(mul, (galois(a, k) for k in range(1, 6)), a)
    if any(prod.coeffs[1:]):
        raise AssertionError(f"norm is not rational: {prod}")
    return prod.coeffs[0]


# pi * KAPPA = norm(pi) = 3, so division by pi is multiplication by KAPPA
# followed by coefficientwise division by 3.


def divide_pi(a: CycInt) -> CycInt:
    """Exact division by pi = 1 - xi; raises NotDivisible if ord_pi(a) = 0."""
    b = a * KAPPA
    out = []
    for c in b.coeffs:
        q, r = divmod(c, 3)
        if r:
            raise NotDivisible(f"{a} is not divisible by pi")
        out.append(q)
    return CycInt(out)


def ord_pi(a: CycInt) -> Union[int, float]:
    """pi-adic valuation; +inf for zero, so min-over-entries stays total."""
    if a.is_zero():
        return math.inf
    v = 0
    while True:
        try:
            a = divide_pi(a)
        except NotDivisible:
            return v
        v += 1


def v3(n: int) -> Union[int, float]:
    """3-adic valuation of a rational integer (oracle mate of ord_pi)."""
    if n == 0:
        return math.inf
    v = 0
    while n % 3 == 0:
        n //= 3
        v += 1
    return v


# --- residues modulo powers of pi -------------------------------------------
#
# O_E / pi^k  ~  F_3[t]/(t^k) for k <= 6 (pi is totally ramified over 3 and
# pi^6 ~ 3, so 3 vanishes in the quotient).  The map sends xi to 1 - t.  This
# gives constant-time valuation tests: the image is zero iff ord_pi >= k.

def _one_minus_t_pows(k: int) -> list[tuple[int, ...]]:
    rows = [tuple([1] + [0] * (k - 1))]
    for _ in range(5):
        prev = rows[-1]
        nxt = [prev[0] % 3]
        for d in range(1, k):
            nxt.append((prev[d] - prev[d - 1]) % 3)
        rows.append(tuple(nxt))
    return rows


_RESIDUE_TABLES = {k: _one_minus_t_pows(k) for k in (1, 2, 3, 4, 6)}


def residue_mod_pi_pow(a: CycInt, k: int) -> tuple[int, ...]:
    """Image of a in F_3[t]/(t^k) under xi -> 1 - t; requires k <= 6."""
    table = _RESIDUE_TABLES.get(k)
    if table is None:
        if k > 6:
            raise ValueError("residue map only defined for k <= 6")
        table = _one_minus_t_pows(k)
        _RESIDUE_TABLES[k] = table
    out = [0] * k
    for i, c in enumerate(a.coeffs):
        c %= 3
        if c:
            row = table[i]
            for d in range(k):
                out[d] = (out[d] + c * row[d]) % 3
    return tuple(out)


# --- serialization -----------------------------------------------------------

def to_strings(a: CycInt) -> list[str]:
    """Wire format: 6 decimal strings, little-endian in xi-degree."""
    return [str(c) for c in a.coeffs]


def from_strings(parts: Sequence[str]) -> CycInt:
    return CycInt(int(p) for p in parts)


# --- named constants ---------------------------------------------------------

ZERO = CycInt((0, 0, 0, 0, 0, 0))
ONE = CycInt((1, 0, 0, 0, 0, 0))
XI = CycInt((0, 1, 0, 0, 0, 0))
XI_INV = CycInt((0, 0, -1, 0, 0, -1))          # xi^8 = -xi^2 - xi^5
MINUS_XI = -XI
SIGMA = XI + XI_INV                            # generator of the real subfield
PI = ONE - XI                                  # the prime above 3
PI_BAR = galois(PI, 3)
BIG_PI = CycInt.from_int(2) - SIGMA            # PI * conj(PI) = 2 - sigma
PSI = CycInt((1, -1, -1, 0, 0, 0))             # 1 - xi - xi^2, norm 19
U1 = ONE + XI                                  # fundamental units
U2 = ONE + XI * XI
SQRT_M3 = CycInt((1, 0, 0, 2, 0, 0))           # 1 + 2*xi^3, squares to -3

KAPPA = _reduce(mul, (galois(PI, k) for k in range(2, 6)), galois(PI, 1))

# (-xi)^k for k = 0..17; the center of the unitary group is generated by -xi.
MINUS_XI_POWS: tuple[CycInt, ...] = tuple(
    CycInt(tuple((-1) ** k * v for v in _XI_POW[k % 9])) for k in range(18)
)

# pi^3 and sqrt(-3) are associates; PI3_UNIT is their exact unit quotient,
# fixed here and re-verified at import.
PI3_UNIT = CycInt((0, -1, -2, -2, -2, -1))

assert PI * PI * PI * PI3_UNIT == SQRT_M3, "pi^3 * unit != sqrt(-3)"
assert SQRT_M3 * SQRT_M3 == CycInt.from_int(-3)
assert XI * XI_INV == ONE
assert PI * KAPPA == CycInt.from_int(3)


def unit_inverse(u: CycInt) -> CycInt:
    """Inverse of a unit of Z[xi] (norm +-1), as a ring element."""
    n = norm(u)
    if n not in (1, -1):
        raise NotDivisible(f"not a unit (norm {n})")
    cof = _reduce(mul, (galois(u, k) for k in range(2, 6)), galois(u, 1))
    return cof if n == 1 else -cof
