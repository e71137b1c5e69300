"""Exact polynomial arithmetic in q with arbitrary-precision integers.

QPoly is a dense coefficient vector plus a degree offset; CycloProduct is a
q-shift plus a signed multiset of cyclotomic indices, the fast carrier for
hook-length-formula products.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cache
from typing import Iterable, NamedTuple


class NonzeroRemainder(ArithmeticError):
    """A division claimed exact left a remainder."""


class NegativeExponent(ValueError):
    """A cyclotomic product with uncancelled denominator cannot be expanded."""


def _normalize(offset: int, coeffs: list[int]) -> tuple[int, tuple[int, ...]]:
    lo = 0
    while lo < len(coeffs) and coeffs[lo] == 0:
        lo += 1
    hi = len(coeffs)
    while hi > lo and coeffs[hi - 1] == 0:
        hi -= 1
    if lo == hi:
        return 0, ()
    return offset + lo, tuple(coeffs[lo:hi])


@dataclass(frozen=True)
class QPoly:
    """Polynomial sum(coeffs[i] * q**(offset+i)); zero has empty coeffs."""

    offset: int = 0
    coeffs: tuple[int, ...] = ()

    def __init__(self, offset: int = 0, coeffs: Iterable[int] = ()):
        offset, coeffs = _normalize(offset, [int(c) for c in coeffs])
        object.__setattr__(self, "offset", offset)
        object.__setattr__(self, "coeffs", coeffs)

    @staticmethod
    def zero() -> "QPoly":
        return QPoly(0, ())

    @staticmethod
    def one() -> "QPoly":
        return QPoly(0, (1,))

    @staticmethod
    def monomial(k: int, coeff: int = 1) -> "QPoly":
        return QPoly(k, (coeff,))

    @staticmethod
    def from_terms(terms: dict) -> "QPoly":
        """Build from a degree -> coefficient mapping."""
        if not terms:
            return QPoly.zero()
        lo, hi = min(terms), max(terms)
        out = [0] * (hi - lo + 1)
        for k, c in terms.items():
            out[k - lo] = c
        return QPoly(lo, out)

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return self.offset + len(self.coeffs) - 1 if self.coeffs else -1

    def coefficient(self, k: int) -> int:
        i = k - self.offset
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def support(self) -> tuple[int, ...]:
        return tuple(self.offset + i for i, c in enumerate(self.coeffs) if c)

    def eval_int(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc * x ** self.offset if self.coeffs else 0

    def eval_at_1(self) -> int:
        return sum(self.coeffs)

    def __add__(self, other: "QPoly") -> "QPoly":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        off = min(self.offset, other.offset)
        hi = max(self.degree, other.degree)
        out = [0] * (hi - off + 1)
        for i, c in enumerate(self.coeffs):
            out[self.offset - off + i] += c
        for i, c in enumerate(other.coeffs):
            out[other.offset - off + i] += c
        return QPoly(off, out)

    def __neg__(self) -> "QPoly":
        return QPoly(self.offset, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "QPoly") -> "QPoly":
        return self + (-other)

    def __mul__(self, other) -> "QPoly":
        if isinstance(other, int):
            return QPoly(self.offset, tuple(other * c for c in self.coeffs))
        if self.is_zero() or other.is_zero():
            return QPoly.zero()
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = [0] * (len(a) + len(b) - 1)
        for j, cb in enumerate(b):
            if cb:
                for i, ca in enumerate(a):
                    out[i + j] += ca * cb
        return QPoly(self.offset + other.offset, out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "QPoly":
        """Multiply by q**k."""
        if self.is_zero():
            return self
        return QPoly(self.offset + k, self.coeffs)

    def __repr__(self) -> str:
        if self.is_zero():
            return "QPoly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                k = self.offset + i
                base = "1" if k == 0 else ("q" if k == 1 else f"q^{k}")
                terms.append(base if c == 1 and k else (str(c) if k == 0 else f"{c}*{base}"))
        return "QPoly(" + " + ".join(terms) + ")"

    def to_json(self) -> dict:
        return {"offset": self.offset, "coeffs": [str(c) for c in self.coeffs]}

    def to_json_str(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))

    @staticmethod
    def from_json(obj: dict) -> "QPoly":
        return QPoly(int(obj["offset"]), (int(c) for c in obj["coeffs"]))


def substitute_power(p: QPoly, m: int) -> QPoly:
    """Substitute q -> q**m (m >= 1)."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if m == 1 or p.is_zero():
        return p
    out = [0] * ((len(p.coeffs) - 1) * m + 1)
    for i, c in enumerate(p.coeffs):
        out[i * m] = c
    return QPoly(p.offset * m, out)


def divide_exact(num: QPoly, den: QPoly) -> QPoly:
    """Quotient num/den when the division is exact, else NonzeroRemainder."""
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero():
        return QPoly.zero()
    if num.offset < den.offset:
        raise NonzeroRemainder(f"offset {num.offset} < {den.offset}")
    rem = list(num.coeffs)
    d = list(den.coeffs)
    dlead = d[-1]
    qlen = len(rem) - len(d) + 1
    if qlen <= 0:
        raise NonzeroRemainder("numerator degree below denominator degree")
    quot = [0] * qlen
    for i in range(qlen - 1, -1, -1):
        top = rem[i + len(d) - 1]
        if top % dlead:
            raise NonzeroRemainder(f"leading coefficient {top} not divisible by {dlead}")
        f = top // dlead
        quot[i] = f
        if f:
            for j, dj in enumerate(d):
                rem[i + j] -= f * dj
    if any(rem):
        raise NonzeroRemainder("nonzero remainder")
    return QPoly(num.offset - den.offset, quot)


def divide_exact_int(p: QPoly, k: int) -> QPoly:
    """Divide every coefficient by the integer k exactly."""
    if k == 0:
        raise ZeroDivisionError
    if any(c % k for c in p.coeffs):
        raise NonzeroRemainder(f"coefficients not all divisible by {k}")
    return QPoly(p.offset, tuple(c // k for c in p.coeffs))


# ---------------------------------------------------------------------------
# cyclotomic machinery


@cache
def _divisors(n: int) -> tuple[int, ...]:
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return tuple(sorted(out))


@cache
def _mobius(n: int) -> int:
    mu, m = 1, n
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            mu = -mu
        p += 1
    if m > 1:
        mu = -mu
    return mu


@cache
def cyclotomic_polynomial(j: int) -> QPoly:
    """Phi_j(q), by exact division of q^j - 1 by the proper-divisor product."""
    if j < 1:
        raise ValueError("cyclotomic index must be >= 1")
    num = QPoly(0, [-1] + [0] * (j - 1) + [1])
    for d in _divisors(j):
        if d < j:
            num = divide_exact(num, cyclotomic_polynomial(d))
    return num


def _mul_qpow_minus_one(coeffs: list[int], d: int) -> list[int]:
    """Multiply a dense vector by (q^d - 1)."""
    n = len(coeffs)
    out = [0] * (n + d)
    out[d:] = coeffs
    for i in range(n):
        out[i] -= coeffs[i]
    return out


def _div_qpow_minus_one(coeffs: list[int], d: int) -> list[int]:
    """Exact division of a dense vector by (q^d - 1); raises if inexact."""
    n = len(coeffs)
    if n < d:
        raise NonzeroRemainder(f"cannot divide length-{n} vector by q^{d}-1")
    out = [0] * (n - d)
    # On each residue class mod d the quotient is a negated prefix sum.
    for r in range(d):
        cls = coeffs[r::d]
        acc = list(itertools.accumulate(cls))
        if acc[-1] != 0:
            raise NonzeroRemainder("division by q^%d-1 is not exact" % d)
        out[r::d] = [-a for a in acc[:-1]]
    return out


@dataclass(frozen=True)
class CycloProduct:
    """q**shift times a product of cyclotomic polynomials Phi_j**e_j."""

    shift: int
    exponents: tuple[tuple[int, int], ...]

    def __init__(self, shift: int, exponents):
        if isinstance(exponents, dict):
            exponents = exponents.items()
        items = tuple(sorted((int(j), int(e)) for j, e in exponents if e))
        if any(j < 2 for j, _ in items):
            raise ValueError("cyclotomic indices must be >= 2")
        object.__setattr__(self, "shift", int(shift))
        object.__setattr__(self, "exponents", items)

    def exponent_dict(self) -> dict[int, int]:
        return dict(self.exponents)

    def expand(self) -> QPoly:
        return expand(self)

    def eval_at_1(self) -> int:
        """Value at q=1: Phi_j(1) is p for prime powers j=p^k, else 1."""
        if any(e < 0 for _, e in self.exponents):
            raise NegativeExponent("cannot evaluate with negative exponents")
        val = 1
        for j, e in self.exponents:
            val *= cyclotomic_polynomial(j).eval_at_1() ** e
        return val


def expand(cp: CycloProduct, method: str = "fast") -> QPoly:
    """Expand a CycloProduct to an exact dense QPoly.

    The fast path rewrites Phi_j = prod_{d|j} (q^d-1)^{mu(j/d)}, multiplies
    all positive (q^d-1) powers into one dense vector in ascending d order,
    then strips the negative powers by exact streaming division (each step
    stays exact because the running product always contains the remaining
    divisors as factors).  `method="direct"` multiplies the expanded Phi_j
    one at a time instead, for cross-checking.
    """
    if any(e < 0 for _, e in cp.exponents):
        raise NegativeExponent(f"negative exponent in {cp.exponents}")
    if method == "direct":
        acc = QPoly.one()
        for j, e in cp.exponents:
            phi = cyclotomic_polynomial(j)
            for _ in range(e):
                acc = acc * phi
        return acc.shift(cp.shift)
    if method != "fast":
        raise ValueError(f"unknown method {method!r}")

    binom_exp: dict[int, int] = {}
    for j, e in cp.exponents:
        for d in _divisors(j):
            mu = _mobius(j // d)
            if mu:
                binom_exp[d] = binom_exp.get(d, 0) + mu * e
    coeffs = [1]
    for d in sorted(binom_exp):
        for _ in range(max(binom_exp[d], 0)):
            coeffs = _mul_qpow_minus_one(coeffs, d)
    for d in sorted(binom_exp):
        for _ in range(max(-binom_exp[d], 0)):
            coeffs = _div_qpow_minus_one(coeffs, d)
    return QPoly(cp.shift, coeffs)


# ---------------------------------------------------------------------------
# q-analogues


def q_int(n: int) -> QPoly:
    """[n]_q = 1 + q + ... + q^(n-1)."""
    if n < 0:
        raise ValueError("q_int needs n >= 0")
    return QPoly(0, (1,) * n)


def q_factorial(n: int) -> QPoly:
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    exps = {j: n // j for j in range(2, n + 1)}
    return expand(CycloProduct(0, exps))


def q_binomial(n: int, k: int) -> QPoly:
    """Gaussian binomial; zero when k is out of range."""
    if k < 0 or k > n:
        return QPoly.zero()
    exps = {j: n // j - k // j - (n - k) // j for j in range(2, n + 1)}
    return expand(CycloProduct(0, exps))


def q_multinomial(n: int, alpha) -> QPoly:
    """[n]_q! / prod [alpha_i]_q!, with the zero convention for negative
    entries; alpha must sum to n otherwise."""
    alpha = tuple(alpha)
    if any(a < 0 for a in alpha):
        return QPoly.zero()
    if sum(alpha) != n:
        raise ValueError(f"{alpha} does not sum to {n}")
    exps = {j: n // j - sum(a // j for a in alpha) for j in range(2, n + 1)}
    return expand(CycloProduct(0, exps))


# ---------------------------------------------------------------------------
# coefficient-shape predicates


class ShapeFacts(NamedTuple):
    symmetric: bool
    unimodal: bool
    internal_zeros: tuple[int, ...]
    parity_unimodal: bool


def _is_unimodal(seq) -> bool:
    seq = list(seq)
    i = 0
    while i + 1 < len(seq) and seq[i] <= seq[i + 1]:
        i += 1
    while i + 1 < len(seq) and seq[i] >= seq[i + 1]:
        i += 1
    return i + 1 >= len(seq)


def shape_predicates(p: QPoly) -> ShapeFacts:
    """Symmetry, unimodality, internal zero degrees, parity-unimodality."""
    c = p.coeffs
    symmetric = c == tuple(reversed(c))
    unimodal = _is_unimodal(c)
    internal = tuple(p.offset + i for i, x in enumerate(c) if x == 0)
    evens = [x for i, x in enumerate(c) if (p.offset + i) % 2 == 0]
    odds = [x for i, x in enumerate(c) if (p.offset + i) % 2 == 1]
    parity = _is_unimodal(evens) and _is_unimodal(odds)
    return ShapeFacts(symmetric, unimodal, internal, parity)
