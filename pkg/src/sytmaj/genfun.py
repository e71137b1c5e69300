"""Closed-form major-index generating functions and fake-degree polynomials.

Covers the q-hook-length product for a single shape, the multinomial product
for block shapes, coefficient formulas in the hook-multiplicity parameters,
Mahonian counts, and the fake degrees for the wreath products C_m wr S_n and
the groups G(m,d,n).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from math import comb, factorial

from .deformed import deformed_multinomial
from .qpolys import (
    CycloProduct,
    QPoly,
    divide_exact_int,
    expand,
    q_multinomial,
    substitute_power,
)
from .shapes import BlockShape, Partition, b_statistic, hook_lengths, partitions
from .tableaux import DNotDividingM


def stanley(p: Partition) -> CycloProduct:
    """q**b(lambda) [n]_q! / prod [h_c]_q as a cancelled cyclotomic product."""
    if not p:
        raise ValueError("shape must be nonempty")
    n = p.n
    hooks = list(hook_lengths(p).values())
    exps = {}
    for j in range(2, n + 1):
        e = n // j - sum(1 for h in hooks if h % j == 0)
        if e < 0:
            raise AssertionError(f"negative cyclotomic exponent for {p}")
        exps[j] = e
    return CycloProduct(b_statistic(p), exps)


def syt_count(p: Partition) -> int:
    """Hook-length formula count, in exact integer arithmetic."""
    if not p:
        return 1
    num = factorial(p.n)
    for h in hook_lengths(p).values():
        num //= h
    return num


def block_maj_gf(blocks: BlockShape) -> QPoly:
    """Major-index generating function of a block diagonal shape: the
    q-multinomial times the product of the single-shape polynomials."""
    out = q_multinomial(blocks.n, blocks.alpha())
    for b in blocks.blocks:
        if b:
            out = out * expand(stanley(b))
    return out


@dataclass(frozen=True)
class HProfile:
    """Hook-multiplicity vector H_i and part multiplicities of a companion
    partition, the parameters of the coefficient polynomials."""

    H: tuple[int, ...]  # H[i-1] = number of cells with hook length i
    m_mu: tuple[int, ...]

    @staticmethod
    def of(p: Partition, mu: Partition) -> "HProfile":
        n = p.n
        hooks = list(hook_lengths(p).values())
        H = [0] * n
        for h in hooks:
            H[h - 1] += 1
        m = [0] * n
        for part in mu.parts:
            if part <= n:
                m[part - 1] += 1
        return HProfile(tuple(H), tuple(m))


def generalized_binomial(a: int, k: int) -> int:
    """a(a-1)...(a-k+1)/k! for any integer a (may be negative)."""
    if k < 0:
        return 0
    num = 1
    for i in range(k):
        num *= a - i
    return num // factorial(k)


@cache
def _mu_profiles(d: int, max_part: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Part-multiplicity profiles of the partitions of d with bounded parts."""
    out: list[tuple[tuple[int, int], ...]] = []

    def rec(rest: int, cap: int, acc: tuple[tuple[int, int], ...]) -> None:
        if rest == 0:
            out.append(acc)
            return
        for part in range(min(rest, cap), 0, -1):
            for mult in range(rest // part, 0, -1):
                rec(rest - mult * part, part - 1, acc + ((part, mult),))

    rec(d, max_part, ())
    return tuple(out)


def coefficient_via_H(p: Partition, d: int) -> int:
    """Coefficient of q**(b(lambda)+d) as a polynomial in the H_i."""
    if d < 0:
        return 0
    n = p.n
    H = [0] * (n + 1)
    for h in hook_lengths(p).values():
        H[h] += 1
    total = 0
    for prof in _mu_profiles(d, n):
        term = 1
        for part, mult in prof:
            term *= generalized_binomial(H[part] + mult - 2, mult)
            if term == 0:
                break
        total += term
    return total


def _distinct_large_parts(mu: Partition) -> bool:
    large = [p for p in mu.parts if p > 1]
    return len(large) == len(set(large))


def mahonian_count(n: int, d: int) -> int:
    """Number of permutations of n with d inversions, via the signed sum
    over partitions of d with bounded first part and distinct parts > 1."""
    if d < 0 or d > comb(n, 2):
        return 0
    total = 0
    for mu in partitions(d, max_part=n):
        if not _distinct_large_parts(mu):
            continue
        m1 = sum(1 for p in mu.parts if p == 1)
        nlarge = len(mu.parts) - m1
        total += (-1) ** nlarge * generalized_binomial(n + m1 - 2, m1)
    return total


def count_T(d: int, n: int) -> int:
    """Partitions of d with first part <= n and distinct parts > 1."""
    return sum(1 for mu in partitions(d, max_part=n) if _distinct_large_parts(mu))


def wreath_fake_degree(blocks: BlockShape, m: int) -> QPoly:
    """Fake degree polynomial for C_m wr S_n: q**b(alpha) times the block
    generating function evaluated at q**m."""
    if blocks.m != m:
        raise ValueError(f"block count {blocks.m} != m={m}")
    return substitute_power(block_maj_gf(blocks), m).shift(blocks.b_alpha())


def gmdn_fake_degree(blocks: BlockShape, m: int, d: int) -> QPoly:
    """Fake degree polynomial for G(m,d,n): orbit-size factor times the
    deformed multinomial times the product of substituted hook products."""
    if blocks.m != m:
        raise ValueError(f"block count {blocks.m} != m={m}")
    if d <= 0 or m % d:
        raise DNotDividingM(f"d={d} does not divide m={m}")
    out = deformed_multinomial(blocks.alpha(), d)
    for b in blocks.blocks:
        if b:
            out = out * substitute_power(expand(stanley(b)), m)
    orbit = len(blocks.orbit(d))
    if d % orbit:
        raise AssertionError("orbit size must divide d")
    t = d // orbit
    return divide_exact_int(out, t) if t > 1 else out
