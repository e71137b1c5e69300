"""Closed-form nonzero-coefficient classifiers, paired with verification.

Each classifier materializes an explicit finite set of degrees so that
checking against an actual polynomial is a plain set comparison.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb

from .genfun import stanley
from .qpolys import QPoly, expand, shape_predicates
from .shapes import (
    BlockShape,
    Partition,
    SkewShape,
    b_statistic,
    hook_lengths,
)
from .tableaux import DNotDividingM


@dataclass(frozen=True)
class SupportPrediction:
    """Predicted nonzero degrees for one polynomial family."""

    family: str  # "A" | "wreath" | "gmdn" | "des"
    degrees: frozenset[int]
    excluded: frozenset[int] = frozenset()
    interval_verified: bool = True  # False for skew des predictions

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "degrees": sorted(self.degrees),
            "excluded": sorted(self.excluded),
            "interval_verified": self.interval_verified,
        }


def support_type_A(p: Partition) -> SupportPrediction:
    """Nonzero major-index degrees for a straight shape: the full interval
    from b(lambda) to C(n,2)-b(lambda'), with the two degrees adjacent to
    the endpoints removed exactly for rectangles with >= 2 rows and columns."""
    if p.n < 1:
        raise ValueError("shape must be nonempty")
    lo = b_statistic(p)
    hi = comb(p.n, 2) - b_statistic(p.conjugate())
    excluded = frozenset({lo + 1, hi - 1}) if p.is_big_rectangle() else frozenset()
    return SupportPrediction("A", frozenset(range(lo, hi + 1)) - excluded, excluded)


def support_des(shape: Partition | SkewShape) -> SupportPrediction:
    """Descent-count support.  Straight shapes get the full interval from
    (max column length - 1) to (n - max row length); skew shapes only the
    endpoints, flagged unverified."""
    if isinstance(shape, Partition):
        lo = shape.conjugate().part(1) - 1
        hi = shape.n - shape.part(1)
        return SupportPrediction("des", frozenset(range(lo, hi + 1)))
    lo = shape.max_col_length() - 1
    hi = shape.n - shape.max_row_length()
    return SupportPrediction(
        "des", frozenset({lo, hi}), interval_verified=False
    )


def _wreath_degrees(blocks: BlockShape, m: int) -> frozenset[int]:
    n = blocks.n
    base = blocks.b_alpha()
    bl = blocks.b_blocks()
    width = comb(n + 1, 2) - blocks.hook_sum()
    nonempty = [b for b in blocks.blocks if b]
    excluded: set[int] = set()
    if len(nonempty) == 1 and nonempty[0].is_big_rectangle():
        excluded = {1, width - 1}
    return frozenset(
        base + m * (bl + t) for t in range(width + 1) if t not in excluded
    )


def support_wreath(blocks: BlockShape, m: int) -> SupportPrediction:
    """Nonzero fake-degree locations for C_m wr S_n."""
    if blocks.m != m:
        raise ValueError(f"block count {blocks.m} != m={m}")
    if blocks.n < 1:
        raise ValueError("need at least one cell")
    degrees = _wreath_degrees(blocks, m)
    return SupportPrediction("wreath", degrees)


def support_gmdn(blocks: BlockShape, m: int, d: int) -> SupportPrediction:
    """Nonzero fake-degree locations for G(m,d,n): the union over orbit
    members with positive mass in the first m/d blocks of a shifted interval,
    minus the rectangle exceptions."""
    if blocks.m != m:
        raise ValueError(f"block count {blocks.m} != m={m}")
    if d <= 0 or m % d:
        raise DNotDividingM(f"d={d} does not divide m={m}")
    n = blocks.n
    if n < 1:
        raise ValueError("need at least one cell")
    step = m // d
    degrees: set[int] = set()
    for mu in blocks.orbit(d):
        head = sum(mu.alpha()[:step])
        if head == 0:
            continue
        width = head + comb(n, 2) - mu.hook_sum()
        excluded = _gmdn_excluded(mu, step, n)
        base = mu.b_alpha()
        bl = mu.b_blocks()
        degrees.update(
            base + m * (bl + t) for t in range(width + 1) if t not in excluded
        )
    return SupportPrediction("gmdn", frozenset(degrees))


def _gmdn_excluded(mu: BlockShape, step: int, n: int) -> frozenset[int]:
    """Holes in the degree window: one step above the bottom and one step
    below the top, which exist exactly when the window is carried by the
    single-shape polynomial of a rectangle with >= 2 rows and columns."""
    for b in mu.blocks:
        if b.n == n and b.is_big_rectangle():
            return frozenset({1, comb(n + 1, 2) - sum(hook_lengths(b).values()) - 1})
    if sum(mu.alpha()[:step]) == 1:
        for b in mu.blocks:
            if b.n == n - 1 and b.is_big_rectangle():
                return frozenset({1, comb(n, 2) - sum(hook_lengths(b).values()) - 1})
    return frozenset()


def check_parity_unimodal(p: Partition) -> bool:
    """Even- and odd-degree coefficient subsequences both unimodal."""
    return shape_predicates(expand(stanley(p))).parity_unimodal


@dataclass(frozen=True)
class SupportReport:
    shape: str
    family: str
    predicted: tuple[int, ...]
    actual: tuple[int, ...]
    equal: bool
    missing: tuple[int, ...] = ()  # predicted but actually zero
    extra: tuple[int, ...] = ()  # nonzero but not predicted

    def to_json(self) -> dict:
        out = {
            "shape": self.shape,
            "family": self.family,
            "predicted": list(self.predicted),
            "actual": list(self.actual),
            "equal": self.equal,
        }
        if not self.equal:
            out["missing"] = list(self.missing)
            out["extra"] = list(self.extra)
        return out

    def to_json_str(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))


def verify_support(
    predicted: SupportPrediction, actual: QPoly, shape: str = ""
) -> SupportReport:
    """Compare a prediction with the nonzero degrees of a polynomial."""
    act = frozenset(actual.support())
    pred = predicted.degrees
    return SupportReport(
        shape=shape,
        family=predicted.family,
        predicted=tuple(sorted(pred)),
        actual=tuple(sorted(act)),
        equal=pred == act,
        missing=tuple(sorted(pred - act)),
        extra=tuple(sorted(act - pred)),
    )
