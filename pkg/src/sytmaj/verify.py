"""Enumeration oracles and the verification suites behind `sytmaj verify`.

Every closed formula in the package is re-derived here by brute force:
tableau enumeration, word enumeration, or exhaustive move application.
Each suite returns one CheckResult per unit of work; the CLI prints them
and fails on any mismatch.
"""
from __future__ import annotations

import itertools
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cache
from math import comb
from typing import Callable, Iterable, Iterator

from .deformed import (
    deformed_multinomial,
    deformed_multinomial_rational,
    partial_sum_multinomial,
    rotation_class,
)
from .genfun import gmdn_fake_degree, stanley, syt_count, wreath_fake_degree
from .mutations import build_poset, phi, verify_ranked
from .qpolys import (
    NonzeroRemainder,
    QPoly,
    divide_exact,
    divide_exact_int,
    expand,
    q_binomial,
    q_factorial,
    q_int,
    q_multinomial,
    shape_predicates,
    substitute_power,
)
from .shapes import (
    BlockShape,
    Partition,
    b_composition,
    b_statistic,
    hook_lengths,
    parse_blocks,
    parse_partition,
    partitions,
)
from .tableaux import (
    canonical_orbit_tableaux,
    enumerate_tableaux,
    exceptional_set,
)
from .zeros import support_gmdn, support_type_A, verify_support


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "ok  " if self.ok else "FAIL"
        detail = f"  {self.detail}" if self.detail else ""
        return f"{status} [{self.suite}] {self.name}{detail}"


# ---------------------------------------------------------------------------
# oracles


def maj_gf_oracle(shape) -> QPoly:
    """Major-index generating function by direct enumeration."""
    counts = Counter(t.maj() for t in enumerate_tableaux(shape))
    return QPoly.from_terms(counts)


def des_gf_oracle(shape) -> QPoly:
    return QPoly.from_terms(Counter(t.des() for t in enumerate_tableaux(shape)))


def majdes_values_oracle(shape) -> set[int]:
    return {t.maj() - t.des() for t in enumerate_tableaux(shape)}


def wreath_gf_oracle(blocks: BlockShape, m: int) -> QPoly:
    base = blocks.b_alpha()
    counts = Counter(base + m * t.maj() for t in enumerate_tableaux(blocks))
    return QPoly.from_terms(counts)


def gmdn_gf_oracle(blocks: BlockShape, m: int, d: int) -> QPoly:
    counts = Counter(ba + m * t.maj() for t, ba in canonical_orbit_tableaux(blocks, d))
    return QPoly.from_terms(counts)


@cache
def _word_buckets(alpha: tuple[int, ...]) -> dict[int, Counter]:
    """For positive content alpha: bucket words by first letter, counting by
    inversion number.  Inversions are accumulated letter by letter."""
    m = len(alpha)
    buckets: dict[int, Counter] = {i: Counter() for i in range(1, m + 1)}
    counts = list(alpha)
    placed = [0] * (m + 1)

    def rec(remaining: int, inv: int, first: int) -> None:
        if remaining == 0:
            buckets[first][inv] += 1
            return
        for x in range(1, m + 1):
            if counts[x - 1]:
                add = sum(placed[y] for y in range(x + 1, m + 1))
                counts[x - 1] -= 1
                placed[x] += 1
                rec(remaining - 1, inv + add, first if first else x)
                counts[x - 1] += 1
                placed[x] -= 1

    rec(sum(alpha), 0, 0)
    return buckets


def word_inv_oracle(alpha: tuple[int, ...], k: int) -> QPoly:
    """Inversion generating function of words of content alpha with first
    letter at most k, by exhaustive enumeration."""
    positive = tuple(a for a in alpha if a)
    if not positive:
        return QPoly.zero()  # no nonempty word, so no admissible first letter
    # letter i of the squeezed alphabet corresponds to the i-th positive slot
    slots = [i for i, a in enumerate(alpha, 1) if a]
    buckets = _word_buckets(positive)
    total: Counter = Counter()
    for sq_letter, orig in enumerate(slots, 1):
        if orig <= k:
            total.update(buckets[sq_letter])
    return QPoly.from_terms(total)


def weak_compositions(n: int, m: int) -> Iterator[tuple[int, ...]]:
    if m == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in weak_compositions(n - first, m - 1):
            yield (first,) + rest


def block_shapes(n: int, m: int) -> Iterator[BlockShape]:
    """All sequences of m partitions with n cells total (empties allowed)."""
    for alpha in weak_compositions(n, m):
        pools = [list(partitions(a)) for a in alpha]
        for combo in itertools.product(*pools):
            yield BlockShape(combo)


# ---------------------------------------------------------------------------
# per-shape workers (module level so process pools can pickle them)


def _check_stanley(shape_str: str) -> tuple[str, bool, str]:
    p = parse_partition(shape_str)
    got = expand(stanley(p))
    want = maj_gf_oracle(p)
    return shape_str, got == want, "" if got == want else f"{got!r} != {want!r}"


def _check_support_a(shape_str: str) -> tuple[str, bool, str]:
    p = parse_partition(shape_str)
    report = verify_support(support_type_A(p), maj_gf_oracle(p), shape_str)
    pred = support_type_A(p)
    excl_ok = (
        pred.excluded
        == (frozenset({b_statistic(p) + 1, comb(p.n, 2) - b_statistic(p.conjugate()) - 1})
           if p.is_big_rectangle() else frozenset())
    )
    ok = report.equal and excl_ok
    return shape_str, ok, "" if ok else report.to_json_str()


def _check_phi(shape_str: str) -> tuple[str, bool, str]:
    p = parse_partition(shape_str)
    exc = exceptional_set(p)
    for t in enumerate_tableaux(p):
        if t in exc:
            continue
        y = phi(t)  # raises PhiBranchError on any gap
        if y.maj() != t.maj() + 1 or y.shape != p:
            return shape_str, False, f"bad image for {t.to_text()}"
    return shape_str, True, ""


def _check_poset(shape_str: str) -> tuple[str, bool, str]:
    p = parse_partition(shape_str)
    problems = []
    strong = build_poset(p, "strong")
    weak = build_poset(p, "weak")
    for poset in (strong, weak):
        rep = verify_ranked(poset)
        if not rep.ok():
            problems.append(f"{poset.flavor}: {rep}")
    if not set(weak.edge_pairs()) <= _order_relation(strong):
        problems.append("weak covers not inside strong order")
    return shape_str, not problems, "; ".join(problems)


def _order_relation(poset) -> set[tuple[int, int]]:
    """Transitive closure of the cover relation, as index pairs."""
    n = len(poset.elements)
    reach = [set(ups) for ups in poset.covers]
    for i in range(n - 1, -1, -1):
        acc = set(reach[i])
        for j in reach[i]:
            acc |= reach[j]
        reach[i] = acc
    return {(i, j) for i in range(n) for j in reach[i]}


def _check_des(shape_str: str) -> tuple[str, bool, str]:
    p = parse_partition(shape_str)
    lo = p.conjugate().part(1) - 1
    hi = p.n - p.part(1)
    actual = set(des_gf_oracle(p).support())
    ok = actual == set(range(lo, hi + 1))
    return shape_str, ok, "" if ok else f"des support {sorted(actual)} != [{lo},{hi}]"


def _check_majdes(shape_str: str) -> tuple[str, bool, str]:
    p = parse_partition(shape_str)
    vals = majdes_values_oracle(p)
    ok = vals == set(range(min(vals), max(vals) + 1))
    return shape_str, ok, "" if ok else f"maj-des gap: {sorted(vals)}"


def _check_parity(shape_str: str) -> tuple[str, bool, str]:
    p = parse_partition(shape_str)
    facts = shape_predicates(expand(stanley(p)))
    return shape_str, facts.parity_unimodal, ""


def _check_gmdn_block(arg: tuple[str, int, int]) -> tuple[str, bool, str]:
    shape_str, m, d = arg
    blocks = parse_blocks(shape_str)
    name = f"{shape_str} m={m} d={d}"
    got = gmdn_fake_degree(blocks, m, d)
    want = gmdn_gf_oracle(blocks, m, d)
    if got != want:
        return name, False, f"{got!r} != {want!r}"
    if blocks.n >= 1:
        rep = verify_support(support_gmdn(blocks, m, d), got, shape_str)
        if not rep.equal:
            return name, False, rep.to_json_str()
    return name, True, ""


# ---------------------------------------------------------------------------
# suites


def _map_maybe_parallel(fn: Callable, items: list, threads: int) -> list:
    if threads > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * threads))))
    return [fn(x) for x in items]


def _aggregate(suite: str, rows: Iterable[tuple[str, bool, str]], per_item: bool = False) -> list[CheckResult]:
    out = []
    for name, ok, detail in rows:
        out.append(CheckResult(suite, name, ok, detail))
    if per_item:
        return out
    bad = [r for r in out if not r.ok]
    if bad:
        return bad
    return [CheckResult(suite, f"{len(out)} checks", True)]


def _shape_strings(ns: Iterable[int]) -> list[str]:
    return [str(p) for n in ns for p in partitions(n)]


def suite_stanley(max_n: int = 12, threads: int = 1) -> list[CheckResult]:
    rows = _map_maybe_parallel(_check_stanley, _shape_strings(range(1, max_n + 1)), threads)
    return _aggregate("stanley", rows)


def suite_support_a(max_n: int = 12, threads: int = 1) -> list[CheckResult]:
    rows = _map_maybe_parallel(_check_support_a, _shape_strings(range(1, max_n + 1)), threads)
    return _aggregate("support-a", rows)


def suite_phi(max_n: int = 9, threads: int = 1) -> list[CheckResult]:
    rows = _map_maybe_parallel(_check_phi, _shape_strings(range(1, max_n + 1)), threads)
    return _aggregate("phi", rows)


def suite_poset(max_n: int = 8, threads: int = 1) -> list[CheckResult]:
    rows = _map_maybe_parallel(_check_poset, _shape_strings(range(1, max_n + 1)), threads)
    out = _aggregate("poset", rows)
    dot = build_poset(Partition((3, 2, 1)), "weak").to_dot()
    nodes = dot.count("[maj=")
    out.append(CheckResult("poset", "3,2,1 weak dot has 16 nodes", nodes == 16, f"nodes={nodes}"))
    return out


def suite_des(max_n: int = 12, majdes_n: int = 10, threads: int = 1) -> list[CheckResult]:
    rows = _map_maybe_parallel(_check_des, _shape_strings(range(1, max_n + 1)), threads)
    rows += _map_maybe_parallel(_check_majdes, _shape_strings(range(1, majdes_n + 1)), threads)
    return _aggregate("des", rows)


def suite_parity(max_n: int = 20, threads: int = 1) -> list[CheckResult]:
    rows = _map_maybe_parallel(_check_parity, _shape_strings(range(1, max_n + 1)), threads)
    return _aggregate("parity", rows)


# frozen regression vectors (exact coefficient data for small named cases)
REGRESSION_CASES: dict[str, QPoly] = {
    "stanley 4,2": QPoly(2, (1, 1, 2, 1, 2, 1, 1)),
    "stanley 4,2,1": QPoly(4, (1, 2, 3, 4, 5, 5, 5, 4, 3, 2, 1)),
    "wreath m=2 2|3,1": QPoly.from_terms(
        {6: 1, 8: 2, 10: 4, 12: 5, 14: 7, 16: 7, 18: 7, 20: 5, 22: 4, 24: 2, 26: 1}
    ),
    "wreath m=2 |3,3": QPoly.from_terms({12: 1, 16: 1, 18: 1, 20: 1, 24: 1}),
    "gmdn m=2 d=2 2|3,1": QPoly.from_terms(
        {4: 1, 6: 3, 8: 6, 10: 8, 12: 9, 14: 8, 16: 6, 18: 3, 20: 1}
    ),
    "gmdn m=2 d=2 |3,3": QPoly.from_terms({6: 1, 10: 1, 12: 1, 14: 1, 18: 1}),
    "deformed 2,1,1,1 d=2": QPoly.from_terms(
        {6: 1, 8: 1, 10: 3, 12: 3, 14: 6, 16: 5, 18: 8, 20: 6, 22: 8,
         24: 5, 26: 6, 28: 3, 30: 3, 32: 1, 34: 1}
    ),
    "multinomial 5,(2,1,1,1) in q^4": QPoly.from_terms(
        {0: 1, 4: 3, 8: 6, 12: 9, 16: 11, 20: 11, 24: 9, 28: 6, 32: 3, 36: 1}
    ),
}


def suite_regression() -> list[CheckResult]:
    rows: list[tuple[str, bool, str]] = []

    def add(name: str, got: QPoly, want: QPoly) -> None:
        rows.append((name, got == want, "" if got == want else f"{got!r} != {want!r}"))

    add("stanley 4,2", expand(stanley(Partition((4, 2)))), REGRESSION_CASES["stanley 4,2"])
    add("stanley 4,2,1", expand(stanley(Partition((4, 2, 1)))), REGRESSION_CASES["stanley 4,2,1"])
    facts42 = shape_predicates(expand(stanley(Partition((4, 2)))))
    rows.append(("4,2 symmetric not unimodal", facts42.symmetric and not facts42.unimodal, ""))
    facts421 = shape_predicates(expand(stanley(Partition((4, 2, 1)))))
    rows.append(("4,2,1 symmetric unimodal", facts421.symmetric and facts421.unimodal, ""))

    b1 = parse_blocks("2|3,1")
    b2 = parse_blocks("|3,3")
    b3 = parse_blocks("3,3|")
    add("wreath 2|3,1", wreath_fake_degree(b1, 2), REGRESSION_CASES["wreath m=2 2|3,1"])
    add("wreath |3,3", wreath_fake_degree(b2, 2), REGRESSION_CASES["wreath m=2 |3,3"])
    add("gmdn 2|3,1", gmdn_fake_degree(b1, 2, 2), REGRESSION_CASES["gmdn m=2 d=2 2|3,1"])
    add("gmdn |3,3", gmdn_fake_degree(b2, 2, 2), REGRESSION_CASES["gmdn m=2 d=2 |3,3"])
    rows.append((
        "gmdn |3,3 differs from wreath |3,3",
        gmdn_fake_degree(b2, 2, 2) != wreath_fake_degree(b2, 2),
        "",
    ))
    rows.append((
        "gmdn |3,3 == gmdn 3,3| == wreath 3,3|",
        gmdn_fake_degree(b2, 2, 2) == gmdn_fake_degree(b3, 2, 2) == wreath_fake_degree(b3, 2),
        "",
    ))

    mult = substitute_power(q_multinomial(5, (2, 1, 1, 1)), 4)
    add("multinomial (2,1,1,1) in q^4", mult, REGRESSION_CASES["multinomial 5,(2,1,1,1) in q^4"])
    den = QPoly.from_terms({0: 1, 10: 1})
    try:
        divide_exact(mult, den)
        rows.append(("undeformed multinomial not divisible by 1+q^10", False, "division succeeded"))
    except NonzeroRemainder:
        rows.append(("undeformed multinomial not divisible by 1+q^10", True, ""))
    num = (QPoly.monomial(6) + QPoly.monomial(8)) * mult
    add("rotation-sum quotient", divide_exact(num, den), REGRESSION_CASES["deformed 2,1,1,1 d=2"])
    add(
        "deformed 2,1,1,1 d=2",
        deformed_multinomial((2, 1, 1, 1), 2),
        REGRESSION_CASES["deformed 2,1,1,1 d=2"],
    )
    return _aggregate("regression", rows, per_item=True)


def suite_deformed(max_n: int = 8, max_m: int = 6, threads: int = 1) -> list[CheckResult]:
    rows: list[tuple[str, bool, str]] = []
    bad = 0
    checked = 0
    for n in range(1, max_n + 1):
        for m in range(1, max_m + 1):
            divisors = [d for d in range(1, m + 1) if m % d == 0]
            for alpha in weak_compositions(n, m):
                for d in divisors:
                    summ = deformed_multinomial(alpha, d)
                    rat = deformed_multinomial_rational(alpha, d)
                    chain = QPoly.zero()
                    for beta in rotation_class(alpha, d):
                        chain = chain + substitute_power(
                            partial_sum_multinomial(beta, m // d), m
                        ).shift(b_composition(beta))
                    checked += 1
                    if not (summ == rat == chain):
                        bad += 1
                        rows.append((f"alpha={alpha} d={d}", False, "formula mismatch"))
                for k in range(1, m + 1):
                    got = partial_sum_multinomial(alpha, k)
                    want = word_inv_oracle(alpha, k)
                    facts = shape_predicates(got)
                    checked += 1
                    if got != want or not (facts.symmetric and facts.unimodal):
                        bad += 1
                        rows.append((f"p alpha={alpha} k={k}", False, f"{got!r} != {want!r}"))
    if not bad:
        rows.append((f"{checked} deformed checks", True, ""))
    return _aggregate("deformed", rows, per_item=True)


def suite_gmdn(max_n: int = 6, max_m: int = 4, threads: int = 1) -> list[CheckResult]:
    work: list[tuple[str, int, int]] = []
    for n in range(1, max_n + 1):
        for m in range(1, max_m + 1):
            for d in (d for d in range(1, m + 1) if m % d == 0):
                for blocks in block_shapes(n, m):
                    work.append((str(blocks), m, d))
    rows = _map_maybe_parallel(_check_gmdn_block, work, threads)
    return _aggregate("gmdn", rows)


def _hook_quotient_sq(p: Partition) -> QPoly:
    """[n]_{q^2}! / prod [h]_{q^2} computed from primitive q-analogues."""
    out = substitute_power(q_factorial(p.n), 2)
    for h in hook_lengths(p).values():
        out = divide_exact(out, substitute_power(q_int(h), 2))
    return out


def type_b_closed_form(lam: Partition, mu: Partition) -> QPoly:
    """Hyperoctahedral fake degree as a single product formula."""
    n = lam.n + mu.n
    poly = substitute_power(q_binomial(n, lam.n), 2)
    poly = poly * _hook_quotient_sq(lam) * _hook_quotient_sq(mu)
    return poly.shift(mu.n + 2 * b_statistic(lam) + 2 * b_statistic(mu))


def type_d_closed_form(lam: Partition, mu: Partition) -> QPoly:
    """Even-signed-permutation fake degree as a single product formula."""
    n = lam.n + mu.n
    num = (QPoly.monomial(lam.n) + QPoly.monomial(mu.n)) * substitute_power(
        q_binomial(n, lam.n), 2
    )
    poly = divide_exact(num, QPoly.from_terms({0: 1, n: 1}))
    poly = poly * _hook_quotient_sq(lam) * _hook_quotient_sq(mu)
    poly = poly.shift(2 * b_statistic(lam) + 2 * b_statistic(mu))
    return divide_exact_int(poly, 2) if lam == mu else poly


def suite_closed_forms(max_n: int = 6, threads: int = 1) -> list[CheckResult]:
    rows: list[tuple[str, bool, str]] = []
    bad = 0
    checked = 0
    for n in range(1, max_n + 1):
        for k in range(0, n + 1):
            for lam in partitions(k):
                for mu in partitions(n - k):
                    blocks = BlockShape((lam, mu))
                    okb = type_b_closed_form(lam, mu) == wreath_fake_degree(blocks, 2)
                    okd = type_d_closed_form(lam, mu) == gmdn_fake_degree(blocks, 2, 2)
                    checked += 2
                    if not (okb and okd):
                        bad += 1
                        rows.append((f"({lam})|({mu})", False, f"B ok={okb} D ok={okd}"))
    if not bad:
        rows.append((f"{checked} closed-form checks", True, ""))
    return _aggregate("closed-forms", rows, per_item=True)


PERF_SHAPE = Partition((19, 18, 17, 16, 15, 14, 13, 12, 11, 10, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1))


def suite_performance(budget_s: float = 10.0) -> list[CheckResult]:
    assert PERF_SHAPE.n == 200
    t0 = time.perf_counter()
    poly = expand(stanley(PERF_SHAPE))
    elapsed = time.perf_counter() - t0
    count_ok = poly.eval_at_1() == syt_count(PERF_SHAPE)
    return [
        CheckResult(
            "performance",
            f"expand 200-cell shape in {elapsed:.2f}s",
            elapsed < budget_s,
            f"budget {budget_s}s",
        ),
        CheckResult("performance", "q=1 matches hook-length count", count_ok),
    ]


SUITES: dict[str, Callable[..., list[CheckResult]]] = {
    "stanley": suite_stanley,
    "support-a": suite_support_a,
    "phi": suite_phi,
    "poset": suite_poset,
    "des": suite_des,
    "regression": suite_regression,
    "deformed": suite_deformed,
    "gmdn": suite_gmdn,
    "closed-forms": suite_closed_forms,
    "performance": suite_performance,
    "parity": suite_parity,
}

# default size caps per suite, scaled down by --max-n when smaller
_SUITE_N_ARG = {
    "stanley": ("max_n", 12),
    "support-a": ("max_n", 12),
    "phi": ("max_n", 9),
    "poset": ("max_n", 8),
    "des": ("max_n", 12),
    "deformed": ("max_n", 8),
    "gmdn": ("max_n", 6),
    "closed-forms": ("max_n", 6),
    "parity": ("max_n", 20),
}


def run_suites(
    names: Iterable[str], max_n: int | None = None, threads: int = 1
) -> tuple[list[CheckResult], bool]:
    results: list[CheckResult] = []
    for name in names:
        fn = SUITES[name]
        kwargs = {}
        if name in _SUITE_N_ARG:
            arg, default = _SUITE_N_ARG[name]
            kwargs[arg] = default if max_n is None else min(max_n, default)
        if name not in ("regression", "performance"):
            kwargs["threads"] = threads
        results.extend(fn(**kwargs))
    return results, all(r.ok for r in results)
