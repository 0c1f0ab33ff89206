"""Greedy closed-neighborhood coverage and the Slater-gap decision procedure.

``f(D) = |union of N[u] for u in D|`` is non-decreasing and submodular, so
the greedy prefix ``D_l`` covers at least ``(1 - e^{-l/k})`` of the best
``k``-set.  ``decide_slater_gap`` uses this with ``k = sl(G)`` and
``l = p * sl(G)``, ``p = ceil(ln(n / sl(G)))``, to certify either
``gamma(G) > sl(G)`` or ``gamma(G) <= (p + 1) * sl(G)``.

All comparisons against powers of ``e`` are done in high-precision decimal
arithmetic; for integer data the compared quantities are never equal
(``e^x`` is irrational for rational ``x != 0``), so a narrow guard band
plus a recomputation at higher precision settles every case.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from enum import Enum
from itertools import combinations

from .graph import Graph, InputError, bits, to_mask
from .slater import slater_of

NW_MAX_N = 16


@dataclass(frozen=True)
class GreedyTrace:
    order: tuple[int, ...]
    coverage: tuple[int, ...]

    def prefix(self, length: int) -> int:
        return to_mask(self.order[:length])


def greedy_order(g: Graph) -> GreedyTrace:
    """Greedy order maximizing the newly covered count; ties go to the smaller index."""
    if g.n == 0:
        raise InputError("greedy order of the null graph")
    closed = g.closed_neighborhoods()
    covered = 0
    left = list(range(g.n))
    order, coverage = [], [0]
    for _ in range(g.n):
        best, best_gain = -1, -1
        for v in left:
            gain = (closed[v] & ~covered).bit_count()
            if gain > best_gain:
                best, best_gain = v, gain
        left.remove(best)
        order.append(best)
        covered |= closed[best]
        coverage.append(coverage[-1] + best_gain)
    return GreedyTrace(tuple(order), tuple(coverage))


def _exp_compare(exponent: tuple[int, int], lhs_factor: int, rhs: int) -> int:
    """Sign of ``lhs_factor * e^(a/b) - rhs`` for integers, exactly."""
    a, b = exponent
    if a == 0 or lhs_factor == 0:
        return (lhs_factor > rhs) - (lhs_factor < rhs)
    for digits in (50, 200, 1000):
        with localcontext() as ctx:
            ctx.prec = digits
            diff = Decimal(lhs_factor) * (Decimal(a) / Decimal(b)).exp() - Decimal(rhs)
            scale = max(abs(Decimal(rhs)), Decimal(1))
            if abs(diff) > scale * Decimal(10) ** (10 - digits):
                return 1 if diff > 0 else -1
    raise ArithmeticError("comparison against a power of e did not resolve")


def ceil_log_ratio(n: int, s: int) -> int:
    """``ceil(ln(n / s))`` for positive integers with ``n >= s``."""
    if s <= 0 or n < s:
        raise InputError("need 0 < s <= n")
    p = 0
    while _exp_compare((p, 1), s, n) < 0:
        p += 1
    return p


class Outcome(str, Enum):
    LOWER = "LOWER"
    UPPER = "UPPER"


@dataclass(frozen=True)
class DecisionOutcome:
    kind: Outcome
    s: int
    p: int
    ell: int
    f_at_ell: int
    witness: int | None = field(default=None)

    @property
    def upper_bound(self) -> int:
        return (self.p + 1) * self.s

    def as_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "s": self.s,
            "p": self.p,
            "ell": self.ell,
            "f_at_ell": self.f_at_ell,
            "upper_bound": self.upper_bound,
            "witness": None if self.witness is None else list(bits(self.witness)),
        }


def decide_slater_gap(g: Graph) -> DecisionOutcome:
    """Certify ``gamma > sl`` (LOWER) or ``gamma <= (p+1) sl`` with a witness (UPPER)."""
    if g.n == 0:
        raise InputError("decision on the null graph")
    n = g.n
    s = slater_of(g)
    p = ceil_log_ratio(n, s)
    ell = p * s
    if p == 0 or n < ell:
        return DecisionOutcome(Outcome.UPPER, s, p, ell, 0 if p == 0 else n, g.vertices)
    trace = greedy_order(g)
    f_ell = trace.coverage[ell]
    # f(D_l) < (1 - e^{-p}) n  <=>  e^p (n - f(D_l)) > n
    if _exp_compare((p, 1), n - f_ell, n) > 0:
        return DecisionOutcome(Outcome.LOWER, s, p, ell, f_ell)
    chosen = trace.prefix(ell)
    covered = 0
    for u in bits(chosen):
        covered |= g.adj[u] | (1 << u)
    witness = chosen | (g.vertices & ~covered)
    return DecisionOutcome(Outcome.UPPER, s, p, ell, f_ell, witness)


def coverage(g: Graph, d: int) -> int:
    covered = 0
    for u in bits(d):
        covered |= g.adj[u] | (1 << u)
    return covered.bit_count()


def best_k_coverage(g: Graph, k: int) -> int:
    closed = g.closed_neighborhoods()
    best = 0
    for combo in combinations(closed, k):
        covered = 0
        for c in combo:
            covered |= c
        best = max(best, covered.bit_count())
        if best == g.n:
            break
    return best


def check_nw_inequality(g: Graph, k: int, ell: int, *, best: int | None = None,
                        trace: GreedyTrace | None = None) -> bool:
    """Whether ``f(D_l) >= (1 - e^{-l/k}) max{f(X) : |X| = k}`` holds on ``g``."""
    if g.n > NW_MAX_N:
        raise InputError(f"brute-force maximum is capped at n={NW_MAX_N}")
    if not (1 <= k <= g.n and 1 <= ell <= g.n):
        raise InputError("need 1 <= k, l <= n")
    if best is None:
        best = best_k_coverage(g, k)
    if trace is None:
        trace = greedy_order(g)
    f_ell = trace.coverage[ell]
    # f >= M (1 - e^{-l/k})  <=>  e^{l/k} (M - f) <= M
    return _exp_compare((ell, k), best - f_ell, best) <= 0
