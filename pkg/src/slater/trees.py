"""Degree-sequence bounds on trees, plus a fast exhaustive Prüfer sweep.

Bounds with halves and thirds are compared by cross-multiplying integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .graph import Graph, InputError, degree_sequence
from .slater import slater_number, total_slater_number

_INF = 1 << 20


def _require_tree(t: Graph, min_order: int) -> None:
    if t.n < min_order or not t.is_tree():
        raise InputError(f"expected a tree on at least {min_order} vertices")


@dataclass(frozen=True)
class Theorem4Check:
    n: int
    n1: int
    total_slater: int
    next_degree: int
    holds: bool
    equality: bool
    predicted_equality: bool

    @property
    def exhausted(self) -> bool:
        """``sl_t = n``, so ``d_{sl_t + 1}`` does not exist and was taken as 0."""
        return self.total_slater == self.n


def theorem4_from_degrees(d: Sequence[int]) -> Theorem4Check:
    """Total-Slater tree bound quantities from a non-increasing tree degree sequence."""
    n = len(d)
    n1 = sum(1 for x in d if x == 1)
    # degree bookkeeping: n1 + sum over non-leaves = 2n - 2,
    # and n1 = 2 + sum over non-leaves of (d - 2)
    assert n1 + sum(x for x in d if x != 1) == 2 * n - 2
    assert n1 == 2 + sum(x - 2 for x in d if x != 1)
    s = total_slater_number(d)
    assert s is not None
    nxt = d[s] if s < n else 0
    twice = n + 2 - n1
    return Theorem4Check(
        n=n,
        n1=n1,
        total_slater=s,
        next_degree=nxt,
        holds=2 * s >= twice,
        equality=2 * s == twice,
        predicted_equality=(n - n1) % 2 == 0 and nxt <= 2,
    )


def check_theorem4(t: Graph) -> Theorem4Check:
    """``sl_t(T) >= (n + 2 - n_1) / 2`` and the parity / ``d_{sl_t+1} <= 2`` equality test."""
    _require_tree(t, 2)
    return theorem4_from_degrees(degree_sequence(t))


def check_slater_tree_lower(t: Graph) -> bool:
    """``sl(T) >= (n + 2 - n_1) / 3`` for trees on at least 3 vertices."""
    _require_tree(t, 3)
    d = degree_sequence(t)
    n1 = d.count(1)
    return 3 * slater_number(d) >= t.n + 2 - n1


def check_dhh_tree_upper(t: Graph, gamma: int | None = None) -> bool:
    """``gamma(T) <= 3 sl(T) - 2``."""
    _require_tree(t, 1)
    if gamma is None:
        gamma = tree_domination_number(t)
    return gamma <= 3 * slater_number(degree_sequence(t)) - 2


def tree_domination_number(t: Graph) -> int:
    """Domination number of a tree by the three-state leaf-to-root DP."""
    _require_tree(t, 1)
    if t.n == 1:
        return 1
    parent = [-1] * t.n
    order = [0]
    seen = 1
    for v in order:
        for u in range(t.n):
            if t.adj[v] >> u & 1 and not seen >> u & 1:
                seen |= 1 << u
                parent[u] = v
                order.append(u)
    return _dp_over_elimination([(v, parent[v]) for v in reversed(order[1:])], 0, t.n)


def _dp_over_elimination(steps: Sequence[tuple[int, int]], root: int, n: int) -> int:
    """Domination DP given leaves removed in order as ``(vertex, parent)`` pairs.

    Per vertex: ``take`` = in the set; ``below`` = out, dominated by a child;
    ``above`` = out, must be dominated by its parent.
    """
    take = [1] * n
    sum_ab = [0] * n
    penalty = [_INF] * n
    sum_b = [0] * n
    for v, p in steps:
        a = take[v]
        b = sum_ab[v] + penalty[v]
        c = sum_b[v]
        take[p] += min(a, b, c)
        ab = a if a < b else b
        sum_ab[p] += ab
        if a - ab < penalty[p]:
            penalty[p] = a - ab
        sum_b[p] += b
    a = take[root]
    b = sum_ab[root] + penalty[root]
    return a if a < b else b


def prufer_profile(seq: Sequence[int], n: int) -> tuple[list[int], int]:
    """Degrees and domination number of the tree with Prüfer sequence ``seq``.

    Linear-time decoding; the leaf elimination order doubles as the DP order.
    """
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    degrees = degree[:]
    take = [1] * n
    sum_ab = [0] * n
    penalty = [_INF] * n
    sum_b = [0] * n
    ptr = 0
    while degree[ptr] != 1:
        ptr += 1
    leaf = ptr
    for x in seq:
        a = take[leaf]
        b = sum_ab[leaf] + penalty[leaf]
        take[x] += min(a, b, sum_b[leaf])
        ab = a if a < b else b
        sum_ab[x] += ab
        if a - ab < penalty[x]:
            penalty[x] = a - ab
        sum_b[x] += b
        degree[x] -= 1
        if degree[x] == 1 and x < ptr:
            leaf = x
        else:
            ptr += 1
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
    root = n - 1
    a = take[leaf]
    b = sum_ab[leaf] + penalty[leaf]
    take[root] += min(a, b, sum_b[leaf])
    ab = a if a < b else b
    sum_ab[root] += ab
    if a - ab < penalty[root]:
        penalty[root] = a - ab
    a = take[root]
    b = sum_ab[root] + penalty[root]
    return degrees, (a if a < b else b)


def prufer_sequences(n: int) -> Iterator[tuple[int, ...]]:
    if not 2 <= n <= 9:
        raise InputError("exhaustive Prüfer sweeps need 2 <= n <= 9")
    return product(range(n), repeat=n - 2)
