"""Exact domination, total domination and paired domination numbers.

The solver is an iterative-deepening branch and bound over the set-cover
view of domination: every vertex ``v`` must be covered by some chosen
``w`` whose neighborhood (closed for plain domination, open for total
domination) contains ``v``.  Paired domination chooses vertex-disjoint
edges instead of vertices.

Pruning uses two residual lower bounds, whichever is larger:

* the Slater bound of the residual instance (fewest candidates whose
  residual coverage counts, largest first, sum to the number of still
  undominated vertices);
* a greedy packing of undominated vertices with pairwise disjoint
  candidate sets.

``brute_force_domination`` enumerates subsets by increasing size and is
the independent oracle for the solver.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .graph import Graph, InputError, bits, to_mask

BRUTE_FORCE_MAX_N = 24


class Variant(str, Enum):
    PLAIN = "plain"
    TOTAL = "total"
    PAIRED = "paired"
    CONNECTED_TREE = "connected-tree"


@dataclass(frozen=True)
class DominationResult:
    value: int
    witness: int
    variant: Variant

    @property
    def witness_list(self) -> list[int]:
        return list(bits(self.witness))

    def as_dict(self) -> dict:
        return {"variant": self.variant.value, "value": self.value, "witness": self.witness_list}


def perfect_matching(g: Graph, mask: int) -> list[tuple[int, int]] | None:
    """A perfect matching of the subgraph induced by ``mask``, or ``None``.

    Exhaustive search memoized on the bitset of unmatched vertices.
    """
    if mask.bit_count() % 2:
        return None
    adj = g.adj
    memo: dict[int, list[tuple[int, int]] | None] = {}

    def solve(rest: int) -> list[tuple[int, int]] | None:
        if not rest:
            return []
        if rest in memo:
            return memo[rest]
        low = rest & -rest
        v = low.bit_length() - 1
        rest ^= low
        found = None
        for u in bits(adj[v] & rest):
            sub = solve(rest ^ (1 << u))
            if sub is not None:
                found = [(v, u)] + sub
                break
        memo[rest | low] = found
        return found

    return solve(mask)


def verify_dominating(g: Graph, d: int, variant: Variant | str = Variant.PLAIN) -> bool:
    variant = Variant(variant)
    if g.n == 0:
        raise InputError("domination on the null graph")
    if d & ~g.vertices:
        raise InputError("candidate set contains vertices outside the graph")
    covered = 0
    if variant is Variant.TOTAL or variant is Variant.PAIRED:
        for u in bits(d):
            covered |= g.adj[u]
        if variant is Variant.TOTAL:
            return covered == g.vertices
        return covered == g.vertices and perfect_matching(g, d) is not None
    if variant is Variant.PLAIN:
        for u in bits(d):
            covered |= g.adj[u] | (1 << u)
        return covered == g.vertices
    if variant is Variant.CONNECTED_TREE:
        for u in bits(d):
            covered |= g.adj[u] | (1 << u)
        if covered != g.vertices or not d:
            return False
        seen = frontier = d & -d
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & d & ~seen
            seen |= frontier
        return seen == d
    raise InputError(f"unknown variant {variant}")


def _residual_lower_bound(need: int, gains: list[int]) -> int:
    """Fewest gains, taken largest first, summing to ``need``; huge if impossible."""
    if need <= 0:
        return 0
    gains.sort(reverse=True)
    total = 0
    for j, gain in enumerate(gains, 1):
        if gain == 0:
            break
        total += gain
        if total >= need:
            return j
    return 1 << 30


class _CoverSearch:
    """Choose at most ``k`` items so their covers contain every universe element.

    ``holders[v]`` is the bitset of items whose cover contains ``v``.  Items
    chosen together must be pairwise compatible: choosing item ``i`` removes
    ``clash[i]`` from the allowed items (used for disjoint edges).
    """

    def __init__(self, cover: list[int], holders: list[int], clash: list[int] | None = None):
        self.cover = cover
        self.holders = holders
        self.clash = clash
        self.items = list(range(len(cover)))

    def lower_bound(self, undominated: int, allowed: int) -> int:
        cover = self.cover
        gains = [(cover[i] & undominated).bit_count() for i in self.items if allowed >> i & 1]
        bound = _residual_lower_bound(undominated.bit_count(), gains)
        if bound > len(gains):
            return 1 << 30
        used = packed = 0
        holders = self.holders
        for v in bits(undominated):
            h = holders[v] & allowed
            if not h:
                return 1 << 30
            if not h & used:
                used |= h
                packed += 1
        return max(bound, packed)

    def search(self, undominated: int, allowed: int, budget: int) -> list[int] | None:
        if not undominated:
            return []
        if budget <= 0 or self.lower_bound(undominated, allowed) > budget:
            return None
        holders = self.holders
        best_v, best_count = -1, 1 << 30
        for v in bits(undominated):
            c = (holders[v] & allowed).bit_count()
            if c < best_count:
                best_v, best_count = v, c
                if c == 1:
                    break
        cover = self.cover
        options = sorted(
            bits(holders[best_v] & allowed),
            key=lambda i: (-(cover[i] & undominated).bit_count(), i),
        )
        remaining = allowed
        for i in options:
            remaining &= ~(1 << i)
            nxt = remaining
            if self.clash is not None:
                nxt &= ~self.clash[i]
            sub = self.search(undominated & ~cover[i], nxt, budget - 1)
            if sub is not None:
                return [i] + sub
        return None

    def minimum(self, universe: int, allowed: int) -> list[int] | None:
        start = self.lower_bound(universe, allowed)
        if start >= 1 << 30:
            return None
        k = start
        while k <= len(self.cover):
            found = self.search(universe, allowed, k)
            if found is not None:
                return found
            k += 1
        return None


def _check_order(g: Graph) -> None:
    if g.n == 0:
        raise InputError("domination on the null graph")


def domination_number(g: Graph, variant: Variant | str = Variant.PLAIN) -> DominationResult | None:
    """Exact minimum for ``variant`` with a witness set.

    Returns ``None`` when no such set exists (total or paired domination
    with an isolated vertex).
    """
    variant = Variant(variant)
    _check_order(g)
    full = g.vertices
    if variant is Variant.CONNECTED_TREE:
        value = tree_connected_domination(g)
        return DominationResult(value, _tree_connected_witness(g), variant)
    if variant in (Variant.TOTAL, Variant.PAIRED) and g.isolated():
        return None
    if variant is Variant.PLAIN:
        closed = g.closed_neighborhoods()
        chosen = _CoverSearch(closed, closed).minimum(full, full)
        assert chosen is not None
        witness = to_mask(chosen)
    elif variant is Variant.TOTAL:
        chosen = _CoverSearch(list(g.adj), list(g.adj)).minimum(full, full)
        assert chosen is not None
        witness = to_mask(chosen)
    else:
        edges = g.edges()
        closed = g.closed_neighborhoods()
        cover = [closed[a] | closed[b] for a, b in edges]
        incident = [0] * g.n
        for i, (a, b) in enumerate(edges):
            incident[a] |= 1 << i
            incident[b] |= 1 << i
        holders = [0] * g.n
        for i, c in enumerate(cover):
            for v in bits(c):
                holders[v] |= 1 << i
        clash = [incident[a] | incident[b] for a, b in edges]
        chosen = _CoverSearch(cover, holders, clash).minimum(full, (1 << len(edges)) - 1)
        assert chosen is not None
        witness = to_mask(v for i in chosen for v in edges[i])
    return DominationResult(witness.bit_count(), witness, variant)


def brute_force_domination(g: Graph, variant: Variant | str = Variant.PLAIN) -> DominationResult | None:
    """Minimum by enumerating vertex subsets in increasing size (n <= 24)."""
    variant = Variant(variant)
    _check_order(g)
    if g.n > BRUTE_FORCE_MAX_N:
        raise InputError(f"brute force is capped at n={BRUTE_FORCE_MAX_N}")
    if variant is not Variant.PLAIN and variant is not Variant.CONNECTED_TREE and g.isolated():
        return None
    if variant is Variant.CONNECTED_TREE and not g.is_tree():
        raise InputError("connected-tree variant needs a tree")
    step = 2 if variant is Variant.PAIRED else 1
    for k in range(step, g.n + 1, step):
        for combo in combinations(range(g.n), k):
            d = to_mask(combo)
            if verify_dominating(g, d, variant):
                return DominationResult(k, d, variant)
    return None


def _require_tree(g: Graph) -> None:
    if g.n < 1 or not g.is_tree():
        raise InputError("expected a non-null tree")


def _tree_connected_witness(g: Graph) -> int:
    internal = to_mask(v for v in range(g.n) if g.degree(v) >= 2)
    return internal or 1


def tree_connected_domination(g: Graph) -> int:
    """Connected domination number of a tree: its number of internal vertices.

    Removing all leaves of a tree leaves a subtree that dominates it, and
    every internal vertex is a cut vertex that any connected dominating
    set must contain.  ``K1`` and ``K2`` have no internal vertex and need one.
    """
    _require_tree(g)
    return _tree_connected_witness(g).bit_count()
