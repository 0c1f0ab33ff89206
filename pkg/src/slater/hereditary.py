"""Graphs whose every induced subgraph has domination number equal to its
Slater number: exactly the {K2 + 2K1, C4 + K1}-free graphs."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .domination import domination_number
from .graph import Graph, InputError, induced_subgraph, to_mask
from .slater import slater_of

HEREDITARY_MAX_N = 12


def _induced_edges(g: Graph, combo: tuple[int, ...]) -> int:
    mask = to_mask(combo)
    return sum((g.adj[v] & mask).bit_count() for v in combo) // 2


def _is_k2_plus_two_k1(g: Graph, combo: tuple[int, ...]) -> bool:
    return _induced_edges(g, combo) == 1


def _is_c4_plus_k1(g: Graph, combo: tuple[int, ...]) -> bool:
    mask = to_mask(combo)
    degs = sorted((g.adj[v] & mask).bit_count() for v in combo)
    # 4 vertices of degree 2 on 4 vertices form a 4-cycle
    return degs == [0, 2, 2, 2, 2]


def is_forbidden_free(g: Graph) -> tuple[bool, int | None]:
    """Scan 4-sets for induced ``K2 + 2K1``, then 5-sets for ``C4 + K1``.

    The witness is the lexicographically first violating set of the first
    pattern found.
    """
    for combo in combinations(range(g.n), 4):
        if _is_k2_plus_two_k1(g, combo):
            return False, to_mask(combo)
    for combo in combinations(range(g.n), 5):
        if _is_c4_plus_k1(g, combo):
            return False, to_mask(combo)
    return True, None


@lru_cache(maxsize=1 << 17)
def _equality_on(n: int, adj: tuple[int, ...]) -> bool:
    g = Graph(n, adj)
    result = domination_number(g)
    assert result is not None
    return result.value == slater_of(g)


def hereditary_equality_bruteforce(g: Graph) -> bool:
    """``gamma(H) = sl(H)`` for every non-null induced subgraph ``H`` (n <= 12)."""
    if g.n > HEREDITARY_MAX_N:
        raise InputError(f"hereditary brute force is capped at n={HEREDITARY_MAX_N}")
    for mask in range(1, 1 << g.n):
        h = induced_subgraph(g, mask)
        if not _equality_on(h.n, h.adj):
            return False
    return True
