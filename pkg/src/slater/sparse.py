"""Sparse graph classes G(alpha, beta) and outerplanar bounds.

``G(alpha, beta)`` holds the non-null graphs in which every non-null
subgraph ``H`` has at most ``alpha n(H) - beta`` edges.  Only induced
subgraphs matter (adding edges never helps ``H``), so membership is
``max_H (m(H) - alpha n(H)) <= -beta`` over non-empty vertex sets ``H``.

All arithmetic on ``alpha`` and ``beta`` is exact (``fractions.Fraction``).
Outerplanarity is never recognized here; it is certified by an explicit
embedding whose boundary is a Hamiltonian outer face.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from .domination import domination_number
from .flow import FlowNetwork
from .graph import Graph, InputError, bits, to_mask
from .slater import slater_of

BRUTE_FORCE_MAX_N = 20
AUTO_BRUTE_FORCE_N = 14

_RATIONAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Parse ``"p/q"`` or an integer; decimals are rejected."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    match = _RATIONAL.match(text)
    if not match:
        raise InputError(f"not an exact rational 'p/q': {text!r}")
    den = int(match.group(2) or 1)
    if den == 0:
        raise InputError("zero denominator")
    return Fraction(int(match.group(1)), den)


@dataclass(frozen=True)
class RationalPair:
    alpha: Fraction
    beta: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", parse_rational(self.alpha))
        object.__setattr__(self, "beta", parse_rational(self.beta))
        if self.alpha < 0:
            raise InputError("alpha must be non-negative")
        if self.beta > self.alpha:
            raise InputError("G(alpha, beta) is empty for beta > alpha")

    def __str__(self) -> str:
        return f"({self.alpha}, {self.beta})"


@dataclass(frozen=True)
class MembershipVerdict:
    member: bool
    max_excess: Fraction
    violating_subgraph: int | None

    def as_dict(self) -> dict:
        return {
            "member": self.member,
            "max_excess": str(self.max_excess),
            "violating_subgraph": None if self.violating_subgraph is None else list(bits(self.violating_subgraph)),
        }


def _edge_counts(g: Graph) -> list[int]:
    """``counts[mask]`` = number of edges induced by ``mask``, for every mask."""
    counts = [0] * (1 << g.n)
    adj = g.adj
    for mask in range(1, 1 << g.n):
        low = mask & -mask
        rest = mask ^ low
        counts[mask] = counts[rest] + (adj[low.bit_length() - 1] & rest).bit_count()
    return counts


def max_edge_excess_bruteforce(g: Graph, alpha: Fraction | str) -> tuple[Fraction, int]:
    alpha = parse_rational(alpha)
    if g.n == 0:
        raise InputError("excess of the null graph")
    if g.n > BRUTE_FORCE_MAX_N:
        raise InputError(f"brute force is capped at n={BRUTE_FORCE_MAX_N}")
    a, b = alpha.numerator, alpha.denominator
    counts = _edge_counts(g)
    best_val, best_mask = None, 0
    for mask in range(1, 1 << g.n):
        val = b * counts[mask] - a * mask.bit_count()
        if best_val is None or val > best_val:
            best_val, best_mask = val, mask
    return Fraction(best_val, b), best_mask


def _closure(g: Graph, a: int, b: int, forced: int | None) -> tuple[int, int]:
    """Best ``b m(H) - a n(H)`` over vertex sets (containing ``forced`` if given)."""
    edges = g.edges()
    source, sink = 0, 1
    base = 2 + len(edges)
    net = FlowNetwork(base + g.n)
    inf = b * len(edges) + a * g.n + 1
    for i, (u, v) in enumerate(edges):
        net.add_edge(source, 2 + i, b)
        net.add_edge(2 + i, base + u, inf)
        net.add_edge(2 + i, base + v, inf)
    for v in range(g.n):
        net.add_edge(base + v, sink, a)
    if forced is not None:
        net.add_edge(source, base + forced, inf)
    cut = net.max_flow(source, sink)
    side = net.source_side(source)
    chosen = to_mask(v for v in range(g.n) if base + v in side)
    return b * len(edges) - cut, chosen


def max_edge_excess_mincut(g: Graph, alpha: Fraction | str) -> tuple[Fraction, int]:
    """Project-selection min cut: edge nodes earn ``b``, vertex nodes cost ``a``."""
    alpha = parse_rational(alpha)
    if g.n == 0:
        raise InputError("excess of the null graph")
    a, b = alpha.numerator, alpha.denominator
    value, chosen = _closure(g, a, b, None)
    if chosen:
        return Fraction(value, b), chosen
    # optimum 0 reached by the empty set only; force each vertex in turn
    best_val, best_mask = None, 0
    for v in range(g.n):
        val, mask = _closure(g, a, b, v)
        if best_val is None or val > best_val:
            best_val, best_mask = val, mask
    return Fraction(best_val, b), best_mask


def max_edge_excess(g: Graph, alpha: Fraction | str, method: str = "auto") -> tuple[Fraction, int]:
    """Exact ``max (m(H) - alpha n(H))`` over non-null ``H`` with an attaining vertex set."""
    alpha = parse_rational(alpha)
    if alpha < 0:
        raise InputError("alpha must be non-negative")
    if method == "auto":
        method = "bruteforce" if g.n <= AUTO_BRUTE_FORCE_N else "mincut"
    if method == "bruteforce":
        return max_edge_excess_bruteforce(g, alpha)
    if method == "mincut":
        return max_edge_excess_mincut(g, alpha)
    raise InputError(f"unknown method {method!r}")


def is_member(g: Graph, params: RationalPair, method: str = "auto") -> MembershipVerdict:
    excess, mask = max_edge_excess(g, params.alpha, method)
    member = excess <= -params.beta
    return MembershipVerdict(member, excess, None if member else mask)


def _gamma(g: Graph, gamma: int | None) -> int:
    if gamma is not None:
        return gamma
    result = domination_number(g)
    assert result is not None
    return result.value


def _require_member(g: Graph, params: RationalPair, verify: bool) -> None:
    if verify and not is_member(g, params).member:
        raise InputError(f"graph is not in G{params}")


def theorem3_bound(s: int, params: RationalPair) -> Fraction:
    return (2 * params.alpha + 1) * s - 2 * params.beta


def check_theorem3(g: Graph, params: RationalPair, *, gamma: int | None = None,
                   verify_membership: bool = True) -> bool:
    """Whether ``gamma <= (2 alpha + 1) sl - 2 beta`` (needs ``alpha <= 3/2``)."""
    if params.alpha > Fraction(3, 2):
        raise InputError("the (2 alpha + 1) sl - 2 beta bound needs alpha <= 3/2")
    _require_member(g, params, verify_membership)
    return _gamma(g, gamma) <= theorem3_bound(slater_of(g), params)


def theorem6_factor(params: RationalPair) -> Fraction:
    beta = abs(params.beta)
    return (5 + 2 * beta) / (2 - params.alpha) + 5 + 3 * beta


def check_theorem6(g: Graph, params: RationalPair, *, gamma: int | None = None,
                   verify_membership: bool = True) -> bool:
    if params.alpha >= 2:
        raise InputError("gamma / sl is unbounded in G(alpha, beta) for alpha >= 2")
    _require_member(g, params, verify_membership)
    return _gamma(g, gamma) <= theorem6_factor(params) * slater_of(g)


@dataclass(frozen=True)
class OuterplanarEmbedding:
    """Boundary cycle order plus chords drawn inside the outer face."""

    boundary: tuple[int, ...]
    chords: frozenset[tuple[int, int]]

    def __init__(self, boundary: Iterable[int], chords: Iterable[tuple[int, int]] = ()):
        object.__setattr__(self, "boundary", tuple(boundary))
        object.__setattr__(self, "chords", frozenset((min(a, b), max(a, b)) for a, b in chords))

    def boundary_edges(self) -> set[tuple[int, int]]:
        b = self.boundary
        k = len(b)
        if k < 2:
            return set()
        pairs = [(b[i], b[i + 1]) for i in range(k - 1)]
        if k >= 3:
            pairs.append((b[-1], b[0]))
        return {(min(u, v), max(u, v)) for u, v in pairs}

    def chords_cross(self) -> bool:
        pos = {v: i for i, v in enumerate(self.boundary)}
        spans = sorted((min(pos[a], pos[b]), max(pos[a], pos[b])) for a, b in self.chords)
        for (a, b), (c, d) in combinations(spans, 2):
            if a < c < b < d or c < a < d < b:
                return True
        return False

    def to_text(self, n: int) -> str:
        lines = [str(n), " ".join(map(str, self.boundary))]
        lines += [f"{a} {b}" for a, b in sorted(self.chords)]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> tuple[int, OuterplanarEmbedding]:
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) < 2:
            raise InputError("embedding needs an order line and a boundary line")
        try:
            n = int(lines[0])
            boundary = [int(t) for t in lines[1].split()]
            chords = []
            for ln in lines[2:]:
                a, b = (int(t) for t in ln.split())
                chords.append((a, b))
        except ValueError:
            raise InputError("malformed embedding file") from None
        return n, cls(boundary, chords)


def validate_embedding(g: Graph, emb: OuterplanarEmbedding) -> bool:
    """Edges of ``g`` are exactly boundary edges plus pairwise non-crossing chords."""
    if sorted(emb.boundary) != list(range(g.n)):
        raise InputError("boundary is not a permutation of the vertices")
    return _embedding_matches(g, emb)


def _embedding_matches(g: Graph, emb: OuterplanarEmbedding) -> bool:
    cycle = emb.boundary_edges()
    for a, b in emb.chords:
        if a == b or a not in emb.boundary or b not in emb.boundary or (a, b) in cycle:
            return False
    if set(g.edges()) != cycle | emb.chords:
        return False
    return not emb.chords_cross()


def certify_outerplanar(g: Graph, emb: OuterplanarEmbedding) -> bool:
    """Certificate for ``g`` = embedded part plus isolated vertices."""
    if len(set(emb.boundary)) != len(emb.boundary) or any(not 0 <= v < g.n for v in emb.boundary):
        raise InputError("boundary repeats a vertex or leaves the graph")
    inside = to_mask(emb.boundary)
    for v in bits(g.vertices & ~inside):
        if g.adj[v]:
            return False
    return _embedding_matches(g, emb)


@dataclass(frozen=True)
class Lemma1Audit:
    m_s: int
    m_2: int
    t_2: int
    bound: int
    holds: bool

    @property
    def lhs(self) -> int:
        return 2 * self.m_s + self.m_2 - self.t_2


def audit_lemma1(g: Graph, emb: OuterplanarEmbedding, s: int) -> Lemma1Audit:
    """Count ``m_s``, ``m_2``, ``t_2`` for ``S = s`` and test ``2m_s + m_2 - t_2 <= 5|S| - 6``."""
    size = s.bit_count()
    if size < 2:
        raise InputError("need |S| >= 2")
    if not certify_outerplanar(g, emb):
        raise InputError("embedding does not certify the graph")
    m_s = sum((g.adj[u] & s).bit_count() for u in bits(s)) // 2
    m_2 = t_2 = 0
    for v in bits(g.vertices & ~s):
        k = (g.adj[v] & s).bit_count()
        if k >= 2:
            t_2 += 1
            m_2 += k
    bound = 5 * size - 6
    return Lemma1Audit(m_s, m_2, t_2, bound, 2 * m_s + m_2 - t_2 <= bound)


def check_theorem7(g: Graph, emb: OuterplanarEmbedding, *, gamma: int | None = None) -> bool:
    """Whether ``gamma <= 6 sl - 6`` for a certified outerplanar graph with ``sl >= 2``."""
    if not certify_outerplanar(g, emb):
        raise InputError("embedding does not certify the graph")
    s = slater_of(g)
    if s < 2:
        raise InputError("the 6 sl - 6 bound needs sl >= 2")
    return _gamma(g, gamma) <= 6 * s - 6

