"""Graph families and seeded random corpora.

Every random generator is a pure function of its parameters and seed
(see ``slater.rng`` for the generator and its constants).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Iterator, Sequence

from .domination import domination_number
from .graph import Graph, InputError, complete, complete_bipartite, disjoint_union, to_mask
from .rng import Rng
from .slater import slater_of
from .sparse import OuterplanarEmbedding, RationalPair, certify_outerplanar, is_member

MAX_CLAUSES_PER_VARIABLE = 5
SELF_CHECK_MAX_N = 64

Literal = tuple[int, bool]  # (variable index, negated)


@dataclass(frozen=True)
class CnfFormula:
    num_vars: int
    clauses: tuple[tuple[Literal, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "clauses", tuple(tuple((int(v), bool(neg)) for v, neg in c) for c in self.clauses))
        if self.num_vars < 1:
            raise InputError("need at least one variable")
        if not self.clauses:
            raise InputError("need at least one clause")
        uses = [0] * self.num_vars
        for clause in self.clauses:
            if len(clause) != 3:
                raise InputError(f"clause {clause} does not have exactly 3 literals")
            for var, _ in clause:
                if not 0 <= var < self.num_vars:
                    raise InputError(f"variable {var} out of range")
            for var in {var for var, _ in clause}:
                uses[var] += 1
        for var, count in enumerate(uses):
            if count > MAX_CLAUSES_PER_VARIABLE:
                raise InputError(f"variable {var + 1} appears in {count} > 5 clauses")

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def satisfied_by(self, assignment: Sequence[bool]) -> bool:
        return all(any(assignment[v] != neg for v, neg in c) for c in self.clauses)

    def is_satisfiable(self) -> bool:
        """Exhaustive check over all ``2^p`` assignments (``p <= 20``)."""
        if self.num_vars > 20:
            raise InputError("assignment enumeration is capped at 20 variables")
        return any(self.satisfied_by(a) for a in product((False, True), repeat=self.num_vars))

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.num_vars} {self.num_clauses}"]
        for clause in self.clauses:
            lines.append(" ".join(str(-(v + 1) if neg else v + 1) for v, neg in clause) + " 0")
        return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> CnfFormula:
    header = None
    literals: list[int] = []
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("c") or stripped.startswith("%"):
            continue
        if stripped.startswith("p"):
            parts = stripped.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise InputError(f"bad DIMACS header: {stripped!r}")
            header = (int(parts[2]), int(parts[3]))
            continue
        if header is None:
            raise InputError("clause before 'p cnf' header")
        try:
            literals.extend(int(t) for t in stripped.split())
        except ValueError:
            raise InputError(f"bad DIMACS clause line: {stripped!r}") from None
    if header is None:
        raise InputError("missing 'p cnf' header")
    clauses, current = [], []
    for lit in literals:
        if lit == 0:
            clauses.append(tuple(current))
            current = []
        else:
            if abs(lit) > header[0]:
                raise InputError(f"literal {lit} exceeds declared variable count")
            current.append((abs(lit) - 1, lit < 0))
    if current:
        raise InputError("last clause is not terminated by 0")
    if len(clauses) != header[1]:
        raise InputError(f"header declares {header[1]} clauses, found {len(clauses)}")
    return CnfFormula(header[0], tuple(clauses))


@dataclass(frozen=True)
class Gadget:
    graph: Graph
    formula: CnfFormula
    cliques: tuple[int, ...]
    positive: tuple[int, ...]
    negative: tuple[int, ...]
    clause_vertices: tuple[int, ...]

    @property
    def p(self) -> int:
        return self.formula.num_vars

    @property
    def q(self) -> int:
        return self.formula.num_clauses

    def literal_vertex(self, var: int, negated: bool) -> int:
        return self.negative[var] if negated else self.positive[var]

    def metadata(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "n": self.graph.n,
            "x": list(self.positive),
            "xbar": list(self.negative),
            "clauses": list(self.clause_vertices),
        }


def gadget_from_cnf(f: CnfFormula) -> Gadget:
    """Graph with ``gamma = sl = p`` exactly when ``f`` is satisfiable.

    Variable ``i`` gets a clique on ``5p`` vertices ``[5p i, 5p (i+1))`` whose
    first two vertices stand for ``x_i`` and its negation; clause ``j`` is
    vertex ``5p^2 + j``, joined to its literal vertices.
    """
    p, q = f.num_vars, f.num_clauses
    size = 5 * p
    edges = []
    cliques = []
    for i in range(p):
        block = range(i * size, (i + 1) * size)
        edges.extend(combinations(block, 2))
        cliques.append(to_mask(block))
    positive = tuple(i * size for i in range(p))
    negative = tuple(i * size + 1 for i in range(p))
    clause_vertices = tuple(p * size + j for j in range(q))
    links = set()
    for j, clause in enumerate(f.clauses):
        for var, neg in clause:
            links.add((negative[var] if neg else positive[var], clause_vertices[j]))
    edges.extend(sorted(links))
    g = Graph.from_edges(p * size + q, edges)

    n = 5 * p * p + q
    assert g.n == n
    d = sorted(g.degrees(), reverse=True)
    assert d[0] <= 5 * p - 1 + 5
    # top p closed degrees average over the 2p literal vertices
    assert 2 * sum(x + 1 for x in d[:p]) >= 2 * 5 * p * p + len(links)
    assert sum(x + 1 for x in d[: p - 1]) <= (p - 1) * (5 * p + 5) < n
    if slater_of(g) != p:
        raise InputError(
            "clauses with repeated variables leave too few clause edges for sl(G) = p"
        )
    return Gadget(g, f, tuple(cliques), positive, negative, clause_vertices)


def _self_check(g: Graph, slater: int, gamma: int | None) -> None:
    assert slater_of(g) == slater, "Slater number differs from its closed form"
    if gamma is not None and g.n <= SELF_CHECK_MAX_N:
        result = domination_number(g)
        assert result is not None and result.value == gamma, "domination number differs from its closed form"


def family_clique_plus_isolated(half: int, check: bool = True) -> Graph:
    """``K_half`` plus ``half`` isolated vertices: ``sl = 2``, ``gamma = half + 1``."""
    if half < 2:
        raise InputError("need half >= 2")
    g = disjoint_union(complete(half), Graph.empty(half))
    if check:
        _self_check(g, 2, half + 1)
    return g


def family_gstar(half: int, check: bool = True) -> Graph:
    """``K_{2, half-1}`` plus ``half - 1`` isolated vertices, a member of ``G(2, 2)``."""
    if half < 3:
        raise InputError("need half >= 3")
    g = disjoint_union(complete_bipartite(2, half - 1), Graph.empty(half - 1))
    if check:
        _self_check(g, 2, half + 1)
        assert is_member(g, RationalPair(Fraction(2), Fraction(2))).member
    return g


def family_outerplanar_extremal(s: int, check: bool = True) -> tuple[Graph, OuterplanarEmbedding]:
    """Fan triangulation on ``u_1..u_s``, a vertex ``v_i`` on every outer edge
    ``u_i u_{i+1}``, and ``5s - 6`` isolated vertices.

    Vertices: ``u_i = i - 1``, ``v_i = s + i - 1``, isolated ``2s .. 7s - 7``.
    The embedding covers the ``2s`` non-isolated vertices.
    """
    if s < 4 or s % 2:
        raise InputError("need an even s >= 4")
    u = list(range(s))
    v = list(range(s, 2 * s))
    fan = [(u[0], u[i]) for i in range(2, s - 1)]
    rim = [(u[i], u[(i + 1) % s]) for i in range(s)]
    ears = [(u[i], v[i]) for i in range(s)] + [(v[i], u[(i + 1) % s]) for i in range(s)]
    n = 7 * s - 6
    g = Graph.from_edges(n, fan + rim + ears)
    boundary = [x for i in range(s) for x in (u[i], v[i])]
    emb = OuterplanarEmbedding(boundary, fan + rim)
    if check:
        assert g.n == 7 * s - 6
        assert certify_outerplanar(g, emb)
        _self_check(g, s, None)
    return g, emb


def prufer_to_edges(seq: Sequence[int], n: int) -> list[tuple[int, int]]:
    """Decode a Prüfer sequence of length ``n - 2`` over ``0..n-1``."""
    if n == 1:
        return []
    if len(seq) != n - 2 or any(not 0 <= x < n for x in seq):
        raise InputError("invalid Prüfer sequence")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    a, b = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((a, b))
    return edges


def random_tree(n: int, seed: int = 0) -> Graph:
    """Uniform labeled tree via a uniform Prüfer sequence."""
    if n < 1:
        raise InputError("need n >= 1")
    rng = Rng(seed)
    seq = [rng.below(n) for _ in range(max(0, n - 2))]
    return Graph.from_edges(n, prufer_to_edges(seq, n))


def enumerate_labeled_trees(n: int) -> Iterator[Graph]:
    """All ``n^(n-2)`` labeled trees on ``2 <= n <= 9`` vertices."""
    if not 2 <= n <= 9:
        raise InputError("labeled tree enumeration needs 2 <= n <= 9")
    for seq in product(range(n), repeat=n - 2):
        yield Graph.from_edges(n, prufer_to_edges(seq, n))


def random_cactus(n: int, seed: int = 0, cycle_chance: tuple[int, int] = (1, 2),
                  check: bool = True) -> Graph:
    """Grow a cactus by attaching pendant edges or pendant cycles (length 3-6)."""
    if n < 1:
        raise InputError("need n >= 1")
    rng = Rng(seed)
    edges = []
    count = 1
    while count < n:
        anchor = rng.below(count)
        room = n - count
        if room >= 2 and rng.chance(*cycle_chance):
            length = rng.randint(3, min(6, room + 1))
            ring = [anchor] + list(range(count, count + length - 1))
            edges += [(ring[i], ring[(i + 1) % length]) for i in range(length)]
            count += length - 1
        else:
            edges.append((anchor, count))
            count += 1
    g = Graph.from_edges(n, edges)
    if check:
        assert is_member(g, RationalPair(Fraction(3, 2), Fraction(3, 2))).member
    return g


def random_maximal_outerplanar(n: int, seed: int = 0) -> tuple[Graph, OuterplanarEmbedding]:
    """Random ``n``-gon triangulation built by repeated ear insertion, randomly relabeled."""
    if n < 3:
        raise InputError("need n >= 3")
    rng = Rng(seed)
    boundary = [0, 1, 2]
    edges = [(0, 1), (1, 2), (0, 2)]
    for k in range(3, n):
        i = rng.below(len(boundary))
        a, b = boundary[i], boundary[(i + 1) % len(boundary)]
        boundary.insert(i + 1, k)
        edges += [(a, k), (k, b)]
    label = list(range(n))
    rng.shuffle(label)
    edges = [(label[a], label[b]) for a, b in edges]
    boundary = [label[v] for v in boundary]
    emb = OuterplanarEmbedding(boundary, [])
    cycle = emb.boundary_edges()
    chords = [e for e in edges if (min(e), max(e)) not in cycle]
    return Graph.from_edges(n, edges), OuterplanarEmbedding(boundary, chords)


def random_outerplanar(n: int, seed: int = 0, extra_isolated: int = 0,
                       min_slater: int = 1) -> tuple[Graph, OuterplanarEmbedding]:
    """Random maximal outerplanar graph with a random subset of its chords kept,
    plus isolated vertices (at least ``extra_isolated``, more if needed for
    ``sl >= min_slater``)."""
    rng = Rng(seed)
    base, emb = random_maximal_outerplanar(n, rng.next64())
    chords = [c for c in sorted(emb.chords) if rng.chance(1, 2)]
    emb = OuterplanarEmbedding(emb.boundary, chords)
    edges = sorted(emb.boundary_edges() | emb.chords)
    isolated = extra_isolated
    while True:
        g = Graph.from_edges(n + isolated, edges)
        if slater_of(g) >= min_slater:
            return g, emb
        isolated += 1


def enumerate_labeled_graphs(n: int) -> Iterator[Graph]:
    """All ``2^(n(n-1)/2)`` labeled graphs on ``1 <= n <= 6`` vertices."""
    if not 1 <= n <= 6:
        raise InputError("labeled graph enumeration needs 1 <= n <= 6")
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        for i, (u, v) in enumerate(pairs):
            if mask >> i & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        yield Graph(n, tuple(adj))


def random_graph(n: int, seed: int = 0, density: Fraction | None = None) -> Graph:
    """``G(n, p)`` with ``p`` drawn uniformly from ``(0, 1)`` in steps of 1/64 unless given."""
    rng = Rng(seed)
    if density is None:
        density = Fraction(rng.randint(1, 63), 64)
    num, den = density.numerator, density.denominator
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.chance(num, den)]
    return Graph.from_edges(n, edges)
