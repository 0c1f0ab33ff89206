"""Named invariant suites over exhaustive and seeded random corpora.

Each suite returns an ``AuditReport``; ``counterexamples`` lists violated
inequalities (never expected), ``findings`` lists observations that are
reported as data rather than treated as failures.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator

from .domination import Variant, brute_force_domination, domination_number, verify_dominating
from .formats import to_graph6
from .generators import (
    CnfFormula,
    enumerate_labeled_graphs,
    family_clique_plus_isolated,
    family_gstar,
    family_outerplanar_extremal,
    gadget_from_cnf,
    random_cactus,
    random_graph,
    random_maximal_outerplanar,
    random_outerplanar,
)
from .graph import Graph, bits
from .greedy import Outcome, best_k_coverage, check_nw_inequality, decide_slater_gap, greedy_order
from .hereditary import hereditary_equality_bruteforce, is_forbidden_free
from .rng import Rng
from .slater import slater_of
from .sparse import (
    RationalPair,
    audit_lemma1 as lemma1_counts,
    check_theorem3,
    check_theorem7,
    is_member,
    max_edge_excess_bruteforce,
    max_edge_excess_mincut,
)
from .trees import prufer_profile, prufer_sequences, theorem4_from_degrees


class Counterexample(AssertionError):
    """A checked inequality failed; ``witness`` describes the instance."""

    def __init__(self, message: str, witness: dict):
        super().__init__(f"{message}: {witness}")
        self.witness = witness


@dataclass
class AuditReport:
    suite: str
    checked: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    findings: list[dict] = field(default_factory=list)
    details: dict = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def fail(self, **witness) -> None:
        self.counterexamples.append(witness)

    def raise_if_failed(self) -> None:
        if self.counterexamples:
            raise Counterexample(f"{self.suite} violated", self.counterexamples[0])

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "checked": self.checked,
            "ok": self.ok,
            "counterexamples": self.counterexamples,
            "findings": self.findings,
            "details": self.details,
            "seconds": round(self.seconds, 3),
        }


def _seeds(seed: int, count: int) -> Iterator[int]:
    rng = Rng(seed)
    for _ in range(count):
        yield rng.next64()


def all_graphs_up_to(max_n: int) -> Iterator[Graph]:
    for n in range(1, max_n + 1):
        yield from enumerate_labeled_graphs(n)


def random_corpus(seed: int, trials: int, max_n: int, min_n: int = 1) -> Iterator[Graph]:
    for child in _seeds(seed, trials):
        rng = Rng(child)
        yield random_graph(rng.randint(min_n, max_n), rng.next64())


def _gamma(g: Graph) -> int:
    result = domination_number(g)
    assert result is not None
    return result.value


def audit_eq1(seed: int = 1, trials: int = 1000, max_n: int = 32, exhaustive_n: int = 6) -> AuditReport:
    """``gamma >= sl`` on every graph of order ``exhaustive_n`` and a random corpus."""
    report = AuditReport("eq1")
    corpus = [enumerate_labeled_graphs(exhaustive_n), random_corpus(seed, trials, max_n)]
    for stream in corpus:
        for g in stream:
            report.checked += 1
            gamma, s = _gamma(g), slater_of(g)
            if gamma < s:
                report.fail(graph6=to_graph6(g), gamma=gamma, slater=s)
    return report


def audit_families(max_half: int = 10) -> AuditReport:
    """Closed forms for ``K_h + hK1`` and ``G* = K_{2,h-1} + (h-1)K1``."""
    report = AuditReport("families")
    alpha2 = RationalPair(Fraction(2), Fraction(2))
    rows = []
    for half in range(2, max_half + 1):
        g = family_clique_plus_isolated(half, check=False)
        s, gamma = slater_of(g), _gamma(g)
        report.checked += 1
        rows.append({"family": "clique-plus-isolated", "half": half, "n": g.n, "slater": s, "gamma": gamma})
        if s != 2 or gamma != half + 1:
            report.fail(family="clique-plus-isolated", half=half, slater=s, gamma=gamma)
    for half in range(3, max_half + 1):
        g = family_gstar(half, check=False)
        s, gamma = slater_of(g), _gamma(g)
        member = is_member(g, alpha2).member
        report.checked += 1
        rows.append({"family": "gstar", "half": half, "n": g.n, "slater": s, "gamma": gamma,
                     "member_2_2": member, "ratio": str(Fraction(gamma, s))})
        if s != 2 or gamma != half + 1 or not member:
            report.fail(family="gstar", half=half, slater=s, gamma=gamma, member=member)
    report.details["rows"] = rows
    return report


def _clause(*lits: int) -> tuple[tuple[int, bool], ...]:
    return tuple((abs(x) - 1, x < 0) for x in lits)


# Three variables, each in at most five clauses.  With three distinct
# variables per clause every such formula is satisfiable (five clauses rule
# out at most five of eight assignments), so the unsatisfiable half repeats
# a literal inside a clause, which keeps the gadget well defined.
REDUCTION_CORPUS: tuple[tuple[tuple[int, ...], ...], ...] = (
    ((1, 2, 3),),
    ((1, 2, 3), (-1, -2, 3)),
    ((1, 2, 3), (-1, -2, -3)),
    ((1, -2, 3), (-1, 2, -3), (1, 2, -3)),
    ((-1, -2, -3), (1, 2, 3), (-1, 2, 3), (1, -2, 3)),
    ((1, 2, 3), (1, 2, -3), (1, -2, 3), (1, -2, -3), (-1, 2, 3)),
    ((-1, 2, 3), (1, -2, 3), (1, 2, -3), (-1, -2, -3), (-1, -2, 3)),
    ((1, 1, 2), (-1, -1, 3), (-2, -2, -3)),
    ((1, 1, 2), (1, 1, -2), (-1, -1, 3)),
    ((1, 2, 2), (-1, 3, 3), (-2, -3, -3), (1, -3, -3)),
    ((1, 1, 2), (1, 1, -2), (-1, -1, 2), (-1, -1, -2)),
    ((2, 2, 3), (2, 2, -3), (-2, -2, 3), (-2, -2, -3)),
    ((1, 1, 3), (1, 1, -3), (-1, -1, 3), (-1, -1, -3)),
    ((1, 1, 2), (1, 1, -2), (-1, -1, 3), (-1, -1, -3)),
    ((1, 1, 2), (1, 1, -2), (-1, -1, 3), (-1, -3, -3), (-1, 2, 2)),
    ((2, 2, 1), (2, 2, -1), (-2, -2, 3), (-2, -2, -3)),
    ((3, 3, 1), (3, 3, -1), (-3, -3, 2), (-3, -3, -2)),
    ((3, 3, 2), (3, 3, -2), (-3, -3, 1), (-3, -3, -1)),
    ((1, 1, 2), (1, 1, -2), (-1, -1, 2), (-1, -1, -2), (3, 3, 1)),
    ((1, 2, 2), (1, -2, -2), (-1, 3, 3), (-1, -3, -3)),
)


def reduction_corpus() -> list[CnfFormula]:
    return [CnfFormula(3, tuple(_clause(*c) for c in clauses)) for clauses in REDUCTION_CORPUS]


def audit_reduction() -> AuditReport:
    """Gadget order ``5p^2 + q``, ``sl = p``, and ``gamma = p`` iff satisfiable."""
    report = AuditReport("reduction")
    rows = []
    for idx, f in enumerate(reduction_corpus()):
        gadget = gadget_from_cnf(f)
        g = gadget.graph
        p, q = f.num_vars, f.num_clauses
        sat = f.is_satisfiable()
        s, gamma = slater_of(g), _gamma(g)
        rows.append({"formula": idx, "p": p, "q": q, "n": g.n, "slater": s, "gamma": gamma, "satisfiable": sat})
        report.checked += 1
        if g.n != 5 * p * p + q or s != p or (gamma == p) != sat:
            report.fail(formula=idx, n=g.n, slater=s, gamma=gamma, satisfiable=sat)
    report.details["rows"] = rows
    report.details["satisfiable"] = sum(r["satisfiable"] for r in rows)
    report.details["unsatisfiable"] = sum(not r["satisfiable"] for r in rows)
    return report


def audit_decider(seed: int = 4, trials: int = 500, max_n: int = 40, exhaustive_n: int = 6) -> AuditReport:
    """LOWER implies ``gamma > sl``; UPPER implies ``gamma <= (p+1) sl`` with a valid witness."""
    report = AuditReport("decider-soundness")
    counts = {"LOWER": 0, "UPPER": 0}
    for g in _chain(all_graphs_up_to(exhaustive_n), random_corpus(seed, trials, max_n)):
        report.checked += 1
        out = decide_slater_gap(g)
        gamma = _gamma(g)
        counts[out.kind.value] += 1
        if out.kind is Outcome.LOWER:
            if not gamma > out.s:
                report.fail(graph6=to_graph6(g), outcome="LOWER", gamma=gamma, slater=out.s)
        else:
            w = out.witness
            good = (
                w is not None
                and verify_dominating(g, w, Variant.PLAIN)
                and w.bit_count() <= out.upper_bound
                and gamma <= out.upper_bound
                and (out.p == 0 or w.bit_count() <= out.ell + (g.n - out.f_at_ell))
            )
            if not good:
                report.fail(graph6=to_graph6(g), outcome="UPPER", gamma=gamma, bound=out.upper_bound)
    report.details["outcomes"] = counts
    return report


def audit_nw(seed: int = 5, trials: int = 200, max_n: int = 8) -> AuditReport:
    """Greedy coverage guarantee for every ``(k, l)`` on random graphs."""
    report = AuditReport("nw-inequality")
    for g in random_corpus(seed, trials, max_n):
        trace = greedy_order(g)
        for k in range(1, g.n + 1):
            best = best_k_coverage(g, k)
            for ell in range(1, g.n + 1):
                report.checked += 1
                if not check_nw_inequality(g, k, ell, best=best, trace=trace):
                    report.fail(graph6=to_graph6(g), k=k, ell=ell)
    return report


def audit_theorem5(max_n: int = 6) -> AuditReport:
    """Forbidden-pair freeness equals hereditary ``gamma = sl`` on all small graphs."""
    report = AuditReport("theorem5")
    free_count = 0
    for g in all_graphs_up_to(max_n):
        report.checked += 1
        free, witness = is_forbidden_free(g)
        free_count += free
        if free != hereditary_equality_bruteforce(g):
            report.fail(graph6=to_graph6(g), forbidden_free=free,
                        witness=None if witness is None else list(bits(witness)))
    report.details["forbidden_free"] = free_count
    return report


def audit_theorem3_trees(max_n: int = 9) -> AuditReport:
    """``gamma(T) <= 3 sl(T) - 2`` on every labeled tree with at most ``max_n`` vertices."""
    report = AuditReport("theorem3-trees")
    report.checked += 1  # K1: gamma = 1 = 3 * 1 - 2
    tight = 0
    for n in range(2, max_n + 1):
        for seq in prufer_sequences(n):
            degrees, gamma = prufer_profile(seq, n)
            degrees.sort(reverse=True)
            total, s = 0, 0
            while total < n:
                total += degrees[s] + 1
                s += 1
            report.checked += 1
            if gamma > 3 * s - 2:
                report.fail(n=n, prufer=list(seq), gamma=gamma, slater=s)
            tight += gamma == 3 * s - 2
    report.details["tight"] = tight
    return report


def audit_theorem3_cacti(seed: int = 7, trials: int = 1000, max_n: int = 40) -> AuditReport:
    """Random cacti lie in ``G(3/2, 3/2)`` and satisfy ``gamma <= 4 sl - 3``."""
    report = AuditReport("theorem3-cacti")
    params = RationalPair(Fraction(3, 2), Fraction(3, 2))
    for child in _seeds(seed, trials):
        rng = Rng(child)
        g = random_cactus(rng.randint(1, max_n), rng.next64(), check=False)
        report.checked += 1
        if not is_member(g, params).member:
            report.fail(graph6=to_graph6(g), reason="cactus outside G(3/2, 3/2)")
            continue
        if not check_theorem3(g, params, gamma=_gamma(g), verify_membership=False):
            report.fail(graph6=to_graph6(g), gamma=_gamma(g), slater=slater_of(g))
    return report


def audit_theorem4(max_n: int = 9) -> AuditReport:
    """``sl_t(T) >= (n + 2 - n_1)/2`` and the stated equality characterization."""
    report = AuditReport("theorem4")
    equalities = exhausted = 0
    mismatch_counts: dict[tuple, int] = {}
    for n in range(2, max_n + 1):
        for seq in prufer_sequences(n):
            degree = [1] * n
            for x in seq:
                degree[x] += 1
            degree.sort(reverse=True)
            check = theorem4_from_degrees(degree)
            report.checked += 1
            if not check.holds:
                report.fail(n=n, prufer=list(seq), total_slater=check.total_slater, n1=check.n1)
            equalities += check.equality
            exhausted += check.exhausted
            if check.equality != check.predicted_equality:
                key = (n, tuple(degree), check.equality, check.predicted_equality)
                mismatch_counts[key] = mismatch_counts.get(key, 0) + 1
    for (n, degrees, eq, pred), count in sorted(mismatch_counts.items()):
        report.findings.append({
            "kind": "equality-characterization-mismatch",
            "n": n,
            "degrees": list(degrees),
            "equality": eq,
            "predicted_equality": pred,
            "labeled_trees": count,
        })
    report.details["equalities"] = equalities
    report.details["exhausted_sequences"] = exhausted
    return report


def audit_lemma1(seed: int = 9, trials: int = 1000, max_n: int = 40) -> AuditReport:
    """``2 m_s + m_2 - t_2 <= 5|S| - 6`` on random maximal outerplanar graphs and sets."""
    report = AuditReport("lemma1")
    tight = 0
    for child in _seeds(seed, trials):
        rng = Rng(child)
        n = rng.randint(3, max_n)
        g, emb = random_maximal_outerplanar(n, rng.next64())
        s = rng.sample_mask(n, rng.randint(2, n))
        audit = lemma1_counts(g, emb, s)
        report.checked += 1
        tight += audit.lhs == audit.bound
        if not audit.holds:
            report.fail(graph6=to_graph6(g), s=list(bits(s)), lhs=audit.lhs, bound=audit.bound)
    report.details["tight"] = tight
    return report


def audit_theorem7(seed: int = 11, trials: int = 500, max_n: int = 30) -> AuditReport:
    """``gamma <= 6 sl - 6`` on random certified outerplanar graphs and the extremal example."""
    report = AuditReport("theorem7")
    for child in _seeds(seed, trials):
        rng = Rng(child)
        g, emb = random_outerplanar(rng.randint(3, max_n), rng.next64(),
                                    extra_isolated=rng.below(4), min_slater=2)
        report.checked += 1
        gamma = _gamma(g)
        if not check_theorem7(g, emb, gamma=gamma):
            report.fail(graph6=to_graph6(g), gamma=gamma, slater=slater_of(g))
    extremal = []
    for s in (4, 6):
        g, emb = family_outerplanar_extremal(s)
        gamma = _gamma(g)
        sl = slater_of(g)
        report.checked += 1
        extremal.append({"s": s, "n": g.n, "slater": sl, "gamma": gamma,
                         "lower": s // 2 + 5 * s - 6, "upper": 6 * sl - 6})
        if sl != s or not s // 2 + 5 * s - 6 <= gamma <= 6 * s - 6 or not check_theorem7(g, emb, gamma=gamma):
            report.fail(family="outerplanar-extremal", s=s, slater=sl, gamma=gamma)
    report.details["extremal"] = extremal
    return report


def audit_oracle(seed: int = 13, trials: int = 200, max_n: int = 16, exhaustive_n: int = 6) -> AuditReport:
    """Branch and bound equals subset enumeration for plain, total and paired domination."""
    report = AuditReport("oracle-equiv")
    for g in _chain(all_graphs_up_to(exhaustive_n), random_corpus(seed, trials, max_n)):
        for variant in (Variant.PLAIN, Variant.TOTAL, Variant.PAIRED):
            report.checked += 1
            fast = domination_number(g, variant)
            slow = brute_force_domination(g, variant)
            if (fast is None) != (slow is None):
                report.fail(graph6=to_graph6(g), variant=variant.value, defined=[fast is not None, slow is not None])
            elif fast is not None and (fast.value != slow.value or not verify_dominating(g, fast.witness, variant)):
                report.fail(graph6=to_graph6(g), variant=variant.value, fast=fast.value, slow=slow.value)
    return report


def audit_mincut(seed: int = 17, trials: int = 500, max_n: int = 14) -> AuditReport:
    """Min-cut and subset enumeration agree on ``max (m(H) - alpha n(H))``."""
    report = AuditReport("mincut")
    for child in _seeds(seed, trials):
        rng = Rng(child)
        g = random_graph(rng.randint(1, max_n), rng.next64())
        den = rng.randint(1, 12)
        alpha = Fraction(rng.randint(0, 3 * den), den)
        report.checked += 1
        brute, _ = max_edge_excess_bruteforce(g, alpha)
        cut, mask = max_edge_excess_mincut(g, alpha)
        edges = sum((g.adj[v] & mask).bit_count() for v in bits(mask)) // 2
        if brute != cut or not mask or edges - alpha * mask.bit_count() != cut:
            report.fail(graph6=to_graph6(g), alpha=str(alpha), brute=str(brute), mincut=str(cut))
    return report


def _chain(*streams):
    for stream in streams:
        yield from stream


SUITES: dict[str, Callable[..., AuditReport]] = {
    "eq1": audit_eq1,
    "families": audit_families,
    "reduction": audit_reduction,
    "decider-soundness": audit_decider,
    "nw-inequality": audit_nw,
    "theorem5": audit_theorem5,
    "theorem3-trees": audit_theorem3_trees,
    "theorem3-cacti": audit_theorem3_cacti,
    "theorem4": audit_theorem4,
    "lemma1": audit_lemma1,
    "theorem7": audit_theorem7,
    "oracle-equiv": audit_oracle,
    "mincut": audit_mincut,
}


def run_suite(name: str, **kwargs) -> AuditReport:
    start = time.perf_counter()
    report = SUITES[name](**kwargs)
    report.seconds = time.perf_counter() - start
    return report
