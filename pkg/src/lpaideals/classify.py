"""Whole-algebra classification: which ideal-theoretic regimes hold for L_K(E).

Each predicate inspects the graph alone; statements about all ideals of
the algebra reduce to finite graph conditions.
Negative verdicts always carry a concrete witness (a bad cycle, an
incomparable pair of admissible pairs, a quotient failing the strong
cycle-to-sink property) so a counterexample can be rendered or re-checked
directly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graphs import (
    DEFAULT_ENUMERATION_BOUND,
    AdmissiblePair,
    Graph,
    admissible_leq,
    breaking_vertices,
    condition_k,
    condition_l,
    downward_directed,
    enumerate_hereditary_saturated,
    maximal_tails,
    quotient_graph,
    strong_csp,
)


@dataclass(frozen=True)
class PredicateResult:
    """Verdict of one classification predicate, with a witness when negative."""

    predicate: str
    verdict: bool
    witness: object = None

    def __bool__(self) -> bool:
        return self.verdict

    def to_json(self) -> dict:
        return {"predicate": self.predicate, "verdict": self.verdict,
                "witness": self.witness}


@dataclass(frozen=True)
class AlgebraReport:
    """All five predicate verdicts for one graph."""

    results: tuple

    def to_json(self) -> list:
        return [r.to_json() for r in self.results]

    def __getitem__(self, predicate: str) -> PredicateResult:
        for r in self.results:
            if r.predicate == predicate:
                return r
        raise KeyError(predicate)


def _csp_witness(report) -> dict:
    out = {"core": sorted(report.witness)}
    if report.missing is not None:
        out["unreachable"] = report.missing
    return out


def _pair_json(pair: AdmissiblePair) -> dict:
    return {"H": sorted(pair.vertices), "S": sorted(pair.breaking)}


def _enumerate_pairs(graph: Graph, bound: int):
    pairs = []
    for hset in enumerate_hereditary_saturated(graph, bound):
        candidates = sorted(breaking_vertices(graph, hset))
        for r in range(len(candidates) + 1):
            for combo in itertools.combinations(candidates, r):
                pairs.append(AdmissiblePair(hset, frozenset(combo)))
    pairs.sort(key=lambda p: p.key())
    return pairs


def all_ideals_graded(graph: Graph) -> PredicateResult:
    """Every ideal is graded exactly when every cycle has two return paths."""
    holds, bad = condition_k(graph)
    witness = None if holds else {"condition": "K", "cycle": bad.to_json()}
    return PredicateResult("all_ideals_graded", holds, witness)


def zero_completely_irreducible(graph: Graph) -> PredicateResult:
    """The zero ideal is completely irreducible iff (L), downward directedness,
    and the strong cycle-to-sink property all hold for the graph itself."""
    name = "zero_completely_irreducible"
    l_holds, bad_cycle = condition_l(graph)
    if not l_holds:
        return PredicateResult(name, False,
                               {"condition": "L", "cycle": bad_cycle.to_json()})
    dd, bad_pair = downward_directed(graph)
    if not dd:
        return PredicateResult(name, False,
                               {"condition": "downward_directed",
                                "pair": sorted(bad_pair)})
    csp = strong_csp(graph)
    if not csp.holds:
        return PredicateResult(name, False,
                               {"condition": "strong_csp", **_csp_witness(csp)})
    return PredicateResult(name, True)


def every_proper_ideal_completely_irreducible(
        graph: Graph, bound: int = DEFAULT_ENUMERATION_BOUND) -> PredicateResult:
    """All proper ideals completely irreducible: condition (K), the admissible
    pairs form a chain, and every proper quotient has the strong CSP."""
    name = "every_proper_ideal_completely_irreducible"
    k_holds, bad = condition_k(graph)
    if not k_holds:
        return PredicateResult(name, False,
                               {"condition": "K", "cycle": bad.to_json()})
    pairs = _enumerate_pairs(graph, bound)
    for p1, p2 in itertools.combinations(pairs, 2):
        if not (admissible_leq(p1, p2) or admissible_leq(p2, p1)):
            return PredicateResult(name, False,
                                   {"condition": "chain",
                                    "pairs": [_pair_json(p1), _pair_json(p2)]})
    everything = frozenset(graph.vertices)
    for pair in pairs:
        if pair.vertices == everything:
            continue
        q = quotient_graph(graph, pair).graph
        csp = strong_csp(q, bound=2 * bound)
        if not csp.holds:
            return PredicateResult(name, False,
                                   {"condition": "strong_csp",
                                    "pair": _pair_json(pair),
                                    **_csp_witness(csp)})
    return PredicateResult(name, True)


def irreducible_equals_completely_irreducible(
        graph: Graph, bound: int = DEFAULT_ENUMERATION_BOUND) -> PredicateResult:
    """Irreducible and completely irreducible ideals coincide: condition (K)
    plus the strong CSP on the quotient of every prime candidate pair."""
    name = "irreducible_equals_completely_irreducible"
    k_holds, bad = condition_k(graph)
    if not k_holds:
        return PredicateResult(name, False,
                               {"condition": "K", "cycle": bad.to_json()})
    everything = frozenset(graph.vertices)
    for hset in enumerate_hereditary_saturated(graph, bound):
        if hset == everything:
            continue
        if not downward_directed(graph, everything - hset)[0]:
            continue
        pair = AdmissiblePair(hset, breaking_vertices(graph, hset))
        q = quotient_graph(graph, pair).graph
        csp = strong_csp(q, bound=2 * bound)
        if not csp.holds:
            return PredicateResult(name, False,
                                   {"condition": "strong_csp",
                                    "H": sorted(hset),
                                    **_csp_witness(csp)})
    return PredicateResult(name, True)


def _induced_subgraph(graph: Graph, vertices) -> Graph:
    keep = set(vertices)
    return Graph(sorted(keep),
                 [e for e in graph.edges if e.src in keep and e.dst in keep])


def every_proper_ideal_product_of_comp_irred(
        graph: Graph, bound: int = DEFAULT_ENUMERATION_BOUND) -> PredicateResult:
    """Every proper ideal is a product of completely irreducible ideals.

    Condition (K) plus, for every proper admissible pair, a cover of the
    quotient by maximal tails that each have the strong CSP.  With finitely
    many vertices this is equivalent to condition (K) alone, which is
    asserted rather than assumed.
    """
    name = "every_proper_ideal_product_of_comp_irred"
    k_holds, bad = condition_k(graph)
    tails_ok = True
    tail_witness = None
    everything = frozenset(graph.vertices)
    for pair in _enumerate_pairs(graph, bound):
        if pair.vertices == everything:
            continue
        q = quotient_graph(graph, pair).graph
        tails = maximal_tails(q)
        covered = set()
        for t in tails:
            covered |= set(t)
        if covered != set(q.vertices):
            tails_ok = False
            tail_witness = {"condition": "tail_cover", "pair": _pair_json(pair),
                            "uncovered": sorted(set(q.vertices) - covered)}
            break
        for t in tails:
            csp = strong_csp(_induced_subgraph(q, t), bound=2 * bound)
            if not csp.holds:
                tails_ok = False
                tail_witness = {"condition": "tail_strong_csp",
                                "pair": _pair_json(pair), "tail": sorted(t),
                                **_csp_witness(csp)}
                break
        if not tails_ok:
            break
    verdict = k_holds and tails_ok
    assert verdict == k_holds, \
        "finite-vertex equivalence with condition (K) violated: " \
        f"{tail_witness}"
    witness = None
    if not verdict:
        witness = ({"condition": "K", "cycle": bad.to_json()}
                   if not k_holds else tail_witness)
    return PredicateResult(name, verdict, witness)


_PREDICATES = (
    all_ideals_graded,
    zero_completely_irreducible,
    every_proper_ideal_completely_irreducible,
    irreducible_equals_completely_irreducible,
    every_proper_ideal_product_of_comp_irred,
)


def classify_algebra(graph: Graph,
                     bound: int = DEFAULT_ENUMERATION_BOUND) -> AlgebraReport:
    """Run all five predicates; the first two ignore the vertex bound."""
    results = []
    for fn in _PREDICATES:
        if fn in (all_ideals_graded, zero_completely_irreducible):
            results.append(fn(graph))
        else:
            results.append(fn(graph, bound))
    report = AlgebraReport(tuple(results))
    chain = report["every_proper_ideal_completely_irreducible"].verdict
    match = report["irreducible_equals_completely_irreducible"].verdict
    graded = report["all_ideals_graded"].verdict
    assert not chain or match, "implication chain broken: chain without match"
    assert not match or graded, "implication chain broken: match without (K)"
    return report
