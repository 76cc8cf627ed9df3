"""Brute-force oracles and seeded generators backing the property tests.

The oracles re-derive answers straight from definitions, scanning all
subsets or all polynomials instead of reusing the fast-path algorithms, so
an agreement test actually cross-checks two independent derivations.  The
generators produce deterministic pseudo-random graphs and prime-power
families from a 64-bit seed; the stream is SplitMix64, fixed so that seeds
reproduce everywhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction

from .errors import NotALattice, TooLarge, Unsatisfiable
from .graphs import (
    DEFAULT_ENUMERATION_BOUND,
    OMEGA,
    AdmissiblePair,
    Edge,
    Graph,
    cycles_without_exits,
    downward_directed,
    enumerate_hereditary_saturated,
    quotient_graph,
)
from .ideals import (
    canonicalize,
    enumerate_graded_primes,
    ideal_power,
    is_prime,
    prime_power_decompose,
)
from .poly import FieldSpec, Poly, monic_irreducibles
from .rng import SplitMix64


# -- literal reachability, kept local so oracles do not lean on the fast paths --


def _edges_from(graph: Graph, v: str):
    return [e for e in graph.edges if e.src == v]


def _reaches_literal(graph: Graph, src: str, dst: str) -> bool:
    seen = {src}
    frontier = [src]
    while frontier:
        v = frontier.pop()
        if v == dst:
            return True
        for e in _edges_from(graph, v):
            if e.dst not in seen:
                seen.add(e.dst)
                frontier.append(e.dst)
    return dst in seen


def _hereditary_literal(graph: Graph, subset: frozenset) -> bool:
    return all(e.dst in subset for e in graph.edges if e.src in subset)


def _saturated_literal(graph: Graph, subset: frozenset) -> bool:
    for v in graph.vertices:
        if v in subset:
            continue
        outs = _edges_from(graph, v)
        if outs and all(e.mult != OMEGA for e in outs) \
                and all(e.dst in subset for e in outs):
            return False
    return True


def _check_bound(graph: Graph, bound: int) -> None:
    if len(graph.vertices) > bound:
        raise TooLarge(
            f"{len(graph.vertices)} vertices exceed the subset-scan bound {bound}")


def _subsets(items):
    items = sorted(items)
    for r in range(len(items) + 1):
        for combo in itertools.combinations(items, r):
            yield frozenset(combo)


# -- closure, admissible pairs, lattice bounds ------------------------------------


def closure_oracle(graph: Graph, subset,
                   bound: int = DEFAULT_ENUMERATION_BOUND) -> frozenset:
    """Smallest hereditary saturated superset, found by scanning all subsets."""
    _check_bound(graph, bound)
    subset = frozenset(subset)
    candidates = [t for t in _subsets(graph.vertices)
                  if subset <= t and _hereditary_literal(graph, t)
                  and _saturated_literal(graph, t)]
    best = min(candidates, key=len)
    assert all(best <= t for t in candidates), \
        "hereditary saturated supersets are not closed under intersection"
    return best


def _breaking_literal(graph: Graph, hset: frozenset):
    out = set()
    for v in graph.vertices:
        if v in hset:
            continue
        outs = _edges_from(graph, v)
        omegas = [e for e in outs if e.mult == OMEGA]
        leaving = [e for e in outs if e.dst not in hset]
        if omegas and all(e.dst in hset for e in omegas) and leaving:
            out.add(v)
    return frozenset(out)


def enumerate_admissible_pairs(graph: Graph,
                               bound: int = DEFAULT_ENUMERATION_BOUND) -> list:
    """All (H, S) with H hereditary saturated and S breaking, by subset scan."""
    _check_bound(graph, bound)
    pairs = []
    for hset in _subsets(graph.vertices):
        if not (_hereditary_literal(graph, hset)
                and _saturated_literal(graph, hset)):
            continue
        for sset in _subsets(_breaking_literal(graph, hset)):
            pairs.append(AdmissiblePair(hset, sset))
    pairs.sort(key=lambda p: p.key())
    return pairs


def _leq_literal(p1: AdmissiblePair, p2: AdmissiblePair) -> bool:
    return p1.vertices <= p2.vertices \
        and p1.breaking <= p2.vertices | p2.breaking


def glb_oracle(pairs, p1: AdmissiblePair, p2: AdmissiblePair) -> AdmissiblePair:
    """Greatest lower bound by exhaustive comparison over the full lattice."""
    lows = [p for p in pairs if _leq_literal(p, p1) and _leq_literal(p, p2)]
    tops = [g for g in lows if all(_leq_literal(l, g) for l in lows)]
    if len(tops) != 1:
        raise NotALattice(f"glb of {p1} and {p2} is not unique: {tops}")
    return tops[0]


def lub_oracle(pairs, p1: AdmissiblePair, p2: AdmissiblePair) -> AdmissiblePair:
    """Least upper bound by exhaustive comparison over the full lattice."""
    highs = [p for p in pairs if _leq_literal(p1, p) and _leq_literal(p2, p)]
    bottoms = [g for g in highs if all(_leq_literal(g, h) for h in highs)]
    if len(bottoms) != 1:
        raise NotALattice(f"lub of {p1} and {p2} is not unique: {bottoms}")
    return bottoms[0]


# -- maximal tails -------------------------------------------------------------------


def maximal_tails_bruteforce(graph: Graph,
                             bound: int = DEFAULT_ENUMERATION_BOUND) -> list:
    """Every nonempty subset passing the three maximal-tail conditions literally.

    MT1: closed under predecessors.  MT2: a regular member keeps a successor
    inside.  MT3: any two members reach a common member.
    """
    _check_bound(graph, bound)
    out = []
    for m in _subsets(graph.vertices):
        if not m:
            continue
        mt1 = all(v in m
                  for v in graph.vertices
                  for w in m if _reaches_literal(graph, v, w))
        if not mt1:
            continue
        mt2 = True
        for v in m:
            outs = _edges_from(graph, v)
            if outs and all(e.mult != OMEGA for e in outs):
                if not any(e.dst in m for e in outs):
                    mt2 = False
                    break
        if not mt2:
            continue
        mt3 = all(any(_reaches_literal(graph, u, w)
                      and _reaches_literal(graph, v, w) for w in m)
                  for u in m for v in m)
        if mt3:
            out.append(m)
    out.sort(key=lambda s: (len(s), sorted(s)))
    return out


# -- brute-force polynomial factorization over GF(p) -----------------------------------


def bruteforce_factor_gf(f: Poly) -> list:
    """Irreducible factorization by trial division over all monic polynomials.

    Walks every monic polynomial of degree up to half the remainder in
    coefficient order, stripping divisors as they appear; a composite can
    never divide first because its own factors come earlier.
    """
    if f.field.kind != "GF":
        raise ValueError("brute-force factorization is for GF(p) only")
    if f.is_zero() or f.degree < 1:
        raise ValueError("factor a nonconstant polynomial")
    rest = f.monic()
    found = []
    d = 1
    while 2 * d <= rest.degree:
        for tail in itertools.product(range(f.field.p), repeat=d):
            g = Poly(f.field, list(tail) + [1])
            while rest.degree >= g.degree and (rest % g).is_zero():
                found.append(g)
                rest = rest // g
        d += 1
    if rest.degree >= 1:
        found.append(rest.monic())
    counted = []
    for g in sorted(set(found), key=lambda g: (g.degree, g.coeffs)):
        counted.append((g, found.count(g)))
    return counted


# -- seeded generators ------------------------------------------------------------------


@dataclass(frozen=True)
class GeneratorConfig:
    """Deterministic generation parameters; equal configs generate equal data."""

    seed: int
    max_vertices: int = 6
    edge_density: float = 0.4
    omega_probability: float = 0.1
    field: FieldSpec = dataclass_field(default_factory=FieldSpec.rationals)
    max_poly_degree: int = 2

    def __post_init__(self):
        if self.max_vertices < 1:
            raise ValueError("max_vertices must be positive")
        if not 0.0 <= self.edge_density <= 1.0:
            raise ValueError("edge_density out of range")
        if not 0.0 <= self.omega_probability <= 1.0:
            raise ValueError("omega_probability out of range")
        if self.max_poly_degree < 1:
            raise ValueError("max_poly_degree must be positive")


def random_graph(config: GeneratorConfig) -> Graph:
    """Deterministic random graph: seed and config decide everything."""
    rng = SplitMix64(config.seed)
    n = 1 + rng.below(config.max_vertices)
    vertices = [f"v{i}" for i in range(n)]
    edges = []
    for i in range(n):
        for j in range(n):
            if rng.chance(config.edge_density):
                mult = OMEGA if rng.chance(config.omega_probability) else 1
                edges.append(Edge(f"e{len(edges)}", f"v{i}", f"v{j}", mult))
    return Graph(vertices, edges)


def _random_irreducible(rng: SplitMix64, field: FieldSpec, max_degree: int) -> Poly:
    """Monic irreducible with nonzero constant term, degree <= max_degree."""
    degree = 1 + rng.below(max_degree)
    if field.kind == "GF":
        pool = [g for g in monic_irreducibles(field, degree)
                if g.degree == degree and g.constant_term() != field.zero()]
        if not pool:
            pool = [g for g in monic_irreducibles(field, degree)
                    if g.constant_term() != field.zero()]
        return rng.choice(pool)
    # over the rationals, x^d + q for prime q is irreducible by Eisenstein
    q = rng.choice([2, 3, 5, 7, 11, 13])
    sign = rng.choice([1, -1])
    coeffs = [Fraction(sign * q)] + [Fraction(0)] * (degree - 1) + [Fraction(1)]
    return Poly(field, coeffs)


def random_prime_power_family(config: GeneratorConfig, graph: Graph,
                              distinct: bool = True) -> list:
    """Deterministic family of prime powers of the graph's algebra.

    Draws nonzero graded primes from the enumeration and builds non-graded
    powers on exitless quotient cycles with random irreducible polynomials.
    With distinct=True the underlying primes are pairwise different.  The
    zero ideal is never drawn: it absorbs every product, which makes a
    family degenerate.
    """
    rng = SplitMix64(config.seed).split()
    graded_pool = [p for p in enumerate_graded_primes(graph) if p.pair.vertices]
    sites = []
    everything = frozenset(graph.vertices)
    for hset in enumerate_hereditary_saturated(graph):
        if hset == everything:
            continue
        if not downward_directed(graph, everything - hset)[0]:
            continue
        pair_sets = (hset, _breaking_literal(graph, hset))
        quotient = quotient_graph(
            graph, AdmissiblePair(pair_sets[0], pair_sets[1]))
        for cycle in cycles_without_exits(quotient.graph):
            sites.append((pair_sets, cycle))
    if not graded_pool and not sites:
        raise Unsatisfiable(
            "graph has neither nonzero graded primes nor exitless quotient cycles")

    size = 1 + rng.below(3)
    family = []
    seen = set()
    for _ in range(size * 8):
        if len(family) == size:
            break
        index = rng.below(len(graded_pool) + len(sites))
        if index < len(graded_pool):
            prime = graded_pool[index]
            exponent = 1
        else:
            (hset, sset), cycle = sites[index - len(graded_pool)]
            p = _random_irreducible(rng, config.field, config.max_poly_degree)
            prime = canonicalize(graph, hset, sset, [(cycle, p)])
            exponent = 1 + rng.below(3)
        if distinct and prime in seen:
            continue
        seen.add(prime)
        assert is_prime(prime).holds, f"generator drew a non-prime {prime!r}"
        power = ideal_power(prime, exponent)
        decomposed = prime_power_decompose(power)
        assert decomposed == (prime, exponent), "generated power fails decompose"
        family.append(power)
    if not family:
        raise Unsatisfiable("no prime power survived the distinctness filter")
    return family
