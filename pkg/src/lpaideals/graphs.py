"""Finite directed graphs with edge multiplicities, as used by the ideal calculus.

A graph is a finite vertex set plus a finite set of edge slots.  A slot has a
source, a target, and a multiplicity, which is either a positive integer or
OMEGA; an OMEGA slot stands for a countably infinite bundle of parallel edges.
A vertex is a sink (no out-slots), an infinite emitter (some OMEGA out-slot),
or regular (finitely many out-edges, at least one).

The module provides the structural notions the ideal lattice of a Leavitt
path algebra is built from: hereditary saturated vertex sets and their
closure, breaking vertices, admissible pairs and quotient graphs, simple
cycles with their exit structure, conditions (L) and (K), downward directed
vertex sets, maximal tails, and the existence of a reachable minimum among
the nonempty hereditary saturated sets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    EmptySet,
    InvalidGraph,
    NotAdmissible,
    NotHereditarySaturated,
    TooLarge,
    UnknownVertex,
)

#: Multiplicity marker for an infinite bundle of parallel edges.
OMEGA = math.inf

#: Enumerations over all vertex subsets refuse graphs larger than this.
DEFAULT_ENUMERATION_BOUND = 16


@dataclass(frozen=True)
class Edge:
    """One edge slot: src --id--> dst with multiplicity mult (int >= 1 or OMEGA)."""

    id: str
    src: str
    dst: str
    mult: object = 1

    def is_omega(self) -> bool:
        return self.mult == OMEGA


class Graph:
    """Immutable finite directed multigraph with slot multiplicities."""

    __slots__ = ("vertices", "edges", "_vset", "_out", "_in", "_by_id")

    def __init__(self, vertices, edges):
        vs = tuple(sorted(vertices))
        if not vs:
            raise InvalidGraph("graph needs at least one vertex")
        if len(set(vs)) != len(vs):
            raise InvalidGraph("duplicate vertex ids")
        for v in vs:
            if not isinstance(v, str) or not v:
                raise InvalidGraph(f"vertex id must be a nonempty string: {v!r}")
        vset = frozenset(vs)
        es = tuple(sorted(edges, key=lambda e: e.id))
        seen = set()
        for e in es:
            if not isinstance(e.id, str) or not e.id:
                raise InvalidGraph(f"edge id must be a nonempty string: {e.id!r}")
            if e.id in seen:
                raise InvalidGraph(f"duplicate edge id {e.id!r}")
            seen.add(e.id)
            if e.src not in vset:
                raise UnknownVertex(f"edge {e.id!r} has unknown source {e.src!r}")
            if e.dst not in vset:
                raise UnknownVertex(f"edge {e.id!r} has unknown target {e.dst!r}")
            ok = e.mult == OMEGA or (isinstance(e.mult, int)
                                     and not isinstance(e.mult, bool) and e.mult >= 1)
            if not ok:
                raise InvalidGraph(f"edge {e.id!r} has bad multiplicity {e.mult!r}")
        out: dict[str, list[Edge]] = {v: [] for v in vs}
        inc: dict[str, list[Edge]] = {v: [] for v in vs}
        for e in es:
            out[e.src].append(e)
            inc[e.dst].append(e)
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "edges", es)
        object.__setattr__(self, "_vset", vset)
        object.__setattr__(self, "_out", {v: tuple(l) for v, l in out.items()})
        object.__setattr__(self, "_in", {v: tuple(l) for v, l in inc.items()})
        object.__setattr__(self, "_by_id", {e.id: e for e in es})

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other) -> bool:
        return (isinstance(other, Graph) and self.vertices == other.vertices
                and self.edges == other.edges)

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self) -> str:
        return f"Graph({len(self.vertices)} vertices, {len(self.edges)} edge slots)"

    # -- local structure ----------------------------------------------------

    def check_vertex(self, v: str) -> None:
        if v not in self._vset:
            raise UnknownVertex(f"unknown vertex {v!r}")

    def has_vertex(self, v: str) -> bool:
        return v in self._vset

    def edge(self, edge_id: str) -> Edge:
        try:
            return self._by_id[edge_id]
        except KeyError:
            raise UnknownVertex(f"unknown edge id {edge_id!r}") from None

    def has_edge(self, edge_id: str) -> bool:
        return edge_id in self._by_id

    def out_edges(self, v: str) -> tuple[Edge, ...]:
        self.check_vertex(v)
        return self._out[v]

    def in_edges(self, v: str) -> tuple[Edge, ...]:
        self.check_vertex(v)
        return self._in[v]

    def out_multiplicity(self, v: str):
        """Total number of edges leaving v; may be OMEGA."""
        return sum(e.mult for e in self.out_edges(v)) if self.out_edges(v) else 0

    def is_sink(self, v: str) -> bool:
        return not self.out_edges(v)

    def is_infinite_emitter(self, v: str) -> bool:
        return any(e.is_omega() for e in self.out_edges(v))

    def is_regular(self, v: str) -> bool:
        return bool(self.out_edges(v)) and not self.is_infinite_emitter(v)

    def vertex_class(self, v: str) -> str:
        """"sink", "regular", or "infinite_emitter"."""
        if self.is_sink(v):
            return "sink"
        return "infinite_emitter" if self.is_infinite_emitter(v) else "regular"

    def successors(self, v: str) -> frozenset:
        return frozenset(e.dst for e in self.out_edges(v))

    # -- reachability ---------------------------------------------------------

    def descendants(self, v: str) -> frozenset:
        """All vertices reachable from v, including v."""
        self.check_vertex(v)
        seen = {v}
        stack = [v]
        while stack:
            for e in self._out[stack.pop()]:
                if e.dst not in seen:
                    seen.add(e.dst)
                    stack.append(e.dst)
        return frozenset(seen)

    def reaching_set(self, w: str) -> frozenset:
        """All vertices with a path to w, including w."""
        self.check_vertex(w)
        seen = {w}
        stack = [w]
        while stack:
            for e in self._in[stack.pop()]:
                if e.src not in seen:
                    seen.add(e.src)
                    stack.append(e.src)
        return frozenset(seen)

    def reaches(self, u: str, v: str) -> bool:
        self.check_vertex(v)
        return v in self.descendants(u)


# -- hereditary saturated sets ------------------------------------------------


def is_hereditary(graph: Graph, subset) -> bool:
    """No edge leaves the subset."""
    sub = frozenset(subset)
    return all(e.dst in sub for v in sub for e in graph.out_edges(v))


def is_saturated(graph: Graph, subset) -> bool:
    """Every regular vertex feeding only into the subset already belongs to it."""
    sub = frozenset(subset)
    for v in graph.vertices:
        if v in sub or not graph.is_regular(v):
            continue
        if all(e.dst in sub for e in graph.out_edges(v)):
            return False
    return True


def hereditary_saturated_closure(graph: Graph, subset) -> frozenset:
    """Smallest hereditary and saturated vertex set containing the subset."""
    closed = set()
    for v in subset:
        graph.check_vertex(v)
        closed |= graph.descendants(v)
    changed = True
    while changed:
        changed = False
        for v in graph.vertices:
            if v in closed or not graph.is_regular(v):
                continue
            if all(e.dst in closed for e in graph.out_edges(v)):
                # saturation may admit new descendants only via v itself
                closed.add(v)
                changed = True
    return frozenset(closed)


def enumerate_hereditary_saturated(graph: Graph,
                                   bound: int = DEFAULT_ENUMERATION_BOUND) -> list:
    """All hereditary saturated vertex sets, sorted by size then lexicographically.

    Walks every vertex subset, so graphs above the bound are refused.
    """
    n = len(graph.vertices)
    if n > bound:
        raise TooLarge(f"{n} vertices exceeds the enumeration bound {bound}")
    out = []
    vs = graph.vertices
    for mask in range(1 << n):
        sub = frozenset(vs[i] for i in range(n) if mask >> i & 1)
        if is_hereditary(graph, sub) and is_saturated(graph, sub):
            out.append(sub)
    out.sort(key=lambda s: (len(s), sorted(s)))
    return out


def breaking_vertices(graph: Graph, hset) -> frozenset:
    """Infinite emitters outside hset that keep only finitely many edges.

    A vertex breaks over hset when it is an infinite emitter not in hset,
    every infinite bundle it emits lands inside hset, and at least one edge
    still leaves hset (necessarily finitely many in total).
    """
    hset = frozenset(hset)
    out = set()
    for v in graph.vertices:
        if v in hset or not graph.is_infinite_emitter(v):
            continue
        kept = [e for e in graph.out_edges(v) if e.dst not in hset]
        if kept and all(not e.is_omega() for e in kept):
            out.add(v)
    return frozenset(out)


# -- admissible pairs and quotient graphs --------------------------------------


@dataclass(frozen=True)
class AdmissiblePair:
    """Ideal coordinates: a hereditary saturated set plus chosen breaking vertices.

    `vertices` collects the vertices lying in the ideal; `breaking` the
    breaking vertices whose gap idempotents are added to the generators.
    """

    vertices: frozenset
    breaking: frozenset

    def key(self):
        """Deterministic sort key."""
        return (sorted(self.vertices), sorted(self.breaking))


def admissible_pair(graph: Graph, hset, sset=()) -> AdmissiblePair:
    """Validate and build an admissible pair over the graph."""
    hset = frozenset(hset)
    sset = frozenset(sset)
    for v in hset | sset:
        graph.check_vertex(v)
    if not is_hereditary(graph, hset):
        raise NotHereditarySaturated(f"{sorted(hset)} is not hereditary")
    if not is_saturated(graph, hset):
        raise NotHereditarySaturated(f"{sorted(hset)} is not saturated")
    allowed = breaking_vertices(graph, hset)
    if not sset <= allowed:
        raise NotAdmissible(
            f"{sorted(sset - allowed)} are not breaking vertices of {sorted(hset)}")
    return AdmissiblePair(hset, sset)


def admissible_leq(p1: AdmissiblePair, p2: AdmissiblePair) -> bool:
    """Ideal containment I(p1) <= I(p2) on the graded level."""
    return p1.vertices <= p2.vertices and p1.breaking <= p2.vertices | p2.breaking


def _fresh_name(base: str, taken) -> str:
    cand = base + "'"
    while cand in taken:
        cand += "'"
    return cand


@dataclass(frozen=True)
class Quotient:
    """Quotient graph of a base graph by an admissible pair, with provenance.

    The quotient keeps the vertices outside the pair and, for each unchosen
    breaking vertex v, adds a fresh sink carrying the image of the gap
    idempotent of v.  Every edge whose target is such a v is doubled: the
    original copy keeps its target, the primed copy lands on the new sink.
    """

    graph: Graph
    base: Graph
    pair: AdmissiblePair
    primed_vertex: dict
    primed_edge: dict

    def sink_for(self, v: str) -> str:
        """Quotient sink carrying the gap idempotent of breaking vertex v."""
        return self.primed_vertex[v]

    def is_primed_vertex(self, v: str) -> bool:
        return v in set(self.primed_vertex.values())


def quotient_graph(graph: Graph, pair: AdmissiblePair) -> Quotient:
    hset, sset = pair.vertices, pair.breaking
    split = breaking_vertices(graph, hset) - sset
    kept = [v for v in graph.vertices if v not in hset]
    taken = set(kept)
    primed_vertex = {}
    for v in sorted(split):
        name = _fresh_name(v, taken)
        taken.add(name)
        primed_vertex[v] = name
    edges = []
    primed_edge = {}
    edge_ids = {e.id for e in graph.edges}
    for e in graph.edges:
        if e.dst in hset:
            continue
        # hereditary hset: e.dst outside hset forces e.src outside as well
        edges.append(e)
        if e.dst in split:
            eid = _fresh_name(e.id, edge_ids)
            edge_ids.add(eid)
            primed_edge[e.id] = eid
            edges.append(Edge(eid, e.src, primed_vertex[e.dst], e.mult))
    q = Graph(kept + list(primed_vertex.values()), edges)
    return Quotient(q, graph, pair, primed_vertex, primed_edge)


# -- cycles and exit structure --------------------------------------------------


@dataclass(frozen=True)
class Cycle:
    """Simple cycle as parallel tuples: edges[i] joins vertices[i] to vertices[i+1].

    The last edge returns to vertices[0]; rotation is normalized so that
    vertices[0] is the smallest vertex id on the cycle.
    """

    vertices: tuple
    edges: tuple

    @property
    def start(self) -> str:
        return self.vertices[0]

    def __len__(self) -> int:
        return len(self.edges)

    @staticmethod
    def build(vertices, edge_ids) -> "Cycle":
        vs, es = tuple(vertices), tuple(edge_ids)
        if len(vs) != len(es) or not vs or len(set(vs)) != len(vs):
            raise ValueError("cycle needs equally many distinct vertices and edges")
        k = vs.index(min(vs))
        return Cycle(vs[k:] + vs[:k], es[k:] + es[:k])

    def check_in(self, graph: Graph) -> None:
        """Validate that this is an actual cycle of the graph."""
        n = len(self.vertices)
        for i, eid in enumerate(self.edges):
            e = graph.edge(eid)
            if e.src != self.vertices[i] or e.dst != self.vertices[(i + 1) % n]:
                raise InvalidGraph(
                    f"edge {eid!r} does not join {self.vertices[i]!r} to "
                    f"{self.vertices[(i + 1) % n]!r}")

    def to_json(self) -> list:
        out = []
        for v, e in zip(self.vertices, self.edges):
            out.extend((v, e))
        return out

    @staticmethod
    def from_json(items) -> "Cycle":
        if not items or len(items) % 2:
            raise ValueError("cycle list must alternate vertex, edge")
        return Cycle.build(tuple(items[0::2]), tuple(items[1::2]))


def cycles(graph: Graph) -> list:
    """All simple cycles, anchored and sorted at their smallest vertex.

    Parallel slots yield distinct cycles; a slot of multiplicity above one
    still appears once (its parallel copies are indistinguishable by id).
    """
    found = []
    index = {v: i for i, v in enumerate(graph.vertices)}

    def walk(base, v, path_vs, path_es, seen):
        for e in graph.out_edges(v):
            if e.dst == base:
                found.append(Cycle(tuple(path_vs), tuple(path_es) + (e.id,)))
            elif e.dst not in seen and index[e.dst] > index[base]:
                seen.add(e.dst)
                path_vs.append(e.dst)
                path_es.append(e.id)
                walk(base, e.dst, path_vs, path_es, seen)
                path_vs.pop()
                path_es.pop()
                seen.discard(e.dst)

    for base in graph.vertices:
        walk(base, base, [base], [], {base})
    found.sort(key=lambda c: (c.vertices, c.edges))
    return found


def cycle_exits(graph: Graph, cycle: Cycle) -> list:
    """Exits of a cycle: slots leaving a cycle vertex other than the cycle edge.

    A slot of multiplicity above one on the cycle is itself an exit (its
    parallel copies leave the cycle path).  Returned as (edge, is_parallel).
    """
    cyc_edges = set(cycle.edges)
    out = []
    for v in cycle.vertices:
        for e in graph.out_edges(v):
            if e.id not in cyc_edges:
                out.append((e, False))
            elif e.mult != 1:
                out.append((e, True))
    return out


def cycles_without_exits(graph: Graph) -> list:
    """Cycles every vertex of which emits exactly one edge in total."""
    return [c for c in cycles(graph)
            if all(graph.out_multiplicity(v) == 1 for v in c.vertices)]


def condition_l(graph: Graph):
    """(True, None) if every cycle has an exit, else (False, witness cycle)."""
    bad = cycles_without_exits(graph)
    return (False, bad[0]) if bad else (True, None)


def _strongly_connected_components(graph: Graph) -> dict:
    """Tarjan SCCs; returns vertex -> frozenset(component)."""
    index = {}
    low = {}
    stack = []
    on_stack = set()
    comp = {}
    counter = [0]

    def strongconnect(v):
        work = [(v, iter(graph.out_edges(v)))]
        index[v] = low[v] = counter[0]
        counter[0] += 1
        stack.append(v)
        on_stack.add(v)
        while work:
            node, it = work[-1]
            advanced = False
            for e in it:
                w = e.dst
                if w not in index:
                    index[w] = low[w] = counter[0]
                    counter[0] += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(graph.out_edges(w))))
                    advanced = True
                    break
                if w in on_stack:
                    low[node] = min(low[node], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[node])
            if low[node] == index[node]:
                members = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    members.append(w)
                    if w == node:
                        break
                ms = frozenset(members)
                for w in members:
                    comp[w] = ms

    for v in graph.vertices:
        if v not in index:
            strongconnect(v)
    return comp


def cycles_without_k(graph: Graph) -> list:
    """Cycles whose vertices lie on no other return path.

    A cycle is such exactly when its vertex set is a whole strongly connected
    component, the slots inside that component are precisely the cycle slots,
    and each has multiplicity one.
    """
    comp = _strongly_connected_components(graph)
    out = []
    for c in cycles(graph):
        vs = set(c.vertices)
        if comp[c.start] != frozenset(vs):
            continue
        inside = [e for v in vs for e in graph.out_edges(v) if e.dst in vs]
        if set(e.id for e in inside) == set(c.edges) and all(
                e.mult == 1 for e in inside):
            out.append(c)
    return out


def condition_k(graph: Graph):
    """(True, None) if every cycle vertex has two return paths, else a witness."""
    bad = cycles_without_k(graph)
    return (False, bad[0]) if bad else (True, None)


# -- downward directedness, maximal tails, minimum hereditary saturated core ----


def downward_directed(graph: Graph, subset=None):
    """Whether each vertex pair in the subset reaches a common subset vertex.

    Returns (True, None) or (False, (u, v)) with a pair lacking a common
    lower bound.  The subset defaults to all vertices and must be nonempty.
    """
    vs = sorted(subset) if subset is not None else list(graph.vertices)
    if not vs:
        raise EmptySet("downward directedness of the empty vertex set")
    inside = frozenset(vs)
    desc = {v: graph.descendants(v) & inside for v in vs}
    for i, u in enumerate(vs):
        for v in vs[i + 1:]:
            if not (desc[u] & desc[v]):
                return False, (u, v)
    return True, None


def maximal_tails(graph: Graph) -> list:
    """All maximal tails, each a frozenset, sorted by size then lexicographically.

    A maximal tail is a nonempty vertex set that is closed under predecessors,
    gives every regular member an edge back into the set, and is downward
    directed.  In a finite graph each one is the reaching set of a sink, an
    infinite emitter, or a cycle vertex.
    """
    anchors = [v for v in graph.vertices
               if not graph.is_regular(v)]
    on_cycle = set()
    for c in cycles(graph):
        on_cycle.update(c.vertices)
    anchors.extend(sorted(on_cycle))
    tails = {graph.reaching_set(w) for w in anchors}
    out = sorted(tails, key=lambda s: (len(s), sorted(s)))
    for m in out:
        assert _is_maximal_tail(graph, m), f"tail certification failed: {sorted(m)}"
    return out


def _is_maximal_tail(graph: Graph, subset) -> bool:
    m = frozenset(subset)
    if not m:
        return False
    for w in m:
        if not graph.reaching_set(w) <= m:
            return False
        if graph.is_regular(w) and not (graph.successors(w) & m):
            return False
    return downward_directed(graph, m)[0]


@dataclass(frozen=True)
class StrongCsp:
    """Result of the reachable-minimum test on hereditary saturated sets.

    witness is the intersection of all nonempty hereditary saturated sets;
    holds is True when that intersection is nonempty and every vertex reaches
    it.  When it is nonempty but missed by some vertex, missing names one.
    """

    holds: bool
    witness: frozenset
    missing: object = None


def strong_csp(graph: Graph,
               bound: int = DEFAULT_ENUMERATION_BOUND) -> StrongCsp:
    """Whether a least nonempty hereditary saturated set exists and all reach it."""
    core = frozenset(graph.vertices)
    for s in enumerate_hereditary_saturated(graph, bound):
        if s:
            core &= s
    if not core:
        return StrongCsp(False, core)
    for v in graph.vertices:
        if not (graph.descendants(v) & core):
            return StrongCsp(False, core, v)
    return StrongCsp(True, core)


# -- serialization ---------------------------------------------------------------


def graph_to_json(graph: Graph) -> dict:
    return {
        "vertices": list(graph.vertices),
        "edges": [
            {"id": e.id, "src": e.src, "dst": e.dst,
             "mult": "inf" if e.is_omega() else e.mult}
            for e in graph.edges
        ],
    }


def graph_from_json(data) -> Graph:
    if not isinstance(data, dict):
        raise InvalidGraph("graph JSON must be an object")
    try:
        vertices = data["vertices"]
        raw_edges = data["edges"]
    except (KeyError, TypeError) as exc:
        raise InvalidGraph(f"graph JSON missing field: {exc}") from exc
    if not isinstance(vertices, list) or not isinstance(raw_edges, list):
        raise InvalidGraph("graph JSON fields have wrong types")
    edges = []
    for raw in raw_edges:
        if not isinstance(raw, dict):
            raise InvalidGraph(f"edge entry must be an object: {raw!r}")
        extra = set(raw) - {"id", "src", "dst", "mult"}
        if extra:
            raise InvalidGraph(f"unknown edge fields {sorted(extra)}")
        try:
            mult = raw.get("mult", 1)
            if mult == "inf":
                mult = OMEGA
            edges.append(Edge(raw["id"], raw["src"], raw["dst"], mult))
        except KeyError as exc:
            raise InvalidGraph(f"edge entry missing field {exc}") from exc
    return Graph(vertices, edges)


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def graph_to_dot(graph: Graph, name: str = "E", highlight=()) -> str:
    """Deterministic DOT rendering; highlighted vertices are drawn filled."""
    hi = frozenset(highlight)
    lines = [f"digraph {_dot_quote(name)} {{"]
    for v in graph.vertices:
        attrs = [f"label={_dot_quote(v)}"]
        if v in hi:
            attrs.append("style=filled")
        lines.append(f"  {_dot_quote(v)} [{', '.join(attrs)}];")
    for e in graph.edges:
        label = e.id if e.mult == 1 else (
            f"{e.id} (ω)" if e.is_omega() else f"{e.id} (x{e.mult})")
        lines.append(f"  {_dot_quote(e.src)} -> {_dot_quote(e.dst)} "
                     f"[label={_dot_quote(label)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
