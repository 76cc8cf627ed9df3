"""Graph data model, closures, quotients, cycles, and structural predicates."""

import pytest

from lpaideals.errors import (
    EmptySet,
    InvalidGraph,
    NotAdmissible,
    NotHereditarySaturated,
    TooLarge,
    UnknownVertex,
)
from lpaideals.gallery import (
    corpus,
    double_loop_chain,
    loop_chain,
    omega_fan,
    omega_loop,
    one_loop,
    petals,
    plain_chain,
    sink_fork,
    two_sinks,
)
from lpaideals.graphs import (
    OMEGA,
    Cycle,
    Edge,
    Graph,
    admissible_leq,
    admissible_pair,
    breaking_vertices,
    condition_k,
    condition_l,
    cycle_exits,
    cycles,
    cycles_without_exits,
    downward_directed,
    enumerate_hereditary_saturated,
    graph_from_json,
    graph_to_dot,
    graph_to_json,
    hereditary_saturated_closure,
    is_hereditary,
    is_saturated,
    maximal_tails,
    quotient_graph,
    strong_csp,
)


class TestGraphModel:
    def test_vertices_are_sorted_and_deduplicated(self):
        g = Graph(["b", "a"], [])
        assert g.vertices == ("a", "b")
        with pytest.raises(InvalidGraph):
            Graph(["a", "a"], [])
        with pytest.raises(InvalidGraph):
            Graph([], [])

    def test_edge_validation(self):
        with pytest.raises(UnknownVertex):
            Graph(["a"], [Edge("e", "a", "b")])
        with pytest.raises(InvalidGraph):
            Graph(["a"], [Edge("e", "a", "a"), Edge("e", "a", "a")])
        with pytest.raises(InvalidGraph):
            Graph(["a"], [Edge("e", "a", "a", 0)])
        with pytest.raises(InvalidGraph):
            Graph(["a"], [Edge("e", "a", "a", True)])
        assert Graph(["a"], [Edge("e", "a", "a", OMEGA)]).edges[0].is_omega()

    def test_immutable(self):
        g = one_loop()
        with pytest.raises(AttributeError):
            g.vertices = ()

    def test_vertex_classes(self):
        g = omega_fan()
        assert g.vertex_class("v") == "infinite_emitter"
        assert g.vertex_class("w1") == "sink"
        assert loop_chain().vertex_class("u") == "regular"

    def test_out_multiplicity_counts_slots(self):
        g = Graph(["a"], [Edge("e", "a", "a", 3)])
        assert g.out_multiplicity("a") == 3
        assert omega_fan().out_multiplicity("v") == OMEGA

    def test_reachability(self):
        g = plain_chain()
        assert g.descendants("v3") == {"v1", "v2", "v3"}
        assert g.reaching_set("v1") == {"v1", "v2", "v3"}
        assert g.reaches("v3", "v1") and not g.reaches("v1", "v3")
        with pytest.raises(UnknownVertex):
            g.descendants("nope")


class TestHereditarySaturated:
    def test_predicates(self):
        g = loop_chain()
        assert is_hereditary(g, {"w"}) and is_saturated(g, {"w"})
        assert not is_hereditary(plain_chain(), {"v2"})
        assert not is_saturated(plain_chain(), {"v1"})

    def test_closure_fixtures(self):
        g = loop_chain()
        assert hereditary_saturated_closure(g, {"u"}) == {"u", "w"}
        assert hereditary_saturated_closure(g, {"w"}) == {"w"}
        # saturation of a chain walks upward from the sink
        assert hereditary_saturated_closure(plain_chain(), {"v1"}) == {
            "v1", "v2", "v3"}
        with pytest.raises(UnknownVertex):
            hereditary_saturated_closure(g, {"nope"})

    def test_enumeration_fixtures(self):
        assert enumerate_hereditary_saturated(one_loop()) == [
            frozenset(), frozenset({"v"})]
        # hub plus any union of petals
        assert len(enumerate_hereditary_saturated(petals())) == 9
        got = enumerate_hereditary_saturated(plain_chain())
        assert got == [frozenset(), frozenset({"v1", "v2", "v3"})]

    def test_enumeration_bound(self):
        with pytest.raises(TooLarge):
            enumerate_hereditary_saturated(petals(), bound=2)

    def test_breaking_vertices(self):
        g = omega_fan()
        assert breaking_vertices(g, {"w1"}) == {"v"}
        assert breaking_vertices(g, {"w2"}) == frozenset()
        # nothing is left outside, so nothing breaks
        assert breaking_vertices(g, {"w1", "w2"}) == frozenset()
        assert breaking_vertices(g, frozenset()) == frozenset()


class TestAdmissiblePairs:
    def test_validation(self):
        g = omega_fan()
        pair = admissible_pair(g, {"w1"}, {"v"})
        assert pair.vertices == {"w1"} and pair.breaking == {"v"}
        with pytest.raises(NotHereditarySaturated):
            admissible_pair(plain_chain(), {"v2"})
        with pytest.raises(NotAdmissible):
            admissible_pair(g, {"w2"}, {"v"})
        with pytest.raises(UnknownVertex):
            admissible_pair(g, {"nope"})

    def test_containment_order(self):
        g = omega_fan()
        small = admissible_pair(g, {"w1"})
        chosen = admissible_pair(g, {"w1"}, {"v"})
        big = admissible_pair(g, {"w1", "w2"})
        assert admissible_leq(small, chosen)
        assert not admissible_leq(chosen, small)
        assert admissible_leq(small, big)
        # the gap idempotent of v lies in no proper graded ideal above it
        assert not admissible_leq(chosen, big)


class TestQuotient:
    def test_unchosen_breaking_vertex_splits(self):
        g = omega_loop()
        q = quotient_graph(g, admissible_pair(g, {"h"}))
        assert set(q.graph.vertices) == {"u", "u'"}
        assert q.sink_for("u") == "u'"
        assert q.is_primed_vertex("u'")
        assert q.graph.is_sink("u'")
        # the loop is kept and doubled onto the primed sink
        ids = sorted(e.id for e in q.graph.edges)
        assert ids == ["e", "e'"]
        assert q.graph.edge("e'").dst == "u'"

    def test_chosen_breaking_vertex_does_not_split(self):
        g = omega_loop()
        q = quotient_graph(g, admissible_pair(g, {"h"}, {"u"}))
        assert set(q.graph.vertices) == {"u"}
        assert [e.id for e in q.graph.edges] == ["e"]

    def test_quotient_drops_edges_into_the_ideal(self):
        g = omega_fan()
        q = quotient_graph(g, admissible_pair(g, {"w1", "w2"}))
        assert set(q.graph.vertices) == {"v"}
        assert q.graph.edges == ()

    def test_quotient_by_empty_pair_is_the_graph(self):
        g = loop_chain()
        q = quotient_graph(g, admissible_pair(g, frozenset()))
        assert q.graph == g


class TestCycles:
    def test_rotation_normalization(self):
        c = Cycle.build(("b", "a"), ("e2", "e1"))
        assert c.vertices == ("a", "b") and c.edges == ("e1", "e2")
        assert c.start == "a"

    def test_duplicate_vertices_rejected(self):
        with pytest.raises(ValueError):
            Cycle.build(("a", "a"), ("e1", "e2"))

    def test_json_round_trip(self):
        c = Cycle.build(("a", "b"), ("e1", "e2"))
        assert Cycle.from_json(c.to_json()) == c
        with pytest.raises(ValueError):
            Cycle.from_json(["a", "e1", "b"])

    def test_enumeration(self):
        g = double_loop_chain()
        found = cycles(g)
        assert len(found) == 6
        assert all(len(c) == 1 for c in found)
        two = Graph(["a", "b"], [Edge("ab", "a", "b"), Edge("ba", "b", "a")])
        assert cycles(two) == [Cycle(("a", "b"), ("ab", "ba"))]

    def test_exits_and_multiplicity(self):
        g = loop_chain()
        (loop_u,) = [c for c in cycles(g) if c.start == "u"]
        assert [(e.id, par) for e, par in cycle_exits(g, loop_u)] == [("uw", False)]
        fat = Graph(["a"], [Edge("e", "a", "a", 2)])
        (c,) = cycles(fat)
        assert [(e.id, par) for e, par in cycle_exits(fat, c)] == [("e", True)]
        assert cycles_without_exits(fat) == []

    def test_check_in(self):
        g = loop_chain()
        Cycle.build(("u",), ("uu",)).check_in(g)
        with pytest.raises(InvalidGraph):
            Cycle.build(("u",), ("ww",)).check_in(g)


class TestConditions:
    def test_condition_l(self):
        holds, witness = condition_l(one_loop())
        assert not holds and witness.vertices == ("v",)
        assert condition_l(loop_chain())[0] is False  # the w loop has no exit
        assert condition_l(double_loop_chain()) == (True, None)

    def test_condition_k(self):
        assert condition_k(double_loop_chain()) == (True, None)
        holds, witness = condition_k(loop_chain())
        assert not holds and witness.start == "u"
        # a vertex on two distinct return paths but with a lone-cycle neighbour
        assert condition_k(petals())[0] is True

    def test_downward_directed(self):
        assert downward_directed(plain_chain()) == (True, None)
        holds, pair = downward_directed(sink_fork())
        assert not holds and set(pair) == {"v-1", "v1"}
        assert downward_directed(sink_fork(), {"v0", "v1"}) == (True, None)
        with pytest.raises(EmptySet):
            downward_directed(one_loop(), frozenset())

    def test_maximal_tails(self):
        assert maximal_tails(plain_chain()) == [frozenset({"v1", "v2", "v3"})]
        assert maximal_tails(petals()) == [
            frozenset({"v1"}), frozenset({"v2"}), frozenset({"v3"}),
            frozenset({"v0", "v1", "v2", "v3"}),
        ]
        assert maximal_tails(two_sinks()) == [frozenset({"a"}), frozenset({"b"})]

    def test_strong_csp(self):
        good = strong_csp(plain_chain())
        assert good.holds and good.witness == {"v1", "v2", "v3"}
        bad = strong_csp(sink_fork())
        assert not bad.holds and bad.witness == frozenset()
        # omega_fan: both sinks are hereditary saturated, cores intersect empty
        assert not strong_csp(omega_fan()).holds


class TestSerialization:
    def test_graph_json_round_trip(self):
        for name, g in corpus().items():
            assert graph_from_json(graph_to_json(g)) == g, name

    def test_graph_json_validation(self):
        with pytest.raises(InvalidGraph):
            graph_from_json(["not", "an", "object"])
        with pytest.raises(InvalidGraph):
            graph_from_json({"vertices": ["a"]})
        with pytest.raises(InvalidGraph):
            graph_from_json({"vertices": ["a"],
                             "edges": [{"id": "e", "src": "a", "dst": "a",
                                        "mult": 1, "bogus": 2}]})

    def test_omega_serialized_as_inf(self):
        data = graph_to_json(omega_fan())
        mults = {e["id"]: e["mult"] for e in data["edges"]}
        assert mults == {"f": "inf", "g": 1}

    def test_dot_output(self):
        dot = graph_to_dot(omega_fan())
        assert dot.startswith("digraph")
        assert "ω" in dot  # infinite bundles are labelled with omega
        marked = graph_to_dot(one_loop(), highlight={"v"})
        assert "style=filled" in marked
