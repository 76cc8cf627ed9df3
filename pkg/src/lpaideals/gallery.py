"""Small named graphs exercising every corner of the ideal calculus.

Each builder returns a fresh Graph.  The shapes are chosen so that between
them they cover: exitless cycles, cycles with exits, sinks, infinite
emitters with and without breaking vertices, comparable and incomparable
hereditary saturated sets, and quotients that split breaking vertices.
"""

from __future__ import annotations

from .graphs import OMEGA, Edge, Graph


def one_loop() -> Graph:
    """Single vertex carrying a single loop; the algebra of Laurent polynomials."""
    return Graph(["v"], [Edge("e", "v", "v")])


def loop_chain() -> Graph:
    """Two looped vertices u, w joined by u->w; u's loop has an exit, w's has none."""
    return Graph(["u", "w"], [
        Edge("uu", "u", "u"),
        Edge("uw", "u", "w"),
        Edge("ww", "w", "w"),
    ])


def petals(count: int = 3) -> Graph:
    """A central sink v0 fed by `count` petal vertices, each with two loops.

    Every petal keeps its own pair of loops, so the petals are pairwise
    unreachable from one another and each complement-of-a-petal is a prime
    coordinate; the hub {v0} is hereditary and saturated.
    """
    if count < 1:
        raise ValueError("need at least one petal")
    vertices = ["v0"] + [f"v{i}" for i in range(1, count + 1)]
    edges = []
    for i in range(1, count + 1):
        v = f"v{i}"
        edges.append(Edge(f"p{i}a", v, v))
        edges.append(Edge(f"p{i}b", v, v))
        edges.append(Edge(f"s{i}", v, "v0"))
    return Graph(vertices, edges)


def double_loop_chain() -> Graph:
    """Chain v3 -> v2 -> v1 with two loops on every vertex; satisfies condition (K)."""
    edges = [Edge("c32", "v3", "v2"), Edge("c21", "v2", "v1")]
    for v in ("v1", "v2", "v3"):
        edges.append(Edge(f"{v}a", v, v))
        edges.append(Edge(f"{v}b", v, v))
    return Graph(["v1", "v2", "v3"], edges)


def sink_fork() -> Graph:
    """One source v0 feeding two sinks v-1 and v1; not downward directed."""
    return Graph(["v-1", "v0", "v1"], [
        Edge("l", "v0", "v-1"),
        Edge("r", "v0", "v1"),
    ])


def omega_fan() -> Graph:
    """v emits an infinite bundle to sink w1 and a single edge to sink w2.

    v breaks over {w1}: the bundle lands inside, one edge stays out.
    """
    return Graph(["v", "w1", "w2"], [
        Edge("f", "v", "w1", OMEGA),
        Edge("g", "v", "w2"),
    ])


def omega_loop() -> Graph:
    """u carries a loop and emits an infinite bundle to the sink h.

    u breaks over {h}; the quotient by ({h}, {}) splits u into a looped
    vertex with an edge onto a fresh sink.
    """
    return Graph(["h", "u"], [
        Edge("e", "u", "u"),
        Edge("f", "u", "h", OMEGA),
    ])


def plain_chain(length: int = 3) -> Graph:
    """Loop-free chain v<length> -> ... -> v1; only the full vertex set is

    hereditary and saturated among the nonempty subsets, since saturation
    walks the chain upward from the final sink.
    """
    if length < 1:
        raise ValueError("need at least one vertex")
    vertices = [f"v{i}" for i in range(1, length + 1)]
    edges = [Edge(f"c{i}", f"v{i}", f"v{i-1}") for i in range(2, length + 1)]
    return Graph(vertices, edges)


def two_sinks() -> Graph:
    """Two isolated sinks; the minimal hereditary saturated sets intersect trivially."""
    return Graph(["a", "b"], [])


ALL_BUILDERS = {
    "one_loop": one_loop,
    "loop_chain": loop_chain,
    "petals3": petals,
    "double_loop_chain": double_loop_chain,
    "sink_fork": sink_fork,
    "omega_fan": omega_fan,
    "omega_loop": omega_loop,
    "plain_chain": plain_chain,
    "two_sinks": two_sinks,
}


def corpus() -> dict:
    """Name -> Graph for every builder at its default size."""
    return {name: build() for name, build in ALL_BUILDERS.items()}
