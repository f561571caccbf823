"""Small graph constructions shared by a few test modules."""

from sstwalk.graphs import Graph, build_graph


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return build_graph(outer + inner + spokes, 10)
