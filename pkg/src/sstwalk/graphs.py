"""Simple connected graphs with a canonical arc ordering, plus graph families.

Arcs are ordered pairs (tail, head) over adjacent vertices, enumerated in
lexicographic order; the neighbor order sigma_u at each vertex is ascending.
Fixing both makes every coin matrix and every reduction reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    """Immutable simple connected graph with canonical arc indexing."""

    n: int
    edges: tuple[tuple[int, int], ...]
    neighbors: tuple[tuple[int, ...], ...] = field(repr=False)
    arcs: tuple[tuple[int, int], ...] = field(repr=False)
    arc_index: dict[tuple[int, int], int] = field(repr=False, compare=False)

    def degree(self, u: int) -> int:
        return len(self.neighbors[u])

    def adjacent(self, u: int, v: int) -> bool:
        return v in self.neighbors[u]

    def sigma(self, u: int) -> tuple[int, ...]:
        """Neighbor order at u (ascending vertex order)."""
        return self.neighbors[u]

    def sigma_pos(self, u: int, v: int) -> int:
        """Position of neighbor v in sigma_u."""
        return self.neighbors[u].index(v)

    def reverse_arc(self, arc_id: int) -> int:
        u, v = self.arcs[arc_id]
        return self.arc_index[(v, u)]

    @property
    def num_arcs(self) -> int:
        return len(self.arcs)


def build_graph(edges, n: int) -> Graph:
    """Build a Graph from an edge list; rejects loops, out-of-range vertices
    and disconnected inputs.  Duplicate edges are deduplicated."""
    if n < 1:
        raise GraphError("graph needs at least one vertex")
    canon = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"vertex out of range in edge ({u},{v})")
        if u == v:
            raise GraphError(f"loop at vertex {u} not allowed")
        canon.add((min(u, v), max(u, v)))
    nbrs = [set() for _ in range(n)]
    for u, v in canon:
        nbrs[u].add(v)
        nbrs[v].add(u)
    # connectivity
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for v in nbrs[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    if len(seen) != n:
        raise GraphError("graph is disconnected")
    neighbors = tuple(tuple(sorted(s)) for s in nbrs)
    arcs = tuple((u, v) for u in range(n) for v in neighbors[u])
    arc_index = {arc: i for i, arc in enumerate(arcs)}
    return Graph(n=n, edges=tuple(sorted(canon)), neighbors=neighbors,
                 arcs=arcs, arc_index=arc_index)


def parse_graph(text: str) -> Graph:
    """Parse the text format: first line ``n <count>``, then ``u v`` edges;
    ``#`` starts a comment."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines or not lines[0].startswith("n "):
        raise GraphError("graph file must start with 'n <count>'")
    n = int(lines[0].split()[1])
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"bad edge line: {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return build_graph(edges, n)


def format_graph(g: Graph) -> str:
    out = [f"n {g.n}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


# -- families ----------------------------------------------------------------


@dataclass(frozen=True)
class FamilySpec:
    """A named graph family instance; ``build`` returns (graph, a, b)."""

    kind: str
    m: int | None = None
    c: int | None = None
    d: int | None = None
    k: int | None = None
    n: int | None = None
    cycles: tuple[int, ...] | None = None
    base: Graph | None = None

    def build(self) -> tuple[Graph, int, int]:
        return build_family(self)


def build_family(spec: FamilySpec) -> tuple[Graph, int, int]:
    if spec.kind == "k2m":
        return complete_bipartite_k2m(spec.m)
    if spec.kind == "circulant":
        return circulant_2m(spec.m, spec.c, spec.d)
    if spec.kind == "double_cone":
        return double_cone_cycles(list(spec.cycles))
    if spec.kind == "gp":
        return generalized_path(spec.k, spec.n)
    if spec.kind == "cone_over":
        return double_cone_over(spec.base)
    raise GraphError(f"unknown family kind {spec.kind!r}")


def complete_bipartite_k2m(m: int) -> tuple[Graph, int, int]:
    """K_{2,m}; marked pair = the two vertices of degree m (vertices 0, 1)."""
    if m < 1:
        raise GraphError("K_{2,m} needs m >= 1")
    edges = [(0, 2 + i) for i in range(m)] + [(1, 2 + i) for i in range(m)]
    return build_graph(edges, m + 2), 0, 1


def circulant_2m(m: int, c: int, d: int) -> tuple[Graph, int, int]:
    """The 4-regular circulant on 2m vertices with connection set {+-c, +-d},
    c + d = m; marked pair = (0, m)."""
    if c > d:
        c, d = d, c
    if not (0 <= c and d <= m and c != d and c + d == m):
        raise GraphError("circulant needs 0 <= c,d <= m, c != d, c + d = m")
    if c == 0 or d == m:
        raise GraphError("circulant with c=0 or d=m is not simple (loops/multi-edges)")
    nvert = 2 * m
    edges = []
    for i in range(nvert):
        edges.append((i, (i + c) % nvert))
        edges.append((i, (i + d) % nvert))
    return build_graph(edges, nvert), 0, m


def double_cone_cycles(ms: list[int]) -> tuple[Graph, int, int]:
    """Double cone over the disjoint union of cycles C_{4m_j}; marked pair =
    the two conical vertices (0, 1)."""
    if not ms or any(m < 1 for m in ms):
        raise GraphError("double cone needs cycle parameters m_j >= 1")
    edges = []
    offset = 2
    for m in ms:
        length = 4 * m
        for i in range(length):
            edges.append((offset + i, offset + (i + 1) % length))
        offset += length
    for v in range(2, offset):
        edges.append((0, v))
        edges.append((1, v))
    return build_graph(edges, offset), 0, 1


def double_cone_over(base: Graph) -> tuple[Graph, int, int]:
    """Double cone over an arbitrary base graph; conical vertices are (0, 1),
    base vertex v becomes v + 2."""
    edges = [(u + 2, v + 2) for u, v in base.edges]
    for v in range(base.n):
        edges.append((0, v + 2))
        edges.append((1, v + 2))
    return build_graph(edges, base.n + 2), 0, 1


def generalized_path(k: int, n: int) -> tuple[Graph, int, int]:
    """GP(k, n): k paths P_n glued at both endpoints; marked pair = the two
    glued endpoints, of degree k.

    Vertices: a = 0; path j occupies 1 + j(n-2) .. (j+1)(n-2); b = k(n-2)+1.
    This numbering aligns the ascending neighbor orders of a and b path by
    path, so the positional W-identification matches paths.
    """
    if k < 1 or n < 3:
        raise GraphError("GP(k,n) needs k >= 1 and n >= 3")
    inner = n - 2
    b = k * inner + 1
    edges = []
    for j in range(k):
        start = 1 + j * inner
        edges.append((0, start))
        for i in range(inner - 1):
            edges.append((start + i, start + i + 1))
        edges.append((start + inner - 1, b))
    return build_graph(edges, b + 1), 0, b


def cycle_graph(length: int) -> Graph:
    if length < 3:
        raise GraphError("cycle needs length >= 3")
    return build_graph([(i, (i + 1) % length) for i in range(length)], length)


def prism_graph() -> Graph:
    """Triangular prism C3 x K2: 3-regular with a 2-dimensional adjacency kernel."""
    tri = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]
    rungs = [(0, 3), (1, 4), (2, 5)]
    return build_graph(tri + rungs, 6)


def complete_multipartite(sizes: list[int]) -> Graph:
    parts = []
    v = 0
    for s in sizes:
        parts.append(list(range(v, v + s)))
        v += s
    edges = []
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            edges.extend((a, b) for a in parts[i] for b in parts[j])
    return build_graph(edges, v)
