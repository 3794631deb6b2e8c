"""Simple graphs on labeled vertices 1..n and their structural
decompositions: components, cutpoints, blocks, whiskers, clique joins.

Graphs are immutable; all operations are pure functions.  Decompositions
are delegated to networkx (standard DFS algorithms); the tests cross-check
them against brute-force oracles.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import networkx as nx


def edge(u: int, v: int) -> tuple:
    if u == v:
        raise ValueError(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertex set {1..n}; edges as sorted pairs."""

    n: int
    edges: frozenset

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("vertex count must be positive")
        for (u, v) in self.edges:
            if not (1 <= u < v <= self.n):
                raise ValueError(f"bad edge ({u}, {v}) for n={self.n}")

    @staticmethod
    def from_edges(n: int, pairs) -> "Graph":
        return Graph(n, frozenset(edge(u, v) for u, v in pairs))

    @staticmethod
    def complete(n: int) -> "Graph":
        return Graph.from_edges(n, combinations(range(1, n + 1), 2))

    @staticmethod
    def path(n: int) -> "Graph":
        return Graph.from_edges(n, ((i, i + 1) for i in range(1, n)))

    @staticmethod
    def cycle(n: int) -> "Graph":
        if n < 3:
            raise ValueError("cycle needs at least 3 vertices")
        return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])

    @staticmethod
    def star(leaves: int) -> "Graph":
        """K_{1,leaves} with center 1."""
        return Graph.from_edges(leaves + 1, ((1, i) for i in range(2, leaves + 2)))

    @staticmethod
    def empty(n: int) -> "Graph":
        return Graph(n, frozenset())

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and edge(u, v) in self.edges

    def neighbors(self, v: int) -> set:
        return {b if a == v else a for (a, b) in self.edges if v in (a, b)}

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def to_networkx(self) -> "nx.Graph":
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return g

    def __str__(self):
        return to_text(self)


# ---------------------------------------------------------------- structure

def connected_components(G: Graph) -> list:
    """Maximal connected vertex sets, ordered by least vertex."""
    comps = [set(c) for c in nx.connected_components(G.to_networkx())]
    return sorted(comps, key=min)


def is_connected(G: Graph) -> bool:
    return len(connected_components(G)) == 1


def cutpoints(G: Graph) -> set:
    """Vertices whose removal increases the component count."""
    return set(nx.articulation_points(G.to_networkx()))


def blocks(G: Graph) -> list:
    """Vertex sets of the blocks (maximal 2-connected subgraphs or
    bridges), ordered by size descending then vertex sequence.  Isolated
    vertices form no block."""
    out = [set(b) for b in nx.biconnected_components(G.to_networkx())]
    return sorted(out, key=lambda b: (-len(b), sorted(b)))


def is_block_graph(G: Graph) -> bool:
    """True iff every block induces a complete graph."""
    return all(
        all(G.has_edge(u, v) for u, v in combinations(sorted(b), 2)) for b in blocks(G)
    )


def dominating_set_T(G: Graph) -> set:
    """Vertices adjacent to all others."""
    return {v for v in G.vertices if G.degree(v) == G.n - 1}


def induced_edges(G: Graph, verts) -> set:
    vs = set(verts)
    return {e for e in G.edges if e[0] in vs and e[1] in vs}


def components_within(G: Graph, verts) -> list:
    """Connected components of the induced subgraph on verts (original
    labels), ordered by least vertex."""
    vs = set(verts)
    g = nx.Graph()
    g.add_nodes_from(vs)
    g.add_edges_from(induced_edges(G, vs))
    return sorted((set(c) for c in nx.connected_components(g)), key=min)


def ass_count_is_two(G: Graph) -> bool:
    """Combinatorial test for the binomial edge ideal having exactly two
    associated primes: T_G nonempty, the induced graph on the rest
    disconnected and a disjoint union of complete graphs."""
    if not is_connected(G):
        raise ValueError("requires a connected graph")
    T = dominating_set_T(G)
    if not T:
        return False
    rest = set(G.vertices) - T
    comps = components_within(G, rest)
    if len(comps) < 2:
        return False
    for comp in comps:
        if not all(G.has_edge(u, v) for u, v in combinations(sorted(comp), 2)):
            return False
    return True


# ------------------------------------------------------------ constructions

def add_whisker(G: Graph, v: int) -> Graph:
    """New pendant vertex n+1 attached to v."""
    if not 1 <= v <= G.n:
        raise ValueError(f"vertex {v} out of range")
    return Graph(G.n + 1, G.edges | {edge(v, G.n + 1)})


def clique_join(G: Graph, e: tuple, t: int) -> Graph:
    """Attach K_t to G on the existing edge e: t-2 new vertices adjacent
    to both endpoints of e and to each other."""
    if t < 2:
        raise ValueError("clique size must be at least 2")
    e = edge(*e)
    if e not in G.edges:
        raise ValueError(f"edge {e} not in graph")
    new = list(range(G.n + 1, G.n + t - 1))
    extra = set()
    for u in new:
        extra.add(edge(e[0], u))
        extra.add(edge(e[1], u))
    for u, v in combinations(new, 2):
        extra.add(edge(u, v))
    return Graph(G.n + t - 2, G.edges | extra)


def complement(G: Graph) -> Graph:
    all_pairs = {edge(u, v) for u, v in combinations(G.vertices, 2)}
    return Graph(G.n, frozenset(all_pairs - G.edges))


def disjoint_union(G: Graph, H: Graph) -> Graph:
    shifted = {edge(u + G.n, v + G.n) for (u, v) in H.edges}
    return Graph(G.n + H.n, G.edges | shifted)


def relabel(G: Graph, sigma: dict) -> Graph:
    """Image of G under a vertex bijection sigma: v -> new label."""
    if sorted(sigma) != list(G.vertices) or sorted(sigma.values()) != list(G.vertices):
        raise ValueError("sigma is not a bijection of the vertex set")
    return Graph(G.n, frozenset(edge(sigma[u], sigma[v]) for (u, v) in G.edges))


def net_graph() -> Graph:
    """Triangle {1,2,3} with pendants 4,5,6 at 1,2,3."""
    return Graph.from_edges(6, [(1, 2), (1, 3), (2, 3), (1, 4), (2, 5), (3, 6)])


# -------------------------------------------------------------------- text

class GraphParseError(ValueError):
    pass


def from_text(text: str) -> Graph:
    """Parse the graph text format: optional "n <count>" header, one
    "u v" edge per line, '#' comments and blank lines ignored."""
    n = None
    pairs = []
    max_seen = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if len(parts) != 2 or n is not None:
                raise GraphParseError(f"line {lineno}: bad header {raw!r}")
            try:
                n = int(parts[1])
            except ValueError:
                raise GraphParseError(f"line {lineno}: bad vertex count {parts[1]!r}")
            continue
        if len(parts) != 2:
            raise GraphParseError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"line {lineno}: non-integer endpoint in {raw!r}")
        if u == v:
            raise GraphParseError(f"line {lineno}: loop at {u}")
        if u < 1 or v < 1:
            raise GraphParseError(f"line {lineno}: vertices are 1-indexed")
        pairs.append((u, v))
        max_seen = max(max_seen, u, v)
    if n is None:
        n = max_seen
    if n < 1:
        raise GraphParseError("empty input and no 'n' header")
    if max_seen > n:
        raise GraphParseError(f"edge endpoint {max_seen} exceeds declared n={n}")
    return Graph.from_edges(n, pairs)


def from_file(path) -> Graph:
    with open(path) as fh:
        return from_text(fh.read())


def to_text(G: Graph) -> str:
    lines = [f"n {G.n}"]
    lines += [f"{u} {v}" for (u, v) in sorted(G.edges)]
    return "\n".join(lines) + "\n"
