"""Graph-class recognizers and labeling constructions.

Covers caterpillar trees, closed and weakly closed graphs (per-labeling
checks plus exhaustive existential searches), comparability via
transitive orientations, net-free graphs, and generalized caterpillars
with explicit construction witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from .errors import SizeLimitError
from .graphs import (
    Graph,
    blocks,
    complement,
    edge,
    is_block_graph,
    is_connected,
    net_graph,
    relabel,
)

LABELING_SEARCH_CAP = 8


@dataclass(frozen=True)
class Labeling:
    """A bijection vertex -> label in {1..n}."""

    sigma: tuple  # sigma[v-1] is the label of vertex v

    def __post_init__(self):
        n = len(self.sigma)
        if sorted(self.sigma) != list(range(1, n + 1)):
            raise ValueError("labeling is not a bijection onto 1..n")

    @staticmethod
    def identity(n: int) -> "Labeling":
        return Labeling(tuple(range(1, n + 1)))

    @staticmethod
    def from_order(order) -> "Labeling":
        """order[k] is the vertex that receives label k+1."""
        sigma = [0] * len(order)
        for pos, v in enumerate(order):
            sigma[v - 1] = pos + 1
        return Labeling(tuple(sigma))

    def label_of(self, v: int) -> int:
        return self.sigma[v - 1]

    def as_dict(self) -> dict:
        return {v + 1: lab for v, lab in enumerate(self.sigma)}

    def apply(self, G: Graph) -> Graph:
        return relabel(G, self.as_dict())


@dataclass(frozen=True)
class VertexPath:
    """A sequence of distinct vertices, consecutive pairs adjacent."""

    vertices: tuple

    def validate(self, G: Graph):
        vs = self.vertices
        if len(set(vs)) != len(vs):
            raise ValueError("path repeats a vertex")
        for a, b in zip(vs, vs[1:]):
            if not G.has_edge(a, b):
                raise ValueError(f"({a}, {b}) is not an edge")

    def __len__(self):
        return len(self.vertices)


def _canonical_seq(seq: tuple) -> tuple:
    rev = tuple(reversed(seq))
    return seq if seq <= rev else rev


def simple_paths(G: Graph):
    """All simple paths (including single vertices), one canonical
    direction each, sorted by length descending then lexicographically."""
    adj = {v: sorted(G.neighbors(v)) for v in G.vertices}
    found = set()

    def extend(path, used):
        found.add(_canonical_seq(tuple(path)))
        for w in adj[path[-1]]:
            if w not in used:
                path.append(w)
                used.add(w)
                extend(path, used)
                used.discard(w)
                path.pop()

    for v in G.vertices:
        extend([v], {v})
    return sorted(found, key=lambda p: (-len(p), p))


# ------------------------------------------------------------- caterpillars

def is_tree(G: Graph) -> bool:
    return is_connected(G) and len(G.edges) == G.n - 1


def is_caterpillar(G: Graph) -> bool:
    """Tree whose non-leaf vertices lie on one path."""
    if not is_tree(G):
        return False
    internal = [v for v in G.vertices if G.degree(v) >= 2]
    if len(internal) <= 1:
        return True
    iset = set(internal)
    degs = []
    ecount = 0
    for v in internal:
        d = len(G.neighbors(v) & iset)
        if d > 2:
            return False
        degs.append(d)
        ecount += d
    ecount //= 2
    if ecount != len(internal) - 1:
        return False  # induced cycle among internal vertices
    return True  # connected follows: acyclic subgraph of a tree with n-1 edges


def central_path(G: Graph) -> VertexPath:
    """A longest induced path of a caterpillar tree (in a tree every path
    is induced); ties broken by lexicographically least vertex sequence."""
    if not is_caterpillar(G):
        raise ValueError("not a caterpillar tree")
    best = simple_paths(G)[0]
    return VertexPath(best)


def caterpillar_labeling(G: Graph) -> Labeling:
    """Labeling used for caterpillar trees: a degree-one endpoint of the
    central path gets 1, then each path vertex precedes its whisker
    vertices, which precede the next path vertex."""
    P = central_path(G).vertices
    pset = set(P)
    order = []
    for v in P:
        order.append(v)
        order.extend(sorted(G.neighbors(v) - pset))
    return Labeling.from_order(order)


# ------------------------------------------------- closed / weakly closed

def is_closed_with_labeling(G: Graph, lab: Labeling) -> bool:
    """Literal closedness condition on the relabeled graph: for edges
    {i,j}, {k,l} with i<j, k<l: i=k forces {j,l}, j=l forces {i,k}."""
    H = lab.apply(G)
    E = H.edges
    for (i, j) in E:
        for (k, l) in E:
            if (i, j) == (k, l):
                continue
            if i == k and edge(j, l) not in E:
                return False
            if j == l and edge(i, k) not in E:
                return False
    return True


def is_weakly_closed_with_labeling(G: Graph, lab: Labeling) -> bool:
    """Literal weak closedness: for i<j<k with {i,k} an edge, {i,j} or
    {j,k} is an edge."""
    H = lab.apply(G)
    E = H.edges
    for (i, k) in E:
        for j in range(i + 1, k):
            if (i, j) not in E and (j, k) not in E:
                return False
    return True


def _search_labeling(G: Graph, triple_ok):
    """Backtracking search for a vertex order whose induced labeling
    satisfies a triple-local condition; returns a Labeling or None."""
    E = G.edges
    order = []
    used = set()

    def place():
        if len(order) == G.n:
            return True
        for v in G.vertices:
            if v in used:
                continue
            ok = True
            for p in range(len(order)):
                for q in range(p + 1, len(order)):
                    if not triple_ok(E, order[p], order[q], v):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                order.append(v)
                used.add(v)
                if place():
                    return True
                used.discard(v)
                order.pop()
        return False

    if place():
        return Labeling.from_order(order)
    return None


def _closed_triple(E, a, b, c):
    # labels of a < b < c; both directions of the closed condition
    ab, ac, bc = edge(a, b) in E, edge(a, c) in E, edge(b, c) in E
    if ab and ac and not bc:
        return False
    if ac and bc and not ab:
        return False
    return True


def _weakly_closed_triple(E, a, b, c):
    if edge(a, c) in E:
        return edge(a, b) in E or edge(b, c) in E
    return True


def find_closed_labeling(G: Graph):
    if G.n > LABELING_SEARCH_CAP:
        raise SizeLimitError(
            f"exhaustive closed-labeling search capped at n={LABELING_SEARCH_CAP}"
        )
    return _search_labeling(G, _closed_triple)


def is_closed(G: Graph) -> bool:
    return find_closed_labeling(G) is not None


def find_weakly_closed_labeling(G: Graph):
    if G.n > LABELING_SEARCH_CAP:
        raise SizeLimitError(
            f"exhaustive weakly-closed-labeling search capped at n={LABELING_SEARCH_CAP}"
        )
    return _search_labeling(G, _weakly_closed_triple)


def is_weakly_closed(G: Graph) -> bool:
    """Exhaustive labeling search up to the cap; larger graphs go through
    comparability of the complement."""
    if G.n <= LABELING_SEARCH_CAP:
        return find_weakly_closed_labeling(G) is not None
    return is_comparability(complement(G))


# ----------------------------------------------------------- comparability

def is_comparability(G: Graph) -> bool:
    """True iff G admits a transitive orientation (backtracking over edge
    directions with transitivity propagation)."""
    E = sorted(G.edges)
    if not E:
        return True
    adj = {v: G.neighbors(v) for v in G.vertices}

    def propagate(orient, u, v):
        """Force u->v plus all consequences; returns False on conflict.
        orient maps sorted edge -> (tail, head)."""
        stack = [(u, v)]
        while stack:
            a, b = stack.pop()
            e = edge(a, b)
            cur = orient.get(e)
            if cur is not None:
                if cur != (a, b):
                    return False
                continue
            orient[e] = (a, b)
            # a->b, b->c  forces  a->c
            for c in adj[b]:
                if c != a and orient.get(edge(b, c)) == (b, c):
                    if c not in adj[a]:
                        return False
                    stack.append((a, c))
            # c->a, a->b  forces  c->b
            for c in adj[a]:
                if c != b and orient.get(edge(c, a)) == (c, a):
                    if c not in adj[b]:
                        return False
                    stack.append((c, b))
        return True

    def solve(orient):
        target = next((e for e in E if e not in orient), None)
        if target is None:
            return True
        for direction in (target, (target[1], target[0])):
            trial = dict(orient)
            if propagate(trial, *direction) and solve(trial):
                return True
        return False

    return solve({})


# --------------------------------------------------------------- net-free

def is_net_free(G: Graph) -> bool:
    """No 6-vertex subset induces the net (triangle with three pendants)."""
    if G.n < 6:
        return True
    net = net_graph().to_networkx()
    g = G.to_networkx()
    for sub in combinations(G.vertices, 6):
        h = g.subgraph(sub)
        if h.number_of_edges() != 6:
            continue
        if sorted(d for _, d in h.degree()) != [1, 1, 1, 3, 3, 3]:
            continue
        if nx.is_isomorphic(h, net):
            return False
    return True


# -------------------------------------------------- generalized caterpillar

@dataclass(frozen=True)
class GenCatWitness:
    """Construction witness: a bare central path (the base caterpillar),
    clique joins on distinct path edges, then whiskers."""

    n: int
    path: VertexPath
    joins: tuple  # ((u, v), t, new_vertices) per clique join
    whiskers: tuple  # (attach_vertex, leaf)

    def base_caterpillar(self) -> Graph:
        """The base caterpillar H (here always the bare path), with the
        original vertex labels of the host graph."""
        vs = self.path.vertices
        g = Graph.empty(self.n)
        return Graph(self.n, frozenset(edge(a, b) for a, b in zip(vs, vs[1:]))) if len(vs) > 1 else g

    def replay(self) -> Graph:
        """Rebuild the host graph from the witness."""
        edges = set()
        vs = self.path.vertices
        for a, b in zip(vs, vs[1:]):
            edges.add(edge(a, b))
        for (e, t, new) in self.joins:
            members = sorted(set(e) | set(new))
            if len(members) != t:
                raise ValueError("inconsistent clique join in witness")
            for a, b in combinations(members, 2):
                edges.add(edge(a, b))
        for (v, leaf) in self.whiskers:
            edges.add(edge(v, leaf))
        return Graph(self.n, frozenset(edges))


def is_generalized_caterpillar(G: Graph):
    """Witness decomposition as a generalized caterpillar, or None.

    A decomposition is found by searching paths P (longest first): every
    block of size >= 3 must meet P in exactly one path edge, and every
    remaining off-path vertex must be a pendant attached to P or to a
    clique vertex.  The witness is validated by replaying it.
    """
    if not is_connected(G) or not is_block_graph(G):
        return None
    big = [frozenset(b) for b in blocks(G) if len(b) >= 3]
    big_vertices = set().union(*big) if big else set()
    for seq in simple_paths(G):
        pset = set(seq)
        pos = {v: i for i, v in enumerate(seq)}
        ok = True
        joins = []
        for b in big:
            inter = b & pset
            if len(inter) != 2:
                ok = False
                break
            u, v = sorted(inter, key=pos.get)
            if pos[v] - pos[u] != 1:
                ok = False
                break
            joins.append((edge(u, v), len(b), tuple(sorted(b - inter))))
        if not ok:
            continue
        whiskers = []
        for w in G.vertices:
            if w in pset or w in big_vertices:
                continue
            nbrs = G.neighbors(w)
            if len(nbrs) != 1:
                ok = False
                break
            (attach,) = nbrs
            if attach not in pset and attach not in big_vertices:
                ok = False
                break
            whiskers.append((attach, w))
        if not ok:
            continue
        witness = GenCatWitness(
            G.n,
            VertexPath(seq),
            tuple(sorted(joins)),
            tuple(sorted(whiskers, key=lambda p: p[1])),
        )
        if witness.replay() == G:
            return witness
    return None


def gencat_labeling(G: Graph) -> Labeling:
    """The weakly-closed labeling for net-free generalized caterpillars:
    walk the central path, labeling each path vertex, then its whiskers,
    then the clique vertices on the next path edge with their whiskers."""
    if not is_net_free(G):
        raise ValueError("graph contains an induced net")
    witness = is_generalized_caterpillar(G)
    if witness is None:
        raise ValueError("not a generalized caterpillar")
    P = witness.path.vertices
    block_on_edge = {e: set(e) | set(new) for (e, t, new) in witness.joins}
    pend = {}
    for attach, leaf in witness.whiskers:
        pend.setdefault(attach, []).append(leaf)
    order = []
    for idx, v in enumerate(P):
        order.append(v)
        order.extend(sorted(pend.get(v, ())))
        if idx + 1 < len(P):
            e = edge(v, P[idx + 1])
            for z in sorted(block_on_edge.get(e, set()) - {v, P[idx + 1]}):
                order.append(z)
                order.extend(sorted(pend.get(z, ())))
    lab = Labeling.from_order(order)
    if not is_weakly_closed_with_labeling(G, lab):
        raise AssertionError("constructed labeling failed the weak-closedness check")
    return lab
