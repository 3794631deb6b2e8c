"""Shared brute-force oracles, deliberately independent of the library
implementations they cross-check."""

from __future__ import annotations

from itertools import combinations, permutations, product

import pytest

from bel.graphs import Graph, edge


@pytest.fixture(scope="session")
def small_transversal():
    from bel import corpus

    return corpus.connected_transversal_upto(5)


def oracle_components(G: Graph) -> list:
    """Union-find connected components."""
    parent = {v: v for v in G.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for (u, v) in G.edges:
        parent[find(u)] = find(v)
    comps = {}
    for v in G.vertices:
        comps.setdefault(find(v), set()).add(v)
    return sorted(comps.values(), key=min)


def oracle_cutpoints(G: Graph) -> set:
    """A vertex is a cutpoint iff deleting it increases the number of
    components of its own component."""
    out = set()
    base = oracle_components(G)
    for v in G.vertices:
        rest = [u for u in G.vertices if u != v]
        sub = _induced(G, rest)
        before = sum(1 for c in base if v not in c)
        if len(oracle_components(sub)) - before > 1:
            out.add(v)
    return out


def _induced(G: Graph, verts) -> Graph:
    vs = sorted(verts)
    pos = {v: i + 1 for i, v in enumerate(vs)}
    return Graph.from_edges(
        max(1, len(vs)),
        ((pos[u], pos[v]) for (u, v) in G.edges if u in pos and v in pos),
    )


def oracle_is_biconnected_set(G: Graph, verts) -> bool:
    """verts induces a connected subgraph with no internal cutpoint (an
    edge counts as biconnected)."""
    sub = _induced(G, verts)
    if len(oracle_components(sub)) != 1:
        return False
    if len(verts) == 2:
        return sub.edges != frozenset()
    return not oracle_cutpoints(sub)


def oracle_blocks(G: Graph) -> list:
    """Maximal vertex sets of size >= 2 inducing biconnected subgraphs."""
    cands = []
    vs = sorted(G.vertices)
    for r in range(2, len(vs) + 1):
        for sub in combinations(vs, r):
            if oracle_is_biconnected_set(G, sub):
                cands.append(set(sub))
    out = [b for b in cands if not any(b < c for c in cands)]
    return sorted(out, key=lambda b: (-len(b), sorted(b)))


def oracle_is_comparability(G: Graph) -> bool:
    """Try every orientation of the edges and test transitivity directly.
    Exponential in the edge count; callers keep graphs tiny."""
    E = sorted(G.edges)
    for dirs in product((0, 1), repeat=len(E)):
        arcs = {((u, v) if d == 0 else (v, u)) for (u, v), d in zip(E, dirs)}
        if all((a, d) in arcs
               for (a, b) in arcs for (c, d) in arcs if b == c and a != d):
            return True
    return False


def oracle_special_odd_cycles(facets) -> list:
    """Every special odd cycle of a facet list, by exhaustive search over
    ordered vertex/facet sequences.  Feasible only for tiny complexes."""
    facets = list(facets)
    verts = sorted(set().union(*facets)) if facets else []
    found = []
    for s in range(3, len(facets) + 1, 2):
        for vseq in permutations(verts, s):
            for fseq in permutations(range(len(facets)), s):
                fs = [facets[i] for i in fseq]
                if all(vseq[i] in fs[i] and vseq[(i + 1) % s] in fs[i] for i in range(s)):
                    if all(len(f & set(vseq)) <= 2 for f in fs):
                        found.append((vseq, tuple(fseq)))
    return found
