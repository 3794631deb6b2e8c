"""Binomial edge ideals: edge binomial generators, admissible paths, the
combinatorial reduced Groebner basis, initial ideals, and per-labeling
basis degree probing.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import chain, combinations, permutations

from .errors import SizeLimitError
from .fields import QQ
from .graphs import Graph
from .ideals import Ideal
from .recognizers import Labeling
from .rings import Polynomial, RingContext

MIN_DEGREE_CAP = 7


def graph_ring(G: Graph, field=QQ) -> RingContext:
    return RingContext.for_graph(G.n, field)


def edge_binomial(R: RingContext, i: int, j: int) -> Polynomial:
    """f_ij = x_i y_j - x_j y_i with i < j."""
    if i > j:
        i, j = j, i
    return R.x(i) * R.y(j) - R.x(j) * R.y(i)


def binomial_edge_ideal(G: Graph, field=QQ) -> Ideal:
    R = graph_ring(G, field)
    return Ideal(R, [edge_binomial(R, u, v) for (u, v) in sorted(G.edges)])


@dataclass(frozen=True)
class AdmissiblePath:
    """Path i = i_0, ..., i_r = j with every interior vertex below i or
    above j, and no proper interior subsequence forming an i-j path."""

    i: int
    j: int
    interior: tuple

    def monomial_exponents(self, R: RingContext) -> tuple:
        exps = [0] * R.nvars
        for v in self.interior:
            if v > self.j:
                exps[R.index(f"x{v}")] = 1
            else:  # v < i by admissibility
                exps[R.index(f"y{v}")] = 1
        return tuple(exps)

    def monomial(self, R: RingContext) -> Polynomial:
        return Polynomial(R, ((self.monomial_exponents(R), R.field.one),))


def _is_path(G: Graph, seq) -> bool:
    return all(G.has_edge(a, b) for a, b in zip(seq, seq[1:]))


def admissible_paths(G: Graph) -> list:
    """All admissible paths between all pairs i < j, by exhaustive DFS
    with the interior-vertex restriction, condition 2 checked literally on
    every proper interior subsequence."""
    out = []
    for i, j in combinations(G.vertices, 2):
        allowed = {v for v in G.vertices if v < i or v > j}
        found = []

        def walk(v, interior, used):
            for w in sorted(G.neighbors(v)):
                if w == j:
                    found.append(tuple(interior))
                elif w in allowed and w not in used:
                    interior.append(w)
                    used.add(w)
                    walk(w, interior, used)
                    used.discard(w)
                    interior.pop()

        walk(i, [], {i})
        for interior in found:
            minimal = True
            for r in range(len(interior)):
                for sub in combinations(interior, r):
                    if _is_path(G, (i,) + sub + (j,)):
                        minimal = False
                        break
                if not minimal:
                    break
            if minimal:
                out.append(AdmissiblePath(i, j, interior))
    return sorted(out, key=lambda p: (p.i, p.j, p.interior))


def groebner_combinatorial(G: Graph, field=QQ) -> list:
    """The set {u_pi * f_ij} over admissible paths, monic, deduplicated,
    sorted by leading monomial descending (the kernel's canonical order)."""
    R = graph_ring(G, field)
    elems = {}
    for p in admissible_paths(G):
        g = p.monomial(R) * edge_binomial(R, p.i, p.j)
        elems[g.terms] = g
    return sorted(elems.values(), key=lambda g: g.leading_monomial(), reverse=True)


def initial_ideal(G: Graph, field=QQ) -> Ideal:
    """Ideal of leading monomials of the combinatorial basis; a minimal
    generating set (no generator divides another)."""
    R = graph_ring(G, field)
    lms = sorted({g.leading_monomial() for g in groebner_combinatorial(G, field)})
    minimal = []
    for m in lms:
        if not any(all(a <= b for a, b in zip(k, m)) for k in minimal):
            minimal.append(m)
    gens = [Polynomial(R, ((m, R.field.one),)) for m in minimal]
    return Ideal(R, gens)


def gb_max_degree(G: Graph, lab: Labeling | None = None) -> int:
    """Maximum total degree over the combinatorial reduced basis of the
    relabeled graph."""
    H = lab.apply(G) if lab is not None else G
    gb = groebner_combinatorial(H)
    return max((g.total_degree() for g in gb), default=0)


def min_gb_degree(G: Graph) -> int:
    """Minimum of gb_max_degree over all labelings (exhaustive; capped)."""
    if G.n > MIN_DEGREE_CAP:
        raise SizeLimitError(f"labeling minimum capped at n={MIN_DEGREE_CAP}")
    if not G.edges:
        return 0
    best = None
    for perm in permutations(range(1, G.n + 1)):
        d = gb_max_degree(G, Labeling(perm))
        if best is None or d < best:
            best = d
            if best == 2:
                break  # edge binomials are quadratic; no labeling does better
    return best
