"""Prime components P_U, minimal primes, symbolic powers, and the
ordinary-versus-symbolic equality verdict with witnesses.

Symbolic powers are evaluated through the minimal-prime intersection
formula: the binomial edge ideal is the intersection of the primes P_U,
each P_U is a maximal-minor prime whose symbolic and ordinary powers
agree, so the t-th symbolic power is the intersection of the P_U^t over
the minimal primes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import chain, combinations

from .bei import binomial_edge_ideal, edge_binomial, graph_ring
from .errors import SizeLimitError
from .fields import QQ
from .graphs import Graph, components_within, is_connected
from .ideals import Ideal, intersect_all
from .rings import Polynomial

MINIMAL_PRIMES_CAP = 8


@dataclass(frozen=True)
class PrimeComponent:
    """A vertex subset U with the prime it generates: the variables of U
    plus the edge binomials of the complete closures of the components of
    the induced graph on the rest."""

    U: frozenset
    components: tuple  # vertex sets of the induced components, as frozensets
    ideal: Ideal

    @property
    def c(self) -> int:
        return len(self.components)


def prime_component(G: Graph, U, field=QQ) -> PrimeComponent:
    U = frozenset(U)
    if not U <= set(G.vertices):
        raise ValueError("U must be a subset of the vertex set")
    R = graph_ring(G, field)
    rest = set(G.vertices) - U
    comps = tuple(frozenset(c) for c in components_within(G, rest))
    gens = []
    for i in sorted(U):
        gens.append(R.x(i))
        gens.append(R.y(i))
    for comp in comps:
        for a, b in combinations(sorted(comp), 2):
            gens.append(edge_binomial(R, a, b))
    return PrimeComponent(U, comps, Ideal(R, gens))


def _subsets(vertices):
    vs = sorted(vertices)
    return chain.from_iterable(combinations(vs, r) for r in range(len(vs) + 1))


def minimal_primes(G: Graph, field=QQ, cap: int = MINIMAL_PRIMES_CAP, method: str = "containment") -> list:
    """All P_U, filtered to the inclusion-minimal ideals.

    method "containment" (the authority) filters by pairwise Groebner
    membership; "cutpoint" uses the combinatorial criterion that every
    vertex of U must disconnect the induced graph on the rest plus that
    vertex.
    """
    if G.n > cap:
        raise SizeLimitError(f"minimal-prime enumeration capped at n={cap} (2^n subsets)")
    if method == "cutpoint":
        out = []
        for U in _subsets(G.vertices):
            Uset = set(U)
            rest = set(G.vertices) - Uset
            if all(len(components_within(G, rest | {i})) < len(components_within(G, rest)) for i in Uset):
                out.append(prime_component(G, U, field))
        return out
    if method != "containment":
        raise ValueError(f"unknown method {method!r}")
    comps = [prime_component(G, U, field) for U in _subsets(G.vertices)]
    out = []
    for pc in comps:
        minimal = True
        for other in comps:
            if other.U == pc.U:
                continue
            if pc.ideal.contains_ideal(other.ideal) and not other.ideal.contains_ideal(pc.ideal):
                minimal = False
                break
        if minimal:
            out.append(pc)
    return out


def symbolic_power(G: Graph, t: int, field=QQ, cap: int = MINIMAL_PRIMES_CAP) -> Ideal:
    """Intersection over the minimal primes of their t-th powers."""
    if t < 1:
        raise ValueError("symbolic power exponent must be >= 1")
    primes = minimal_primes(G, field, cap=cap)
    if not primes:
        raise ValueError("graph has no prime components")
    return intersect_all([pc.ideal.power(t) for pc in primes])


@dataclass(frozen=True)
class EqualityVerdict:
    """Outcome of comparing the t-th ordinary and symbolic powers."""

    graph: Graph
    t: int
    equal: bool
    witness: Polynomial | None  # in the symbolic but not the ordinary power

    def check_witness(self, ordinary: Ideal, symbolic: Ideal) -> bool:
        if self.equal:
            return self.witness is None
        if self.witness is None:
            return False
        return symbolic.contains(self.witness) and not ordinary.contains(self.witness)


def equality_verdict(G: Graph, t: int, field=QQ, cap: int = MINIMAL_PRIMES_CAP) -> EqualityVerdict:
    """Decide J_G^t = J_G^(t); on inequality, the witness is the first
    reduced-GB element of the symbolic power outside the ordinary power."""
    ordinary = binomial_edge_ideal(G, field).power(t)
    symbolic = symbolic_power(G, t, field, cap=cap)
    if ordinary.equal(symbolic):
        return EqualityVerdict(G, t, True, None)
    witness = None
    for g in symbolic.groebner():
        if not ordinary.contains(g):
            witness = g
            break
    if witness is None:
        raise AssertionError("unequal ideals with no witness: ordinary not inside symbolic")
    return EqualityVerdict(G, t, False, witness)
