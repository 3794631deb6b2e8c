"""Ideal-level algebra: membership, canonical equality, sum, product,
power, and intersection via a single-variable elimination order.

Equality and membership always go through the cached reduced Groebner
basis, which is canonical for the ideal under the ring's lex order.
"""

from __future__ import annotations

from itertools import combinations_with_replacement

from . import kernel
from .rings import Polynomial, RingContext


class Ideal:
    """An ideal given by generators, with a lazily cached reduced GB."""

    def __init__(self, ring: RingContext, gens):
        self.ring = ring
        self.gens = tuple(g for g in gens if not g.is_zero)
        for g in self.gens:
            if g.ring != ring:
                raise ValueError("generator from a different ring")
        self._gb = None

    def groebner(self):
        """The canonical reduced Groebner basis (monic, interreduced,
        sorted by leading monomial descending)."""
        if self._gb is None:
            raw = kernel.buchberger([g.terms for g in self.gens], self.ring.nvars)
            self._gb = tuple(self.ring.from_terms(t) for t in raw)
        return self._gb

    @property
    def is_zero(self) -> bool:
        return not self.gens

    def normal_form(self, f: Polynomial) -> Polynomial:
        if f.ring != self.ring:
            raise ValueError("polynomial from a different ring")
        if self.is_zero:
            return f
        r = kernel.normal_form(f.terms, [g.terms for g in self.groebner()], self.ring.nvars)
        return self.ring.from_terms(r)

    def contains(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero

    __contains__ = contains

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.gens)

    def equal(self, other: "Ideal") -> bool:
        if self.ring != other.ring:
            raise ValueError("ideals from different rings")
        return self.groebner() == other.groebner()

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.equal(other)

    def __hash__(self):
        return hash((self.ring, self.groebner()))

    def sum(self, other: "Ideal") -> "Ideal":
        if self.ring != other.ring:
            raise ValueError("ideals from different rings")
        return Ideal(self.ring, self.gens + other.gens)

    __add__ = sum

    def product(self, other: "Ideal") -> "Ideal":
        if self.ring != other.ring:
            raise ValueError("ideals from different rings")
        prods = []
        seen = set()
        for f in self.gens:
            for g in other.gens:
                h = f * g
                if h.terms not in seen:
                    seen.add(h.terms)
                    prods.append(h)
        return Ideal(self.ring, prods)

    def power(self, t: int) -> "Ideal":
        """t-fold product; generators deduplicated and interreduced."""
        if t < 1:
            raise ValueError("power exponent must be >= 1")
        if t == 1 or self.is_zero:
            return self
        prods = []
        seen = set()
        for combo in combinations_with_replacement(self.gens, t):
            h = combo[0]
            for g in combo[1:]:
                h = h * g
            if h.terms and h.terms not in seen:
                seen.add(h.terms)
                prods.append(h)
        reduced = kernel.interreduce([p.terms for p in prods], self.ring.nvars)
        return Ideal(self.ring, [self.ring.from_terms(t_) for t_ in reduced])

    def intersect(self, other: "Ideal") -> "Ideal":
        """I cap J via one fresh elimination variable w:
        eliminate w from w*I + (1-w)*J under the block order."""
        if self.ring != other.ring:
            raise ValueError("ideals from different rings")
        if self.is_zero or other.is_zero:
            return Ideal(self.ring, ())
        ext = self.ring.with_elimination(1)
        w = ext.var(ext.names[0])
        one_minus_w = ext.one() - w
        gens = [w * self.ring.embed(f) for f in self.gens]
        gens += [one_minus_w * self.ring.embed(g) for g in other.gens]
        return Ideal(ext, gens).eliminate(1)

    def eliminate(self, k: int) -> "Ideal":
        """Eliminate the k leading block variables; returns an ideal of the
        base ring generated by the GB elements free of them."""
        if k == 0:
            return self
        if k > self.ring.nelim:
            raise ValueError("can only eliminate leading block variables")
        kept = []
        for g in self.groebner():
            if not any(any(m[:k]) for m, _ in g.terms):
                kept.append(g)
        shrunk = RingContext(self.ring.names[k:], self.ring.field, self.ring.nelim - k)
        out = []
        for g in kept:
            out.append(shrunk.from_terms([(m[k:], c) for m, c in g.terms]))
        return Ideal(shrunk, out)

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.gens[:4])
        more = ", ..." if len(self.gens) > 4 else ""
        return f"Ideal({gens}{more})"


def intersect_all(ideals) -> Ideal:
    """Fold intersection, cheapest (fewest generators) first."""
    ideals = sorted(ideals, key=lambda I: len(I.gens))
    if not ideals:
        raise ValueError("need at least one ideal")
    acc = ideals[0]
    for J in ideals[1:]:
        acc = acc.intersect(J)
    return acc
