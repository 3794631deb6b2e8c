"""Polynomial rings for binomial edge ideals.

A ring is k[x_1..x_n, y_1..y_n], optionally preceded by elimination
variables.  The variable roster order *is* the term order: monomials are
exponent tuples over the roster and plain tuple comparison realizes the
lexicographic order x_1 > ... > x_n > y_1 > ... > y_n (elimination
variables, when present, come first, giving the block elimination order).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .fields import QQ

Monomial = tuple  # exponent vector over the ring's variable roster


@dataclass(frozen=True)
class TermOrder:
    """Lexicographic order induced by the roster; kind is informational."""

    kind: str = "roster-lex"  # or "block-elimination"

    def compare(self, m1: Monomial, m2: Monomial) -> int:
        return compare(m1, m2)


def compare(m1: Monomial, m2: Monomial) -> int:
    """Lex comparison of two monomials of one ring: -1, 0 or 1."""
    if len(m1) != len(m2):
        raise ValueError("monomials from different rings")
    if m1 == m2:
        return 0
    return 1 if m1 > m2 else -1


def monomial_mul(m1: Monomial, m2: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(m1, m2, strict=True))


def monomial_divides(m1: Monomial, m2: Monomial) -> bool:
    return all(a <= b for a, b in zip(m1, m2, strict=True))


@dataclass(frozen=True)
class RingContext:
    """Variable roster plus coefficient field.

    names are in term-order position: heaviest variable first.  nelim
    leading names are elimination variables.
    """

    names: tuple
    field: object = QQ
    nelim: int = 0

    @staticmethod
    def for_graph(n: int, field=QQ) -> "RingContext":
        if n < 1:
            raise ValueError("vertex count must be positive")
        names = tuple(f"x{i}" for i in range(1, n + 1)) + tuple(
            f"y{i}" for i in range(1, n + 1)
        )
        return RingContext(names, field)

    @property
    def nvars(self) -> int:
        return len(self.names)

    @property
    def order(self) -> TermOrder:
        return TermOrder("block-elimination" if self.nelim else "roster-lex")

    def index(self, name: str) -> int:
        return self.names.index(name)

    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, k) -> "Polynomial":
        c = self.field.from_int(k) if isinstance(k, int) else k
        if not c:
            return self.zero()
        return Polynomial(self, (((0,) * self.nvars, c),))

    def var(self, name: str) -> "Polynomial":
        i = self.index(name)
        exps = [0] * self.nvars
        exps[i] = 1
        return Polynomial(self, ((tuple(exps), self.field.one),))

    def x(self, i: int) -> "Polynomial":
        return self.var(f"x{i}")

    def y(self, i: int) -> "Polynomial":
        return self.var(f"y{i}")

    def from_terms(self, terms) -> "Polynomial":
        acc = {}
        for m, c in terms:
            m = tuple(m)
            if len(m) != self.nvars:
                raise ValueError("exponent vector length does not match roster")
            acc[m] = acc[m] + c if m in acc else c
        cleaned = tuple(sorted(((m, c) for m, c in acc.items() if c), reverse=True))
        return Polynomial(self, cleaned)

    def with_elimination(self, k: int = 1) -> "RingContext":
        """Ring extended by k fresh elimination variables in front."""
        fresh = []
        i = 0
        while len(fresh) < k:
            name = f"w{i}"
            if name not in self.names:
                fresh.append(name)
            i += 1
        return RingContext(tuple(fresh) + self.names, self.field, self.nelim + k)

    def embed(self, f: "Polynomial", k: int = 1) -> "Polynomial":
        """Re-read a polynomial of this ring in self.with_elimination(k)."""
        ext = self.with_elimination(k)
        pad = (0,) * k
        return Polynomial(ext, tuple((pad + m, c) for m, c in f.terms))

    def project(self, f: "Polynomial") -> "Polynomial":
        """Drop the leading nelim elimination variables from a free polynomial."""
        if self.nelim == 0:
            return f
        base = RingContext(self.names[self.nelim :], self.field)
        terms = []
        for m, c in f.terms:
            if any(m[: self.nelim]):
                raise ValueError("polynomial involves an elimination variable")
            terms.append((m[self.nelim :], c))
        return Polynomial(base, tuple(terms))

    def base(self) -> "RingContext":
        return RingContext(self.names[self.nelim :], self.field) if self.nelim else self

    def monomial_str(self, m: Monomial) -> str:
        parts = []
        for name, e in zip(self.names, m):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


class Polynomial:
    """Immutable multivariate polynomial; terms sorted strictly descending."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: RingContext, terms: tuple):
        self.ring = ring
        self.terms = terms

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def leading_term(self):
        """(coefficient, monomial) of the maximal term; rejects zero."""
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        m, c = self.terms[0]
        return c, m

    def leading_monomial(self) -> Monomial:
        return self.leading_term()[1]

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(m) for m, _ in self.terms)

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        lc = self.terms[0][1]
        return Polynomial(self.ring, tuple((m, c / lc) for m, c in self.terms))

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("polynomials from different rings")
            return other
        try:
            return self.ring.constant(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self.terms)
        for m, c in other.terms:
            acc[m] = acc[m] + c if m in acc else c
        return Polynomial(
            self.ring, tuple(sorted(((m, c) for m, c in acc.items() if c), reverse=True))
        )

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = tuple(a + b for a, b in zip(m1, m2))
                c = c1 * c2
                acc[m] = acc[m] + c if m in acc else c
        return Polynomial(
            self.ring, tuple(sorted(((m, c) for m, c in acc.items() if c), reverse=True))
        )

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not defined")
        out = self.ring.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, self.terms))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for i, (m, c) in enumerate(self.terms):
            mono = self.ring.monomial_str(m)
            neg = str(c).startswith("-")
            mag = str(c)[1:] if neg else str(c)
            if mono == "1":
                body = mag
            elif mag == "1":
                body = mono
            else:
                body = f"{mag}*{mono}"
            if i == 0:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"Polynomial({self})"
