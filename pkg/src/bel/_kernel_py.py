"""Pure-Python Groebner kernel.

Monomials are packed into single integers, 16 bits per variable, first
ring variable in the most significant field.  Values stay below 2**15, so
one guard bit per field is free and

  * integer comparison is exactly the lexicographic term order,
  * monomial multiplication is integer addition,
  * divisibility and lcm are borrow-tricks on the guard bits.

Polynomials cross the kernel boundary as lists of (exponent_tuple, coeff)
pairs; coefficients are opaque field elements (see bel.fields).
"""

from __future__ import annotations

import heapq

KERNEL_NAME = "python"

_FIELD_BITS = 16
_GUARD_SHIFT = 15
_FIELD_MASK = (1 << _FIELD_BITS) - 1

_guard_cache: dict[int, int] = {}


def _guards(nvars: int) -> int:
    g = _guard_cache.get(nvars)
    if g is None:
        g = 0
        for i in range(nvars):
            g |= 1 << (_FIELD_BITS * i + _GUARD_SHIFT)
        _guard_cache[nvars] = g
    return g


def _pack(exps) -> int:
    m = 0
    for e in exps:
        m = (m << _FIELD_BITS) | e
    return m


def _unpack(m: int, nvars: int) -> tuple:
    out = [0] * nvars
    for i in range(nvars - 1, -1, -1):
        out[i] = m & _FIELD_MASK
        m >>= _FIELD_BITS
    return tuple(out)


def _divides(a: int, b: int, guards: int) -> bool:
    # a | b fieldwise: no field of the guarded difference loses its guard bit
    return (b + guards - a) & guards == guards


def _lcm(a: int, b: int, guards: int) -> int:
    d = a + guards - b
    g = d & guards
    mask = (g >> _GUARD_SHIFT) * _FIELD_MASK
    return b + (d & mask & ~guards)


def _to_packed(poly, nvars):
    """Accumulate external (exps, coeff) pairs into a packed sorted list."""
    acc = {}
    for exps, c in poly:
        m = _pack(exps)
        if m in acc:
            acc[m] = acc[m] + c
        else:
            acc[m] = c
    terms = [(m, c) for m, c in acc.items() if c]
    terms.sort(reverse=True)
    return terms


def _to_pairs(terms, nvars):
    return [(_unpack(m, nvars), c) for m, c in terms]


def _reduce_full(terms, basis, guards):
    """Full normal form of a packed term list against (lm, lc, tail) triples.

    Divisors are tried in list order; the largest pending term is reduced
    first, so the result is deterministic.
    """
    if not terms:
        return []
    coeffs = dict(terms)
    heap = [-m for m, _ in terms]
    heapq.heapify(heap)
    out = []
    while heap:
        m = -heapq.heappop(heap)
        c = coeffs.pop(m, None)
        if c is None or not c:
            continue
        for lm, lc, tail in basis:
            if _divides(lm, m, guards):
                q = m - lm
                s = c / lc
                for tm, tc in tail:
                    mm = tm + q
                    if mm in coeffs:
                        coeffs[mm] = coeffs[mm] - s * tc
                    else:
                        coeffs[mm] = -s * tc
                        heapq.heappush(heap, -mm)
                break
        else:
            out.append((m, c))
    return out


def _prep(g):
    """Split a packed poly into a (lm, lc, tail) reducer triple."""
    lm, lc = g[0]
    return (lm, lc, g[1:])


def _monic(g):
    lc = g[0][1]
    if lc == lc / lc:  # already 1
        return g
    return [(m, c / lc) for m, c in g]


def _spoly(f, g, guards):
    lmf, lcf = f[0]
    lmg, lcg = g[0]
    lcm = _lcm(lmf, lmg, guards)
    qf = lcm - lmf
    qg = lcm - lmg
    acc = {}
    for m, c in f:
        acc[m + qf] = c / lcf
    for m, c in g:
        mm = m + qg
        if mm in acc:
            acc[mm] = acc[mm] - c / lcg
        else:
            acc[mm] = -(c / lcg)
    terms = [(m, c) for m, c in acc.items() if c]
    terms.sort(reverse=True)
    return terms


def _autoreduce(polys, guards):
    """One interreduction sweep; preserves the generated ideal."""
    polys = sorted((p for p in polys if p), key=lambda p: p[0][0])
    out = []
    for p in polys:
        r = _reduce_full(p, [_prep(q) for q in out], guards)
        if r:
            out.append(_monic(r))
    return out


def _update_pairs(G, lms, pairs, j, guards):
    """Gebauer-Moeller pair update after appending generator j."""
    lmj = lms[j]
    kept = set()
    for (a, b) in pairs:
        lab = _lcm(lms[a], lms[b], guards)
        if (not _divides(lmj, lab, guards)
                or lab == _lcm(lms[a], lmj, guards)
                or lab == _lcm(lms[b], lmj, guards)):
            kept.add((a, b))
    by_lcm: dict[int, list] = {}
    for i in range(j):
        by_lcm.setdefault(_lcm(lms[i], lmj, guards), []).append(i)
    minimal = []
    for L in sorted(by_lcm):
        if all(not _divides(M, L, guards) for M in minimal):
            minimal.append(L)
    for L in minimal:
        if any(_lcm(lms[i], lmj, guards) == lms[i] + lmj for i in by_lcm[L]):
            continue  # coprime leading terms: s-poly reduces to zero
        kept.add((min(by_lcm[L]), j))
    return kept


def _buchberger_packed(gens, guards):
    G = _autoreduce(gens, guards)
    lms = [g[0][0] for g in G]
    pairs = set()
    for j in range(len(G)):
        pairs = _update_pairs(G, lms, pairs, j, guards)
    heap = [(_lcm(lms[a], lms[b], guards), a, b) for (a, b) in pairs]
    heapq.heapify(heap)
    reducers = [_prep(g) for g in G]
    while heap:
        _, a, b = heapq.heappop(heap)
        if (a, b) not in pairs:
            continue
        pairs.discard((a, b))
        s = _spoly(G[a], G[b], guards)
        r = _reduce_full(s, reducers, guards)
        if not r:
            continue
        r = _monic(r)
        G.append(r)
        lms.append(r[0][0])
        reducers.append(_prep(r))
        j = len(G) - 1
        new_pairs = _update_pairs(G, lms, pairs, j, guards)
        for p in new_pairs - pairs:
            heapq.heappush(heap, (_lcm(lms[p[0]], lms[p[1]], guards), p[0], p[1]))
        pairs = new_pairs

    # minimal basis: drop generators whose leading monomial is redundant
    order = sorted(range(len(G)), key=lambda i: lms[i])
    minimal = []
    for i in order:
        if all(not _divides(G[k][0][0], lms[i], guards) for k in minimal):
            minimal.append(i)
    basis = [G[i] for i in minimal]

    # reduced basis: fully reduce every tail against the others
    reduced = []
    for i, g in enumerate(basis):
        others = [_prep(h) for k, h in enumerate(basis) if k != i]
        r = _reduce_full(g, others, guards)
        reduced.append(_monic(r))
    reduced.sort(key=lambda p: p[0][0], reverse=True)
    return reduced


def buchberger(gens, nvars):
    """Canonical reduced Groebner basis under the packed lex order.

    Input/output polynomials are lists of (exponent_tuple, coeff); output
    elements are monic, fully interreduced, term-sorted descending, and the
    basis is sorted by leading monomial descending.
    """
    guards = _guards(nvars)
    packed = [p for p in (_to_packed(g, nvars) for g in gens) if p]
    if not packed:
        return []
    gb = _buchberger_packed(packed, guards)
    return [_to_pairs(g, nvars) for g in gb]


def normal_form(f, basis, nvars):
    """Remainder of f on full division by the (nonzero) polynomials in basis."""
    guards = _guards(nvars)
    fp = _to_packed(f, nvars)
    bp = [_prep(_to_packed(g, nvars)) for g in basis]
    return _to_pairs(_reduce_full(fp, bp, guards), nvars)


def interreduce(gens, nvars):
    """One autoreduction sweep over a generating set (ideal is preserved)."""
    guards = _guards(nvars)
    packed = [p for p in (_to_packed(g, nvars) for g in gens) if p]
    return [_to_pairs(g, nvars) for g in _autoreduce(packed, guards)]
