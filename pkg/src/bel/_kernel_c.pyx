# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled Groebner kernel.

Monomials are bytes objects: one big-endian uint16 per variable, first
ring variable first, so raw bytes comparison is the lexicographic term
order.  Coefficients stay generic Python objects (field elements), the
monomial combinatorics and the division loop run at C speed.

Same public surface as bel._kernel_py: buchberger / normal_form /
interreduce over (exponent_tuple, coeff) term lists.
"""

import heapq

KERNEL_NAME = "cython"


cdef inline int _u16(const unsigned char* p, Py_ssize_t i) noexcept:
    return (p[2 * i] << 8) | p[2 * i + 1]


cdef bytes _pack(exps):
    cdef Py_ssize_t n = len(exps)
    cdef bytearray out = bytearray(2 * n)
    cdef Py_ssize_t i
    cdef int e
    for i in range(n):
        e = exps[i]
        out[2 * i] = (e >> 8) & 0xFF
        out[2 * i + 1] = e & 0xFF
    return bytes(out)


cdef tuple _unpack(bytes m):
    cdef const unsigned char* p = m
    cdef Py_ssize_t n = len(m) // 2
    cdef Py_ssize_t i
    return tuple([_u16(p, i) for i in range(n)])


cdef bytes _mul(bytes a, bytes b):
    cdef const unsigned char* pa = a
    cdef const unsigned char* pb = b
    cdef Py_ssize_t n = len(a) // 2
    cdef bytearray out = bytearray(len(a))
    cdef Py_ssize_t i
    cdef int v
    for i in range(n):
        v = _u16(pa, i) + _u16(pb, i)
        out[2 * i] = (v >> 8) & 0xFF
        out[2 * i + 1] = v & 0xFF
    return bytes(out)


cdef bint _divides(bytes a, bytes b) noexcept:
    cdef const unsigned char* pa = a
    cdef const unsigned char* pb = b
    cdef Py_ssize_t n = len(a) // 2
    cdef Py_ssize_t i
    for i in range(n):
        if _u16(pa, i) > _u16(pb, i):
            return False
    return True


cdef bytes _div(bytes a, bytes b):
    # exact quotient a / b, b assumed to divide a
    cdef const unsigned char* pa = a
    cdef const unsigned char* pb = b
    cdef Py_ssize_t n = len(a) // 2
    cdef bytearray out = bytearray(len(a))
    cdef Py_ssize_t i
    cdef int v
    for i in range(n):
        v = _u16(pa, i) - _u16(pb, i)
        out[2 * i] = (v >> 8) & 0xFF
        out[2 * i + 1] = v & 0xFF
    return bytes(out)


cdef bytes _lcm(bytes a, bytes b):
    cdef const unsigned char* pa = a
    cdef const unsigned char* pb = b
    cdef Py_ssize_t n = len(a) // 2
    cdef bytearray out = bytearray(len(a))
    cdef Py_ssize_t i
    cdef int va, vb
    for i in range(n):
        va = _u16(pa, i)
        vb = _u16(pb, i)
        if vb > va:
            va = vb
        out[2 * i] = (va >> 8) & 0xFF
        out[2 * i + 1] = va & 0xFF
    return bytes(out)


cdef bytes _inv(bytes a):
    # order-reversing involution, used to run heapq as a max-heap
    cdef const unsigned char* pa = a
    cdef Py_ssize_t n = len(a)
    cdef bytearray out = bytearray(n)
    cdef Py_ssize_t i
    for i in range(n):
        out[i] = 0xFF - pa[i]
    return bytes(out)


cdef list _to_packed(poly):
    cdef dict acc = {}
    for exps, c in poly:
        m = _pack(exps)
        if m in acc:
            acc[m] = acc[m] + c
        else:
            acc[m] = c
    cdef list terms = [(m, c) for m, c in acc.items() if c]
    terms.sort(reverse=True)
    return terms


cdef list _to_pairs(list terms):
    return [(_unpack(m), c) for m, c in terms]


cdef list _reduce_full(list terms, list basis):
    """Full normal form against (lm, lc, tail) triples; divisors in list
    order, largest pending term first."""
    if not terms:
        return []
    cdef dict coeffs = dict(terms)
    cdef list heap = [_inv(m) for m, _ in terms]
    heapq.heapify(heap)
    cdef list out = []
    cdef bint hit
    while heap:
        m = _inv(<bytes>heapq.heappop(heap))
        c = coeffs.pop(m, None)
        if c is None or not c:
            continue
        hit = False
        for lm, lc, tail in basis:
            if _divides(<bytes>lm, <bytes>m):
                q = _div(<bytes>m, <bytes>lm)
                s = c / lc
                for tm, tc in <list>tail:
                    mm = _mul(<bytes>tm, q)
                    if mm in coeffs:
                        coeffs[mm] = coeffs[mm] - s * tc
                    else:
                        coeffs[mm] = -s * tc
                        heapq.heappush(heap, _inv(mm))
                hit = True
                break
        if not hit:
            out.append((m, c))
    return out


cdef tuple _prep(list g):
    lm, lc = g[0]
    return (lm, lc, g[1:])


cdef list _monic(list g):
    lc = g[0][1]
    if lc == lc / lc:
        return g
    return [(m, c / lc) for m, c in g]


cdef list _spoly(list f, list g):
    lmf, lcf = f[0]
    lmg, lcg = g[0]
    lcm = _lcm(<bytes>lmf, <bytes>lmg)
    qf = _div(lcm, <bytes>lmf)
    qg = _div(lcm, <bytes>lmg)
    cdef dict acc = {}
    for m, c in f:
        acc[_mul(<bytes>m, qf)] = c / lcf
    for m, c in g:
        mm = _mul(<bytes>m, qg)
        if mm in acc:
            acc[mm] = acc[mm] - c / lcg
        else:
            acc[mm] = -(c / lcg)
    cdef list terms = [(m, c) for m, c in acc.items() if c]
    terms.sort(reverse=True)
    return terms


cdef list _autoreduce(list polys):
    cdef list work = sorted([p for p in polys if p], key=lambda p: p[0][0])
    cdef list out = []
    cdef list reducers = []
    for p in work:
        r = _reduce_full(<list>p, reducers)
        if r:
            r = _monic(r)
            out.append(r)
            reducers.append(_prep(r))
    return out


cdef set _update_pairs(list lms, set pairs, Py_ssize_t j):
    lmj = lms[j]
    cdef set kept = set()
    for (a, b) in pairs:
        lab = _lcm(<bytes>lms[a], <bytes>lms[b])
        if (not _divides(<bytes>lmj, lab)
                or lab == _lcm(<bytes>lms[a], <bytes>lmj)
                or lab == _lcm(<bytes>lms[b], <bytes>lmj)):
            kept.add((a, b))
    cdef dict by_lcm = {}
    cdef Py_ssize_t i
    for i in range(j):
        by_lcm.setdefault(_lcm(<bytes>lms[i], <bytes>lmj), []).append(i)
    cdef list minimal = []
    for L in sorted(by_lcm):
        ok = True
        for M in minimal:
            if _divides(<bytes>M, <bytes>L):
                ok = False
                break
        if ok:
            minimal.append(L)
    for L in minimal:
        coprime = False
        for i in by_lcm[L]:
            if _lcm(<bytes>lms[i], <bytes>lmj) == _mul(<bytes>lms[i], <bytes>lmj):
                coprime = True
                break
        if not coprime:
            kept.add((min(by_lcm[L]), j))
    return kept


cdef list _buchberger_packed(list gens):
    cdef list G = _autoreduce(gens)
    cdef list lms = [g[0][0] for g in G]
    cdef set pairs = set()
    cdef Py_ssize_t j
    for j in range(len(G)):
        pairs = _update_pairs(lms, pairs, j)
    cdef list heap = [(_lcm(<bytes>lms[a], <bytes>lms[b]), a, b) for (a, b) in pairs]
    heapq.heapify(heap)
    cdef list reducers = [_prep(<list>g) for g in G]
    while heap:
        _, a, b = heapq.heappop(heap)
        if (a, b) not in pairs:
            continue
        pairs.discard((a, b))
        s = _spoly(<list>G[a], <list>G[b])
        r = _reduce_full(s, reducers)
        if not r:
            continue
        r = _monic(r)
        G.append(r)
        lms.append(r[0][0])
        reducers.append(_prep(r))
        j = len(G) - 1
        new_pairs = _update_pairs(lms, pairs, j)
        for p in new_pairs - pairs:
            heapq.heappush(heap, (_lcm(<bytes>lms[p[0]], <bytes>lms[p[1]]), p[0], p[1]))
        pairs = new_pairs

    cdef list order = sorted(range(len(G)), key=lambda i: lms[i])
    cdef list minimal = []
    for i in order:
        ok = True
        for k in minimal:
            if _divides(<bytes>(<list>G[k])[0][0], <bytes>lms[i]):
                ok = False
                break
        if ok:
            minimal.append(i)
    cdef list basis = [G[i] for i in minimal]

    cdef list reduced = []
    cdef Py_ssize_t idx
    for idx in range(len(basis)):
        others = [_prep(<list>basis[k]) for k in range(len(basis)) if k != idx]
        reduced.append(_monic(_reduce_full(<list>basis[idx], others)))
    reduced.sort(key=lambda p: p[0][0], reverse=True)
    return reduced


def buchberger(gens, nvars):
    """Canonical reduced Groebner basis under the roster lex order."""
    cdef list packed = []
    for g in gens:
        p = _to_packed(g)
        if p:
            packed.append(p)
    if not packed:
        return []
    return [_to_pairs(g) for g in _buchberger_packed(packed)]


def normal_form(f, basis, nvars):
    """Remainder of f on full division by the polynomials in basis."""
    cdef list fp = _to_packed(f)
    cdef list bp = [_prep(_to_packed(g)) for g in basis]
    return _to_pairs(_reduce_full(fp, bp))


def interreduce(gens, nvars):
    """One autoreduction sweep over a generating set (ideal preserved)."""
    cdef list packed = []
    for g in gens:
        p = _to_packed(g)
        if p:
            packed.append(p)
    return [_to_pairs(g) for g in _autoreduce(packed)]
