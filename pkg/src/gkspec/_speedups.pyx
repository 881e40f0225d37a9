# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernels: finite-field coefficient arithmetic and the SL2
order-enumeration loop.  Mirrors gkspec._fallback exactly."""

from libc.stdlib cimport malloc, free

COMPILED = True

DEF MAXK = 64


cdef inline void _mul_into(long *out, const long *a, const long *b,
                           const long *modulus, int k, long p) nogil:
    cdef long prod[2 * MAXK]
    cdef int i, j
    cdef long x, c
    for i in range(2 * k - 1):
        prod[i] = 0
    for i in range(k):
        x = a[i]
        if x:
            for j in range(k):
                prod[i + j] = (prod[i + j] + x * b[j]) % p
    for i in range(2 * k - 2, k - 1, -1):
        c = prod[i]
        if c:
            for j in range(k):
                prod[i - k + j] = (prod[i - k + j] - c * modulus[j]) % p
                if prod[i - k + j] < 0:
                    prod[i - k + j] += p
    for i in range(k):
        out[i] = prod[i]


cdef int _load(long *dst, object src, int k) except -1:
    cdef int i
    for i in range(k):
        dst[i] = src[i]
    return 0


def gf_mul(a, b, modulus, p):
    """Product of two coefficient tuples modulo a monic modulus."""
    cdef int k = len(modulus) - 1
    if k > MAXK:
        raise ValueError("extension degree too large for compiled kernel")
    cdef long ca[MAXK], cb[MAXK], cm[MAXK], out[MAXK]
    cdef long cp = p
    _load(ca, a, k)
    _load(cb, b, k)
    _load(cm, modulus, k)
    _mul_into(out, ca, cb, cm, k, cp)
    return tuple(out[i] for i in range(k))


def gf_pow(a, e, modulus, p):
    """a**e by square-and-multiply; e >= 0."""
    cdef int k = len(modulus) - 1
    if k > MAXK:
        raise ValueError("extension degree too large for compiled kernel")
    cdef long base[MAXK], result[MAXK], cm[MAXK], tmp[MAXK]
    cdef long cp = p
    cdef unsigned long long ce = e
    cdef int i
    _load(base, a, k)
    _load(cm, modulus, k)
    for i in range(k):
        result[i] = 0
    result[0] = 1
    while ce:
        if ce & 1:
            _mul_into(tmp, result, base, cm, k, cp)
            for i in range(k):
                result[i] = tmp[i]
        _mul_into(tmp, base, base, cm, k, cp)
        for i in range(k):
            base[i] = tmp[i]
        ce >>= 1
    return tuple(result[i] for i in range(k))


def gf_geom_sum(a, m, modulus, p):
    """1 + a + a^2 + ... + a^(m-1) by direct accumulation."""
    cdef int k = len(modulus) - 1
    if k > MAXK:
        raise ValueError("extension degree too large for compiled kernel")
    cdef long x[MAXK], acc[MAXK], cm[MAXK], ca[MAXK], tmp[MAXK]
    cdef long cp = p
    cdef long cm_ = m
    cdef int i
    cdef long step
    _load(ca, a, k)
    _load(cm, modulus, k)
    for i in range(k):
        acc[i] = 0
        x[i] = 0
    x[0] = 1
    for step in range(cm_):
        for i in range(k):
            acc[i] = (acc[i] + x[i]) % cp
        _mul_into(tmp, x, ca, cm, k, cp)
        for i in range(k):
            x[i] = tmp[i]
    return tuple(acc[i] for i in range(k))


def psl2_order_counts(q, mul, add, neg, one, zero):
    """Orders of all determinant-one 2x2 matrices over a q-element field.

    Same contract as the fallback: tally, for every matrix with det 1, the
    least e >= 1 whose e-th power is scalar.
    """
    cdef int cq = q
    cdef int cone = one, czero = zero
    cdef int n = cq * cq
    cdef long *cmul = <long *> malloc(n * sizeof(long))
    cdef long *cadd = <long *> malloc(n * sizeof(long))
    cdef long *cneg = <long *> malloc(cq * sizeof(long))
    cdef int limit = 4 * cq + 7
    cdef long *counts = <long *> malloc((limit + 1) * sizeof(long))
    if cmul == NULL or cadd == NULL or cneg == NULL or counts == NULL:
        free(cmul); free(cadd); free(cneg); free(counts)
        raise MemoryError
    cdef int i, a, b, c, d, e
    cdef int wa, wb, wc, wd, na, nb, nc, nd, mbc
    cdef int overflow = 0
    try:
        for i in range(n):
            cmul[i] = mul[i]
            cadd[i] = add[i]
        for i in range(cq):
            cneg[i] = neg[i]
        for i in range(limit + 1):
            counts[i] = 0
        with nogil:
            for a in range(cq):
                for b in range(cq):
                    for c in range(cq):
                        mbc = cneg[cmul[b * cq + c]]
                        for d in range(cq):
                            if cadd[cmul[a * cq + d] * cq + mbc] != cone:
                                continue
                            wa = a; wb = b; wc = c; wd = d
                            e = 1
                            while not (wb == czero and wc == czero and wa == wd):
                                na = cadd[cmul[wa * cq + a] * cq + cmul[wb * cq + c]]
                                nb = cadd[cmul[wa * cq + b] * cq + cmul[wb * cq + d]]
                                nc = cadd[cmul[wc * cq + a] * cq + cmul[wd * cq + c]]
                                nd = cadd[cmul[wc * cq + b] * cq + cmul[wd * cq + d]]
                                wa = na; wb = nb; wc = nc; wd = nd
                                e += 1
                                if e > limit:
                                    overflow = 1
                                    break
                            if overflow:
                                break
                            counts[e] += 1
                        if overflow:
                            break
                    if overflow:
                        break
                if overflow:
                    break
        if overflow:
            raise RuntimeError("matrix order exceeded sane bound")
        return [counts[i] for i in range(limit + 1)]
    finally:
        free(cmul)
        free(cadd)
        free(cneg)
        free(counts)
