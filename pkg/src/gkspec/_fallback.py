"""Pure-Python implementations of the hot kernels.

Same call signatures and results as the compiled module
``gkspec._speedups``; selected automatically when the extension is not
built (see ``gkspec._core``).  Correctness over speed: these are the
reference semantics the compiled kernels are tested against.
"""

COMPILED = False


def gf_mul(a, b, modulus, p):
    """Product of two coefficient tuples modulo a monic modulus.

    a, b have length k = deg(modulus); the result is a length-k tuple.
    """
    k = len(modulus) - 1
    prod = [0] * (2 * k - 1)
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
    return tuple(prod[:k])


def gf_pow(a, e, modulus, p):
    """a**e by square-and-multiply; e >= 0."""
    k = len(modulus) - 1
    result = tuple([1] + [0] * (k - 1))
    base = tuple(a)
    while e:
        if e & 1:
            result = gf_mul(result, base, modulus, p)
        base = gf_mul(base, base, modulus, p)
        e >>= 1
    return result


def gf_geom_sum(a, m, modulus, p):
    """1 + a + a^2 + ... + a^(m-1) by direct accumulation."""
    k = len(modulus) - 1
    acc = [0] * k
    x = tuple([1] + [0] * (k - 1))
    for _ in range(m):
        for i in range(k):
            acc[i] = (acc[i] + x[i]) % p
        x = gf_mul(x, a, modulus, p)
    return tuple(acc)


def psl2_order_counts(q, mul, add, neg, one, zero):
    """Orders of all determinant-one 2x2 matrices over a q-element field.

    mul and add are flat row-major q*q tables over element indices, neg the
    negation table, one/zero the indices of the field constants.  For every
    matrix (a b / c d) with a*d - b*c = 1 the least e >= 1 with the e-th
    power scalar is tallied; returns a list where entry e counts matrices
    of projective order e.

    The determinant-one matrices are enumerated directly: for a != 0 the
    entry d is determined by (a, b, c), and for a = 0 the constraint forces
    c = -1/b with d free.  Same multiset as rejection over all quadruples.
    """
    counts = [0] * (4 * q + 8)
    limit = len(counts) - 1
    inv = [None] * q
    for x in range(q):
        for y in range(q):
            if mul[x * q + y] == one:
                inv[x] = y
                break

    def tally(a, b, c, d):
        wa, wb, wc, wd = a, b, c, d
        e = 1
        while not (wb == zero and wc == zero and wa == wd):
            na = add[mul[wa * q + a] * q + mul[wb * q + c]]
            nb = add[mul[wa * q + b] * q + mul[wb * q + d]]
            nc = add[mul[wc * q + a] * q + mul[wd * q + c]]
            nd = add[mul[wc * q + b] * q + mul[wd * q + d]]
            wa, wb, wc, wd = na, nb, nc, nd
            e += 1
            if e > limit:
                raise RuntimeError("matrix order exceeded sane bound")
        counts[e] += 1

    for a in range(q):
        if a == zero:
            for b in range(q):
                if b == zero:
                    continue  # det would be 0
                c = neg[inv[b]]
                for d in range(q):
                    tally(a, b, c, d)
            continue
        ainv = inv[a]
        for b in range(q):
            for c in range(q):
                d = mul[ainv * q + add[one * q + mul[b * q + c]]]
                tally(a, b, c, d)
    return counts
