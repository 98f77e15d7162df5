"""Pure Python computation kernels.

The compiled twin in _speedups.pyx implements the same functions over the
same plain data, so callers can treat either module interchangeably.

Data conventions:

* field triple ``(A, B, D)``: three ints encoding (A + B*c) / D where
  c*c = 5/4, with D >= 1 and gcd(A, B, D) == 1.  Zero is (0, 0, 1).
* packed monomial: ``e0 | e1 << 8 | e2 << 16 | e3 << 24`` with every
  exponent below 256.  Multiplying monomials is integer addition of keys.
* polynomial: dict mapping packed monomial to a nonzero field triple.
* matrix: flat tuple of 48 ints, 16 field triples in row major order.
* Z[sqrt5] entry: flat pair of ints (a, b) encoding a + b*sqrt(5), used by
  the fraction free elimination.  Rows are flat lists [a0, b0, a1, b1, ...].
"""

from math import gcd

FZERO = (0, 0, 1)
FONE = (1, 0, 1)

BACKEND = "python"

EXP_LIMIT = 256


class ClosureCapExceeded(Exception):
    pass


# field triples


def fnorm(a, b, d):
    if d < 0:
        a, b, d = -a, -b, -d
    g = gcd(gcd(a, b), d)
    if g > 1:
        return (a // g, b // g, d // g)
    return (a, b, d)


def fadd(x, y):
    a1, b1, d1 = x
    a2, b2, d2 = y
    if d1 == d2:
        return fnorm(a1 + a2, b1 + b2, d1)
    return fnorm(a1 * d2 + a2 * d1, b1 * d2 + b2 * d1, d1 * d2)


def fsub(x, y):
    a1, b1, d1 = x
    a2, b2, d2 = y
    if d1 == d2:
        return fnorm(a1 - a2, b1 - b2, d1)
    return fnorm(a1 * d2 - a2 * d1, b1 * d2 - b2 * d1, d1 * d2)


def fneg(x):
    a, b, d = x
    return (-a, -b, d)


def fmul(x, y):
    a1, b1, d1 = x
    a2, b2, d2 = y
    if b1 == 0:
        if a1 == 0:
            return FZERO
        return fnorm(a1 * a2, a1 * b2, d1 * d2)
    if b2 == 0:
        if a2 == 0:
            return FZERO
        return fnorm(a1 * a2, b1 * a2, d1 * d2)
    # (a1 + b1 c)(a2 + b2 c) with c^2 = 5/4
    return fnorm(4 * a1 * a2 + 5 * b1 * b2, 4 * (a1 * b2 + b1 * a2), 4 * d1 * d2)


def finv(x):
    a, b, d = x
    if a == 0 and b == 0:
        raise ZeroDivisionError("field inverse of zero")
    # 1/x = d (a - b c) / (a^2 - (5/4) b^2)
    n = 4 * a * a - 5 * b * b
    return fnorm(4 * d * a, -4 * d * b, n)


def fdiv(x, y):
    return fmul(x, finv(y))


def fpow(x, n):
    if n < 0:
        return fpow(finv(x), -n)
    r = FONE
    while n:
        if n & 1:
            r = fmul(r, x)
        x = fmul(x, x)
        n >>= 1
    return r


def f_from_int(n):
    return (n, 0, 1)


# packed monomials


def pack(e0, e1, e2, e3):
    return e0 | (e1 << 8) | (e2 << 16) | (e3 << 24)


def unpack(k):
    return (k & 255, (k >> 8) & 255, (k >> 16) & 255, (k >> 24) & 255)


def xyzdeg(k):
    return (k & 255) + ((k >> 8) & 255) + ((k >> 16) & 255)


def totdeg(k):
    return (k & 255) + ((k >> 8) & 255) + ((k >> 16) & 255) + ((k >> 24) & 255)


def _maxexp(p):
    m = 0
    for k in p:
        for e in (k & 255, (k >> 8) & 255, (k >> 16) & 255, (k >> 24) & 255):
            if e > m:
                m = e
    return m


# polynomials: dict packed key -> field triple, zeros never stored


def padd(p, q):
    if len(p) < len(q):
        p, q = q, p
    res = dict(p)
    for k, c in q.items():
        old = res.get(k)
        if old is None:
            res[k] = c
        else:
            s = fadd(old, c)
            if s[0] == 0 and s[1] == 0:
                del res[k]
            else:
                res[k] = s
    return res


def psub(p, q):
    res = dict(p)
    for k, c in q.items():
        old = res.get(k)
        if old is None:
            res[k] = fneg(c)
        else:
            s = fsub(old, c)
            if s[0] == 0 and s[1] == 0:
                del res[k]
            else:
                res[k] = s
    return res


def pneg(p):
    return {k: (-a, -b, d) for k, (a, b, d) in p.items()}


def pscale(p, s):
    if s[0] == 0 and s[1] == 0:
        return {}
    return {k: fmul(c, s) for k, c in p.items()}


def pmul(p, q, cap=None):
    """Product of two term maps.

    cap, when given, discards every result monomial whose x,y,z degree is
    >= cap.  Truncation commutes with products because x,y,z degrees add.
    """
    if not p or not q:
        return {}
    if _maxexp(p) + _maxexp(q) >= EXP_LIMIT:
        raise OverflowError("monomial exponent does not fit packed key")
    if len(p) > len(q):
        p, q = q, p
    res = {}
    qitems = list(q.items())
    for k1, c1 in p.items():
        a1, b1, d1 = c1
        for k2, c2 in qitems:
            k = k1 + k2
            if cap is not None and xyzdeg(k) >= cap:
                continue
            a2, b2, d2 = c2
            if b1 == 0:
                a, b, d = a1 * a2, a1 * b2, d1 * d2
            elif b2 == 0:
                a, b, d = a1 * a2, b1 * a2, d1 * d2
            else:
                a = 4 * a1 * a2 + 5 * b1 * b2
                b = 4 * (a1 * b2 + b1 * a2)
                d = 4 * d1 * d2
            old = res.get(k)
            if old is not None:
                oa, ob, od = old
                if od == d:
                    a, b = a + oa, b + ob
                else:
                    a, b, d = a * od + oa * d, b * od + ob * d, d * od
            if a == 0 and b == 0:
                if old is not None:
                    del res[k]
                continue
            g = gcd(gcd(a, b), d)
            if g > 1:
                res[k] = (a // g, b // g, d // g)
            else:
                res[k] = (a, b, d)
    return res


def ppow(p, n, cap=None):
    if n == 0:
        return {0: FONE}
    r = None
    base = p
    while True:
        if n & 1:
            r = dict(base) if r is None else pmul(r, base, cap)
        n >>= 1
        if not n:
            return r
        base = pmul(base, base, cap)


def plap(p):
    """Sum of the four second partial derivatives."""
    res = {}
    for k, c in p.items():
        for sh in (0, 8, 16, 24):
            e = (k >> sh) & 255
            if e < 2:
                continue
            kk = k - (2 << sh)
            a, b, d = c
            m = e * (e - 1)
            a, b = a * m, b * m
            old = res.get(kk)
            if old is not None:
                oa, ob, od = old
                if od == d:
                    a, b = a + oa, b + ob
                else:
                    a, b, d = a * od + oa * d, b * od + ob * d, d * od
            if a == 0 and b == 0:
                if old is not None:
                    del res[kk]
                continue
            g = gcd(gcd(a, b), d)
            if g > 1:
                res[kk] = (a // g, b // g, d // g)
            else:
                res[kk] = (a, b, d)
    return res


def pdehom_trunc(p, bound):
    """Set the last variable to 1 and keep x,y,z degrees below bound."""
    res = {}
    for k, c in p.items():
        kk = k & 0xFFFFFF
        if xyzdeg(kk) >= bound:
            continue
        old = res.get(kk)
        if old is None:
            res[kk] = c
        else:
            s = fadd(old, c)
            if s[0] == 0 and s[1] == 0:
                del res[kk]
            else:
                res[kk] = s
    return res


def plinsub(p, forms, cap=None):
    """Substitute variable i -> forms[i] (a linear form) into p.

    forms: tuple of four term maps, each with monomials of total degree 1.
    Uses Horner splitting over one variable at a time with cached powers
    of the substituted forms.  cap truncates x,y,z degrees as in pmul.
    """
    if not p:
        return {}
    pows = [{0: {0: FONE}, 1: forms[i]} for i in range(4)]

    def formpow(var, n):
        cache = pows[var]
        got = cache.get(n)
        if got is None:
            half = formpow(var, n >> 1)
            got = pmul(half, half, cap)
            if n & 1:
                got = pmul(got, cache[1], cap)
            cache[n] = got
        return got

    def rec(terms, var):
        if var == 4:
            return dict(terms)
        sh = 8 * var
        groups = {}
        for k, c in terms.items():
            e = (k >> sh) & 255
            g = groups.get(e)
            if g is None:
                groups[e] = {k - (e << sh): c}
            else:
                g[k - (e << sh)] = c
        exps = sorted(groups, reverse=True)
        acc = None
        prev = None
        for e in exps:
            part = rec(groups[e], var + 1)
            if acc is None:
                acc = part
            else:
                acc = pmul(acc, formpow(var, prev - e), cap)
                acc = padd(acc, part)
            prev = e
        if prev:
            acc = pmul(acc, formpow(var, prev), cap)
        return acc

    return rec(p, 0)


# flat 4x4 matrices over the field, 48 ints per matrix

MAT_IDENTITY = (
    1, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1,
    0, 0, 1, 1, 0, 1, 0, 0, 1, 0, 0, 1,
    0, 0, 1, 0, 0, 1, 1, 0, 1, 0, 0, 1,
    0, 0, 1, 0, 0, 1, 0, 0, 1, 1, 0, 1,
)


def mat_mul(x, y):
    out = []
    for i in (0, 12, 24, 36):
        for j in (0, 3, 6, 9):
            acc_a, acc_b, acc_d = 0, 0, 1
            for k in range(4):
                a1, b1, d1 = x[i + 3 * k], x[i + 3 * k + 1], x[i + 3 * k + 2]
                if a1 == 0 and b1 == 0:
                    continue
                o = 12 * k + j
                a2, b2, d2 = y[o], y[o + 1], y[o + 2]
                if a2 == 0 and b2 == 0:
                    continue
                if b1 == 0:
                    a, b, d = a1 * a2, a1 * b2, d1 * d2
                elif b2 == 0:
                    a, b, d = a1 * a2, b1 * a2, d1 * d2
                else:
                    a = 4 * a1 * a2 + 5 * b1 * b2
                    b = 4 * (a1 * b2 + b1 * a2)
                    d = 4 * d1 * d2
                if acc_d == d:
                    acc_a, acc_b = acc_a + a, acc_b + b
                else:
                    acc_a = acc_a * d + a * acc_d
                    acc_b = acc_b * d + b * acc_d
                    acc_d = acc_d * d
            acc_a, acc_b, acc_d = fnorm(acc_a, acc_b, acc_d)
            out.append(acc_a)
            out.append(acc_b)
            out.append(acc_d)
    return tuple(out)


def mat_vec(m, v):
    out = []
    for i in (0, 12, 24, 36):
        acc = FZERO
        for k in range(4):
            a1, b1, d1 = m[i + 3 * k], m[i + 3 * k + 1], m[i + 3 * k + 2]
            if a1 == 0 and b1 == 0:
                continue
            acc = fadd(acc, fmul((a1, b1, d1), v[k]))
        out.append(acc)
    return tuple(out)


def closure(gens, cap):
    """Breadth first closure under left multiplication by the generators."""
    seen = {MAT_IDENTITY}
    order = [MAT_IDENTITY]
    gens = [tuple(g) for g in gens]
    head = 0
    while head < len(order):
        e = order[head]
        head += 1
        for g in gens:
            m = mat_mul(g, e)
            if m not in seen:
                if len(order) >= cap:
                    raise ClosureCapExceeded("group closure exceeded cap %d" % cap)
                seen.add(m)
                order.append(m)
    return order


# fraction free elimination over Z[sqrt5]
#
# Rows are flat int lists [a0, b0, a1, b1, ...], entry j = a_j + b_j sqrt5.
# Bareiss updates keep every intermediate entry an integer minor, and the
# per step division is exact in any integral domain.


def _zr_size(a, b):
    return (a if a >= 0 else -a).bit_length() + (b if b >= 0 else -b).bit_length()


def rank_profile(rows, ncols):
    """Pivot column indices of the matrix, scanning columns left to right.

    The rank of the submatrix made of the first k columns equals the number
    of returned pivots below k, so one elimination answers every prefix.
    """
    rows = [list(r) for r in rows]
    m = len(rows)
    pivots = []
    r = 0
    prev_a, prev_b = 1, 0
    for c in range(ncols):
        ca = 2 * c
        best = -1
        best_sz = 0
        for i in range(r, m):
            row = rows[i]
            a, b = row[ca], row[ca + 1]
            if a or b:
                sz = _zr_size(a, b)
                if best < 0 or sz < best_sz:
                    best, best_sz = i, sz
        if best < 0:
            continue
        if best != r:
            rows[best], rows[r] = rows[r], rows[best]
        prow = rows[r]
        pa, pb = prow[ca], prow[ca + 1]
        nrm = prev_a * prev_a - 5 * prev_b * prev_b
        for i in range(r + 1, m):
            row = rows[i]
            fa, fb = row[ca], row[ca + 1]
            if fa == 0 and fb == 0:
                for j in range(ca + 2, 2 * ncols, 2):
                    xa, xb = row[j], row[j + 1]
                    if xa == 0 and xb == 0:
                        continue
                    na = pa * xa + 5 * pb * xb
                    nb = pa * xb + pb * xa
                    row[j], row[j + 1] = _zr_div(na, nb, prev_a, prev_b, nrm)
            else:
                for j in range(ca + 2, 2 * ncols, 2):
                    xa, xb = row[j], row[j + 1]
                    ya, yb = prow[j], prow[j + 1]
                    na = (pa * xa + 5 * pb * xb) - (fa * ya + 5 * fb * yb)
                    nb = (pa * xb + pb * xa) - (fa * yb + fb * ya)
                    if na == 0 and nb == 0:
                        row[j], row[j + 1] = 0, 0
                    else:
                        row[j], row[j + 1] = _zr_div(na, nb, prev_a, prev_b, nrm)
                row[ca], row[ca + 1] = 0, 0
        pivots.append(c)
        r += 1
        if r == m:
            break
        prev_a, prev_b = pa, pb
    return pivots


def _zr_div(na, nb, da, db, nrm):
    # (na + nb s) / (da + db s) with s*s = 5, exact by construction
    if db == 0:
        qa, ra = divmod(na, da)
        qb, rb = divmod(nb, da)
    else:
        ua = na * da - 5 * nb * db
        ub = nb * da - na * db
        qa, ra = divmod(ua, nrm)
        qb, rb = divmod(ub, nrm)
    if ra or rb:
        raise ArithmeticError("inexact division in fraction free elimination")
    return qa, qb
