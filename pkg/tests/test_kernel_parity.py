"""The compiled kernel and the pure Python kernel must agree bit for bit.

Every comparison here feeds identical randomized inputs to both modules and
asserts identical outputs, including normalization of field triples and the
exact pivot columns of the fraction free elimination.
"""

import random

import pytest

from rootwald import _kernel_py as py
from rootwald import kernel
from rootwald.groups import f4_generators

cx = pytest.importorskip("rootwald._speedups")

rng = random.Random(415)


def rand_triple(nonzero=False):
    while True:
        t = py.fnorm(rng.randint(-40, 40), rng.randint(-40, 40), rng.randint(1, 24))
        if not nonzero or t[0] or t[1]:
            return t


def rand_poly(nterms, emax):
    p = {}
    for _ in range(nterms):
        k = py.pack(rng.randint(0, emax), rng.randint(0, emax),
                    rng.randint(0, emax), rng.randint(0, emax))
        p[k] = rand_triple(nonzero=True)
    return p


def rand_matrix():
    flat = []
    for _ in range(16):
        flat.extend(rand_triple())
    return tuple(flat)


def test_backend_registry():
    assert py.BACKEND == "python" and cx.BACKEND == "c"
    assert kernel.load_backend("python") is py
    assert kernel.load_backend("c") is cx
    with pytest.raises(ValueError):
        kernel.load_backend("fortran")
    assert kernel.BACKEND in ("python", "c")
    assert tuple(cx.MAT_IDENTITY) == tuple(py.MAT_IDENTITY)


def test_field_ops_agree():
    for _ in range(400):
        x = rand_triple()
        y = rand_triple(nonzero=True)
        assert cx.fadd(x, y) == py.fadd(x, y)
        assert cx.fsub(x, y) == py.fsub(x, y)
        assert cx.fneg(x) == py.fneg(x)
        assert cx.fmul(x, y) == py.fmul(x, y)
        assert cx.finv(y) == py.finv(y)
        assert cx.fdiv(x, y) == py.fdiv(x, y)
    for n in (0, 1, 2, 7, -3):
        x = rand_triple(nonzero=True)
        assert cx.fpow(x, n) == py.fpow(x, n)
    raw = (6, -10, -8)
    assert cx.fnorm(*raw) == py.fnorm(*raw) == (-3, 5, 4)
    assert cx.f_from_int(-7) == py.f_from_int(-7)
    with pytest.raises(ZeroDivisionError):
        cx.finv(py.FZERO)


def test_packing_agree():
    for _ in range(200):
        e = tuple(rng.randint(0, 255) for _ in range(4))
        k = py.pack(*e)
        assert cx.pack(*e) == k
        assert cx.unpack(k) == py.unpack(k) == e
        assert cx.xyzdeg(k) == py.xyzdeg(k) == sum(e[:3])
        assert cx.totdeg(k) == py.totdeg(k) == sum(e)


def test_poly_arithmetic_agree():
    for _ in range(60):
        p = rand_poly(rng.randint(0, 12), 9)
        q = rand_poly(rng.randint(1, 12), 9)
        assert cx.padd(p, q) == py.padd(p, q)
        assert cx.psub(p, q) == py.psub(p, q)
        assert cx.pneg(p) == py.pneg(p)
        s = rand_triple()
        assert cx.pscale(p, s) == py.pscale(p, s)
        for cap in (None, 7):
            assert cx.pmul(p, q, cap) == py.pmul(p, q, cap)
    # cancellation: p + (-p) is empty in both
    p = rand_poly(8, 9)
    assert cx.padd(p, cx.pneg(p)) == py.padd(p, py.pneg(p)) == {}


def test_poly_pow_lap_dehom_agree():
    for _ in range(25):
        p = rand_poly(rng.randint(1, 6), 5)
        for n in (0, 1, 2, 3):
            for cap in (None, 8):
                assert cx.ppow(p, n, cap) == py.ppow(p, n, cap)
        assert cx.plap(p) == py.plap(p)
        for bound in (1, 4, 50):
            assert cx.pdehom_trunc(p, bound) == py.pdehom_trunc(p, bound)


def test_linear_substitution_agree():
    units = [py.pack(1, 0, 0, 0), py.pack(0, 1, 0, 0),
             py.pack(0, 0, 1, 0), py.pack(0, 0, 0, 1)]
    for _ in range(25):
        p = rand_poly(rng.randint(1, 6), 4)
        forms = []
        for _ in range(4):
            form = {}
            for u in units:
                if rng.random() < 0.7:
                    form[u] = rand_triple(nonzero=True)
            forms.append(form)
        forms = tuple(forms)
        for cap in (None, 6):
            assert cx.plinsub(p, forms, cap) == py.plinsub(p, forms, cap)


def test_exponent_overflow_agree():
    big = {py.pack(200, 0, 0, 0): py.FONE}
    with pytest.raises(OverflowError):
        py.pmul(big, big)
    with pytest.raises(OverflowError):
        cx.pmul(big, big)


def test_matrix_ops_agree():
    for _ in range(50):
        x = rand_matrix()
        y = rand_matrix()
        assert cx.mat_mul(x, y) == py.mat_mul(x, y)
        v = tuple(rand_triple() for _ in range(4))
        assert cx.mat_vec(x, v) == py.mat_vec(x, v)
    ident = py.MAT_IDENTITY
    x = rand_matrix()
    assert cx.mat_mul(ident, x) == x == py.mat_mul(ident, x)


def test_rank_profile_agree():
    for _ in range(60):
        m = rng.randint(1, 8)
        n = rng.randint(1, 8)
        rows = [[rng.randint(-5, 5) for _ in range(2 * n)] for _ in range(m)]
        assert cx.rank_profile(rows, n) == py.rank_profile(rows, n)
    # rank 2 with the middle column dependent, so a pivot gets skipped
    rows = [[0, 1, 0, 2, 1, 0],
            [0, 2, 0, 4, 2, 0],
            [1, 0, 2, 0, 0, 0]]
    assert cx.rank_profile(rows, 3) == py.rank_profile(rows, 3) == [0, 2]


def test_closure_agree():
    gens = [g.flat for g in f4_generators()]
    a = py.closure(gens, 2000)
    b = cx.closure(gens, 2000)
    assert len(a) == len(b) == 1152
    assert [tuple(m) for m in a] == [tuple(m) for m in b]
    with pytest.raises(py.ClosureCapExceeded):
        py.closure(gens, 100)
    with pytest.raises(cx.ClosureCapExceeded):
        cx.closure(gens, 100)
