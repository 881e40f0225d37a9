"""Differential tests: compiled kernels against the pure-Python reference."""

import random

import pytest

from gkspec import _fallback
from gkspec.gf import make_field

try:
    from gkspec import _speedups
except ImportError:
    _speedups = None

needs_compiled = pytest.mark.skipif(
    _speedups is None, reason="compiled extension not built"
)


def _random_coeffs(rng, p, k):
    return tuple(rng.randrange(p) for _ in range(k))


@needs_compiled
@pytest.mark.parametrize("p,k", [(2, 11), (3, 4), (3, 16), (23, 1), (5, 3)])
def test_gf_mul_agreement(p, k):
    f = make_field(p, k)
    rng = random.Random(31)
    for _ in range(500):
        a = _random_coeffs(rng, p, k)
        b = _random_coeffs(rng, p, k)
        assert _speedups.gf_mul(a, b, f.modulus, p) == _fallback.gf_mul(a, b, f.modulus, p)


@needs_compiled
@pytest.mark.parametrize("p,k", [(2, 11), (3, 16)])
def test_gf_pow_agreement(p, k):
    f = make_field(p, k)
    rng = random.Random(32)
    for _ in range(100):
        a = _random_coeffs(rng, p, k)
        e = rng.randrange(0, f.order)
        assert _speedups.gf_pow(a, e, f.modulus, p) == _fallback.gf_pow(a, e, f.modulus, p)


@needs_compiled
@pytest.mark.parametrize("p,k", [(2, 11), (3, 4)])
def test_gf_geom_sum_agreement(p, k):
    f = make_field(p, k)
    rng = random.Random(33)
    for _ in range(100):
        a = _random_coeffs(rng, p, k)
        m = rng.randrange(1, 120)
        assert _speedups.gf_geom_sum(a, m, f.modulus, p) == _fallback.gf_geom_sum(
            a, m, f.modulus, p
        )


def _field_tables(q):
    from gkspec.orderset import factorize

    ((p, k),) = factorize(q).pairs
    f = make_field(p, k)
    elems = [f.element_at(n) for n in range(q)]
    index = {e.coeffs: n for n, e in enumerate(elems)}
    mul = [index[(a * b).coeffs] for a in elems for b in elems]
    add = [index[(a + b).coeffs] for a in elems for b in elems]
    neg = [index[(-a).coeffs] for a in elems]
    return mul, add, neg, index[f.one.coeffs], index[f.zero.coeffs]


@needs_compiled
@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 11, 13])
def test_psl2_counts_agreement(q):
    mul, add, neg, one, zero = _field_tables(q)
    fast = _speedups.psl2_order_counts(q, mul, add, neg, one, zero)
    slow = _fallback.psl2_order_counts(q, mul, add, neg, one, zero)
    assert list(fast) == list(slow)
    assert sum(fast) == q * (q - 1) * (q + 1)


def test_fallback_counts_total_is_sl2_size():
    for q in (2, 3, 5, 7):
        mul, add, neg, one, zero = _field_tables(q)
        counts = _fallback.psl2_order_counts(q, mul, add, neg, one, zero)
        assert sum(counts) == q * (q - 1) * (q + 1)


def test_backend_reports_a_name():
    from gkspec._core import backend_name

    assert backend_name() in ("compiled", "pure")
