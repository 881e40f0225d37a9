"""Finite-field arithmetic: construction, axioms, orders, generators."""

import random
from itertools import product as iproduct

import pytest

from gkspec.gf import make_field, element_order, subgroup_generator
from gkspec.orderset import factorize


# -- construction ----------------------------------------------------------------

def test_make_field_sizes():
    assert make_field(3, 4).order == 81
    assert make_field(2, 11).order == 2048
    assert make_field(23, 1).modulus == (0, 1)
    assert make_field(3, 16).order == 3**16


def test_make_field_determinism():
    a = make_field(3, 4)
    b = make_field(3, 4)
    assert a is b or a.modulus == b.modulus


def test_make_field_rejects():
    with pytest.raises(ValueError):
        make_field(6, 2)
    with pytest.raises(ValueError):
        make_field(3, 0)
    with pytest.raises(OverflowError):
        make_field(2, 64)


def test_2048_cofactor_factors():
    assert factorize(2**11 - 1).pairs == ((23, 1), (89, 1))


# independent irreducibility oracle: trial division by every lower-degree monic
def _poly_mod(a, b, p):
    a = list(a)
    while len(a) >= len(b) and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        c = a[-1] * pow(b[-1], p - 2, p) % p
        s = len(a) - len(b)
        for i in range(len(b)):
            a[s + i] = (a[s + i] - c * b[i]) % p
        while a and a[-1] == 0:
            a.pop()
    return a


def _brute_irreducible(poly, p):
    k = len(poly) - 1
    for d in range(1, k // 2 + 1):
        for tail in iproduct(range(p), repeat=d):
            divisor = list(tail) + [1]
            if not _poly_mod(poly, divisor, p):
                return False
    return True


@pytest.mark.parametrize("p,k", [(2, 5), (2, 6), (3, 2), (3, 3), (5, 2)])
def test_modulus_is_lex_smallest_irreducible(p, k):
    f = make_field(p, k)
    assert _brute_irreducible(list(f.modulus), p)
    # nothing lexicographically smaller is irreducible
    for n in range(p**k):
        coeffs = [0] * k
        m = n
        for i in range(k - 1, -1, -1):
            coeffs[i] = m % p
            m //= p
        candidate = coeffs + [1]
        if tuple(candidate) == f.modulus:
            break
        assert not _brute_irreducible(candidate, p)


# -- arithmetic laws ---------------------------------------------------------------

def _random_element(field, rng):
    return field.element(tuple(rng.randrange(field.p) for _ in range(field.k)))


@pytest.mark.parametrize("p,k,seed", [(2, 5, 1), (2, 11, 2), (3, 4, 3), (23, 1, 4), (3, 16, 5)])
def test_field_axioms_random(p, k, seed):
    f = make_field(p, k)
    rng = random.Random(seed)
    for _ in range(1000):
        a, b, c = (_random_element(f, rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a + f.zero == a
        assert a * f.one == a


def test_inverse_of_100_random_nonzero_elements():
    f = make_field(3, 16)
    rng = random.Random(6)
    seen = 0
    while seen < 100:
        x = _random_element(f, rng)
        if x.is_zero:
            continue
        assert x * x.inverse() == f.one
        assert x / x == f.one
        seen += 1
    with pytest.raises(ZeroDivisionError):
        f.zero.inverse()


def test_lagrange_pow():
    rng = random.Random(7)
    for p, k in [(2, 11), (3, 4)]:
        f = make_field(p, k)
        for _ in range(50):
            g = _random_element(f, rng)
            if g.is_zero:
                continue
            assert g ** (f.order - 1) == f.one
    # negative exponents go through the inverse
    f = make_field(3, 4)
    x = f.element((1, 2, 0, 1))
    assert x**-1 == x.inverse()


def test_frobenius_is_additive():
    rng = random.Random(8)
    for p, k in [(2, 11), (3, 4), (3, 16)]:
        f = make_field(p, k)
        for _ in range(200):
            a, b = _random_element(f, rng), _random_element(f, rng)
            assert f.frobenius(a + b) == f.frobenius(a) + f.frobenius(b)


def test_mixed_field_operations_rejected():
    a = make_field(2, 5).one
    b = make_field(3, 4).one
    with pytest.raises(ValueError):
        a + b
    with pytest.raises(ValueError):
        a * b


# -- orders and generators ------------------------------------------------------------

def test_element_order_exactness_random():
    rng = random.Random(9)
    for p, k in [(2, 11), (3, 4)]:
        f = make_field(p, k)
        q1 = f.order - 1
        for _ in range(100):
            x = _random_element(f, rng)
            if x.is_zero:
                continue
            m = element_order(x)
            assert q1 % m == 0
            assert x**m == f.one
            for r in factorize(m).primes:
                assert x ** (m // r) != f.one
    with pytest.raises(ValueError):
        element_order(make_field(2, 5).zero)


def test_subgroup_generator_orders():
    assert element_order(subgroup_generator(make_field(3, 16), 17)) == 17
    assert element_order(subgroup_generator(make_field(3, 4), 5)) == 5
    f = make_field(2, 11)
    assert subgroup_generator(f, 1) == f.one
    zeta = subgroup_generator(f, 23)
    assert element_order(zeta) == 23
    with pytest.raises(ValueError):
        subgroup_generator(f, 7)  # 7 does not divide 2047


def test_subgroup_generator_deterministic():
    f = make_field(3, 16)
    assert subgroup_generator(f, 17) == subgroup_generator(f, 17)


def test_frobenius_permutes_order23_subgroup():
    # the multiplicative order of 2 modulo 23 is 11, so the Frobenius orbit
    # of a 23rd root of unity has full length 11 inside the subgroup
    assert [j for j in range(1, 12) if pow(2, j, 23) == 1] == [11]
    f = make_field(2, 11)
    zeta = subgroup_generator(f, 23)
    subgroup = {zeta**i for i in range(23)}
    orbit = set()
    x = zeta
    for _ in range(11):
        x = f.frobenius(x)
        assert x in subgroup
        orbit.add(x)
    assert len(orbit) == 11


def test_multiplicative_group_cyclicity_witness():
    for p, k in [(2, 5), (3, 2), (23, 1), (2, 11), (3, 4)]:
        f = make_field(p, k)
        g = subgroup_generator(f, f.order - 1)
        assert element_order(g) == f.order - 1


# -- serialization ---------------------------------------------------------------------

def test_element_text_roundtrip():
    f = make_field(3, 4)
    x = f.element((2, 1, 0, 2))
    assert x.serialize() == "3,4:[2,1,0,2]"
    assert f.parse_element(x.serialize()) == x
    with pytest.raises(ValueError):
        f.parse_element("2,4:[1,0,0,0]")  # wrong characteristic


def test_field_text_form():
    f = make_field(2, 5)
    assert str(f) == "GF(2^5)/modulus=[{}]".format(",".join(map(str, f.modulus)))


def test_element_at_lexicographic():
    f = make_field(3, 2)
    seq = [f.element_at(n).coeffs for n in range(9)]
    assert seq == sorted(seq)  # lexicographic on (c0, c1)
    assert seq[0] == (0, 0)
    assert seq[1] == (0, 1)
    assert seq[3] == (1, 0)
