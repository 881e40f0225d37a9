"""Order-set algebra: construction, queries, products, randomized laws."""

import random
from math import gcd

import pytest

from gkspec.orderset import (
    Factorization,
    INT64_MAX,
    J4_ORDER,
    J4_SPECTRUM_GENERATORS,
    OrderSet,
    factorize,
    j4_spectrum,
    j4xj4_spectrum,
    product_spectrum,
    wreath2_spectrum,
)

PI_1 = {5, 11, 23, 29, 31, 37, 43}
PI_2 = {7, 11, 23, 29, 31, 37, 43}


def brute_divisors(n):
    return {d for d in range(1, n + 1) if n % d == 0}


# -- factorize ----------------------------------------------------------------

def test_factorize_small():
    assert factorize(2310).pairs == ((2, 1), (3, 1), (5, 1), (7, 1), (11, 1))
    assert factorize(1).pairs == ()
    assert factorize(2047).pairs == ((23, 1), (89, 1))


def test_factorize_rejects_bad_input():
    with pytest.raises(ValueError):
        factorize(0)
    with pytest.raises(ValueError):
        factorize(-5)
    with pytest.raises(OverflowError):
        factorize(2**63)


def test_factorize_roundtrip_random():
    rng = random.Random(101)
    for _ in range(500):
        n = rng.randrange(1, 10**7)
        f = factorize(n)
        assert f.value() == n
        for p, e in f.pairs:
            assert e >= 1
            assert factorize(p).pairs == ((p, 1),)


def test_j4_order_reconstructs():
    assert J4_ORDER.value() == 2**21 * 3**3 * 5 * 7 * 11**3 * 23 * 29 * 31 * 37 * 43
    assert str(J4_ORDER) == "2^21 3^3 5 7 11^3 23 29 31 37 43"


def test_factorization_validation():
    with pytest.raises(ValueError):
        Factorization(((4, 1),))  # not prime
    with pytest.raises(ValueError):
        Factorization(((3, 1), (2, 1)))  # not increasing
    with pytest.raises(ValueError):
        Factorization(((2, 0),))  # exponent < 1


# -- construction and membership ----------------------------------------------

def test_generators_are_already_an_antichain():
    s = j4_spectrum()
    assert s.maximal_elements == J4_SPECTRUM_GENERATORS


def test_from_generators_reduces():
    assert OrderSet.from_generators([2, 4]).maximal_elements == (4,)
    assert OrderSet.from_generators([6, 2, 3, 6]).maximal_elements == (6,)
    with pytest.raises(ValueError):
        OrderSet.from_generators([0, 3])
    with pytest.raises(ValueError):
        OrderSet.from_generators([])


def test_direct_construction_validates_antichain():
    with pytest.raises(ValueError):
        OrderSet((2, 4))
    with pytest.raises(ValueError):
        OrderSet((4, 2))
    with pytest.raises(ValueError):
        OrderSet(())


def test_j4_expansion_has_31_members():
    members = j4_spectrum().members()
    assert len(members) == 31
    expected = set()
    for g in J4_SPECTRUM_GENERATORS:
        expected |= brute_divisors(g)
    assert members == sorted(expected)


def test_membership():
    s = j4_spectrum()
    assert s.contains(66)
    assert s.contains(1)
    assert not s.contains(46)
    assert 44 in s
    assert 55 not in s
    with pytest.raises(ValueError):
        s.contains(0)


# -- pi and sigma ---------------------------------------------------------------

def test_pi():
    assert j4_spectrum().pi() == (2, 3, 5, 7, 11, 23, 29, 31, 37, 43)
    assert j4_spectrum().pi() == J4_ORDER.primes
    assert OrderSet.from_generators([1]).pi() == ()
    remark = OrderSet.from_generators([15, 51, 85])
    assert remark.pi() == (3, 5, 17)


def test_sigma():
    assert j4_spectrum().sigma() == 3
    assert OrderSet.from_generators([1]).sigma() == 0
    assert OrderSet.from_generators([15, 51, 85]).sigma() == 2


def test_restricted_sigma():
    prod = j4xj4_spectrum()
    assert prod.restricted_sigma(PI_1) == 2
    assert prod.restricted_sigma(PI_2) == 2
    assert prod.restricted_sigma(set()) == 0
    assert j4_spectrum().restricted_sigma({2, 3, 11}) == 3  # attained by 66


def test_sigma_of_product():
    prod = j4xj4_spectrum()
    assert prod.sigma() == 5  # 2310 attains it; subadditivity is not tight
    assert prod.contains(2310)


# -- products -------------------------------------------------------------------

def test_product_examples():
    prod = j4xj4_spectrum()
    assert prod.contains(2310)
    for n in (9, 25, 32):
        assert not prod.contains(n)
    s = OrderSet.from_generators([5, 12, 14])
    assert product_spectrum(s, OrderSet.from_generators([1])) == s
    small = product_spectrum(
        OrderSet.from_generators([2, 3]), OrderSet.from_generators([5])
    )
    assert small.members() == [1, 2, 3, 5, 10, 15]


def test_product_overflow_is_loud():
    a = OrderSet.from_generators([2**62])
    b = OrderSet.from_generators([3])
    with pytest.raises(OverflowError):
        product_spectrum(a, b)


def test_wreath2():
    w = wreath2_spectrum(j4_spectrum())
    assert w.contains(32)
    assert not j4xj4_spectrum().contains(32)
    assert wreath2_spectrum(OrderSet.from_generators([1])).members() == [1, 2]


def test_serialize_parse_roundtrip():
    s = j4_spectrum()
    assert s.serialize() == "16,23,24,28,29,30,31,35,37,40,42,43,44,66"
    assert OrderSet.parse(s.serialize()) == s
    with pytest.raises(ValueError):
        OrderSet.parse("3,x")


# -- randomized laws --------------------------------------------------------------

def random_orderset(rng, max_gens=4, max_val=60):
    gens = [rng.randrange(1, max_val + 1) for _ in range(rng.randrange(1, max_gens + 1))]
    return OrderSet.from_generators(gens)


def test_divisor_closure_random():
    rng = random.Random(202)
    for _ in range(1000):
        s = random_orderset(rng)
        n = rng.choice(s.maximal_elements)
        # every divisor of a member is a member
        for d in brute_divisors(n):
            assert s.contains(d)
        # and a non-divisor of everything is not
        m = rng.randrange(1, 200)
        assert s.contains(m) == any(x % m == 0 for x in s.maximal_elements)


def test_antichain_idempotence_random():
    rng = random.Random(303)
    for _ in range(1000):
        s = random_orderset(rng)
        assert OrderSet.from_generators(s.maximal_elements) == s


def test_product_laws_random():
    rng = random.Random(404)
    one = OrderSet.from_generators([1])
    for _ in range(1000):
        a = random_orderset(rng, max_gens=3, max_val=40)
        b = random_orderset(rng, max_gens=3, max_val=40)
        ab = product_spectrum(a, b)
        # commutativity
        assert ab == product_spectrum(b, a)
        # identity
        assert product_spectrum(a, one) == a
        # monotonicity: enlarge a by one extra generator
        extra = rng.randrange(1, 40)
        a2 = OrderSet.from_generators(list(a.maximal_elements) + [extra])
        ab2 = product_spectrum(a2, b)
        assert ab.issubset(ab2)
        # prime-power reduction
        p = rng.choice([2, 3, 5, 7])
        e = rng.randrange(1, 6)
        q = p**e
        assert ab.contains(q) == (a.contains(q) or b.contains(q))


def test_product_matches_bruteforce_oracle_random():
    rng = random.Random(505)
    for _ in range(300):
        a = random_orderset(rng, max_gens=3, max_val=40)
        b = random_orderset(rng, max_gens=3, max_val=40)
        brute = set()
        for x in a.members():
            for y in b.members():
                v = x // gcd(x, y) * y
                brute |= brute_divisors(v)
        assert sorted(brute) == product_spectrum(a, b).members()


def test_sigma_subadditive_random():
    rng = random.Random(606)
    for _ in range(300):
        a = random_orderset(rng, max_gens=3, max_val=50)
        b = random_orderset(rng, max_gens=3, max_val=50)
        assert product_spectrum(a, b).sigma() <= a.sigma() + b.sigma()


def test_int64_boundary_values_ok():
    s = OrderSet.from_generators([INT64_MAX])
    assert s.contains(INT64_MAX)
    with pytest.raises(OverflowError):
        OrderSet.from_generators([INT64_MAX + 1])
