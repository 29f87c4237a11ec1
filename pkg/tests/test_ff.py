import random

import pytest

from siegeltrace.ff import PrimeField, QuadExtField, build_prime_field, build_quad_ext


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_prime_field_character_balance(p):
    field = build_prime_field(p)
    assert field.chi[0] == 0
    assert field.chi[1:].count(1) == (p - 1) // 2
    assert field.chi[1:].count(-1) == (p - 1) // 2


@pytest.mark.parametrize("bad", [1, 2, 4, 6, 9, 15, -3, 0])
def test_prime_field_rejects_non_odd_primes(bad):
    with pytest.raises(ValueError):
        PrimeField(bad)


def test_prime_field_arithmetic_exhaustive_p7():
    field = build_prime_field(7)
    for a in range(7):
        for b in range(7):
            assert field.add(a, b) == (a + b) % 7
            assert field.mul(a, b) == (a * b) % 7
            assert field.sub(a, b) == (a - b) % 7
    for a in range(1, 7):
        assert field.mul(a, field.inv(a)) == 1


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_character_multiplicativity(p):
    field = build_prime_field(p)
    for a in range(1, p):
        for b in range(1, p):
            assert field.chi[field.mul(a, b)] == field.chi[a] * field.chi[b]


def test_non_residue_is_a_non_residue():
    for p in (3, 5, 7, 11, 13):
        field = build_prime_field(p)
        d = field.non_residue()
        assert field.chi[d] == -1


@pytest.mark.parametrize("p", [3, 5, 7])
def test_quad_ext_norm_and_character(p):
    fp = build_prime_field(p)
    ext = build_quad_ext(fp)
    assert ext.q == p * p
    # norm is multiplicative and lands in the base field
    rng = random.Random(p)
    for _ in range(100):
        x = rng.randrange(ext.q)
        y = rng.randrange(ext.q)
        assert ext.norm(ext.mul(x, y)) == fp.mul(ext.norm(x), ext.norm(y))
    # extension character is the base character of the norm
    for x in range(1, ext.q):
        assert ext.chi[x] == fp.chi[ext.norm(x)]
    # base-field elements are squares upstairs
    for n in range(1, p):
        assert ext.chi[ext.embed(n)] == 1


@pytest.mark.parametrize("p", [3, 5, 7])
def test_quad_ext_frobenius(p):
    ext = build_quad_ext(build_prime_field(p))
    for x in range(ext.q):
        fx = ext.frobenius(x)
        assert ext.frobenius(fx) == x
        # Frobenius fixes exactly the embedded base field
        if fx == x:
            u, v = ext.coords(x)
            assert v == 0


@pytest.mark.parametrize("p", [3, 5])
def test_quad_ext_inverse_exhaustive(p):
    ext = build_quad_ext(build_prime_field(p))
    one = ext.embed(1)
    for x in range(1, ext.q):
        assert ext.mul(x, ext.inv(x)) == one
