import pytest
from hypothesis import given, strategies as st

from frobcoh.errors import UsageError
from frobcoh.gfp import FieldElem, PrimeField, ff_add_mul, ff_inv, ff_pow, is_prime

PRIMES = [2, 3, 5, 7, 101, 2**31 - 1]


def test_is_prime_small():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert is_prime(2**31 - 1)
    assert not is_prime(2**31 - 3)
    assert not is_prime(-7)


def test_field_rejects_composite_and_large():
    with pytest.raises(UsageError):
        PrimeField(4)
    with pytest.raises(UsageError):
        PrimeField(1)
    with pytest.raises(UsageError):
        PrimeField(2**31 + 11)


def test_examples():
    F = PrimeField(7)
    assert ff_add_mul(F(5), F(4), "add") == F(2)
    assert ff_add_mul(F(5), F(4), "mul") == F(6)
    assert ff_add_mul(F(2), F(5), "sub") == F(4)
    assert ff_inv(F(3)) == F(5)
    assert ff_pow(F(0), 0) == F(1)
    assert ff_pow(F(3), 6) == F(1)


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        ff_inv(PrimeField(5)(0))


def test_modulus_mismatch():
    with pytest.raises(UsageError):
        ff_add_mul(PrimeField(5)(1), PrimeField(7)(1), "add")
    with pytest.raises(UsageError):
        FieldElem(5, 5)


def test_negative_exponent():
    with pytest.raises(UsageError):
        ff_pow(PrimeField(5)(2), -1)


@given(st.sampled_from(PRIMES), st.integers(), st.integers(), st.integers())
def test_field_axioms(p, a, b, c):
    F = PrimeField(p)
    x, y, z = F(a), F(b), F(c)
    assert x + y == y + x
    assert x * (y + z) == x * y + x * z
    assert (x - y) + y == x
    if x:
        assert x * ff_inv(x) == F(1)


@given(st.sampled_from(PRIMES), st.integers(min_value=1, max_value=10**6))
def test_fermat(p, a):
    x = PrimeField(p)(a)
    assert ff_pow(x, p) == x


@given(st.sampled_from(PRIMES), st.integers(), st.integers(min_value=0, max_value=500))
def test_pow_matches_builtin(p, a, e):
    assert ff_pow(PrimeField(p)(a), e).value == pow(a % p, e, p) % p
