import pytest
from hypothesis import given, strategies as st

from frobcoh.cohomo import fp_charpoly
from frobcoh.errors import InputError, UsageError
from frobcoh.freemod import free_resolution, standard_monomial_count
from frobcoh.oracles import (AffineHyperellipticModel, brute_graded_dim, elliptic_ap,
                             hyperelliptic_hw)
from frobcoh.polyring import PolyRing

X0_23_H = (-1, -1, 0, -1)
X0_23_K = (-2, 2, -3, 0, 0, -2)


def _count_points(a, p):
    a1, a2, a3, a4, a6 = a
    affine = sum(1 for x in range(p) for y in range(p)
                 if (y * y + a1 * x * y + a3 * y - x**3 - a2 * x * x - a4 * x - a6) % p == 0)
    return affine + 1


def test_x0_23_model():
    m = AffineHyperellipticModel(X0_23_H, X0_23_K, 5)
    assert m.genus == 2
    assert len(m.f) == 7


def test_model_errors():
    with pytest.raises(InputError):
        AffineHyperellipticModel((), (1, 0, 0, 1), 2)
    with pytest.raises(InputError):
        AffineHyperellipticModel((), (1, 1), 5)
    with pytest.raises(InputError):
        AffineHyperellipticModel((), (0, 0, 1, 1), 5)  # x^2 (x + 1)
    with pytest.raises(UsageError):
        AffineHyperellipticModel((), (1, 0, 0, 1), 9)


@pytest.mark.parametrize("p,expected", [(3, [1, 0, 1]), (5, [1, 2, 1]), (7, [1, 5, 3]),
                                        (11, [1, 6, 4]), (13, [1, 7, 9]), (17, [1, 11, 4])])
def test_x0_23_charpolys(p, expected):
    M = hyperelliptic_hw(AffineHyperellipticModel(X0_23_H, X0_23_K, p))
    assert M.shape == (2, 2)
    assert fp_charpoly(M) == expected


def test_elliptic_examples():
    # y^2 = x^3 + 1 is supersingular exactly for p = 2 mod 3
    assert elliptic_ap((0, 0, 0, 0, 1), 5) == 0
    assert elliptic_ap((0, 0, 0, 0, 1), 7) != 0
    with pytest.raises(InputError):
        elliptic_ap((0, 0, 0, 0, 0), 7)
    with pytest.raises(UsageError):
        elliptic_ap((0, 0, 0, 0, 1), 10**5 + 3)


@given(st.sampled_from([2, 3, 5, 7, 11, 13, 17, 19, 23, 29]),
       st.tuples(*[st.integers(0, 28)] * 5))
def test_elliptic_ap_against_double_loop(p, a):
    try:
        ap = elliptic_ap(a, p)
    except InputError:
        return
    assert ap == p + 1 - _count_points([x % p for x in a], p)


@given(st.sampled_from([3, 5, 7, 11, 13, 17, 19, 23]), st.tuples(*[st.integers(0, 22)] * 3))
def test_hasse_invariant_is_trace_mod_p(p, abc):
    # for y^2 = x^3 + a x^2 + b x + c the Hasse invariant is a_p mod p
    a, b, c = abc
    try:
        model = AffineHyperellipticModel((), (c, b, a, 1), p)
        ap = elliptic_ap((0, a, 0, b, c), p)
    except InputError:
        return
    assert hyperelliptic_hw(model).tolist() == [[ap % p]]


def test_brute_graded_dim_examples():
    R = PolyRing(3, 5)
    x, y, z = R.gens()
    assert [brute_graded_dim([x**3 + y**3 + z**3], d) for d in range(6)] == [1, 3, 6, 9, 12, 15]
    assert brute_graded_dim([], 2, nvars=3) == 6
    assert brute_graded_dim([x], -1) == 0
    with pytest.raises(UsageError):
        brute_graded_dim([x], 13)


def test_brute_graded_dim_against_standard_monomials():
    R = PolyRing(4, 7)
    a, b, c, d = R.gens()
    f = [a * c - b**2, b * d - c**2, a * d - b * c]
    res = free_resolution(f)
    leads = [g.leading_term()[0] for g in res.groebner]
    for k in range(8):
        assert brute_graded_dim(f, k) == standard_monomial_count(leads, 4, k) == 3 * k + 1


def test_small_elliptic_examples():
    assert hyperelliptic_hw(AffineHyperellipticModel((), (1, 0, 0, 1), 5)).tolist() == [[0]]
    assert hyperelliptic_hw(AffineHyperellipticModel((), (0, 1, 0, 1), 5)).tolist() == [[2]]
    assert elliptic_ap((0, 0, 0, 0, 1), 5) == 0
    assert elliptic_ap((0, 0, 0, 1, 0), 3) == 0


def test_x0_67_hilbert_function_against_koszul_twists():
    from math import comb

    from frobcoh.data import fixture_text
    from frobcoh.polyparse import parse_problem
    spec = parse_problem(fixture_text("x0_67"))
    twists = [(0,), (2, 2, 2), (4, 4, 4), (6,)]
    free = lambda d: comb(d + 4, 4) if d >= 0 else 0
    for d in range(10):
        alternating = sum((-1) ** i * free(d - t) for i, ts in enumerate(twists) for t in ts)
        assert brute_graded_dim(spec.generators, d) == alternating
