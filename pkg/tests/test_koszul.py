import pytest
import sympy
from hypothesis import given, settings, strategies as st

from frobcoh.errors import InputError
from frobcoh.freemod import frobenius_resolution, hilbert_exactness, hom_compose
from frobcoh.koszul import (is_regular_sequence, koszul_complex, koszul_lift,
                            krull_dimension)
from frobcoh.polyring import PolyRing

from strategies import polys


def test_koszul_shape():
    R = PolyRing(4, 5)
    x, y, z, w = R.gens()
    K = koszul_complex([x**2, y**3, z * w])
    assert K.indices[2] == ((0, 1), (0, 2), (1, 2))
    assert K.twists(1) == (2, 3, 2)
    assert K.twists(2) == (5, 4, 5)
    assert K.twists(3) == (7,)
    assert K.as_resolution().is_complex()


def test_koszul_is_resolution_of_ci():
    R = PolyRing(4, 7)
    x, y, z, w = R.gens()
    K = koszul_complex([x**2 + y * z, w**2 - x * y])
    assert hilbert_exactness(K.as_resolution())


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_lift_commutes(n):
    R = PolyRing(3, 5)
    x, y, z = R.gens()
    f = [x**3 + y**3 + z**3, x * y - z**2]
    K = koszul_complex(f)
    Kn = koszul_complex([g**n for g in f])
    psi = koszul_lift(f, n)
    for i in range(2, len(f) + 1):
        left = hom_compose(psi[i - 2], Kn.maps[i - 1])
        right = hom_compose(K.maps[i - 1], psi[i - 1])
        assert left.matrix == right.matrix


def test_lift_at_p_matches_frobenius_twist():
    R = PolyRing(3, 3)
    x, y, z = R.gens()
    f = [x**2 - y * z, y**2 + x * z]
    res = koszul_complex(f).as_resolution()
    Rp = frobenius_resolution(res)
    psi = koszul_lift(f, 3)
    assert (hom_compose(psi[0], Rp.maps[1]).matrix == hom_compose(res.maps[1], psi[1]).matrix)


def test_lift_rejects_nonpositive():
    x = PolyRing(2, 5).var(0)
    with pytest.raises(InputError):
        koszul_lift([x], 0)


def test_regularity_examples():
    R = PolyRing(3, 5)
    x, y, z = R.gens()
    assert is_regular_sequence([x, y])
    assert not is_regular_sequence([x * y, x * z])
    assert is_regular_sequence([x**3 + y**3 + z**3])
    with pytest.raises(InputError):
        is_regular_sequence([x, y, z, x + y])
    with pytest.raises(InputError):
        is_regular_sequence([x], r=5)


def test_krull_dimension():
    R = PolyRing(4, 7)
    a, b, c, d = R.gens()
    assert krull_dimension([a * c - b**2, b * d - c**2, a * d - b * c]) == 2
    assert krull_dimension([a]) == 3
    assert krull_dimension([a, b, c, d]) == 0


def _sympy_coprime(f, g):
    syms = sympy.symbols(f"t0:{f.ring.nvars}")
    P = [sympy.Poly.from_dict(dict(h.terms), syms, modulus=f.ring.p) for h in (f, g)]
    return sympy.gcd(P[0], P[1]).total_degree() == 0


@settings(max_examples=30)
@given(st.data())
def test_two_forms_regular_iff_coprime(data):
    p = data.draw(st.sampled_from([2, 3, 5]))
    R = PolyRing(3, p)
    f = data.draw(polys(R, max_terms=3, homogeneous_degree=2))
    g = data.draw(polys(R, max_terms=3, homogeneous_degree=data.draw(st.integers(1, 3))))
    if f.is_zero() or g.is_zero():
        return
    assert is_regular_sequence([f, g]) == _sympy_coprime(f, g)


def test_lift_examples():
    R = PolyRing(3, 5)
    x, y, z = R.gens()
    f = [x**2 - y * z, y**3 + z**3]
    for h in koszul_lift(f, 1):
        assert all(g == (R.one() if i == j else R.zero())
                   for i, row in enumerate(h.matrix) for j, g in enumerate(row))
    (psi,) = koszul_lift([f[0]], 5)
    assert psi.matrix == ((f[0] ** 4,),)


def test_x0_67_koszul_lift_commutes():
    from frobcoh.data import fixture_text
    from frobcoh.polyparse import parse_problem
    spec = parse_problem(fixture_text("x0_67"))
    K = koszul_complex(spec.generators)
    assert [K.twists(i) for i in (1, 2, 3)] == [(2, 2, 2), (4, 4, 4), (6,)]
    assert is_regular_sequence(spec.generators)
    Kp = frobenius_resolution(K.as_resolution())
    psi = koszul_lift(spec.generators, spec.p)
    assert hom_compose(K.maps[0], psi[0]).matrix == Kp.maps[0].matrix
    for i in (2, 3):
        assert (hom_compose(psi[i - 2], Kp.maps[i - 1]).matrix
                == hom_compose(K.maps[i - 1], psi[i - 1]).matrix)


@settings(max_examples=20)
@given(st.data())
def test_regularity_is_permutation_invariant(data):
    R = PolyRing(3, 5)
    f = [data.draw(polys(R, max_terms=3, homogeneous_degree=d)) for d in (1, 2, 2)]
    f = [g for g in f if not g.is_zero()]
    if not f:
        return
    perm = data.draw(st.permutations(f))
    assert is_regular_sequence(f) == is_regular_sequence(list(perm))
