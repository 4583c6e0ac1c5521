"""
Supersingular reduction of y^2 z = x^3 + z^3
============================================

The curve has j-invariant 0, so it is supersingular at p exactly when
p = 2 (mod 3).  The 1 x 1 Frobenius matrix on H^1(E, O_E) is the Hasse
invariant; it vanishes exactly at those primes.  Point counts give an
independent check: a_p = 0 there.
"""

from frobcoh.frobenius import ProblemSpec, dispatch
from frobcoh.gfp import is_prime
from frobcoh.oracles import elliptic_ap
from frobcoh.polyring import PolyRing

print(f"{'p':>3} {'p mod 3':>7} {'Hasse':>5} {'a_p':>4}")
for p in filter(is_prime, range(5, 50)):
    R = PolyRing(3, p, ("x", "y", "z"))
    x, y, z = R.gens()
    rep = dispatch(ProblemSpec(p, 2, (y**2 * z - x**3 - z**3,), 1))
    hasse = rep.matrix.tolist()[0][0]
    ap = elliptic_ap((0, 0, 0, 0, 1), p)
    # the Hasse invariant is a_p reduced mod p
    assert hasse == ap % p
    print(f"{p:>3} {p % 3:>7} {hasse:>5} {ap:>4}")
