"""
Hasse-Witt data of X_0(23) across small primes
==============================================

X_0(23) has genus 2 and a projective model as the intersection of one
quadric with the rational normal quartic in P^4.  It is not a complete
intersection, so only the general pipeline applies.  Each row is checked
against the Cartier-Manin matrix of an affine hyperelliptic model.
"""

from frobcoh.cohomo import fp_charpoly
from frobcoh.data import fixture_text
from frobcoh.frobenius import algorithm_I
from frobcoh.oracles import AffineHyperellipticModel, hyperelliptic_hw
from frobcoh.polyparse import affine_model, parse_problem, read_problem_file

text = fixture_text("x0_23")
pf = read_problem_file(text)

print(f"{'p':>3} {'rank':>4}  {'char poly':<12} {'D':>2} {'alpha':>7} "
      f"{'step A (s)':>10} {'step B (s)':>10}  oracle")
for p in (3, 5, 7, 11, 13, 17):
    rep = algorithm_I(parse_problem(text, p=p))
    # affine model: y^2 + h(x) y = k(x)
    h, k = affine_model(pf, p)
    hw = hyperelliptic_hw(AffineHyperellipticModel(tuple(h), tuple(k), p))
    agree = fp_charpoly(hw) == rep.char_poly
    print(f"{p:>3} {rep.rank:>4}  {str(rep.char_poly):<12} {rep.D:>2} {rep.alpha:>7} "
          f"{rep.timings['step_a']:>10.3f} {rep.timings['step_b']:>10.3f}  "
          f"{'agree' if agree else 'DIFFER'}")

# a rank-2 matrix at every prime means X_0(23) is ordinary there;
# at p = 13 the matrix is scalar
print(algorithm_I(parse_problem(text, p=13)).matrix.tolist())
