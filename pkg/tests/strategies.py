"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from frobcoh.polyring import PolyRing

SMALL_PRIMES = (2, 3, 5, 7, 11, 13)


def exponents(nvars, max_deg):
    return st.tuples(*[st.integers(0, max_deg)] * nvars)


@st.composite
def polys(draw, ring, max_terms=6, max_deg=4, homogeneous_degree=None):
    """Random polynomial in ``ring``; homogeneous of the given degree if requested."""
    n = ring.nvars
    if homogeneous_degree is None:
        exps = st.tuples(*[st.integers(0, max_deg)] * n)
    else:
        d = homogeneous_degree

        @st.composite
        def hexp(draw2):
            cuts = sorted(draw2(st.lists(st.integers(0, d), min_size=n - 1, max_size=n - 1)))
            cuts = [0] + cuts + [d]
            return tuple(cuts[i + 1] - cuts[i] for i in range(n))
        exps = hexp()
    terms = draw(st.dictionaries(exps, st.integers(1, ring.p - 1), max_size=max_terms))
    return ring.from_terms(terms)


@st.composite
def rings(draw, max_vars=4, primes=SMALL_PRIMES):
    n = draw(st.integers(1, max_vars))
    p = draw(st.sampled_from(primes))
    return PolyRing(n, p)
