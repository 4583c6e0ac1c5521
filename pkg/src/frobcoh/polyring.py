"""Sparse multivariate polynomials over F_p with monomial orders.

Exponent vectors are plain tuples and a polynomial is a dict from exponent
tuple to a nonzero residue.  Large homogeneous polynomials produced by the
lifting step can instead be backed by a dense array (see ``_dense``); the
dict view is then built lazily and both views compare equal.
"""

from __future__ import annotations

from collections import namedtuple
from operator import add

import numpy as np

from . import _dense
from .errors import UsageError
from .gfp import PrimeField

__all__ = [
    "MonomialOrder",
    "GREVLEX",
    "LEX",
    "PolyRing",
    "Polynomial",
    "DegreeInfo",
    "poly_add",
    "poly_mul",
    "poly_pow",
    "poly_frob_twist",
    "poly_coeff",
    "poly_degree_check",
    "monomial_cmp",
]


class MonomialOrder:
    """A term order: ``grevlex`` or ``lex`` with a variable precedence.

    ``perm[0]`` is the most significant variable.  ``perm=None`` means the
    natural order x0 > x1 > ... for whatever length is compared.
    """

    __slots__ = ("kind", "perm")

    def __init__(self, kind: str = "grevlex", perm=None):
        if kind not in ("grevlex", "lex"):
            raise UsageError(f"unknown monomial order {kind!r}")
        self.kind = kind
        self.perm = None if perm is None else tuple(perm)

    def resolved_perm(self, n: int) -> tuple:
        if self.perm is None:
            return tuple(range(n))
        if sorted(self.perm) != list(range(n)):
            raise UsageError(f"variable precedence {self.perm} is not a permutation of {n} indices")
        return self.perm

    def key(self, e) -> tuple:
        """Sort key: ``a > b`` in the order iff ``key(a) > key(b)``."""
        perm = self.perm or range(len(e))
        if self.kind == "grevlex":
            return (sum(e),) + tuple(-e[perm[i]] for i in range(len(e) - 1, -1, -1))
        return tuple(e[i] for i in perm)

    def __eq__(self, other):
        return (isinstance(other, MonomialOrder) and self.kind == other.kind
                and self.perm == other.perm)

    def __hash__(self):
        return hash((self.kind, self.perm))

    def __repr__(self):
        if self.perm is None:
            return f"MonomialOrder({self.kind!r})"
        return f"MonomialOrder({self.kind!r}, perm={self.perm})"


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def monomial_cmp(a, b, order: MonomialOrder = GREVLEX) -> int:
    """-1, 0 or 1 as ``a`` is less than, equal to, or greater than ``b``."""
    if len(a) != len(b):
        raise UsageError(f"monomial length mismatch: {len(a)} vs {len(b)}")
    ka, kb = order.key(a), order.key(b)
    return (ka > kb) - (ka < kb)


class PolyRing:
    """The ring F_p[x_0, ..., x_{n-1}]."""

    def __init__(self, nvars: int, p, names=None):
        if nvars < 1:
            raise UsageError("need at least one variable")
        self.field = p if isinstance(p, PrimeField) else PrimeField(p)
        self.p = self.field.p
        self.nvars = nvars
        if names is None:
            names = [f"x{i}" for i in range(nvars)]
        names = tuple(names)
        if len(names) != nvars or len(set(names)) != nvars:
            raise UsageError(f"need {nvars} distinct variable names, got {names}")
        self.names = names

    def __eq__(self, other):
        return isinstance(other, PolyRing) and (self.nvars, self.p) == (other.nvars, other.p)

    def __hash__(self):
        return hash((self.nvars, self.p))

    def __repr__(self):
        return f"PolyRing(F_{self.p}[{', '.join(self.names)}])"

    def with_field(self, p) -> PolyRing:
        return PolyRing(self.nvars, p, self.names)

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def one(self) -> Polynomial:
        return self.constant(1)

    def constant(self, c: int) -> Polynomial:
        c %= self.p
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def var(self, i: int) -> Polynomial:
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): 1})

    def gens(self) -> list:
        return [self.var(i) for i in range(self.nvars)]

    def monomial(self, e, c: int = 1) -> Polynomial:
        e = tuple(int(x) for x in e)
        if len(e) != self.nvars or min(e) < 0:
            raise UsageError(f"bad exponent vector {e} for {self}")
        c %= self.p
        return Polynomial(self, {e: c} if c else {})

    def from_terms(self, terms) -> Polynomial:
        """Build from ``{exponent: coefficient}``; reduces and drops zeros."""
        p = self.p
        out = {}
        for e, c in dict(terms).items():
            e = tuple(int(x) for x in e)
            if len(e) != self.nvars:
                raise UsageError(f"exponent {e} has wrong length for {self}")
            c = (out.get(e, 0) + int(c)) % p
            if c:
                out[e] = c
            else:
                out.pop(e, None)
        return Polynomial(self, out)

    def from_dense(self, degree: int, coeffs: np.ndarray) -> Polynomial:
        return Polynomial._dense_backed(self, degree, coeffs)


DegreeInfo = namedtuple("DegreeInfo", ["kind", "degree"])


class Polynomial:
    """Immutable polynomial; canonical sparse form has no zero coefficients."""

    __slots__ = ("ring", "_terms", "_dense", "_hash")

    def __init__(self, ring: PolyRing, terms: dict):
        # trusted constructor: keys are tuples, values nonzero residues
        self.ring = ring
        self._terms = terms
        self._dense = None
        self._hash = None

    @classmethod
    def _dense_backed(cls, ring, degree, coeffs):
        obj = cls.__new__(cls)
        obj.ring = ring
        obj._terms = None
        obj._dense = (int(degree), coeffs)
        obj._hash = None
        return obj

    # -- views -----------------------------------------------------------
    @property
    def terms(self) -> dict:
        if self._terms is None:
            d, arr = self._dense
            self._terms = _dense.dense_to_terms(arr, self.ring.nvars, d)
        return self._terms

    def dense(self, degree: int | None = None) -> np.ndarray:
        """Coefficient array in rank order; the polynomial must be homogeneous."""
        if self._dense is not None and (degree is None or degree == self._dense[0]):
            return self._dense[1]
        info = poly_degree_check(self)
        if info.kind == "inhomogeneous":
            raise UsageError("dense form needs a homogeneous polynomial")
        d = info.degree if degree is None else degree
        if d is None:
            d = 0
        if info.kind == "homogeneous" and info.degree != d:
            raise UsageError(f"polynomial has degree {info.degree}, not {d}")
        return _dense.sparse_to_dense(self.terms, self.ring.nvars, d)

    @property
    def is_dense(self) -> bool:
        return self._dense is not None

    def nterms(self) -> int:
        if self._terms is None:
            return int(np.count_nonzero(self._dense[1]))
        return len(self._terms)

    def is_zero(self) -> bool:
        return self.nterms() == 0

    def __bool__(self):
        return not self.is_zero()

    def coeff(self, e) -> int:
        e = tuple(e)
        if len(e) != self.ring.nvars:
            raise UsageError(f"exponent {e} has wrong length for {self.ring}")
        if min(e, default=0) < 0:
            return 0
        if self._terms is None:
            d, arr = self._dense
            return int(arr[_dense.rank(e)]) if sum(e) == d else 0
        return self._terms.get(e, 0)

    def homogeneous_degree(self):
        """Degree if homogeneous and nonzero, ``None`` otherwise."""
        info = poly_degree_check(self)
        return info.degree if info.kind == "homogeneous" else None

    def total_degree(self) -> int:
        if self._terms is None:
            return self._dense[0] if self.nterms() else -1
        return max((sum(e) for e in self._terms), default=-1)

    def leading_term(self, order: MonomialOrder = GREVLEX):
        """``(exponent, coefficient)`` of the largest term."""
        if not self.terms:
            raise UsageError("zero polynomial has no leading term")
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def sorted_terms(self, order: MonomialOrder = GREVLEX) -> list:
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise UsageError(f"ambient mismatch: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, int):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return poly_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return poly_add(self, other.scale(-1))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return poly_add(other, self.scale(-1))

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        return poly_pow(self, e)

    def scale(self, c: int) -> Polynomial:
        p = self.ring.p
        c %= p
        if c == 0:
            return self.ring.zero()
        if c == 1:
            return self
        if self._terms is None:
            d, arr = self._dense
            return Polynomial._dense_backed(self.ring, d, arr * c % p)
        return Polynomial(self.ring, {e: v * c % p for e, v in self._terms.items()})

    def mul_term(self, m, c: int = 1) -> Polynomial:
        """Multiply by the single term ``c * x^m``."""
        p = self.ring.p
        c %= p
        if c == 0:
            return self.ring.zero()
        return Polynomial(self.ring, {tuple(map(add, e, m)): v * c % p
                                      for e, v in self.terms.items()})

    def monic(self, order: MonomialOrder = GREVLEX) -> Polynomial:
        _, lc = self.leading_term(order)
        return self.scale(self.ring.field.inv(lc))

    def frob_twist(self) -> Polynomial:
        return poly_frob_twist(self)

    # -- comparison / display ------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.ring != self.ring:
            return False
        if self._dense is not None and other._dense is not None:
            if self._dense[0] == other._dense[0]:
                return bool(np.array_equal(self._dense[1], other._dense[1]))
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def to_string(self, order: MonomialOrder = GREVLEX) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for e, c in self.sorted_terms(order):
            factors = []
            for name, k in zip(self.ring.names, e):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append(f"{name}^{k}")
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        return " + ".join(parts)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"Polynomial({self.to_string()!r}, p={self.ring.p})"


def _check_same_ring(f: Polynomial, g: Polynomial):
    if f.ring != g.ring:
        raise UsageError(f"ambient mismatch: {f.ring} vs {g.ring}")


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    _check_same_ring(f, g)
    ring = f.ring
    if f._dense is not None or g._dense is not None:
        df, dg = f.homogeneous_degree(), g.homogeneous_degree()
        if f.is_zero():
            return g
        if g.is_zero():
            return f
        if df is not None and df == dg:
            arr = (f.dense(df) + g.dense(df)) % ring.p
            return ring.from_dense(df, arr)
    p = ring.p
    if len(f.terms) < len(g.terms):
        f, g = g, f
    out = dict(f.terms)
    for e, c in g.terms.items():
        v = (out.get(e, 0) + c) % p
        if v:
            out[e] = v
        else:
            del out[e]
    return Polynomial(ring, out)


# dense products pay off once the dense operand is this large
_DENSE_MUL_THRESHOLD = 4000


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    _check_same_ring(f, g)
    ring = f.ring
    if f.is_zero() or g.is_zero():
        return ring.zero()
    if g._dense is not None and f._dense is None:
        f, g = g, f
    if f._dense is not None or (f.nterms() >= _DENSE_MUL_THRESHOLD and g.nterms() <= 64):
        df, dg = f.homogeneous_degree(), g.homogeneous_degree()
        if df is not None and dg is not None:
            arr = _dense.mul_dense_sparse(f.dense(df), ring.nvars, df, g.terms, ring.p)
            return ring.from_dense(df + dg, arr)
    p = ring.p
    a, b = f.terms, g.terms
    if len(a) < len(b):
        a, b = b, a
    out = {}
    get = out.get
    for eb, cb in b.items():
        for ea, ca in a.items():
            e = tuple(map(add, ea, eb))
            out[e] = (get(e, 0) + ca * cb) % p
    return Polynomial(ring, {e: c for e, c in out.items() if c})


def poly_frob_twist(f: Polynomial) -> Polynomial:
    """Apply ``c x^e -> c^p x^(p e)``; equal to ``f**p`` in characteristic p."""
    p = f.ring.p
    return Polynomial(f.ring, {tuple(p * x for x in e): pow(c, p, p)
                               for e, c in f.terms.items()})


def poly_pow(f: Polynomial, e: int) -> Polynomial:
    """``f**e`` by binary exponentiation, using ``f^(pk) = frob(f^k)``."""
    if e < 0:
        raise UsageError("negative exponent")
    p = f.ring.p
    if e >= p:
        q, r = divmod(e, p)
        base = poly_frob_twist(poly_pow(f, q))
        return base if r == 0 else poly_mul(base, poly_pow(f, r))
    result = f.ring.one()
    base = f
    while e:
        if e & 1:
            result = poly_mul(result, base)
        e >>= 1
        if e:
            base = poly_mul(base, base)
    return result


def poly_coeff(f: Polynomial, e) -> int:
    return f.coeff(e)


def poly_degree_check(f: Polynomial) -> DegreeInfo:
    """Classify as ``zero``, ``homogeneous`` (with degree) or ``inhomogeneous``."""
    if f._terms is None:
        return DegreeInfo("homogeneous", f._dense[0]) if f.nterms() else DegreeInfo("zero", None)
    if not f._terms:
        return DegreeInfo("zero", None)
    degs = {sum(e) for e in f._terms}
    if len(degs) == 1:
        return DegreeInfo("homogeneous", degs.pop())
    return DegreeInfo("inhomogeneous", None)
