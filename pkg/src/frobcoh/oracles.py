"""Independent classical checks for the Frobenius pipelines.

* :func:`hyperelliptic_hw` reads the Cartier-Manin matrix of
  ``y^2 + h(x) y = k(x)`` off the coefficients of ``f^((p-1)/2)``.
* :func:`elliptic_ap` counts points on a Weierstrass cubic.
* :func:`brute_graded_dim` computes ``dim (S/I)_d`` by plain linear algebra.

Univariate polynomials are coefficient lists, lowest degree first.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

import numpy as np

from .cohomo import FpMatrix, fp_rank
from .errors import InputError, UsageError
from .gfp import PrimeField

__all__ = [
    "AffineHyperellipticModel",
    "hyperelliptic_hw",
    "elliptic_ap",
    "brute_graded_dim",
]


def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _umul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _upow(a, e, p):
    result = [1]
    while e:
        if e & 1:
            result = _umul(result, a, p)
        a = _umul(a, a, p)
        e >>= 1
    return result


def _umod(a, b, p):
    a = list(a)
    inv = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        c = a[-1] * inv % p
        shift = len(a) - len(b)
        for i, y in enumerate(b):
            a[shift + i] = (a[shift + i] - c * y) % p
        a = _trim(a)
    return a


def _ugcd(a, b, p):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _umod(a, b, p)
    return a


@dataclass(frozen=True)
class AffineHyperellipticModel:
    """``y^2 + h(x) y = k(x)`` over ``F_p`` (``p`` odd)."""

    h: tuple
    k: tuple
    p: int

    def __post_init__(self):
        PrimeField(self.p)
        if self.p == 2:
            raise InputError("characteristic 2 models are not supported")
        object.__setattr__(self, "h", tuple(_trim(int(c) % self.p for c in self.h)))
        object.__setattr__(self, "k", tuple(_trim(int(c) % self.p for c in self.k)))
        f = self.f
        if len(f) < 4:
            raise InputError("f = k + h^2/4 must have degree at least 3")
        df = _trim(i * c % self.p for i, c in enumerate(f))[1:]
        if len(_ugcd(f, df, self.p)) > 1:
            raise InputError("f = k + h^2/4 is not squarefree")

    @property
    def f(self) -> list:
        """Right side after completing the square: ``k + h^2 / 4``."""
        p = self.p
        quarter = pow(4, p - 2, p)
        hh = [c * quarter % p for c in _umul(list(self.h), list(self.h), p)]
        n = max(len(hh), len(self.k))
        return _trim(((self.k[i] if i < len(self.k) else 0) + (hh[i] if i < len(hh) else 0)) % p
                     for i in range(n))

    @property
    def genus(self) -> int:
        return (len(self.f) - 2) // 2


def hyperelliptic_hw(model: AffineHyperellipticModel) -> FpMatrix:
    """Cartier-Manin matrix ``(c_{ip-j})_{1 <= i, j <= g}`` from ``f^((p-1)/2)``."""
    p, g = model.p, model.genus
    c = _upow(model.f, (p - 1) // 2, p)
    M = np.zeros((g, g), dtype=np.int64)
    for i in range(1, g + 1):
        for j in range(1, g + 1):
            e = i * p - j
            M[i - 1, j - 1] = c[e] if 0 <= e < len(c) else 0
    return FpMatrix(M, p)


def elliptic_ap(a, p: int) -> int:
    """Trace of Frobenius ``p + 1 - #E(F_p)`` by direct point counting.

    ``a = (a1, a2, a3, a4, a6)`` are the coefficients of
    ``y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6``.

    Raises
    ------
    InputError
        If the curve is singular.
    """
    PrimeField(p)
    if p > 10**4:
        raise UsageError("naive point counting is limited to p <= 10^4")
    a1, a2, a3, a4, a6 = (int(x) % p for x in a)
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    disc = (-b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6) % p
    if disc == 0:
        raise InputError("singular Weierstrass curve (zero discriminant)")
    count = 1  # point at infinity
    if p == 2:
        for x in range(p):
            for y in range(p):
                if (y * y + a1 * x * y + a3 * y - x ** 3 - a2 * x * x - a4 * x - a6) % p == 0:
                    count += 1
    else:
        for x in range(p):
            # y^2 + (a1 x + a3) y - rhs = 0 has 1 + legendre(disc) roots
            u = a1 * x + a3
            rhs = x ** 3 + a2 * x * x + a4 * x + a6
            d = (u * u + 4 * rhs) % p
            count += 1 if d == 0 else (2 if pow(d, (p - 1) // 2, p) == 1 else 0)
    ap = p + 1 - count
    assert ap * ap <= 4 * p, "Hasse bound violated"
    return ap


def brute_graded_dim(generators, d: int, nvars: int | None = None, *,
                     max_degree: int = 12, max_vars: int = 7) -> int:
    """``dim_K (S/I)_d`` as the number of monomials minus the rank of ``I_d``.

    ``I_d`` is spanned by all products ``m * f`` with ``m`` a monomial of
    degree ``d - deg f``; no Gröbner basis is involved.  The oracle refuses
    inputs above ``max_degree`` or ``max_vars``.
    """
    generators = list(generators)
    if nvars is None:
        if not generators:
            raise UsageError("nvars is required when there are no generators")
        nvars = generators[0].ring.nvars
    if d > max_degree or nvars > max_vars:
        raise UsageError(f"brute-force bound exceeded (d <= {max_degree}, r <= {max_vars - 1})")
    if d < 0:
        return 0
    monos = []
    for c in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for i in c:
            e[i] += 1
        monos.append(tuple(e))
    if not generators:
        return len(monos)
    p = generators[0].ring.p
    index = {m: i for i, m in enumerate(monos)}
    rows = []
    for f in generators:
        fd = f.homogeneous_degree()
        if fd is None:
            raise InputError("generators must be homogeneous")
        if fd > d:
            continue
        for c in combinations_with_replacement(range(nvars), d - fd):
            shift = [0] * nvars
            for i in c:
                shift[i] += 1
            row = np.zeros(len(monos), dtype=np.int64)
            for e, coef in f.terms.items():
                row[index[tuple(a + b for a, b in zip(e, shift))]] = coef
            rows.append(row)
    if not rows:
        return len(monos)
    return len(monos) - fp_rank(FpMatrix(np.array(rows), p))
