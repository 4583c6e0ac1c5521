"""Dense storage for homogeneous polynomials and compiled kernels over it.

A homogeneous polynomial of degree ``D`` in ``n`` variables is stored as a
flat int64 array of length ``C(D+n-1, n-1)`` indexed by a combinatorial rank
of its exponent vector.  The rank does not depend on ``D``::

    rank(e) = sum_{i=1}^{n-1} C(s_i + n-1-i, n-i),   s_i = e_i + ... + e_{n-1}

which makes "multiply by a monomial" an O(n) re-ranking.  The kernels here
are the hot loops of the lifting step; everything else in the package uses
the sparse dict representation.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

import numpy as np
from numba import njit

__all__ = [
    "num_monomials",
    "binom_table",
    "rank",
    "exps_by_rank",
    "sweep_order",
    "sparse_to_dense",
    "dense_to_terms",
    "mul_dense_sparse",
    "reduce_position",
]


def num_monomials(n: int, d: int) -> int:
    if d < 0:
        return 0
    return comb(d + n - 1, n - 1)


_BINOM_CACHE: dict[int, np.ndarray] = {}


def binom_table(n: int, max_deg: int) -> np.ndarray:
    """Table ``T[a, b] = C(a, b)`` for ``a <= max_deg + n``, ``b <= n``."""
    rows = max_deg + n + 1
    cached = _BINOM_CACHE.get(n)
    if cached is not None and cached.shape[0] >= rows:
        return cached
    rows = max(rows, 64)
    table = np.zeros((rows, n + 1), dtype=np.int64)
    for a in range(rows):
        for b in range(min(a, n) + 1):
            table[a, b] = comb(a, b)
    _BINOM_CACHE[n] = table
    return table


def rank(e) -> int:
    n = len(e)
    r, s = 0, 0
    for i in range(n - 1, 0, -1):
        s += e[i]
        r += comb(s + n - 1 - i, n - i)
    return r


@njit(cache=True)
def _rank(e, n, binom):
    r = 0
    s = 0
    for i in range(n - 1, 0, -1):
        s += e[i]
        r += binom[s + n - 1 - i, n - i]
    return r


@njit(cache=True)
def _fill_exps(n, d, binom, out):
    # walk compositions in descending lex order, storing each at its rank
    e = np.zeros(n, dtype=np.int64)
    e[0] = d
    while True:
        r = _rank(e, n, binom)
        for i in range(n):
            out[r, i] = e[i]
        j = -1
        for i in range(n - 2, -1, -1):
            if e[i] > 0:
                j = i
                break
        if j < 0:
            break
        tail = 0
        for i in range(j + 1, n):
            tail += e[i]
            e[i] = 0
        e[j] -= 1
        e[j + 1] = tail + 1


@njit(cache=True)
def _fill_order(n, d, binom, perm, grevlex, out):
    # out[k] = rank of the k-th largest monomial of degree d
    u = np.zeros(n, dtype=np.int64)
    e = np.zeros(n, dtype=np.int64)
    # descending grevlex on u is ascending lex on reversed(u)
    v = np.zeros(n, dtype=np.int64)
    if grevlex:
        v[n - 1] = d
    else:
        v[0] = d
    k = 0
    while True:
        if grevlex:
            for i in range(n):
                u[i] = v[n - 1 - i]
        else:
            for i in range(n):
                u[i] = v[i]
        for i in range(n):
            e[perm[i]] = u[i]
        out[k] = _rank(e, n, binom)
        k += 1
        j = -1
        if grevlex:
            tail = 0
            for i in range(n - 1, 0, -1):
                tail += v[i]
                if tail > 0:
                    j = i - 1
                    break
            if j < 0:
                break
            tail = 0
            for i in range(j + 1, n):
                tail += v[i]
                v[i] = 0
            v[j] += 1
            v[n - 1] = tail - 1
        else:
            for i in range(n - 2, -1, -1):
                if v[i] > 0:
                    j = i
                    break
            if j < 0:
                break
            tail = 0
            for i in range(j + 1, n):
                tail += v[i]
                v[i] = 0
            v[j] -= 1
            v[j + 1] = tail + 1
    return k


@lru_cache(maxsize=24)
def exps_by_rank(n: int, d: int) -> np.ndarray:
    """Exponent matrix whose row ``k`` is the monomial of rank ``k``."""
    size = num_monomials(n, d)
    out = np.zeros((size, n), dtype=np.int64)
    if size:
        _fill_exps(n, d, binom_table(n, d), out)
    return out


@lru_cache(maxsize=24)
def sweep_order(n: int, d: int, kind: str, perm: tuple) -> np.ndarray:
    """Ranks of all degree-``d`` monomials, largest first in the term order."""
    size = num_monomials(n, d)
    out = np.zeros(size, dtype=np.int64)
    if size:
        count = _fill_order(n, d, binom_table(n, d), np.asarray(perm, dtype=np.int64),
                            kind == "grevlex", out)
        assert count == size
    return out


def sparse_to_dense(terms: dict, n: int, d: int) -> np.ndarray:
    out = np.zeros(num_monomials(n, d), dtype=np.int64)
    for e, c in terms.items():
        out[rank(e)] = c
    return out


def dense_to_terms(coeffs: np.ndarray, n: int, d: int) -> dict:
    nz = np.flatnonzero(coeffs)
    if nz.size == 0:
        return {}
    exps = exps_by_rank(n, d)[nz]
    vals = coeffs[nz]
    return {tuple(int(x) for x in row): int(c) for row, c in zip(exps, vals)}


@njit(cache=True)
def _mul_kernel(coeffs, exps, t_exps, t_coeffs, p, n, binom, out):
    tmp = np.zeros(n, dtype=np.int64)
    nt = t_coeffs.shape[0]
    for idx in range(coeffs.shape[0]):
        c = coeffs[idx]
        if c == 0:
            continue
        for t in range(nt):
            for i in range(n):
                tmp[i] = exps[idx, i] + t_exps[t, i]
            r = _rank(tmp, n, binom)
            out[r] = (out[r] + c * t_coeffs[t]) % p


def mul_dense_sparse(coeffs: np.ndarray, n: int, d: int, terms: dict, p: int,
                     out: np.ndarray | None = None) -> np.ndarray:
    """``coeffs * terms`` for a homogeneous sparse factor; accumulates into ``out``."""
    if not terms:
        return out
    td = sum(next(iter(terms)))
    if out is None:
        out = np.zeros(num_monomials(n, d + td), dtype=np.int64)
    t_exps = np.array(list(terms.keys()), dtype=np.int64).reshape(-1, n)
    t_coeffs = np.array(list(terms.values()), dtype=np.int64)
    _mul_kernel(coeffs, exps_by_rank(n, d), t_exps, t_coeffs, p, n,
                binom_table(n, d + td), out)
    return out


@njit(cache=True)
def _reduce_kernel(W, woff, pos, order, exps, cand, lead_exp, inv_lc,
                   t_start, t_pos, t_exp, t_coef, Q, qoff, p, n, binom):
    m = np.zeros(n, dtype=np.int64)
    tgt = np.zeros(n, dtype=np.int64)
    base = woff[pos]
    for k in range(order.shape[0]):
        idx = order[k]
        c = W[base + idx]
        if c == 0:
            continue
        g = -1
        for ci in range(cand.shape[0]):
            gi = cand[ci]
            ok = True
            for i in range(n):
                if exps[idx, i] < lead_exp[gi, i]:
                    ok = False
                    break
            if ok:
                g = gi
                break
        if g < 0:
            continue
        mult = c * inv_lc[g] % p
        W[base + idx] = 0
        for i in range(n):
            m[i] = exps[idx, i] - lead_exp[g, i]
        r = _rank(m, n, binom)
        Q[qoff[g] + r] = (Q[qoff[g] + r] + mult) % p
        for t in range(t_start[g], t_start[g + 1]):
            for i in range(n):
                tgt[i] = m[i] + t_exp[t, i]
            r = _rank(tgt, n, binom)
            j = woff[t_pos[t]] + r
            W[j] = (W[j] - mult * t_coef[t]) % p


def reduce_position(W, woff, pos, order, exps, cand, gb_data, Q, qoff, p, n, binom):
    lead_exp, inv_lc, t_start, t_pos, t_exp, t_coef = gb_data
    _reduce_kernel(W, woff, pos, order, exps, cand, lead_exp, inv_lc,
                   t_start, t_pos, t_exp, t_coef, Q, qoff, p, n, binom)
