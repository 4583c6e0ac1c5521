"""Graded free modules over S = F_p[x_0..x_r] and their resolutions.

Conventions
-----------
Homomorphisms act on row vectors: ``v -> v A``.  The matrix of a map
``F -> G`` therefore has one row per basis vector of ``F`` and one column per
basis vector of ``G``, and ``hom_compose(A, B)`` (``A`` after ``B``) has
matrix ``B.matrix @ A.matrix``.

Module monomials are pairs ``(pos, exp)``.  Every module order exposes
``key(pos, exp)`` returning a flat integer tuple; larger keys are larger
monomials.  In all orders a lower position index counts as larger.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from operator import add, sub

import numpy as np

from . import _dense
from .errors import InputError, InvariantViolation, UsageError
from .polyring import GREVLEX, MonomialOrder, Polynomial, PolyRing, poly_degree_check, poly_mul

__all__ = [
    "GradedFreeModule",
    "ModuleElement",
    "GradedHomomorphism",
    "FreeResolution",
    "ModuleOrder",
    "PositionOverTerm",
    "TermOverPosition",
    "SchreyerOrder",
    "mod_divide",
    "mod_buchberger",
    "syzygy_basis",
    "free_resolution",
    "frobenius_resolution",
    "lift_chain_map",
    "hom_compose",
    "identity_hom",
    "standard_monomial_count",
    "hilbert_exactness",
]


# --------------------------------------------------------------------------
# modules, elements, maps


@dataclass(frozen=True)
class GradedFreeModule:
    """``⊕_j S(-d_j)`` recorded by its twists ``(d_1, ..., d_s)``."""

    twists: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "twists", tuple(int(d) for d in self.twists))

    @property
    def rank(self) -> int:
        return len(self.twists)

    def frobenius(self, p: int) -> GradedFreeModule:
        return GradedFreeModule(tuple(p * d for d in self.twists))


class ModuleElement:
    """A vector of polynomials, one per basis position."""

    __slots__ = ("ring", "components")

    def __init__(self, ring: PolyRing, components):
        self.ring = ring
        self.components = tuple(components)
        for c in self.components:
            if c.ring != ring:
                raise UsageError(f"component over {c.ring}, expected {ring}")

    @classmethod
    def zero(cls, ring, rank):
        return cls(ring, [ring.zero()] * rank)

    @classmethod
    def basis_vector(cls, ring, rank, k, coeff=None):
        comps = [ring.zero()] * rank
        comps[k] = ring.one() if coeff is None else coeff
        return cls(ring, comps)

    @property
    def rank(self) -> int:
        return len(self.components)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def terms(self):
        """Iterate ``(pos, exp, coeff)``."""
        for pos, c in enumerate(self.components):
            for e, v in c.terms.items():
                yield pos, e, v

    def lead(self, order: ModuleOrder):
        """Leading ``(pos, exp, coeff)`` in ``order``."""
        best, best_key = None, None
        for pos, e, v in self.terms():
            k = order.key(pos, e)
            if best_key is None or k > best_key:
                best, best_key = (pos, e, v), k
        if best is None:
            raise UsageError("zero vector has no leading term")
        return best

    def degree(self, twists) -> int | None:
        """Module degree w.r.t. ``twists``; ``None`` for the zero vector."""
        deg = None
        for c, d in zip(self.components, twists):
            info = poly_degree_check(c)
            if info.kind == "zero":
                continue
            if info.kind == "inhomogeneous":
                raise InputError("module element is not homogeneous")
            m = info.degree + d
            if deg is not None and m != deg:
                raise InputError("module element is not homogeneous")
            deg = m
        return deg

    def _check(self, other):
        if not isinstance(other, ModuleElement):
            return NotImplemented
        if other.rank != self.rank or other.ring != self.ring:
            raise UsageError(f"rank mismatch: {self.rank} vs {other.rank}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return ModuleElement(self.ring, [a + b for a, b in zip(self.components, other.components)])

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return ModuleElement(self.ring, [a - b for a, b in zip(self.components, other.components)])

    def __neg__(self):
        return ModuleElement(self.ring, [-a for a in self.components])

    def scale(self, f) -> ModuleElement:
        """Multiply by a polynomial or integer."""
        return ModuleElement(self.ring, [a * f for a in self.components])

    def mul_term(self, m, c=1) -> ModuleElement:
        return ModuleElement(self.ring, [a.mul_term(m, c) for a in self.components])

    def __eq__(self, other):
        if not isinstance(other, ModuleElement):
            return NotImplemented
        return self.ring == other.ring and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return "ModuleElement([" + ", ".join(str(c) for c in self.components) + "])"


def _matmul(ring: PolyRing, A, B, ncols: int):
    """Product of polynomial matrices given as row lists."""
    out = []
    for row in A:
        new = []
        for m in range(ncols):
            acc = ring.zero()
            for j, a in enumerate(row):
                if a.is_zero():
                    continue
                b = B[j][m]
                if not b.is_zero():
                    acc = acc + poly_mul(a, b)
            new.append(acc)
        out.append(tuple(new))
    return tuple(out)


class GradedHomomorphism:
    """Degree-zero map ``source -> target`` with matrix entries ``g[k][l]``.

    Entry ``(k, l)`` is zero or homogeneous of degree
    ``source.twists[k] - target.twists[l]``; this is checked on construction.
    """

    __slots__ = ("ring", "source", "target", "matrix")

    def __init__(self, ring, source: GradedFreeModule, target: GradedFreeModule, matrix, check=True):
        self.ring = ring
        self.source = source
        self.target = target
        self.matrix = tuple(tuple(row) for row in matrix)
        if len(self.matrix) != source.rank or any(len(r) != target.rank for r in self.matrix):
            raise UsageError(f"matrix shape does not match {source.rank}x{target.rank}")
        if check:
            self.check_degrees()

    def check_degrees(self):
        for k, row in enumerate(self.matrix):
            for l, g in enumerate(row):
                info = poly_degree_check(g)
                if info.kind == "zero":
                    continue
                want = self.source.twists[k] - self.target.twists[l]
                if info.kind != "homogeneous" or info.degree != want:
                    raise InvariantViolation(
                        f"entry ({k},{l}) is not homogeneous of degree {want}")

    @property
    def shape(self):
        return (self.source.rank, self.target.rank)

    def rows(self) -> list:
        return [ModuleElement(self.ring, row) for row in self.matrix]

    def apply(self, v: ModuleElement) -> ModuleElement:
        if v.rank != self.source.rank:
            raise UsageError(f"vector of rank {v.rank} applied to map from rank {self.source.rank}")
        (row,) = _matmul(self.ring, [v.components], self.matrix, self.target.rank)
        return ModuleElement(self.ring, row)

    def is_zero(self) -> bool:
        return all(g.is_zero() for row in self.matrix for g in row)

    def frobenius(self) -> GradedHomomorphism:
        p = self.ring.p
        mat = [[g.frob_twist() for g in row] for row in self.matrix]
        return GradedHomomorphism(self.ring, self.source.frobenius(p), self.target.frobenius(p),
                                  mat, check=False)

    def max_terms(self) -> int:
        return max((g.nterms() for row in self.matrix for g in row), default=0)

    def __eq__(self, other):
        if not isinstance(other, GradedHomomorphism):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.matrix == other.matrix)

    def __repr__(self):
        return f"GradedHomomorphism({self.source.twists} -> {self.target.twists})"


def identity_hom(ring, module: GradedFreeModule) -> GradedHomomorphism:
    n = module.rank
    mat = [[ring.one() if i == j else ring.zero() for j in range(n)] for i in range(n)]
    return GradedHomomorphism(ring, module, module, mat)


def hom_compose(A: GradedHomomorphism, B: GradedHomomorphism) -> GradedHomomorphism:
    """``A ∘ B``: apply ``B`` first.  Requires ``target(B) == source(A)``."""
    if B.target != A.source:
        raise UsageError(f"cannot compose: target {B.target.twists} != source {A.source.twists}")
    if A.ring != B.ring:
        raise UsageError("ambient mismatch")
    mat = _matmul(A.ring, B.matrix, A.matrix, A.target.rank)
    return GradedHomomorphism(A.ring, B.source, A.target, mat, check=False)


# --------------------------------------------------------------------------
# module orders


class ModuleOrder:
    def key(self, pos: int, exp) -> tuple:
        raise NotImplementedError


class PositionOverTerm(ModuleOrder):
    """Compare positions first (lower index is larger), then terms."""

    def __init__(self, term: MonomialOrder = GREVLEX):
        self.term = term

    def key(self, pos, exp):
        return (-pos,) + self.term.key(exp)

    def __repr__(self):
        return f"PositionOverTerm({self.term!r})"


class TermOverPosition(ModuleOrder):
    """Compare terms first, then positions (lower index is larger)."""

    def __init__(self, term: MonomialOrder = GREVLEX):
        self.term = term

    def key(self, pos, exp):
        return self.term.key(exp) + (-pos,)

    def __repr__(self):
        return f"TermOverPosition({self.term!r})"


class SchreyerOrder(ModuleOrder):
    """Order induced on ``⊕ S e_k`` by elements ``g_k`` of a module with order ``prev``.

    ``x^a e_k > x^b e_l`` iff ``x^a LT(g_k) > x^b LT(g_l)`` in ``prev``, ties
    broken by ``k < l``.
    """

    def __init__(self, prev: ModuleOrder, leads):
        self.prev = prev
        self.leads = [(int(pos), tuple(e)) for pos, e in leads]
        self.term = getattr(prev, "term", GREVLEX)

    def key(self, pos, exp):
        lp, le = self.leads[pos]
        return self.prev.key(lp, tuple(map(add, le, exp))) + (-pos,)

    def __repr__(self):
        return f"SchreyerOrder(rank={len(self.leads)})"


# --------------------------------------------------------------------------
# division


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


class _Reducer:
    """Preprocessed divisor list: leads, inverse lead coefficients, tails."""

    def __init__(self, G, order):
        self.order = order
        self.items = []
        self.by_pos = {}
        for gi, g in enumerate(G):
            pos, e, c = g.lead(order)
            inv = g.ring.field.inv(c)
            tail = [(tp, te, tc) for tp, te, tc in g.terms() if not (tp == pos and te == e)]
            self.items.append((pos, e, inv, tail))
            self.by_pos.setdefault(pos, []).append(gi)

    def find(self, pos, e):
        for gi in self.by_pos.get(pos, ()):
            if _divides(self.items[gi][1], e):
                return gi
        return None


class _RevKey:
    """Heap entry ordering the largest module monomial first."""

    __slots__ = ("k", "pos", "e")

    def __init__(self, k, pos, e):
        self.k, self.pos, self.e = k, pos, e

    def __lt__(self, other):
        return self.k > other.k


def _divide_sparse(v: ModuleElement, G, order):
    ring = v.ring
    p = ring.p
    red = _Reducer(G, order)
    work = [dict(c.terms) for c in v.components]
    heap = [_RevKey(order.key(pos, e), pos, e) for pos, e, _ in v.terms()]
    heapq.heapify(heap)
    rem = [{} for _ in range(v.rank)]
    quots = [{} for _ in G]
    while heap:
        item = heapq.heappop(heap)
        pos, e = item.pos, item.e
        c = work[pos].pop(e, 0)
        if not c:
            continue
        gi = red.find(pos, e)
        if gi is None:
            rem[pos][e] = c
            continue
        _, le, inv, tail = red.items[gi]
        m = tuple(map(sub, e, le))
        mult = c * inv % p
        q = quots[gi]
        q[m] = (q.get(m, 0) + mult) % p
        for tp, te, tc in tail:
            t = tuple(map(add, te, m))
            wp = work[tp]
            old = wp.get(t)
            new = ((old or 0) - mult * tc) % p
            if new:
                if old is None:
                    heapq.heappush(heap, _RevKey(order.key(tp, t), tp, t))
                wp[t] = new
            elif old is not None:
                del wp[t]
    quotients = [ring.from_terms(q) for q in quots]
    remainder = ModuleElement(ring, [ring.from_terms(r) for r in rem])
    return quotients, remainder


def _dense_components(v: ModuleElement, degs):
    return [c.dense(d) if d >= 0 else np.zeros(0, dtype=np.int64)
            for c, d in zip(v.components, degs)]


def _divide_dense_arrays(ring, arrays, degs, G, G_degs, order: PositionOverTerm, wdeg):
    """Dense reduction of a homogeneous vector given per-position arrays.

    ``degs[j]`` is the degree of component ``j``; ``G_degs`` the module
    degrees of the divisors, measured in the same twists as ``wdeg``.
    Returns ``(quotient arrays or None, remainder arrays)``.
    """
    n, p = ring.nvars, ring.p
    s = len(arrays)
    sizes = [a.shape[0] for a in arrays]
    woff = np.zeros(s + 1, dtype=np.int64)
    woff[1:] = np.cumsum(sizes)
    W = np.concatenate(arrays) if s else np.zeros(0, dtype=np.int64)
    W = np.ascontiguousarray(W % p, dtype=np.int64)
    red = _Reducer(G, order)
    ng = len(G)
    qdeg = [wdeg - gd for gd in G_degs]
    qsize = [_dense.num_monomials(n, d) for d in qdeg]
    qoff = np.zeros(ng + 1, dtype=np.int64)
    qoff[1:] = np.cumsum(qsize)
    Q = np.zeros(int(qoff[-1]), dtype=np.int64)

    lead_exp = np.zeros((max(ng, 1), n), dtype=np.int64)
    inv_lc = np.zeros(max(ng, 1), dtype=np.int64)
    t_start = np.zeros(ng + 1, dtype=np.int64)
    t_pos, t_exp, t_coef = [], [], []
    for gi, (pos, e, inv, tail) in enumerate(red.items):
        lead_exp[gi] = e
        inv_lc[gi] = inv
        for tp, te, tc in tail:
            t_pos.append(tp)
            t_exp.append(te)
            t_coef.append(tc)
        t_start[gi + 1] = len(t_pos)
    gb_data = (lead_exp, inv_lc, t_start,
               np.array(t_pos, dtype=np.int64),
               np.array(t_exp, dtype=np.int64).reshape(-1, n),
               np.array(t_coef, dtype=np.int64))
    binom = _dense.binom_table(n, max([0] + [d for d in degs]))
    perm = order.term.resolved_perm(n)
    for pos in range(s):
        d = degs[pos]
        if d < 0 or not W[woff[pos]:woff[pos + 1]].any():
            continue
        cand = np.array([gi for gi in red.by_pos.get(pos, ()) if qdeg[gi] >= 0], dtype=np.int64)
        if cand.size == 0:
            continue
        _dense.reduce_position(W, woff, pos, _dense.sweep_order(n, d, order.term.kind, perm),
                               _dense.exps_by_rank(n, d), cand, gb_data, Q, qoff, p, n, binom)
    quots = [Q[qoff[g]:qoff[g + 1]] if qdeg[g] >= 0 else None for g in range(ng)]
    rems = [W[woff[j]:woff[j + 1]] for j in range(s)]
    return quots, rems, qdeg


def mod_divide(v: ModuleElement, G, order: ModuleOrder | None = None, *,
               twists=None, method: str = "auto"):
    """Divide ``v`` by the list ``G``.

    Returns ``(quotients, remainder)`` with ``v = Σ q_i G_i + remainder`` and
    no term of ``remainder`` divisible by a leading term of ``G``.  Leading
    terms of ``v`` are reduced by the first element of ``G`` (in list order)
    whose leading term divides them.

    Parameters
    ----------
    order : ModuleOrder, optional
        Defaults to position-over-term grevlex.
    twists : sequence of int, optional
        Twists of the ambient module; needed only for the dense method.
    method : {"auto", "sparse", "dense"}
        ``dense`` requires a homogeneous ``v``, a position-over-term order
        and ``twists``.  Both methods return identical results.
    """
    order = order or PositionOverTerm()
    G = list(G)
    if not G:
        raise UsageError("empty divisor list")
    for g in G:
        if g.rank != v.rank or g.ring != v.ring:
            raise UsageError(f"rank mismatch: {g.rank} vs {v.rank}")
    use_dense = method == "dense"
    if method == "auto" and twists is not None and isinstance(order, PositionOverTerm):
        use_dense = sum(c.nterms() for c in v.components) > 2000 or any(
            c.is_dense for c in v.components)
    if method not in ("auto", "sparse", "dense"):
        raise UsageError(f"unknown method {method!r}")
    if not use_dense:
        return _divide_sparse(v, G, order)
    if twists is None or not isinstance(order, PositionOverTerm):
        raise UsageError("dense division needs twists and a position-over-term order")
    ring = v.ring
    wdeg = v.degree(twists)
    if wdeg is None:
        return [ring.zero() for _ in G], v
    degs = [wdeg - d for d in twists]
    G_degs = [g.degree(twists) for g in G]
    quots, rems, qdeg = _divide_dense_arrays(ring, _dense_components(v, degs), degs, G, G_degs,
                                             order, wdeg)
    quotients = [ring.zero() if q is None else ring.from_dense(d, q) for q, d in zip(quots, qdeg)]
    remainder = ModuleElement(ring, [ring.from_dense(d, r) if d >= 0 else ring.zero()
                                     for r, d in zip(rems, degs)])
    return quotients, remainder


# --------------------------------------------------------------------------
# Gröbner bases


def _lcm(a, b):
    return tuple(map(max, a, b))


def mod_buchberger(G, order: ModuleOrder | None = None, *, cofactors: bool = False):
    """Reduced Gröbner basis of the submodule generated by ``G``.

    Pairs are processed by the normal strategy (smallest sugar degree, then
    smallest lcm in ``order``, then index).  The result is monic, reduced,
    and sorted by increasing leading monomial.

    With ``cofactors=True`` also returns, for each basis element, the list
    ``T`` of polynomials with ``element == Σ_k T[k] * G[k]``.
    """
    order = order or PositionOverTerm()
    G = list(G)
    if not G:
        return ([], []) if cofactors else []
    ring = G[0].ring
    rank = G[0].rank
    for g in G:
        if g.rank != rank or g.ring != ring:
            raise UsageError("generators live in different modules")
    ng = len(G)
    field = ring.field

    def unit(k):
        return ModuleElement.basis_vector(ring, ng, k)

    basis, cof, sugar, leads = [], [], [], []
    pairs = []

    def sugar_of(v):
        return max((sum(e) for _, e, _ in v.terms()), default=0)

    def push_pairs(j):
        pj, ej, _ = leads[j]
        for i in range(j):
            pi, ei, _ = leads[i]
            if pi != pj or basis[i] is None:
                continue
            L = _lcm(ei, ej)
            if rank == 1 and all(min(x, y) == 0 for x, y in zip(ei, ej)):
                continue  # coprime leads: S-polynomial reduces to zero
            s = max(sugar[i] + sum(L) - sum(ei), sugar[j] + sum(L) - sum(ej))
            heapq.heappush(pairs, (s, _RevKey(tuple(-x for x in order.key(pj, L)), pj, L), i, j))

    def insert(v, t, s):
        basis.append(v)
        cof.append(t)
        sugar.append(s)
        leads.append(v.lead(order))
        push_pairs(len(basis) - 1)

    for k, g in enumerate(G):
        if g.is_zero():
            continue
        live = [b for b in basis if b is not None]
        if live:
            q, r = _divide_sparse(g, live, order)
            if r.is_zero():
                continue
            t = unit(k)
            for qi, bi in zip(q, [i for i, b in enumerate(basis) if b is not None]):
                if not qi.is_zero():
                    t = t - cof[bi].scale(qi)
            insert(r, t, sugar_of(g))
        else:
            insert(g, unit(k), sugar_of(g))

    while pairs:
        s, lk, i, j = heapq.heappop(pairs)
        L = lk.e
        pi, ei, ci = leads[i]
        _, ej, cj = leads[j]
        mi = tuple(map(sub, L, ei))
        mj = tuple(map(sub, L, ej))
        a = field.inv(ci)
        b = field.inv(cj)
        spoly = basis[i].mul_term(mi, a) - basis[j].mul_term(mj, b)
        tpoly = cof[i].mul_term(mi, a) - cof[j].mul_term(mj, b)
        idx = list(range(len(basis)))
        q, r = _divide_sparse(spoly, basis, order)
        if r.is_zero():
            continue
        for qi, bi in zip(q, idx):
            if not qi.is_zero():
                tpoly = tpoly - cof[bi].scale(qi)
        insert(r, tpoly, s)

    # minimal basis: drop elements whose lead is divisible by another lead
    keep = []
    for i, (pi, ei, _) in enumerate(leads):
        dominated = False
        for j, (pj, ej, _) in enumerate(leads):
            if j == i or pj != pi or not _divides(ej, ei):
                continue
            if ej != ei or j < i:
                dominated = True
                break
        if not dominated:
            keep.append(i)
    mins = [basis[i] for i in keep]
    mcof = [cof[i] for i in keep]

    out = []
    for idx, i in enumerate(keep):
        others = [m for k, m in enumerate(mins) if k != idx]
        g, t = mins[idx], mcof[idx]
        if others:
            q, g = _divide_sparse(g, others, order)
            ocof = [c for k, c in enumerate(mcof) if k != idx]
            for qi, ci in zip(q, ocof):
                if not qi.is_zero():
                    t = t - ci.scale(qi)
        _, _, lc = g.lead(order)
        inv = field.inv(lc)
        out.append((order.key(*g.lead(order)[:2]), g.scale(inv), t.scale(inv)))
    out.sort(key=lambda item: item[0])
    gb = [g for _, g, _ in out]
    if cofactors:
        return gb, [list(t.components) for _, _, t in out]
    return gb


def syzygy_basis(G, order: ModuleOrder | None = None):
    """Schreyer generators of the syzygies of the Gröbner basis ``G``.

    Returns elements of ``⊕_{k} S e_k`` (one basis vector per element of
    ``G``).  For each ``i`` only the pairs ``(i, j)``, ``j > i``, whose
    monomial ``lcm / LT(g_i)`` is divisibility-minimal are kept; the result
    is a Gröbner basis of the syzygy module for ``SchreyerOrder(order, ...)``.
    """
    order = order or PositionOverTerm()
    G = list(G)
    if len(G) < 2:
        return []
    ring = G[0].ring
    field = ring.field
    ng = len(G)
    leads = [g.lead(order) for g in G]
    out = []
    for i in range(ng):
        pi, ei, ci = leads[i]
        cands = []
        for j in range(i + 1, ng):
            pj, ej, cj = leads[j]
            if pj != pi:
                continue
            L = _lcm(ei, ej)
            cands.append((j, tuple(map(sub, L, ei)), tuple(map(sub, L, ej))))
        for j, mji, mij in cands:
            redundant = False
            for j2, m2, _ in cands:
                if j2 == j or not _divides(m2, mji):
                    continue
                if m2 != mji or j2 < j:
                    redundant = True
                    break
            if redundant:
                continue
            cj = leads[j][2]
            a = field.inv(ci)
            b = field.inv(cj)
            spoly = G[i].mul_term(mji, a) - G[j].mul_term(mij, b)
            q, r = _divide_sparse(spoly, G, order)
            if not r.is_zero():
                raise InvariantViolation("S-vector does not reduce to zero; input is not a Gröbner basis")
            comps = [-qk for qk in q]
            comps[i] = comps[i] + ring.monomial(mji, a)
            comps[j] = comps[j] - ring.monomial(mij, b)
            # scale so the Schreyer lead m_ji e_i is monic
            out.append(ModuleElement(ring, comps).scale(ci))
    return out


# --------------------------------------------------------------------------
# resolutions


@dataclass(frozen=True)
class FreeResolution:
    """``0 <- S/I <- S <-φ1- F_1 <-φ2- F_2 <- ... <- F_L <- 0``.

    ``maps[i-1]`` is ``φ_i : F_i -> F_{i-1}``.
    """

    ring: PolyRing
    maps: tuple
    generators: tuple = ()
    groebner: tuple = field(default=(), compare=False)
    order: MonomialOrder = field(default=GREVLEX, compare=False)

    @property
    def length(self) -> int:
        return len(self.maps)

    def module(self, i: int) -> GradedFreeModule:
        if i == 0:
            return GradedFreeModule((0,))
        if 1 <= i <= self.length:
            return self.maps[i - 1].source
        return GradedFreeModule(())

    def twists(self, i: int) -> tuple:
        return self.module(i).twists

    def phi(self, i: int) -> GradedHomomorphism:
        """``φ_i``; the zero map for ``i`` past the end."""
        if 1 <= i <= self.length:
            return self.maps[i - 1]
        src, tgt = self.module(i), self.module(i - 1)
        return GradedHomomorphism(self.ring, src, tgt,
                                  [[self.ring.zero()] * tgt.rank for _ in range(src.rank)])

    def betti(self) -> list:
        return [self.twists(i) for i in range(self.length + 1)]

    def is_complex(self) -> bool:
        return all(hom_compose(self.maps[i - 1], self.maps[i]).is_zero()
                   for i in range(1, self.length))

    def is_minimal(self) -> bool:
        for phi in self.maps:
            for row in phi.matrix:
                for g in row:
                    if not g.is_zero() and g.homogeneous_degree() == 0:
                        return False
        return True


def _check_generators(f):
    f = list(f)
    if not f:
        raise InputError("need at least one generator")
    ring = f[0].ring
    for i, g in enumerate(f):
        if g.ring != ring:
            raise UsageError("generators live in different rings")
        info = poly_degree_check(g)
        if info.kind == "zero":
            raise InputError(f"generator {i + 1} is zero")
        if info.kind == "inhomogeneous":
            raise InputError(f"generator {i + 1} is not homogeneous")
    return ring, f


def _row_degree(row, target_twists):
    for g, d in zip(row, target_twists):
        if not g.is_zero():
            return g.homogeneous_degree() + d
    raise InvariantViolation("zero row in a resolution matrix")


def _minimalize(ring, mats, twists):
    """Cancel unit entries until none remain.

    ``mats[i]`` is the row list of ``φ_{i+1}``; ``twists[i]`` the twists of
    ``F_i``.  Both are modified in place.
    """
    p = ring.p
    while True:
        found = None
        for i, A in enumerate(mats):
            for k, row in enumerate(A):
                for l, g in enumerate(row):
                    if not g.is_zero() and g.homogeneous_degree() == 0:
                        found = (i, k, l, g.coeff((0,) * ring.nvars))
                        break
                if found:
                    break
            if found:
                break
        if not found:
            return
        i, k, l, u = found
        A = mats[i]
        uinv = pow(u, p - 2, p)
        pivot = A[k]
        new = []
        for j, row in enumerate(A):
            if j == k:
                continue
            a = row[l]
            if a.is_zero():
                new.append([g for m, g in enumerate(row) if m != l])
            else:
                fac = a.scale(uinv)
                new.append([g - fac * pivot[m] for m, g in enumerate(row) if m != l])
        mats[i] = new
        if i + 1 < len(mats):
            mats[i + 1] = [[g for m, g in enumerate(row) if m != k] for row in mats[i + 1]]
        if i > 0:
            mats[i - 1] = [row for j, row in enumerate(mats[i - 1]) if j != l]
        twists[i + 1] = [d for j, d in enumerate(twists[i + 1]) if j != k]
        twists[i] = [d for j, d in enumerate(twists[i]) if j != l]


def free_resolution(f, order: MonomialOrder = GREVLEX, *, minimal: bool = True) -> FreeResolution:
    """Graded free resolution of ``S/<f>`` by iterated Schreyer syzygies.

    Level ``i`` generators are sorted by lead position and then by
    decreasing exponent of variable ``i - 1``, which makes the Schreyer
    frame stop after at most ``r + 1`` steps.  With ``minimal=True`` (the
    default) unit entries are then cancelled.

    Raises
    ------
    InputError
        For zero, inhomogeneous or unit-ideal input.
    """
    ring, f = _check_generators(f)
    n = ring.nvars
    base = PositionOverTerm(order)
    G1 = mod_buchberger([ModuleElement(ring, [g]) for g in f], base)
    if any(g.components[0].homogeneous_degree() == 0 for g in G1):
        raise InputError("the generators span the unit ideal")

    def sort_level(elems, ordr, level):
        var = (level - 1) % n

        def sk(g):
            pos, e, _ = g.lead(ordr)
            return (pos, -e[var], tuple(-x for x in ordr.key(pos, e)))
        return sorted(elems, key=sk)

    levels = [sort_level(G1, base, 1)]
    orders = [base]
    twists = [[0]]
    twists.append([g.degree(twists[0]) for g in levels[0]])
    while True:
        cur, ordr = levels[-1], orders[-1]
        nxt_order = SchreyerOrder(ordr, [g.lead(ordr)[:2] for g in cur])
        syz = syzygy_basis(cur, ordr)
        if not syz:
            break
        syz = sort_level(syz, nxt_order, len(levels) + 1)
        levels.append(syz)
        orders.append(nxt_order)
        twists.append([g.degree(twists[-1]) for g in syz])
        if len(levels) > n + 1:
            raise InvariantViolation("Schreyer frame longer than the syzygy bound")

    mats = [[list(g.components) for g in lev] for lev in levels]
    if minimal:
        _minimalize(ring, mats, twists)
    maps = []
    for i, A in enumerate(mats):
        if not twists[i + 1]:
            break
        maps.append(GradedHomomorphism(ring, GradedFreeModule(twists[i + 1]),
                                       GradedFreeModule(twists[i]), A))
    return FreeResolution(ring, tuple(maps), tuple(f),
                          tuple(g.components[0] for g in G1), order)


def frobenius_resolution(R: FreeResolution, p: int | None = None) -> FreeResolution:
    """Entries replaced by their p-th powers and twists scaled by ``p``."""
    if p is not None and p != R.ring.p:
        raise UsageError(f"p={p} does not match the ring characteristic {R.ring.p}")
    maps = tuple(phi.frobenius() for phi in R.maps)
    gens = tuple(g.frob_twist() for g in R.generators)
    return FreeResolution(R.ring, maps, gens, (), R.order)


# --------------------------------------------------------------------------
# lifting


# product entries with more candidate monomials than this use dense arrays
_DENSE_CUTOFF = 1500


def _compose_rows(ring, Ap, C, src_twists, mid_twists, tgt_twists):
    """Rows of ``Ap @ C`` as dense arrays or sparse polynomials."""
    n, p = ring.nvars, ring.p
    rows = []
    for k, arow in enumerate(Ap):
        row = []
        for m, dt in enumerate(tgt_twists):
            deg = src_twists[k] - dt
            if deg < 0:
                row.append(ring.zero())
                continue
            if _dense.num_monomials(n, deg) <= _DENSE_CUTOFF:
                acc = ring.zero()
                for j, a in enumerate(arow):
                    if not a.is_zero() and not C[j][m].is_zero():
                        acc = acc + poly_mul(a, C[j][m])
                row.append(acc)
                continue
            out = np.zeros(_dense.num_monomials(n, deg), dtype=np.int64)
            for j, a in enumerate(arow):
                c = C[j][m]
                if a.is_zero() or c.is_zero():
                    continue
                cd = mid_twists[j] - dt
                _dense.mul_dense_sparse(c.dense(cd), n, cd, a.terms, p, out)
            row.append(ring.from_dense(deg, out))
        rows.append(row)
    return rows


def _combine(ring, quotients, qdegs, cof, out_degs):
    """``Σ_g q_g T_g`` as a row of polynomials of degrees ``out_degs``."""
    n, p = ring.nvars, ring.p
    row = []
    for k, deg in enumerate(out_degs):
        if deg < 0:
            row.append(ring.zero())
            continue
        if _dense.num_monomials(n, deg) <= _DENSE_CUTOFF:
            acc = ring.zero()
            for q, t in zip(quotients, cof):
                if q is not None and not q.is_zero() and not t[k].is_zero():
                    acc = acc + poly_mul(q, t[k])
            row.append(acc)
            continue
        out = np.zeros(_dense.num_monomials(n, deg), dtype=np.int64)
        for q, qd, t in zip(quotients, qdegs, cof):
            if q is None or q.is_zero() or t[k].is_zero():
                continue
            _dense.mul_dense_sparse(q.dense(qd), n, qd, t[k].terms, p, out)
        row.append(ring.from_dense(deg, out))
    return row


def lift_chain_map(Rp: FreeResolution, R: FreeResolution, upto: int | None = None,
                   order: MonomialOrder = GREVLEX):
    """Lifting maps ``ψ_i : F_i^{(p)} -> F_i`` with ``ψ_0 = id_S``.

    Each row of ``φ_i^{(p)} ψ_{i-1}`` (matrix product ``A_i^{(p)} C_{i-1}``)
    is divided by a Gröbner basis of the row module of ``φ_i``; the
    cofactors of that basis turn the quotients into the row of ``ψ_i``.
    Returns ``[ψ_1, ..., ψ_upto]``.

    Raises
    ------
    InvariantViolation
        If a row is not in the image of ``φ_i``.
    """
    if Rp.ring != R.ring:
        raise UsageError("resolutions over different rings")
    ring = R.ring
    upto = R.length if upto is None else upto
    if upto > R.length or upto > Rp.length:
        raise UsageError(f"cannot lift to level {upto}")
    pot = PositionOverTerm(order)
    C = [[ring.one()]]
    out = []
    for i in range(1, upto + 1):
        A = R.maps[i - 1]
        Ap = Rp.maps[i - 1]
        if Ap.source.rank != A.source.rank or Ap.target.rank != A.target.rank:
            raise UsageError(f"level {i}: resolutions have different shapes")
        src_p = Ap.source.twists
        mid_p = Ap.target.twists
        tgt = A.target.twists
        src = A.source.twists
        W = _compose_rows(ring, Ap.matrix, C, src_p, mid_p, tgt)
        gb, cof = mod_buchberger(A.rows(), pot, cofactors=True)
        gb_degs = [g.degree(tgt) for g in gb]
        new = []
        for k, wrow in enumerate(W):
            wdeg = src_p[k]
            degs = [wdeg - d for d in tgt]
            arrays = [w.dense(d) if d >= 0 else np.zeros(0, dtype=np.int64)
                      for w, d in zip(wrow, degs)]
            big = any(w.is_dense for w in wrow)
            if big:
                quots, rems, qdeg = _divide_dense_arrays(ring, arrays, degs, gb, gb_degs, pot, wdeg)
                if any(r.any() for r in rems):
                    raise InvariantViolation(f"level {i}, row {k}: not in the image of φ_{i}")
                qpolys = [None if q is None else ring.from_dense(d, q) for q, d in zip(quots, qdeg)]
            else:
                qpolys, rem = _divide_sparse(ModuleElement(ring, wrow), gb, pot)
                if not rem.is_zero():
                    raise InvariantViolation(f"level {i}, row {k}: not in the image of φ_{i}")
                qdeg = [wdeg - gd for gd in gb_degs]
            new.append(_combine(ring, qpolys, qdeg, cof, [wdeg - d for d in src]))
        psi = GradedHomomorphism(ring, Ap.source, A.source, new, check=False)
        out.append(psi)
        C = psi.matrix
    return out


# --------------------------------------------------------------------------
# Hilbert function checks


def _monomials(n, d):
    for c in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in c:
            e[i] += 1
        yield tuple(e)


def standard_monomial_count(leads, n: int, d: int) -> int:
    """Number of degree-``d`` monomials divisible by none of ``leads``."""
    leads = [tuple(e) for e in leads]
    return sum(1 for m in _monomials(n, d) if not any(_divides(e, m) for e in leads))


def _free_dim(twists, n, d):
    return sum(_dense.num_monomials(n, d - t) for t in twists)


def hilbert_exactness(R: FreeResolution, bound: int | None = None) -> bool:
    """Check ``Σ_i (-1)^i dim (F_i)_d == dim (S/I)_d`` for ``d <= bound``.

    The right side counts standard monomials of the Gröbner basis of ``I``;
    ``bound`` defaults to the largest twist plus 3.
    """
    n = R.ring.nvars
    gb = R.groebner
    if not gb:
        gens = [ModuleElement(R.ring, [g]) for g in R.generators]
        gb = [g.components[0] for g in mod_buchberger(gens, PositionOverTerm(R.order))]
    leads = [g.leading_term(R.order)[0] for g in gb]
    if bound is None:
        bound = max((max(t, default=0) for t in R.betti()), default=0) + 3
    for d in range(bound + 1):
        lhs = sum((-1) ** i * _free_dim(R.twists(i), n, d) for i in range(R.length + 1))
        if lhs != standard_monomial_count(leads, n, d):
            return False
    return True
