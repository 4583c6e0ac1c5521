"""End-to-end computation of the Frobenius action on ``H^q(X, O_X)``.

Two pipelines produce a :class:`FrobeniusReport`:

``algorithm_I``
    free resolution of ``S/I``, its Frobenius twist, lifting maps, then
    linear algebra on top cohomology of the twisted free sheaves.
``algorithm_II``
    for complete intersections, read the matrix off the coefficients of
    ``(f_1 ... f_t)^(p-1)``.

Matrix convention: ``report.matrix[j][i]`` is the ``b_j`` coordinate of the
image of ``b_i``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .cohomo import (FpMatrix, LaurentBasisElement, negative_tuples, fp_charpoly, fp_rank,
                     fp_solve_left, induced_map, quotient_basis, truncated_action,
                     twisted_basis)
from .errors import DispatchError, InputError
from .freemod import (FreeResolution, GradedHomomorphism, _check_generators,
                      frobenius_resolution, free_resolution, lift_chain_map)
from .koszul import is_regular_sequence, koszul_complex, koszul_lift
from .polyring import GREVLEX, MonomialOrder, poly_pow

__all__ = [
    "ProblemSpec",
    "FrobeniusReport",
    "frobenius_on_basis",
    "rank_of_frobenius",
    "algorithm_I",
    "algorithm_II",
    "ci_violations",
    "koszul_step_a",
    "dispatch",
]

ALGORITHMS = ("auto", "general", "complete_intersection")


@dataclass(frozen=True)
class ProblemSpec:
    """Input data: ``X = V(generators) ⊂ P^r`` over ``F_p`` and the degree ``q``."""

    p: int
    r: int
    generators: tuple
    q: int
    algorithm: str = "auto"

    def __post_init__(self):
        ring, gens = _check_generators(self.generators)
        object.__setattr__(self, "generators", tuple(gens))
        if ring.p != self.p:
            raise InputError(f"generators live over F_{ring.p}, not F_{self.p}")
        if ring.nvars != self.r + 1:
            raise InputError(f"r={self.r} needs {self.r + 1} variables, got {ring.nvars}")
        if not 1 <= self.q <= self.r - 1:
            raise InputError(f"q must satisfy 1 <= q <= r-1 = {self.r - 1}, got {self.q}")
        if self.algorithm not in ALGORITHMS:
            raise InputError(f"unknown algorithm {self.algorithm!r}")

    @property
    def ring(self):
        return self.generators[0].ring

    @property
    def t(self) -> int:
        return len(self.generators)


@dataclass
class FrobeniusReport:
    """Representation matrix of Frobenius on ``H^q`` and derived data.

    ``timings`` holds wall-clock seconds for ``step_a`` and ``step_b``.
    ``alpha`` is ``None`` when no lifting maps were computed.  ``extras``
    keeps intermediate objects (``resolution``, ``lifts``, ``B``) for
    inspection.
    """

    p: int
    r: int
    q: int
    algorithm_used: str
    matrix: FpMatrix
    rank: int
    char_poly: list
    h_dim: int
    basis: list
    D: int
    alpha: int | None
    timings: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)
    extras: dict = field(default_factory=dict, repr=False, compare=False)


def _basis_strings(B: FpMatrix, v_basis, names, with_slot):
    out = []
    for row in B.a:
        parts = []
        for c, v in zip(row, v_basis):
            if c:
                s = v.to_string(names, with_slot)
                parts.append(s if c == 1 else f"{int(c)}*{s}")
        out.append(" + ".join(parts))
    return out


def _empty_report(spec, algorithm_used, D, alpha, timings, notes=()):
    return FrobeniusReport(spec.p, spec.r, spec.q, algorithm_used, FpMatrix.zeros(0, 0, spec.p),
                           0, [1], 0, [], D, alpha, timings, list(notes))


def frobenius_on_basis(B: FpMatrix, basis, p: int):
    """Raise the entries of ``B`` to the ``p``-th power and scale basis exponents by ``p``."""
    Bp = FpMatrix(np.array([[pow(int(x), p, B.p) for x in row] for row in B.a],
                           dtype=np.int64).reshape(B.shape), B.p)
    return Bp, [b.scaled(p) for b in basis]


def rank_of_frobenius(p: int, B: FpMatrix, v_basis, C: GradedHomomorphism):
    """Matrix, rank and characteristic polynomial of Frobenius on ``rowspace(B)``.

    Each ``b_i^(p)`` is pushed through ``C`` by truncated multiplication and
    expanded in ``v_basis``, giving ``B'``; then ``X B = B'`` is solved and
    the transpose of ``X`` returned.  ``p = 1`` with ``C`` the identity is a
    valid degenerate input and yields the identity matrix.
    """
    Bp, scaled = frobenius_on_basis(B, v_basis, p)
    T = truncated_action(C.matrix, scaled, v_basis, B.p)
    X = fp_solve_left(B, Bp @ T)
    M = X.T
    return M, fp_rank(M), fp_charpoly(M)


def _default_step_a(spec: ProblemSpec, order: MonomialOrder, level: int):
    R = free_resolution(spec.generators, order)
    Rp = frobenius_resolution(R)
    psi = lift_chain_map(Rp, R, upto=min(level, R.length), order=order)
    return R, Rp, psi


def koszul_step_a(spec: ProblemSpec, order: MonomialOrder = GREVLEX, level: int | None = None):
    """Step A from the Koszul complex and its closed-form lift."""
    K = koszul_complex(spec.generators)
    R = K.as_resolution()
    return R, frobenius_resolution(R), koszul_lift(spec.generators, spec.p)


def algorithm_I(spec: ProblemSpec, step_a=None, order: MonomialOrder = GREVLEX) -> FrobeniusReport:
    """General pipeline through resolutions and lifting maps.

    Parameters
    ----------
    step_a : callable, optional
        ``step_a(spec, order, level) -> (R, R_p, [ψ_1, ...])``.  Defaults to
        the Schreyer resolution with division-based lifts; pass
        :func:`koszul_step_a` for complete intersections.
    order : MonomialOrder
        Term order used in Step A.
    """
    r, q, p = spec.r, spec.q, spec.p
    level = r - q
    t0 = time.perf_counter()
    R, Rp, psi = (step_a or _default_step_a)(spec, order, level)
    t1 = time.perf_counter()

    dims = [twisted_basis(R.module(i), r).dim for i in (level - 1, level, level + 1)]
    D = max(dims)
    M1 = induced_map(R.phi(level), r)
    M2 = induced_map(R.phi(level + 1), r)
    B = quotient_basis(M1, M2)
    v_basis = twisted_basis(R.module(level), r).basis
    alpha = max(R.phi(level).max_terms(), R.phi(level + 1).max_terms())
    if level <= len(psi):
        alpha = max(alpha, psi[level - 1].max_terms())
    extras = {"resolution": R, "lifts": psi, "B": B}
    if B.rows == 0:
        t2 = time.perf_counter()
        rep = _empty_report(spec, "general", D, alpha, {"step_a": t1 - t0, "step_b": t2 - t1})
        rep.extras = extras
        return rep
    M, rank, cp = rank_of_frobenius(p, B, v_basis, psi[level - 1])
    t2 = time.perf_counter()
    names = spec.ring.names
    return FrobeniusReport(p, r, q, "general", M, rank, cp, B.rows,
                           _basis_strings(B, v_basis, names, R.module(level).rank > 1),
                           D, alpha, {"step_a": t1 - t0, "step_b": t2 - t1}, [], extras)


def ci_violations(spec: ProblemSpec) -> list:
    """Hypotheses of the complete-intersection path that ``spec`` fails."""
    out = []
    try:
        regular = is_regular_sequence(spec.generators, spec.r)
    except InputError:
        regular = False
    if not regular:
        out.append("generators are not a regular sequence")
    t = spec.t
    if spec.q != spec.r - t:
        out.append(f"q={spec.q} differs from r - t = {spec.r - t}")
    degs = [g.homogeneous_degree() for g in spec.generators]
    if t >= 1 and any(sum(c) > spec.r for c in combinations(degs, t - 1)):
        out.append(f"some {t - 1} generator degrees sum to more than r={spec.r}")
    return out


def algorithm_II(spec: ProblemSpec) -> FrobeniusReport:
    """Complete-intersection pipeline via coefficients of ``(f_1 ... f_t)^(p-1)``.

    Entry ``(a, b)`` is the coefficient of ``x^(k_a - p k_b)``, where the
    ``k`` are the negative exponent tuples summing to ``-Σ deg f_j`` in
    lexicographic order.

    Raises
    ------
    DispatchError
        Naming the first violated hypothesis.
    """
    bad = ci_violations(spec)
    if bad:
        raise DispatchError("complete-intersection path unavailable: " + "; ".join(bad))
    r, p = spec.r, spec.p
    ring = spec.ring
    notes = ["pairwise coprimality of the generators is assumed, not checked"]
    dsum = sum(g.homogeneous_degree() for g in spec.generators)
    ks = list(negative_tuples(dsum, r))
    if not ks:
        return _empty_report(spec, "complete_intersection", 0, None,
                             {"step_a": 0.0, "step_b": 0.0}, notes)
    t0 = time.perf_counter()
    prod = ring.one()
    for g in spec.generators:
        prod = prod * g
    P = poly_pow(prod, p - 1)
    t1 = time.perf_counter()
    g = len(ks)
    M = np.zeros((g, g), dtype=np.int64)
    for a, ka in enumerate(ks):
        for b, kb in enumerate(ks):
            M[a, b] = P.coeff(tuple(x - p * y for x, y in zip(ka, kb)))
    M = FpMatrix(M, p)
    rank, cp = fp_rank(M), fp_charpoly(M)
    t2 = time.perf_counter()
    basis = [LaurentBasisElement(0, k).to_string(ring.names) for k in ks]
    return FrobeniusReport(p, r, spec.q, "complete_intersection", M, rank, cp, g, basis,
                           g, None, {"step_a": t1 - t0, "step_b": t2 - t1}, notes)


def dispatch(spec: ProblemSpec, order: MonomialOrder = GREVLEX) -> FrobeniusReport:
    """Run the algorithm requested by ``spec.algorithm``.

    ``auto`` picks the complete-intersection path exactly when all of its
    hypotheses hold.
    """
    if spec.algorithm == "general":
        return algorithm_I(spec, order=order)
    if spec.algorithm == "complete_intersection":
        return algorithm_II(spec)
    if not ci_violations(spec):
        return algorithm_II(spec)
    return algorithm_I(spec, order=order)


def resolution_of(spec: ProblemSpec, order: MonomialOrder = GREVLEX) -> FreeResolution:
    return free_resolution(spec.generators, order)
