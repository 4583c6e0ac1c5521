"""Koszul complexes, their closed-form Frobenius lifts, and a regularity test."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import InputError
from .freemod import (FreeResolution, GradedFreeModule, GradedHomomorphism, ModuleElement,
                      PositionOverTerm, _check_generators, mod_buchberger)
from .polyring import GREVLEX, poly_pow

__all__ = ["KoszulComplex", "koszul_complex", "koszul_lift", "is_regular_sequence", "krull_dimension"]


@dataclass(frozen=True)
class KoszulComplex:
    """Koszul complex of ``f_1..f_t``.

    ``indices[i]`` lists the index tuples ``(j_1 < ... < j_i)`` (0-based) of
    level ``i`` in lexicographic order; ``maps[i-1]`` is the differential
    ``e_J -> Σ_k (-1)^(k-1) f_{j_k} e_{J minus j_k}``.
    """

    generators: tuple
    indices: tuple
    maps: tuple

    @property
    def ring(self):
        return self.generators[0].ring

    def twists(self, i: int) -> tuple:
        return self.maps[i - 1].source.twists if i else (0,)

    def as_resolution(self) -> FreeResolution:
        return FreeResolution(self.ring, self.maps, self.generators)


def koszul_complex(f) -> KoszulComplex:
    ring, f = _check_generators(f)
    t = len(f)
    degs = [g.homogeneous_degree() for g in f]
    indices = [((),)]
    maps = []
    for i in range(1, t + 1):
        level = tuple(combinations(range(t), i))
        prev = indices[-1]
        where = {J: k for k, J in enumerate(prev)}
        rows = []
        for J in level:
            row = [ring.zero()] * len(prev)
            for k, j in enumerate(J):
                rest = J[:k] + J[k + 1:]
                row[where[rest]] = f[j] if k % 2 == 0 else -f[j]
            rows.append(row)
        src = GradedFreeModule(tuple(sum(degs[j] for j in J) for J in level))
        tgt = GradedFreeModule(tuple(sum(degs[j] for j in J) for J in prev))
        maps.append(GradedHomomorphism(ring, src, tgt, rows))
        indices.append(level)
    return KoszulComplex(tuple(f), tuple(indices), tuple(maps))


def koszul_lift(f, n: int) -> list:
    """Diagonal lifts ``ψ_i(e_J) = (f_{j_1} ... f_{j_i})^(n-1) e_J``.

    These commute with the differentials of the Koszul complexes of
    ``(f_j^n)`` and ``(f_j)``: ``ψ_{i-1} ∘ φ_i^{(n)} = φ_i ∘ ψ_i``.
    """
    if n < 1:
        raise InputError("n must be a positive integer")
    K = koszul_complex(f)
    ring = K.ring
    powers = [poly_pow(g, n - 1) for g in K.generators]
    out = []
    for i in range(1, len(K.generators) + 1):
        level = K.indices[i]
        diag = []
        for J in level:
            prod = ring.one()
            for j in J:
                prod = prod * powers[j]
            diag.append(prod)
        mat = [[diag[a] if a == b else ring.zero() for b in range(len(level))]
               for a in range(len(level))]
        tgt = K.maps[i - 1].source
        src = GradedFreeModule(tuple(n * d for d in tgt.twists))
        out.append(GradedHomomorphism(ring, src, tgt, mat))
    return out


def krull_dimension(f, order=GREVLEX) -> int:
    """Dimension of ``S/<f>`` from the leading terms of a Gröbner basis.

    It is the size of the largest set of variables containing the support of
    no leading monomial, or -1 for the unit ideal.
    """
    ring, f = _check_generators(f)
    gb = mod_buchberger([ModuleElement(ring, [g]) for g in f], PositionOverTerm(order))
    supports = [frozenset(i for i, x in enumerate(g.lead(PositionOverTerm(order))[1]) if x)
                for g in gb]
    if any(not s for s in supports):
        return -1  # unit ideal: S/<f> = 0
    n = ring.nvars
    for size in range(n, -1, -1):
        for U in combinations(range(n), size):
            U = frozenset(U)
            if not any(s <= U for s in supports):
                return size
    return 0


def is_regular_sequence(f, r: int | None = None) -> bool:
    """True iff homogeneous ``f_1..f_t`` form a regular sequence in ``S``.

    ``S`` is Cohen-Macaulay, so this holds exactly when
    ``dim S/<f> = (r + 1) - t``.
    """
    ring, f = _check_generators(f)
    if r is None:
        r = ring.nvars - 1
    if r + 1 != ring.nvars:
        raise InputError(f"r={r} does not match {ring.nvars} variables")
    if len(f) > r + 1:
        raise InputError(f"{len(f)} generators in {r + 1} variables cannot be regular")
    return krull_dimension(f) == (r + 1) - len(f)
