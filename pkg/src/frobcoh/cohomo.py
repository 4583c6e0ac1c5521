"""Top cohomology of twisted free sheaves on P^r and exact linear algebra over F_p.

``H^r(P^r, O(-d))`` has the basis of Laurent monomials ``x^l`` with every
``l_i <= -1`` and ``Σ l_i = -d``.  A degree-zero map of graded free modules
acts on these by multiplication followed by truncation: monomials with a
nonnegative exponent vanish.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import InvariantViolation, UsageError
from .freemod import GradedFreeModule, GradedHomomorphism

__all__ = [
    "LaurentBasisElement",
    "CohomologySpace",
    "FpMatrix",
    "negative_tuples",
    "twisted_basis",
    "induced_map",
    "truncated_action",
    "quotient_basis",
    "fp_rref",
    "fp_rank",
    "fp_left_kernel",
    "fp_solve_left",
    "fp_charpoly",
]


@dataclass(frozen=True, order=True)
class LaurentBasisElement:
    """``x^exponents e_slot`` with all exponents negative."""

    slot: int
    exponents: tuple

    def scaled(self, p: int) -> LaurentBasisElement:
        return LaurentBasisElement(self.slot, tuple(p * x for x in self.exponents))

    def to_string(self, names=None, with_slot: bool = False) -> str:
        names = names or [f"x{i}" for i in range(len(self.exponents))]
        parts = [n if x == -1 else f"{n}^{-x}" for n, x in zip(names, self.exponents)]
        s = "1/(" + "*".join(parts) + ")"
        return f"{s}*e{self.slot}" if with_slot else s

    def __str__(self):
        return self.to_string()


@dataclass(frozen=True)
class CohomologySpace:
    """``H^r(P^r, ⊕_j O(-d_j))`` with its enumerated basis."""

    module: GradedFreeModule
    r: int
    basis: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index(self) -> dict:
        return {b: i for i, b in enumerate(self.basis)}


def negative_tuples(d: int, r: int):
    """Tuples of ``r + 1`` integers ``<= -1`` summing to ``-d``, lex ascending."""
    if d < r + 1:
        return
    # compositions of d into r+1 positive parts via bar positions
    out = []
    for bars in combinations(range(1, d), r):
        cuts = (0,) + bars + (d,)
        out.append(tuple(cuts[i] - cuts[i + 1] for i in range(r + 1)))
    out.sort()
    yield from out


def twisted_basis(M: GradedFreeModule, r: int) -> CohomologySpace:
    """Basis ordered by slot, then lexicographically ascending exponents."""
    if r < 1:
        raise UsageError("r must be at least 1")
    basis = []
    for slot, d in enumerate(M.twists):
        basis.extend(LaurentBasisElement(slot, e) for e in negative_tuples(d, r))
    return CohomologySpace(M, r, tuple(basis))


# --------------------------------------------------------------------------
# matrices over F_p


class FpMatrix:
    """Dense matrix over F_p backed by an int64 array of residues."""

    __slots__ = ("p", "a")

    def __init__(self, entries, p: int, shape=None):
        self.p = int(p)
        a = np.array(entries, dtype=np.int64) if not isinstance(entries, np.ndarray) else entries
        if shape is not None:
            a = a.reshape(shape)
        if a.ndim != 2:
            raise UsageError(f"need a 2-d array, got shape {a.shape}")
        self.a = np.ascontiguousarray(a.astype(np.int64) % self.p)

    @classmethod
    def zeros(cls, rows, cols, p):
        return cls(np.zeros((rows, cols), dtype=np.int64), p)

    @classmethod
    def identity(cls, n, p):
        return cls(np.eye(n, dtype=np.int64), p)

    @property
    def shape(self):
        return self.a.shape

    @property
    def rows(self):
        return self.a.shape[0]

    @property
    def cols(self):
        return self.a.shape[1]

    def tolist(self) -> list:
        return [[int(x) for x in row] for row in self.a]

    @property
    def T(self) -> FpMatrix:
        return FpMatrix(self.a.T.copy(), self.p)

    def _other(self, other):
        if not isinstance(other, FpMatrix):
            return NotImplemented
        if other.p != self.p:
            raise UsageError(f"modulus mismatch: {self.p} vs {other.p}")
        return other

    def __matmul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        if self.cols != other.rows:
            raise UsageError(f"shape mismatch {self.shape} @ {other.shape}")
        if self.p < 2**26 and self.cols < 2**10:
            return FpMatrix(self.a @ other.a, self.p)
        prod = self.a.astype(object) @ other.a.astype(object)
        return FpMatrix(np.array(prod % self.p, dtype=np.int64), self.p)

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return FpMatrix(self.a + other.a, self.p)

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return FpMatrix(self.a - other.a, self.p)

    def is_zero(self) -> bool:
        return not self.a.any()

    def __eq__(self, other):
        if not isinstance(other, FpMatrix):
            return NotImplemented
        return self.p == other.p and self.shape == other.shape and np.array_equal(self.a, other.a)

    def __repr__(self):
        return f"FpMatrix({self.tolist()}, p={self.p})"


def fp_rref(M: FpMatrix):
    """Reduced row echelon form and the list of pivot columns."""
    p = M.p
    A = M.a.copy()
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            A[[r, k]] = A[[k, r]]
        A[r] = A[r] * pow(int(A[r, c]), p - 2, p) % p
        col = A[:, c].copy()
        col[r] = 0
        for i in np.flatnonzero(col):
            A[i] = (A[i] - col[i] * A[r]) % p
        pivots.append(c)
        r += 1
    return FpMatrix(A, p), pivots


def fp_rank(M: FpMatrix) -> int:
    return len(fp_rref(M)[1])


def fp_left_kernel(M: FpMatrix) -> FpMatrix:
    """Rows spanning ``{v : v M = 0}``, in reduced echelon form."""
    p = M.p
    R, piv = fp_rref(M.T)
    n = M.rows
    free = [c for c in range(n) if c not in set(piv)]
    K = np.zeros((len(free), n), dtype=np.int64)
    for i, f in enumerate(free):
        K[i, f] = 1
        for r, c in enumerate(piv):
            K[i, c] = -R.a[r, f] % p
    if not free:
        return FpMatrix.zeros(0, n, p)
    return fp_rref(FpMatrix(K, p))[0]


def fp_solve_left(B: FpMatrix, Bp: FpMatrix) -> FpMatrix:
    """``X`` with ``X B = Bp``; ``B`` must have full row rank.

    Raises
    ------
    InvariantViolation
        If some row of ``Bp`` is not in the row space of ``B``.
    """
    if B.p != Bp.p or B.cols != Bp.cols:
        raise UsageError(f"incompatible shapes {B.shape} and {Bp.shape}")
    p = B.p
    g = B.rows
    # B^T X^T = Bp^T
    aug = FpMatrix(np.hstack([B.a.T, Bp.a.T]), p)
    R, piv = fp_rref(aug)
    if any(c >= g for c in piv):
        raise InvariantViolation("a row of B' is not in the row space of B")
    if len(piv) != g:
        raise UsageError("B does not have full row rank")
    Xt = R.a[:g, g:]
    return FpMatrix(Xt.T.copy(), p)


def fp_charpoly(M: FpMatrix) -> list:
    """``det(aI - M)`` as monic coefficients, highest degree first.

    Reduces to Hessenberg form by similarity, then uses the usual
    three-term recurrence on leading principal minors.
    """
    if M.rows != M.cols:
        raise UsageError(f"charpoly of a non-square {M.shape} matrix")
    p = M.p
    n = M.rows
    H = [[int(x) for x in row] for row in M.a]
    for m in range(1, n - 1):
        piv = next((i for i in range(m, n) if H[i][m - 1]), None)
        if piv is None:
            continue
        if piv != m:
            H[piv], H[m] = H[m], H[piv]
            for row in H:
                row[piv], row[m] = row[m], row[piv]
        inv = pow(H[m][m - 1], p - 2, p)
        for i in range(m + 1, n):
            u = H[i][m - 1] * inv % p
            if not u:
                continue
            H[i] = [(a - u * b) % p for a, b in zip(H[i], H[m])]
            for row in H:
                row[m] = (row[m] + u * row[i]) % p
    # polys as ascending coefficient lists
    P = [[1]]
    for m in range(1, n + 1):
        prev = P[m - 1]
        new = [0] + prev
        h = H[m - 1][m - 1]
        for k, c in enumerate(prev):
            new[k] = (new[k] - h * c) % p
        t = 1
        for i in range(1, m):
            t = t * H[m - i][m - i - 1] % p
            coef = t * H[m - i - 1][m - 1] % p
            if coef:
                for k, c in enumerate(P[m - i - 1]):
                    new[k] = (new[k] - coef * c) % p
        P.append(new)
    return list(reversed(P[n]))


# --------------------------------------------------------------------------
# maps on cohomology


def truncated_action(matrix, src_basis, tgt_basis, p: int) -> FpMatrix:
    """Matrix sending ``x^l e_k`` to ``Σ_m x^l A[k][m]`` expanded in ``tgt_basis``.

    Monomials with some nonnegative exponent are dropped.  Entry
    ``(s, t)`` is the coefficient of ``x^(l_t - l_s)`` in ``A[k_s][m_t]``.
    """
    out = np.zeros((len(src_basis), len(tgt_basis)), dtype=np.int64)
    by_slot = {}
    for j, b in enumerate(tgt_basis):
        by_slot.setdefault(b.slot, []).append((j, b.exponents))
    for i, s in enumerate(src_basis):
        row = matrix[s.slot]
        for m, targets in by_slot.items():
            g = row[m]
            if g.is_zero():
                continue
            for j, lt in targets:
                e = tuple(a - b for a, b in zip(lt, s.exponents))
                if min(e) >= 0:
                    out[i, j] = g.coeff(e)
    return FpMatrix(out, p)


def induced_map(A: GradedHomomorphism, r: int) -> FpMatrix:
    """Matrix of ``H^r(A)`` between the twisted bases (row convention)."""
    src = twisted_basis(A.source, r).basis
    tgt = twisted_basis(A.target, r).basis
    return truncated_action(A.matrix, src, tgt, A.ring.p)


def quotient_basis(ker_of: FpMatrix, im_of: FpMatrix) -> FpMatrix:
    """Coset representatives spanning ``Ker(ker_of) / Im(im_of)``.

    ``ker_of`` is ``g' x a`` (kernel taken on the left) and ``im_of`` is
    ``b x g'`` (image is its row space).  Kernel vectors are reduced against
    the echelon form of the image and the survivors put in reduced echelon
    form, so the result is deterministic.

    Raises
    ------
    InvariantViolation
        If the image is not contained in the kernel.
    """
    if ker_of.p != im_of.p or ker_of.rows != im_of.cols:
        raise UsageError(f"incompatible shapes {im_of.shape} and {ker_of.shape}")
    p = ker_of.p
    if not (im_of @ ker_of).is_zero():
        raise InvariantViolation("image is not contained in the kernel")
    K = fp_left_kernel(ker_of)
    I, piv = fp_rref(im_of)
    V = K.a.copy()
    for r, c in enumerate(piv):
        col = V[:, c].copy()
        for i in np.flatnonzero(col):
            V[i] = (V[i] - col[i] * I.a[r]) % p
    R, vp = fp_rref(FpMatrix(V, p))
    B = R.a[:len(vp)]
    if len(vp) != K.rows - len(piv):
        raise InvariantViolation("dimension count of Ker/Im is inconsistent")
    return FpMatrix(B.reshape(len(vp), ker_of.rows), p)
