"""Exact rational linear algebra: LDL^T positive-semidefiniteness certification,
fraction-free linear solving, rank and nullspace computation.

Everything here works over `fractions.Fraction` and never rounds.  PSD checks
return either an explicit factorization or an explicit rational witness vector
`v` with `v^T M v < 0`, so every verdict can be re-checked independently.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

Q = Fraction


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"cannot convert {x!r} to Fraction exactly")


class QMatrix:
    """Immutable dense matrix with exact rational entries."""

    __slots__ = ("data", "rows", "cols")

    def __init__(self, entries: Sequence[Sequence]):
        data = tuple(tuple(_frac(v) for v in row) for row in entries)
        if not data:
            raise ValueError("empty matrix")
        ncols = len(data[0])
        if any(len(row) != ncols for row in data):
            raise ValueError("ragged rows")
        self.data = data
        self.rows = len(data)
        self.cols = ncols

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: Optional[int] = None) -> "QMatrix":
        cols = rows if cols is None else cols
        return cls([[0] * cols for _ in range(rows)])

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __eq__(self, other):
        return isinstance(other, QMatrix) and self.data == other.data

    def __hash__(self):
        return hash(self.data)

    def __repr__(self):
        return f"QMatrix({[[str(v) for v in row] for row in self.data]})"

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self.data[i][j] == self.data[j][i]
            for i in range(self.rows) for j in range(i + 1, self.cols))

    def tolist(self):
        return [list(row) for row in self.data]

    def add(self, other: "QMatrix") -> "QMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension mismatch")
        return QMatrix([[a + b for a, b in zip(r1, r2)]
                        for r1, r2 in zip(self.data, other.data)])

    def sub(self, other: "QMatrix") -> "QMatrix":
        return self.add(other.scale(-1))

    def scale(self, c) -> "QMatrix":
        c = _frac(c)
        return QMatrix([[c * v for v in row] for row in self.data])

    def matvec(self, v: Sequence) -> list:
        v = [_frac(x) for x in v]
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        return [sum((row[j] * v[j] for j in range(self.cols)), Q(0))
                for row in self.data]

    def quad_form(self, v: Sequence) -> Fraction:
        """v^T M v, exactly."""
        mv = self.matvec(v)
        return sum((_frac(x) * y for x, y in zip(v, mv)), Q(0))

    def trace_inner(self, other: "QMatrix") -> Fraction:
        """<A, B> = trace(A B) for symmetric matrices: sum of entrywise products."""
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension mismatch")
        return sum((self.data[i][j] * other.data[i][j]
                    for i in range(self.rows) for j in range(self.cols)), Q(0))


@dataclass
class PsdVerdict:
    """Outcome of an exact LDL^T PSD test.

    When `psd` is True, `perm`, `lower`, `diag` give the factorization
    P M P^T = L D L^T (P the permutation sending original index perm[k] to
    position k).  When False, `witness` is a rational vector with
    witness^T M witness = `witness_value` < 0.
    """
    psd: bool
    diag: Optional[list] = None
    lower: Optional[list] = None
    perm: Optional[list] = None
    witness: Optional[list] = None
    witness_value: Optional[Fraction] = None


def ldlt_psd(M: QMatrix) -> PsdVerdict:
    """Exact PSD test by LDL^T with diagonal pivoting.

    A zero pivot is accepted only if its entire remaining row/column is zero
    (otherwise the 2x2 minor [[0, b], [b, a]] is indefinite and yields a
    witness).  Witness vectors are lifted back to the original coordinates
    through the accumulated congruence transform.
    """
    if not M.is_symmetric():
        raise ValueError("ldlt_psd requires a symmetric matrix")
    n = M.rows
    # working copy of the Schur complement, and W: columns expressing the
    # current reduced directions in original coordinates (S = W^T M W holds
    # on the remaining index set).
    S = [[M.data[i][j] for j in range(n)] for i in range(n)]
    W = [[Q(1) if i == j else Q(0) for j in range(n)] for i in range(n)]  # column vectors W[:,j]
    remaining = list(range(n))
    perm, diag = [], []

    def witness_from(vec_in_remaining):
        # lift: x = sum_j vec_j * W[:, remaining[j]]
        x = [Q(0)] * n
        for coef, idx in zip(vec_in_remaining, remaining):
            for r in range(n):
                x[r] += coef * W[r][idx]
        val = M.quad_form(x)
        return x, val

    while remaining:
        # choose the largest diagonal entry as pivot
        piv_pos = max(range(len(remaining)), key=lambda p: S[remaining[p]][remaining[p]])
        piv = remaining[piv_pos]
        d = S[piv][piv]
        if d < 0:
            e = [Q(0)] * len(remaining)
            e[piv_pos] = Q(1)
            x, val = witness_from(e)
            assert val < 0
            return PsdVerdict(psd=False, witness=x, witness_value=val)
        if d == 0:
            # all remaining diagonal entries are <= 0 hence == 0 (pivot was max);
            # any nonzero off-diagonal entry makes the matrix indefinite.
            for pa, a in enumerate(remaining):
                for pb in range(pa + 1, len(remaining)):
                    b = remaining[pb]
                    if S[a][b] != 0:
                        # on span{e_a, e_b}: [[0, s], [s, 0]] -> (1, -sign(s))
                        e = [Q(0)] * len(remaining)
                        e[pa] = Q(1)
                        e[pb] = Q(-1) if S[a][b] > 0 else Q(1)
                        x, val = witness_from(e)
                        assert val < 0
                        return PsdVerdict(psd=False, witness=x, witness_value=val)
            # remaining block identically zero: PSD with zero pivots
            for idx in remaining:
                perm.append(idx)
                diag.append(Q(0))
            break
        perm.append(piv)
        diag.append(d)
        remaining.pop(piv_pos)
        # symmetric rank-1 Schur update and congruence bookkeeping
        mults = {idx: S[piv][idx] / d for idx in remaining}
        for a in remaining:
            for b in remaining:
                S[a][b] -= mults[a] * d * mults[b]
            S[a][piv] = Q(0)
            S[piv][a] = Q(0)
        for a in remaining:
            ma = mults[a]
            if ma != 0:
                for r in range(n):
                    W[r][a] -= ma * W[r][piv]

    # reconstruct unit-lower factor in pivot order from scratch:
    # P M P^T = L D L^T can be re-derived, but callers only need (perm, diag)
    # plus the ability to re-check; provide L by a second clean pass.
    k = len(perm)
    Lm = [[Q(0)] * k for _ in range(k)]
    A = [[M.data[perm[i]][perm[j]] for j in range(k)] for i in range(k)]
    for c in range(k):
        Lm[c][c] = Q(1)
        d = diag[c]
        if d == 0:
            continue
        for r in range(c + 1, k):
            Lm[r][c] = A[r][c] / d
        for r in range(c + 1, k):
            for s in range(c + 1, k):
                A[r][s] -= Lm[r][c] * d * Lm[s][c]
    return PsdVerdict(psd=True, diag=diag, lower=Lm, perm=perm)


def verify_ldlt(M: QMatrix, verdict: PsdVerdict) -> bool:
    """Recompute P M P^T == L D L^T from a PSD verdict (test helper)."""
    if not verdict.psd:
        return M.quad_form(verdict.witness) == verdict.witness_value < 0
    n = M.rows
    p, L, D = verdict.perm, verdict.lower, verdict.diag
    for i in range(n):
        for j in range(n):
            lhs = M.data[p[i]][p[j]]
            rhs = sum((L[i][r] * D[r] * L[j][r] for r in range(n)), Q(0))
            if lhs != rhs:
                return False
    return all(d >= 0 for d in D)


@dataclass
class SolutionReport:
    """Result of exact linear solving.

    status: 'unique' | 'affine' | 'inconsistent'.
    For 'affine', `solution` is a particular solution and `nullspace` a basis
    of the homogeneous solutions.
    """
    status: str
    solution: Optional[list] = None
    nullspace: list = field(default_factory=list)


def _row_echelon(aug: list, ncols: int):
    """In-place fraction-free style elimination (pivoting on exact nonzeros).

    Returns list of pivot column indices.  `aug` rows may be longer than
    `ncols`; elimination only pivots within the first `ncols` columns.
    """
    pivots = []
    r = 0
    nrows = len(aug)
    for c in range(ncols):
        piv = None
        for rr in range(r, nrows):
            if aug[rr][c] != 0:
                piv = rr
                break
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        pv = aug[r][c]
        aug[r] = [v / pv for v in aug[r]]
        for rr in range(nrows):
            if rr != r and aug[rr][c] != 0:
                f = aug[rr][c]
                aug[rr] = [a - f * b for a, b in zip(aug[rr], aug[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def solve_linear(A: QMatrix, b: Sequence) -> SolutionReport:
    """Solve A x = b exactly; detect inconsistency and parametrize affine sets."""
    b = [_frac(x) for x in b]
    if len(b) != A.rows:
        raise ValueError("dimension mismatch")
    n = A.cols
    aug = [list(A.data[i]) + [b[i]] for i in range(A.rows)]
    pivots = _row_echelon(aug, n)
    # inconsistency: zero row with nonzero rhs
    for row in aug:
        if all(v == 0 for v in row[:n]) and row[n] != 0:
            return SolutionReport(status="inconsistent")
    sol = [Q(0)] * n
    for r, c in enumerate(pivots):
        sol[c] = aug[r][n]
    free = [c for c in range(n) if c not in pivots]
    if not free:
        return SolutionReport(status="unique", solution=sol)
    basis = []
    for fc in free:
        vec = [Q(0)] * n
        vec[fc] = Q(1)
        for r, c in enumerate(pivots):
            vec[c] = -aug[r][fc]
        basis.append(vec)
    return SolutionReport(status="affine", solution=sol, nullspace=basis)


def rank(M: QMatrix) -> int:
    """Exact rank by elimination."""
    aug = [list(row) for row in M.data]
    return len(_row_echelon(aug, M.cols))


def nullspace(M: QMatrix) -> list:
    """Basis of {x : M x = 0}, exact."""
    rep = solve_linear(M, [0] * M.rows)
    return rep.nullspace


def symmetric_kernel_vector(M: QMatrix) -> Optional[list]:
    """A nonzero kernel vector of M, or None if M is invertible."""
    ns = nullspace(M)
    return ns[0] if ns else None
