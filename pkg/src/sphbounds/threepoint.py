"""Symmetrized three-point matrices S^n_k, expansion of symmetric polynomials
against them, the kernel of the expansion map, and exact triple sums over codes.

The entry (i, j) of the unsymmetrized kernel matrix is

    Y^n_k[i,j](x,y,z) = x^i y^j ((1-x^2)(1-y^2))^{k/2}
                         * C_k((z - x y) / sqrt((1-x^2)(1-y^2)))

with C_k the normalized Gegenbauer family for lambda = (n-3)/2.  Because C_k
has parity k, every term carries the square root to an even power, so the
entry is a genuine polynomial (asserted during construction).  S^n_k averages
Y^n_k over all six permutations of (x, y, z).
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .gegenbauer import normalized_basis
from .linalg import QMatrix, solve_linear
from .tripoly import SymPoly3, TriPoly

Q = Fraction

_ynk_cache: Dict[Tuple[int, int, int, int], TriPoly] = {}
_snk_cache: Dict[Tuple[int, int, int], "ThreePointBlock"] = {}


def ynk_entry(n: int, k: int, i: int, j: int) -> TriPoly:
    """The (i, j) entry of Y^n_k, expanded exactly as a trivariate polynomial."""
    if n < 3:
        raise ValueError("three-point kernels need n >= 3")
    if min(k, i, j) < 0:
        raise ValueError("indices must be nonnegative")
    key = (n, k, i, j)
    if key in _ynk_cache:
        return _ynk_cache[key]
    lam = Fraction(n - 3, 2)
    cpoly = normalized_basis(lam, k)[k]
    A = TriPoly({(0, 0, 0): Q(1), (2, 0, 0): Q(-1), (0, 2, 0): Q(-1), (2, 2, 0): Q(1)})
    w = TriPoly({(0, 0, 1): Q(1), (1, 1, 0): Q(-1)})  # z - x y
    acc = TriPoly()
    for d, c in enumerate(cpoly.coeffs):
        if c == 0:
            continue
        if (k - d) % 2 != 0:
            raise AssertionError("parity violated: radical does not cancel")
        acc = acc + (w.power(d) * A.power((k - d) // 2)).scale(c)
    ii, jj = TriPoly({(i, 0, 0): Q(1)}), TriPoly({(0, j, 0): Q(1)})
    out = ii * jj * acc
    _ynk_cache[key] = out
    return out


@dataclass(frozen=True)
class ThreePointBlock:
    """Size x size grid of symmetrized entries of S^n_k (each a SymPoly3)."""
    n: int
    k: int
    size: int
    entries: tuple  # tuple of tuples of SymPoly3

    def entry(self, i: int, j: int) -> SymPoly3:
        return self.entries[i][j]

    def value_matrix(self, x, y, z) -> QMatrix:
        return QMatrix([[self.entries[i][j].eval(x, y, z) for j in range(self.size)]
                        for i in range(self.size)])


def snk_matrix(n: int, k: int, size: int) -> ThreePointBlock:
    """S^n_k truncated to the leading size x size block."""
    if size < 1:
        raise ValueError("size must be positive")
    key = (n, k, size)
    if key in _snk_cache:
        return _snk_cache[key]
    rows = []
    for i in range(size):
        row = []
        for j in range(size):
            if j < i:
                row.append(rows[j][i])
                continue
            sym = _symmetrize_entry(n, k, i, j)
            row.append(sym)
        rows.append(row)
    block = ThreePointBlock(n=n, k=k, size=size,
                            entries=tuple(tuple(r) for r in rows))
    _snk_cache[key] = block
    return block


def _symmetrize_entry(n: int, k: int, i: int, j: int) -> SymPoly3:
    base = ynk_entry(n, k, i, j)
    acc = TriPoly()
    for perm in itertools.permutations(range(3)):
        acc = acc + base.permute(perm)
    return acc.scale(Q(1, 6)).symmetrize()


@dataclass(frozen=True)
class MatrixTuple:
    """One symmetric rational matrix per degree k = 0..d."""
    blocks: tuple  # tuple of QMatrix

    def __post_init__(self):
        for b in self.blocks:
            if not b.is_symmetric():
                raise ValueError("tuple blocks must be symmetric")

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(b.rows for b in self.blocks)

    def add(self, other: "MatrixTuple") -> "MatrixTuple":
        return MatrixTuple(tuple(a.add(b) for a, b in zip(self.blocks, other.blocks)))

    def scale(self, c) -> "MatrixTuple":
        return MatrixTuple(tuple(b.scale(c) for b in self.blocks))

    def flatten(self) -> list:
        out = []
        for b in self.blocks:
            for i in range(b.rows):
                for j in range(i, b.cols):
                    out.append(b[i, j])
        return out

    @classmethod
    def from_flat(cls, sizes: Sequence[int], flat: Sequence) -> "MatrixTuple":
        flat = list(flat)
        blocks = []
        pos = 0
        for s in sizes:
            m = [[Q(0)] * s for _ in range(s)]
            for i in range(s):
                for j in range(i, s):
                    m[i][j] = Fraction(flat[pos])
                    m[j][i] = m[i][j]
                    pos += 1
            blocks.append(QMatrix(m))
        if pos != len(flat):
            raise ValueError("flat vector length mismatch")
        return cls(tuple(blocks))

    @classmethod
    def zero(cls, sizes: Sequence[int]) -> "MatrixTuple":
        return cls(tuple(QMatrix.zero(s) for s in sizes))


def expand(tup: MatrixTuple, n: int) -> SymPoly3:
    """The symmetric polynomial sum_k <F_k, S^n_k> for the tuple's blocks."""
    acc = SymPoly3.zero()
    for k, block in enumerate(tup.blocks):
        S = snk_matrix(n, k, block.rows)
        for i in range(block.rows):
            for j in range(block.cols):
                c = block[i, j]
                if c != 0:
                    acc = acc + S.entry(i, j).scale(c)
    return acc


def tuple_basis(sizes: Sequence[int]) -> List[MatrixTuple]:
    """Unit symmetric basis tuples E_(k,i,j) in flat order."""
    dim = sum(s * (s + 1) // 2 for s in sizes)
    out = []
    for t in range(dim):
        flat = [Q(0)] * dim
        flat[t] = Q(1)
        out.append(MatrixTuple.from_flat(sizes, flat))
    return out


def kernel_basis(n: int, sizes: Sequence[int]) -> List[MatrixTuple]:
    """Exact basis of {K : expand(K) = 0} at the given truncation sizes."""
    basis = tuple_basis(sizes)
    expansions = [expand(T, n) for T in basis]
    monos = sorted({key for e in expansions for key in e.coeffs})
    rows = [[e.coeffs.get(m, Q(0)) for e in expansions] for m in monos]
    A = QMatrix(rows)
    rep = solve_linear(A, [0] * len(monos))
    return [MatrixTuple.from_flat(sizes, v) for v in rep.nullspace]


def in_span(vectors: List[MatrixTuple], candidate: MatrixTuple) -> bool:
    """Whether `candidate` lies in the exact linear span of `vectors`."""
    if not vectors:
        return all(v == 0 for v in candidate.flatten())
    cols = [v.flatten() for v in vectors]
    A = QMatrix([[cols[j][i] for j in range(len(cols))] for i in range(len(cols[0]))])
    rep = solve_linear(A, candidate.flatten())
    return rep.status in ("unique", "affine")


def gram_value_counts(gram: QMatrix) -> Counter:
    """Counts of ordered inner-product triples (g_ij, g_ik, g_jk) over C^3."""
    if not gram.is_symmetric():
        raise ValueError("gram must be symmetric")
    N = gram.rows
    counts: Counter = Counter()
    for i in range(N):
        for j in range(N):
            gij = gram[i, j]
            for k in range(N):
                counts[(gij, gram[i, k], gram[j, k])] += 1
    return counts


def triple_sum(gram: QMatrix, n: int, k: int, size: int) -> QMatrix:
    """Exact sum of S^n_k(c.c', c.c'', c'.c'') over all ordered triples of C.

    Only inner products enter; the sum is grouped by distinct value triples.
    """
    N = gram.rows
    for i in range(N):
        if gram[i, i] != 1:
            raise ValueError("gram must have unit diagonal")
    counts = gram_value_counts(gram)
    block = snk_matrix(n, k, size)
    out = [[Q(0)] * size for _ in range(size)]
    for (xv, yv, zv), mult in counts.items():
        for i in range(size):
            for j in range(i, size):
                out[i][j] += mult * block.entry(i, j).eval(xv, yv, zv)
    for i in range(size):
        for j in range(i):
            out[i][j] = out[j][i]
    return QMatrix(out)


def random_code_gram_float(n: int, npoints: int, rng):
    """Float Gram matrix of uniformly random unit vectors (sampling helper)."""
    import numpy as np
    pts = rng.normal(size=(npoints, n))
    pts /= np.linalg.norm(pts, axis=1, keepdims=True)
    return pts @ pts.T


def triple_sum_float(gram_f, n: int, k: int, size: int):
    """Floating-point triple sum for sampled codes."""
    import numpy as np
    N = gram_f.shape[0]
    block = snk_matrix(n, k, size)
    evals = [[block.entry(i, j).to_tripoly().float_evaluator() for j in range(size)]
             for i in range(size)]
    I, J, K = np.meshgrid(range(N), range(N), range(N), indexing="ij")
    X = gram_f[I, J].ravel()
    Y = gram_f[I, K].ravel()
    Z = gram_f[J, K].ravel()
    out = np.zeros((size, size))
    for i in range(size):
        for j in range(i, size):
            v = evals[i][j](X, Y, Z).sum()
            out[i, j] = v
            out[j, i] = v
    return out


def psd_sample_test(n: int, k: int, size: int, trials: int = 50,
                    npoints: int = 6, seed: int = 0, tol: float = -1e-8):
    """Sample random codes and check the triple-sum matrices are PSD up to tol.

    Returns (ok, worst minimum eigenvalue).
    """
    import numpy as np
    rng = np.random.default_rng(seed)
    worst = float("inf")
    for _ in range(trials):
        g = random_code_gram_float(n, npoints, rng)
        M = triple_sum_float(g, n, k, size)
        lam = float(np.linalg.eigvalsh(M)[0])
        worst = min(worst, lam)
    return (worst >= tol, worst)
