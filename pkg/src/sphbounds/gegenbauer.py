"""Gegenbauer polynomials normalized to value 1 at x = 1, for the sphere S^{n-1}.

The standard parameter is lambda = n/2 - 1 for two-point (pair) positivity and
lambda = (n-3)/2 inside the three-point kernels.  All coefficients are exact
rationals, generated by the three-term recurrence

    k C_k = 2 x (k + lambda - 1) C_{k-1} - (k + 2 lambda - 2) C_{k-2}

and divided by the value at 1 (positive for lambda >= 0).  For lambda = 0 the
normalized family degenerates to the Chebyshev T polynomials.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Tuple

from .unipoly import UniPoly

Q = Fraction

_cache: Dict[Fraction, List[UniPoly]] = {}


def _unnormalized(lam: Fraction, upto: int) -> List[UniPoly]:
    x = UniPoly.x()
    if lam == 0:
        polys = [UniPoly.const(1), x]
        for k in range(2, upto + 1):
            polys.append(x * polys[-1].scale(2) - polys[-2])  # Chebyshev T
        return polys[: upto + 1]
    polys = [UniPoly.const(1), x.scale(2 * lam)]
    for k in range(2, upto + 1):
        a = Fraction(2 * (k + lam - 1), k)
        b = Fraction(k + 2 * lam - 2, k)
        polys.append(x.scale(a) * polys[-1] - polys[-2].scale(b))
    return polys[: upto + 1]


def normalized_basis(lam, upto: int) -> List[UniPoly]:
    """Normalized Gegenbauer family C^lam_0..C^lam_upto with C(1) = 1."""
    lam = Fraction(lam)
    if lam < 0:
        raise ValueError("lambda must be >= 0")
    cached = _cache.get(lam, [])
    if len(cached) > upto:
        return cached[: upto + 1]
    raw = _unnormalized(lam, upto)
    out = []
    for k, p in enumerate(raw):
        v = p.eval(1)
        if v <= 0:
            raise ArithmeticError(f"unexpected nonpositive value at 1 for lam={lam}, k={k}")
        out.append(p.scale(1 / v))
    _cache[lam] = out
    return out


def gegenbauer(n: int, k: int) -> UniPoly:
    """C^{n/2-1}_k normalized so that C(1) = 1, with exact coefficients."""
    if n < 2:
        raise ValueError("dimension must be at least 2")
    if k < 0:
        raise ValueError("degree must be nonnegative")
    lam = Fraction(n, 2) - 1
    return normalized_basis(lam, k)[k]


def geval(n: int, k: int, x) -> Fraction:
    """Exact value of the normalized C^{n/2-1}_k at a rational point."""
    return gegenbauer(n, k).eval(Fraction(x))


def geval_sequence(n: int, x, upto: int) -> List[Fraction]:
    """Values C^{n/2-1}_k(x) for k = 0..upto by the value recurrence.

    Avoids building coefficient vectors for large k: runs the same three-term
    recurrence on the unnormalized values and on the values at 1.
    """
    if n < 2:
        raise ValueError("dimension must be at least 2")
    lam = Fraction(n, 2) - 1
    x = Fraction(x)
    if lam == 0:
        vals = [Q(1), x]
        for k in range(2, upto + 1):
            vals.append(2 * x * vals[-1] - vals[-2])
        return vals[: upto + 1]
    v = [Q(1), 2 * lam * x]
    v1 = [Q(1), 2 * lam]
    for k in range(2, upto + 1):
        a = Fraction(2 * (k + lam - 1), k)
        b = Fraction(k + 2 * lam - 2, k)
        v.append(a * x * v[-1] - b * v[-2])
        v1.append(a * v1[-1] - b * v1[-2])
    return [vi / wi for vi, wi in zip(v[: upto + 1], v1[: upto + 1])]


def pair_sum(n: int, k: int, gram) -> Fraction:
    """Sum of C^{n/2-1}_k(c . c') over all ordered pairs, diagonal included.

    `gram` is a QMatrix with unit diagonal; only inner products are used.
    """
    from collections import Counter
    if not gram.is_symmetric():
        raise ValueError("gram must be symmetric")
    N = gram.rows
    for i in range(N):
        if gram[i, i] != 1:
            raise ValueError("gram must have unit diagonal")
    counts = Counter()
    for i in range(N):
        for j in range(N):
            counts[gram[i, j]] += 1
    poly = gegenbauer(n, k)
    return sum((mult * poly.eval(v) for v, mult in counts.items()), Q(0))


def cosine_identity_check(k: int, theta_samples=None, tol: float = 1e-12) -> Tuple[bool, float]:
    """For n = 4: check C^1_k(cos t) == (1/(k+1)) sum_j cos((k-2j) t) numerically.

    Uses 30-digit working precision; returns (ok, worst absolute deviation).
    """
    import mpmath as mp
    mp.mp.dps = 30
    poly = gegenbauer(4, k)
    if theta_samples is None:
        theta_samples = [mp.pi * Fraction(i, 101) for i in range(1, 101)]
    worst = mp.mpf(0)
    for t in theta_samples:
        t = mp.mpf(t) if not isinstance(t, mp.mpf) else t
        lhs = mp.mpf(0)
        xv = mp.cos(t)
        for i, c in enumerate(poly.coeffs):
            lhs += mp.mpf(c.numerator) / mp.mpf(c.denominator) * xv ** i
        rhs = mp.fsum(mp.cos((k - 2 * j) * t) for j in range(k + 1)) / (k + 1)
        worst = max(worst, abs(lhs - rhs))
    return (worst < tol, float(worst))


def envelope_bound_holds(k: int, x) -> bool:
    """Exact check of |C^1_k(x)| <= 1/((k+1) sqrt(1-x^2)) at a rational point.

    Equivalent rational form: C^1_k(x)^2 * (k+1)^2 * (1-x^2) <= 1.
    """
    x = Fraction(x)
    if not -1 < x < 1:
        raise ValueError("need |x| < 1")
    v = geval(4, k, x)
    return v * v * (k + 1) ** 2 * (1 - x * x) <= 1
