"""Dense univariate polynomials over the rationals, with Sturm-sequence root
isolation and exact sign certification on closed intervals.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .intervals import RationalInterval

Q = Fraction


class UniPoly:
    """Polynomial with exact rational coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "UniPoly":
        return cls([])

    @classmethod
    def x(cls) -> "UniPoly":
        return cls([0, 1])

    @classmethod
    def const(cls, c) -> "UniPoly":
        return cls([c])

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial mapped to -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        if self.is_zero():
            return Q(0)
        return self.coeffs[-1]

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if self.is_zero():
            return "UniPoly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}*x^{i}" if i else f"{c}")
        return "UniPoly(" + " + ".join(terms) + ")"

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [Q(0)] * (n - len(self.coeffs))
        b = list(other.coeffs) + [Q(0)] * (n - len(other.coeffs))
        return UniPoly([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return UniPoly.zero()
        out = [Q(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def scale(self, c) -> "UniPoly":
        c = Fraction(c)
        return UniPoly([c * v for v in self.coeffs])

    def shift(self, k: int) -> "UniPoly":
        """Multiply by x^k."""
        if self.is_zero():
            return self
        return UniPoly([Q(0)] * k + list(self.coeffs))

    def derivative(self) -> "UniPoly":
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def eval(self, x) -> Fraction:
        x = Fraction(x)
        acc = Q(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_float(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc

    def eval_interval(self, iv: RationalInterval) -> RationalInterval:
        """Horner-style interval enclosure of the range over `iv`."""
        acc = RationalInterval(0)
        for c in reversed(self.coeffs):
            acc = acc * iv + RationalInterval(c)
        return acc

    def divmod(self, other: "UniPoly"):
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = [Q(0)] * max(0, len(self.coeffs) - len(other.coeffs) + 1)
        r = list(self.coeffs)
        d = other.degree
        lc = other.leading()
        while len(r) - 1 >= d and any(c != 0 for c in r):
            while r and r[-1] == 0:
                r.pop()
            if len(r) - 1 < d:
                break
            k = len(r) - 1 - d
            f = r[-1] / lc
            q[k] = f
            for i, c in enumerate(other.coeffs):
                r[k + i] -= f * c
            r.pop()
        return UniPoly(q), UniPoly(r)

    def gcd(self, other: "UniPoly") -> "UniPoly":
        a, b = self, _coerce(other)
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        if a.is_zero():
            return a
        return a.scale(1 / a.leading())

    def squarefree_part(self) -> "UniPoly":
        if self.is_zero() or self.degree == 0:
            return self
        g = self.gcd(self.derivative())
        if g.degree == 0:
            return self
        return self.divmod(g)[0]

    def compose_linear(self, a, b) -> "UniPoly":
        """p(a*x + b), exactly."""
        a, b = Fraction(a), Fraction(b)
        lin = UniPoly([b, a])
        acc = UniPoly.zero()
        for c in reversed(self.coeffs):
            acc = acc * lin + UniPoly.const(c)
        return acc


def _coerce(p) -> UniPoly:
    if isinstance(p, UniPoly):
        return p
    return UniPoly.const(p)


def sturm_chain(p: UniPoly):
    chain = [p, p.derivative()]
    while not chain[-1].is_zero():
        rem = chain[-2].divmod(chain[-1])[1]
        chain.append(-rem)
    chain.pop()
    return chain


def _sign_variations(values) -> int:
    signs = [1 if v > 0 else -1 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(p: UniPoly, lo, hi) -> int:
    """Number of distinct real roots of p in (lo, hi], by Sturm's theorem.

    Requires p(lo) != 0.  Works on the square-free part, so multiple roots
    count once.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    sf = p.squarefree_part()
    chain = sturm_chain(sf)
    va = _sign_variations([q.eval(lo) for q in chain])
    vb = _sign_variations([q.eval(hi) for q in chain])
    return va - vb


def isolate_roots(p: UniPoly, lo, hi):
    """Disjoint rational intervals (a, b], each containing exactly one distinct
    root of p in (lo, hi].  Interval endpoints are non-roots, except possibly
    b == hi.  Requires p(lo) != 0."""
    lo, hi = Fraction(lo), Fraction(hi)
    sf = p.squarefree_part()
    if sf.is_zero():
        raise ValueError("cannot isolate roots of the zero polynomial")
    if sf.eval(lo) == 0:
        raise ValueError("isolate_roots requires the left endpoint to be a non-root")
    chain = sturm_chain(sf)

    def variations(x):
        return _sign_variations([q.eval(x) for q in chain])

    out = []
    work = [(lo, hi, variations(lo), variations(hi))]
    while work:
        a, b, va, vb = work.pop()
        nroots = va - vb
        if nroots == 0:
            continue
        if nroots == 1:
            out.append((a, b))
            continue
        mid = (a + b) / 2
        while sf.eval(mid) == 0:
            mid = (a + mid) / 2
        vm = variations(mid)
        work.append((a, mid, va, vm))
        work.append((mid, b, vm, vb))
    out.sort()
    return out


@dataclass
class SignVerdict:
    """Either `nonpositive` (p <= 0 certified on the interval) or a rational
    witness point with p(witness) > 0."""
    nonpositive: bool
    witness: Optional[Fraction] = None
    witness_value: Optional[Fraction] = None


def sturm_max_on(p: UniPoly, lo, hi) -> SignVerdict:
    """Certify p <= 0 on [lo, hi] (roots allowed), or produce x* with p(x*) > 0.

    Roots of the square-free part are isolated; between consecutive isolation
    intervals the sign is constant, so evaluating one rational sample per gap
    (plus the endpoints) decides the sign everywhere.  A root at `lo` is
    deflated first: (x - lo) >= 0 on the interval, so dividing it out
    preserves the sign condition away from lo.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if lo > hi:
        raise ValueError("empty interval")
    if p.is_zero():
        return SignVerdict(nonpositive=True)
    for endpoint in (lo, hi):
        v = p.eval(endpoint)
        if v > 0:
            return SignVerdict(nonpositive=False, witness=endpoint, witness_value=v)
    if lo == hi:
        return SignVerdict(nonpositive=True)

    original = p
    while not p.is_zero() and p.eval(lo) == 0:
        p = p.divmod(UniPoly([-lo, 1]))[0]
    if p.is_zero():
        return SignVerdict(nonpositive=True)
    if p.eval(lo) > 0:
        # original > 0 just right of lo; bisect for an explicit witness
        w = hi - lo
        for k in range(1, 200):
            s = lo + w / (2 ** k)
            v = original.eval(s)
            if v > 0:
                return SignVerdict(nonpositive=False, witness=s, witness_value=v)
        raise AssertionError("witness refinement failed")

    boxes = isolate_roots(p, lo, hi)
    samples = []
    prev = lo
    for (a, b) in boxes:
        if a > prev:
            samples.append((prev + a) / 2)
        samples.append(a)
        prev = b
    if prev < hi:
        samples.append((prev + hi) / 2)
    for s in samples:
        v = original.eval(s)
        if v > 0:
            return SignVerdict(nonpositive=False, witness=s, witness_value=v)
        # deflated poly may flip sign only at lo itself, which is excluded here
        if s > lo and p.eval(s) > 0:
            # (x - lo)^m > 0 for s > lo, so original must be positive too
            raise AssertionError("sign bookkeeping error in sturm_max_on")
    return SignVerdict(nonpositive=True)
