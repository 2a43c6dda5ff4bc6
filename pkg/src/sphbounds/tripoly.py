"""Trivariate polynomials with exact rational coefficients.

Two representations:
  * `TriPoly` — sparse map (i, j, k) -> coefficient of x^i y^j z^k.
  * `SymPoly3` — symmetric polynomials in the symmetrized-monomial basis
    m_ijk = (1/6) * sum over all six variable permutations of x^i y^j z^k,
    keyed by the exponent multiset sorted in decreasing order (so the key
    (3, 2, 0) is the monomial usually written m_320).

`TriPoly` carries the generic machinery (arithmetic, substitution, interval
enclosure, Taylor shift); `SymPoly3` is the canonical form used for equality
tests and expansion bookkeeping.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Dict, Sequence, Tuple

from .intervals import RationalInterval
from .unipoly import UniPoly

Q = Fraction
Expo = Tuple[int, int, int]


class TriPoly:
    """Sparse trivariate polynomial, exponent triple -> Fraction."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[Expo, Fraction] = None):
        out = {}
        for e, c in (terms or {}).items():
            c = Fraction(c)
            if c != 0:
                out[(int(e[0]), int(e[1]), int(e[2]))] = c
        self.terms = out

    @classmethod
    def const(cls, c) -> "TriPoly":
        return cls({(0, 0, 0): Fraction(c)})

    @classmethod
    def variable(cls, axis: int) -> "TriPoly":
        e = [0, 0, 0]
        e[axis] = 1
        return cls({tuple(e): Q(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, TriPoly) and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "TriPoly(0)"
        bits = [f"{c}*x^{e[0]}y^{e[1]}z^{e[2]}" for e, c in sorted(self.terms.items())]
        return "TriPoly(" + " + ".join(bits) + ")"

    def __add__(self, other):
        other = _coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Q(0)) + c
        return TriPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return TriPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        out: Dict[Expo, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                out[e] = out.get(e, Q(0)) + c1 * c2
        return TriPoly(out)

    __rmul__ = __mul__

    def scale(self, c) -> "TriPoly":
        c = Fraction(c)
        return TriPoly({e: c * v for e, v in self.terms.items()})

    def power(self, k: int) -> "TriPoly":
        acc = TriPoly.const(1)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def eval(self, x, y, z) -> Fraction:
        x, y, z = Fraction(x), Fraction(y), Fraction(z)
        acc = Q(0)
        for (i, j, k), c in self.terms.items():
            acc += c * x ** i * y ** j * z ** k
        return acc

    def derivative(self, axis: int) -> "TriPoly":
        out = {}
        for e, c in self.terms.items():
            if e[axis] > 0:
                ne = list(e)
                ne[axis] -= 1
                out[tuple(ne)] = out.get(tuple(ne), Q(0)) + c * e[axis]
        return TriPoly(out)

    def permute(self, perm: Sequence[int]) -> "TriPoly":
        """Apply the variable permutation sending axis a to position perm[a]."""
        out = {}
        for e, c in self.terms.items():
            ne = [0, 0, 0]
            for a in range(3):
                ne[perm[a]] = e[a]
            ne = tuple(ne)
            out[ne] = out.get(ne, Q(0)) + c
        return TriPoly(out)

    def symmetrize(self) -> "SymPoly3":
        """Average over the six variable permutations, in the m-basis.

        sym(x^i y^j z^k) equals m_{sorted(i,j,k)} exactly, so each plain term
        contributes its full coefficient to its orbit key.
        """
        out: Dict[Expo, Fraction] = {}
        for e, c in self.terms.items():
            key = tuple(sorted(e, reverse=True))
            out[key] = out.get(key, Q(0)) + c
        return SymPoly3(out)

    def substitute_diag(self) -> UniPoly:
        """p(x, x, 1) as a univariate polynomial."""
        out: Dict[int, Fraction] = {}
        for (i, j, k), c in self.terms.items():
            d = i + j
            out[d] = out.get(d, Q(0)) + c
        n = max(out, default=0)
        return UniPoly([out.get(d, Q(0)) for d in range(n + 1)])

    def substitute_axis(self, axis: int, value) -> "TriPoly":
        """Fix one variable to a rational value."""
        value = Fraction(value)
        out: Dict[Expo, Fraction] = {}
        for e, c in self.terms.items():
            ne = list(e)
            p = ne[axis]
            ne[axis] = 0
            ne = tuple(ne)
            out[ne] = out.get(ne, Q(0)) + c * value ** p
        return TriPoly(out)

    def taylor_shift(self, center) -> "TriPoly":
        """p(center + u) as a polynomial in u = (u0, u1, u2), exactly."""
        cx, cy, cz = (Fraction(v) for v in center)
        # precompute shifted powers per axis: (c + u)^p
        maxdeg = [0, 0, 0]
        for e in self.terms:
            for a in range(3):
                maxdeg[a] = max(maxdeg[a], e[a])
        shifted = []
        for a, cval in enumerate((cx, cy, cz)):
            pows = [UniPoly.const(1)]
            lin = UniPoly([cval, 1])
            for _ in range(maxdeg[a]):
                pows.append(pows[-1] * lin)
            shifted.append(pows)
        out = TriPoly()
        for (i, j, k), c in self.terms.items():
            px, py, pz = shifted[0][i], shifted[1][j], shifted[2][k]
            part: Dict[Expo, Fraction] = {}
            for a, ca in enumerate(px.coeffs):
                if ca == 0:
                    continue
                for b, cb in enumerate(py.coeffs):
                    if cb == 0:
                        continue
                    for g, cg in enumerate(pz.coeffs):
                        if cg == 0:
                            continue
                        e = (a, b, g)
                        part[e] = part.get(e, Q(0)) + c * ca * cb * cg
            out = out + TriPoly(part)
        return out

    def divide_by_axis(self, axis: int) -> "TriPoly":
        """Exact division by the variable of `axis`; requires no constant-in-axis terms."""
        out = {}
        for e, c in self.terms.items():
            if e[axis] == 0:
                raise ValueError("not divisible: term independent of the axis variable")
            ne = list(e)
            ne[axis] -= 1
            out[tuple(ne)] = c
        return TriPoly(out)

    def interval_eval(self, box: Sequence[RationalInterval]) -> RationalInterval:
        """Natural interval extension, evaluated Horner-style in x, then y, z.

        Guarantees p(box) is contained in the result; exact rational endpoints.
        """
        if not self.terms:
            return RationalInterval(0)
        # nested dict: i -> j -> k -> coeff
        nested: Dict[int, Dict[int, Dict[int, Fraction]]] = {}
        for (i, j, k), c in self.terms.items():
            nested.setdefault(i, {}).setdefault(j, {})[k] = c
        bx, by, bz = box

        def horner_z(kmap):
            acc = RationalInterval(0)
            for k in range(max(kmap), -1, -1):
                acc = acc * bz + RationalInterval(kmap.get(k, Q(0)))
            return acc

        def horner_y(jmap):
            acc = RationalInterval(0)
            for j in range(max(jmap), -1, -1):
                inner = horner_z(jmap[j]) if j in jmap else RationalInterval(0)
                acc = acc * by + inner
            return acc

        acc = RationalInterval(0)
        for i in range(max(nested), -1, -1):
            inner = horner_y(nested[i]) if i in nested else RationalInterval(0)
            acc = acc * bx + inner
        return acc

    def float_evaluator(self):
        """Compile to a numpy-vectorized evaluator f(X, Y, Z)."""
        import numpy as np
        exps = np.array(sorted(self.terms), dtype=np.int64)
        coefs = np.array([float(self.terms[tuple(e)]) for e in exps])

        def f(X, Y, Z):
            X = np.asarray(X, dtype=float)
            Y = np.asarray(Y, dtype=float)
            Z = np.asarray(Z, dtype=float)
            acc = np.zeros(np.broadcast(X, Y, Z).shape)
            for (i, j, k), c in zip(exps, coefs):
                acc += c * X ** int(i) * Y ** int(j) * Z ** int(k)
            return acc

        return f


def _coerce(p) -> TriPoly:
    if isinstance(p, TriPoly):
        return p
    return TriPoly.const(p)


class SymPoly3:
    """Symmetric trivariate polynomial in the m_ijk basis.

    Keys are exponent triples sorted in DECREASING order, matching the usual
    m_320-style subscripts.  Equality is coefficient-wise in this canonical
    basis.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Dict[Expo, Fraction] = None):
        out = {}
        for e, c in (coeffs or {}).items():
            key = tuple(sorted((int(e[0]), int(e[1]), int(e[2])), reverse=True))
            if key != tuple(e):
                raise ValueError(f"m-basis key must be sorted decreasingly: {e}")
            c = Fraction(c)
            if c != 0:
                out[key] = c
        self.coeffs = out

    @classmethod
    def from_any_key(cls, coeffs: Dict[Expo, Fraction]) -> "SymPoly3":
        out: Dict[Expo, Fraction] = {}
        for e, c in coeffs.items():
            key = tuple(sorted(e, reverse=True))
            out[key] = out.get(key, Q(0)) + Fraction(c)
        return cls(out)

    @classmethod
    def zero(cls) -> "SymPoly3":
        return cls({})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, SymPoly3) and self.coeffs == other.coeffs

    def __repr__(self):
        if not self.coeffs:
            return "SymPoly3(0)"
        bits = [f"{c}*m{e[0]}{e[1]}{e[2]}" for e, c in sorted(self.coeffs.items(), reverse=True)]
        return "SymPoly3(" + " + ".join(bits) + ")"

    def coefficient(self, i: int, j: int, k: int) -> Fraction:
        key = tuple(sorted((i, j, k), reverse=True))
        return self.coeffs.get(key, Q(0))

    def __add__(self, other):
        if not isinstance(other, SymPoly3):
            other = SymPoly3({(0, 0, 0): Fraction(other)})
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, Q(0)) + c
        return SymPoly3(out)

    __radd__ = __add__

    def __neg__(self):
        return SymPoly3({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "SymPoly3":
        c = Fraction(c)
        return SymPoly3({e: c * v for e, v in self.coeffs.items()})

    def to_tripoly(self) -> TriPoly:
        out: Dict[Expo, Fraction] = {}
        for key, c in self.coeffs.items():
            arrangements = set(itertools.permutations(key))
            w = c / len(arrangements)
            for e in arrangements:
                out[e] = out.get(e, Q(0)) + w
        return TriPoly(out)

    def eval(self, x, y, z) -> Fraction:
        x, y, z = Fraction(x), Fraction(y), Fraction(z)
        acc = Q(0)
        for key, c in self.coeffs.items():
            arrangements = set(itertools.permutations(key))
            s = sum((x ** e[0] * y ** e[1] * z ** e[2] for e in arrangements), Q(0))
            acc += c * s / len(arrangements)
        return acc

    def eval_at_ones(self) -> Fraction:
        """Value at (1,1,1): every m_ijk evaluates to 1 there."""
        return sum(self.coeffs.values(), Q(0))


def m_sym(i: int, j: int, k: int) -> SymPoly3:
    """The basis element m_ijk (indices in any order)."""
    key = tuple(sorted((i, j, k), reverse=True))
    return SymPoly3({key: Q(1)})
